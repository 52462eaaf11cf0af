#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "hkv/abvar.hpp"
#include "hkv/error.hpp"

using namespace hkv;

namespace {

bool all_pass(const Report& r) {
  for (const auto& c : r.checks()) {
    if (c.status == Status::Fail) MESSAGE(c.id << ": computed " << c.computed << ", expected " << c.expected);
  }
  return r.ok();
}

// Sign of sorting the concatenated index list by bubble sort.
int bubble_sign(Monomial s, Monomial t) {
  std::vector<int> seq;
  for (int i = 0; i < 64; ++i) if (s >> i & 1) seq.push_back(i);
  for (int i = 0; i < 64; ++i) if (t >> i & 1) seq.push_back(i);
  int sign = 1;
  for (std::size_t a = 0; a < seq.size(); ++a) {
    for (std::size_t b = 0; b + 1 < seq.size() - a; ++b) {
      if (seq[b] == seq[b + 1]) return 0;
      if (seq[b] > seq[b + 1]) {
        std::swap(seq[b], seq[b + 1]);
        sign = -sign;
      }
    }
  }
  for (std::size_t i = 0; i + 1 < seq.size(); ++i) if (seq[i] == seq[i + 1]) return 0;
  return sign;
}

}  // namespace

TEST_SUITE("abvar") {
  TEST_CASE("wedge signs") {
    const auto a = AbelianRing::make(1, {Factor::Abelian});
    const auto e1 = ExtClass::monomial(a, 1), e2 = ExtClass::monomial(a, 2);
    CHECK(wedge(e1, e2) == wedge(e2, e1) * Rational(-1));
    CHECK(wedge(e1, e1).is_zero());
    for (Monomial s = 0; s < 64; ++s) {
      for (Monomial t = 0; t < 64; ++t) CHECK(shuffle_sign(s, t) == bubble_sign(s, t));
    }
  }

  TEST_CASE("integration and orientation") {
    const auto a = AbelianRing::make(2, {Factor::Abelian});
    CHECK(integrate_ab(ExtClass::top(a)) == 1);
    CHECK(integrate_ab(ExtClass::monomial(a, 0b0111)) == 0);
    const auto dual = AbelianRing::make(1, {Factor::Dual});
    CHECK(integrate_ab(ExtClass::top(dual)) == -1);
    // ∫(e_K⊗e_K^∨)∧(e_{K^c}⊗e_{K^c}^∨) is +1 for every K in this orientation.
    for (int d : {1, 2}) {
      const auto g = 2 * d;
      const Monomial all = (Monomial{1} << g) - 1;
      const auto ring = poincare_class(d).ring();
      for (Monomial k = 0; k <= all; ++k) {
        const Monomial kc = all & ~k;
        const int p = std::popcount(k), q = g - p;
        const auto x = ExtClass::monomial(ring, k | (k << g), (p * (p - 1) / 2) % 2 ? -1 : 1);
        const auto y = ExtClass::monomial(ring, kc | (kc << g), (q * (q - 1) / 2) % 2 ? -1 : 1);
        CHECK(integrate_ab(wedge(x, y)) == 1);
      }
    }
  }

  TEST_CASE("Poincaré class powers") {
    for (int d : {1, 2, 3}) {
      auto power = ExtClass::unit(poincare_class(d).ring());
      for (int p = 0; p <= 2 * d; ++p) {
        CHECK(power == poincare_power_closed_form(d, p));
        power = wedge(power, poincare_class(d));
      }
      CHECK(power.is_zero());
    }
  }

  TEST_CASE("projector tables") {
    CHECK(all_pass(verify_poincare_projectors(1)));
    const auto rep = verify_poincare_projectors(2);
    CHECK(all_pass(rep));
    CHECK(rep.find("ab.d2.table.i2")->computed == "4");
    CHECK(verify_poincare_projectors(1).find("ab.d1.table.i1")->computed == "-1");
  }

  TEST_CASE("vanishing of forbidden triples") {
    CHECK(all_pass(verify_ab_mck(1)));
    CHECK(all_pass(verify_ab_mck(2)));
  }

  TEST_CASE("modified diagonals") {
    CHECK(modified_diagonal(1, 3).is_zero());
    CHECK(modified_diagonal(2, 5).is_zero());
    CHECK_FALSE(modified_diagonal(2, 3).is_zero());
    CHECK_FALSE(modified_diagonal(1, 2).is_zero());
    CHECK(all_pass(verify_moddiag(1)));
    CHECK(all_pass(verify_moddiag(2)));
    const auto a = AbelianRing::make(2, {Factor::Abelian});
    CHECK(small_diagonal(2, 2) == ab_diagonal(a));
    // Δ3 pushes α ⊗ β to α ∧ β.
    const auto aa = AbelianRing::make(2, {Factor::Abelian, Factor::Abelian});
    const auto d3 = small_diagonal(2, 3);
    for (Monomial s = 0; s < 16; ++s) {
      for (Monomial t = 0; t < 16; ++t) {
        const auto x = ExtClass::monomial(aa, s | (t << 4));
        CHECK(ab_act(d3, x) == wedge(ExtClass::monomial(a, s), ExtClass::monomial(a, t)));
      }
    }
  }

  TEST_CASE("binomial identity") {
    const auto rep = binomial_vanishing(12);
    CHECK(all_pass(rep));
    CHECK_THROWS(binomial_vanishing(1));
  }

  TEST_CASE("errors") {
    auto kind = [](auto&& f) {
      try {
        f();
      } catch (const Error& e) {
        return e.kind();
      }
      return ErrorKind::BadShape;
    };
    CHECK(kind([] { AbelianRing::make(9, std::vector<Factor>(4, Factor::Abelian)); }) == ErrorKind::SizeLimitExceeded);
    CHECK(kind([] { modified_diagonal(3, 7); }) == ErrorKind::SizeLimitExceeded);
    const auto l = poincare_class(1);
    const auto a = AbelianRing::make(1, {Factor::Dual});
    CHECK(kind([&] { ab_act(l, ExtClass::unit(a)); }) == ErrorKind::RosterMismatch);
    CHECK(kind([&] { ab_compose(l, l, 1); }) == ErrorKind::RosterMismatch);
    CHECK(kind([&] { wedge(l, ExtClass::unit(a)); }) == ErrorKind::RingMismatch);
  }
}
