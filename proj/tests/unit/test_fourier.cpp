#include <doctest.h>

#include "bridge.hpp"
#include "hkv/fourier.hpp"

using namespace hkv;

namespace {

bool all_pass(const Report& r) {
  for (const auto& c : r.checks()) {
    if (c.status == Status::Fail) {
      MESSAGE(c.id << ": computed " << c.computed << ", expected " << c.expected);
    }
  }
  return r.ok();
}

oracle::Poly product_of(const oracle::Mono& mono) {
  oracle::Poly p = oracle::constant(1);
  for (int v : mono) p = oracle::mul(p, oracle::var(v));
  return p;
}

}  // namespace

TEST_SUITE("fourier") {
  TEST_CASE("B for simple forms") {
    const auto ring = HKRing::make(identity_space(3), 1);
    const auto B = bb_correspondence(ring);
    Correspondence sum(ring);
    for (std::size_t i = 0; i < 3; ++i) sum += tensor(CohClass::basis(ring, 2, i), CohClass::basis(ring, 2, i));
    CHECK(B == sum);
    CHECK(transpose(B) == B);
    CHECK(diag_pullback(B) == b_class(ring));

    const auto one = HKRing::make(make_quadratic_space(1, Matrix::from_rows({{-5}})), 1);
    const auto b1 = bb_correspondence(one);
    CHECK((*b1.block(2, 2))(0, 0) == Rational(-1, 5));
  }

  TEST_CASE("quadratic identity against the polynomial model") {
    Lcg64 rng(2024);
    for (std::size_t r : {1, 2, 3}) {
      const Rational c = ratio(rng.range(1, 4), 2);
      const auto ring = HKRing::make(bridge::random_space(r, rng), c);
      const auto fj = bridge::to_fujiki(*ring);
      const auto B = oracle::bb(fj);
      const auto b = oracle::b_poly(fj);
      const auto b1 = oracle::in_x(b), b2 = oracle::in_y(b);
      const Rational rr(static_cast<long>(r));
      const auto lhs = oracle::bi_mul(B, B);
      auto poly_rhs = oracle::bi_mul(oracle::bi_add(b1, b2), B);
      poly_rhs = oracle::bi_add(oracle::BiPoly{}, poly_rhs, -2 / (rr + 2));
      auto quad = oracle::bi_add(oracle::bi_add(oracle::bi_mul(b1, b1), oracle::bi_mul(b1, b2), -rr / 2),
                                 oracle::bi_mul(b2, b2));
      poly_rhs = oracle::bi_add(poly_rhs, quad, -2 / (rr * (rr + 2)));

      const auto kit = make_fourier_kit(ring);
      for (int a = 0; a <= 4; ++a) {
        for (const auto& mp : oracle::monomials(int(r), a)) {
          for (const auto& mq : oracle::monomials(int(r), 4 - a)) {
            const auto p = product_of(mp), q = product_of(mq);
            const Rational want_lhs = oracle::pair(fj, lhs, p, q);
            const Rational want_rhs = 2 * c * fj.integrate(oracle::mul(p, q)) + oracle::pair(fj, poly_rhs, p, q);
            CHECK(want_lhs == want_rhs);
            const auto pc = bridge::to_class(ring, p), qc = bridge::to_class(ring, q);
            CHECK(bridge::corr_pair(kit.powers[2], pc, qc) == want_lhs);
            CHECK(bridge::corr_pair(kit.projectors[1], pc, qc) ==
                  oracle::pair(fj, oracle::bi_mul(b1, B), p, q) / (c * (rr + 2)));
          }
        }
      }
      CHECK(bb_identity_residual(kit, kit.B).is_zero());
      CHECK(bb_identity_residual(kit, -kit.B).is_zero());
    }
  }

  TEST_CASE("rank 1 runs the full square check") {
    const auto ring = HKRing::make(make_quadratic_space(1, Matrix::from_rows({{2}})), 3);
    const auto kit = make_fourier_kit(ring);
    const auto rep = verify_bb_square(kit);
    CHECK(rep.find("bb.square")->status == Status::Pass);
    CHECK(rep.find("bb.square.control")->status == Status::Pass);
    CHECK(rep.find("bb.square.r23")->status == Status::Skipped);
  }

  TEST_CASE("projectors, powers and spectrum at small rank") {
    Lcg64 rng(5);
    for (std::size_t r : {2, 3, 5}) {
      const auto ring = HKRing::make(bridge::random_space(r, rng), Rational(rng.range(1, 3)));
      const auto kit = make_fourier_kit(ring);
      CHECK(all_pass(verify_bb_powers(kit)));
      CHECK(all_pass(kunneth_projectors(kit).report));
      CHECK(all_pass(fourier_square_spectrum(kit)));
      CHECK(act(kit.projectors[2], kit.b) == kit.b);
      CHECK(act(kit.projectors[2], CohClass::basis(ring, 2, 0)).is_zero());
    }
  }

  TEST_CASE("Fourier transform values and linearity") {
    Lcg64 rng(9);
    const Rational c(3);
    const auto ring = HKRing::make(bridge::random_space(2, rng), c);
    const auto kit = make_fourier_kit(ring);
    CHECK(fourier_transform(kit, CohClass::unit(ring)) == CohClass::point(ring) * (2 * 4 * c * c / 8));
    CHECK(fourier_transform(kit, CohClass::point(ring)) == CohClass::unit(ring));

    const auto fj = bridge::to_fujiki(*ring);
    const auto B = oracle::bb(fj);
    const auto B3 = oracle::bi_mul(oracle::bi_mul(B, B), B);
    for (int i = 0; i < 2; ++i) {
      const auto alpha = CohClass::basis(ring, 2, std::size_t(i));
      const auto image = fourier_transform(kit, alpha);
      CHECK(image.is_homogeneous(6));
      for (const auto& mq : oracle::monomials(2, 1)) {
        const auto q = product_of(mq);
        CHECK(integrate(cup(image, bridge::to_class(ring, q))) == oracle::pair(fj, B3, oracle::var(i), q) / 6);
      }
    }
    for (int s = 0; s < 10; ++s) {
      CohClass x(ring), y(ring);
      for (int d = 0; d <= 8; d += 2) {
        x += bridge::random_class(ring, rng, d, 2);
        y += bridge::random_class(ring, rng, d, 2);
      }
      const Rational a = ratio(rng.range(-5, 5), 3);
      CHECK(fourier_transform(kit, x * a + y) == fourier_transform(kit, x) * a + fourier_transform(kit, y));
    }
  }

  TEST_CASE("uniqueness shadow") {
    CHECK(sign_solutions_exhaustive(4) == std::vector<std::size_t>{0, 4});
    CHECK(sign_solutions_by_count(23) == std::vector<std::size_t>{0, 23});
    for (std::size_t r = 1; r <= 10; ++r) CHECK(sign_solutions_exhaustive(r) == sign_solutions_by_count(r));

    const auto ring = HKRing::make(identity_space(3), 1);
    const auto kit = make_fourier_kit(ring);
    const auto a = verify_uniqueness(kit, 12, 42);
    const auto b = verify_uniqueness(kit, 12, 42);
    CHECK(all_pass(a));
    REQUIRE(a.checks().size() == b.checks().size());
    for (std::size_t i = 0; i < a.checks().size(); ++i) CHECK(a.checks()[i].computed == b.checks()[i].computed);
    CHECK_THROWS(verify_uniqueness(kit, 0, 1));
  }

  TEST_CASE("vanishing of forbidden triples at small rank") {
    const auto ring = HKRing::make(make_quadratic_space(2, Matrix::from_rows({{0, 1}, {1, 0}})), 2);
    CHECK(all_pass(mck_vanishing(make_fourier_kit(ring))));
  }
}
