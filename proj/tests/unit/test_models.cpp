#include <doctest.h>

#include "hkv/models.hpp"

using namespace hkv;

namespace {

bool all_pass(const Report& r) {
  for (const auto& c : r.checks()) {
    if (c.status == Status::Fail) MESSAGE(c.id << ": computed " << c.computed << ", expected " << c.expected);
  }
  return r.ok();
}

Matrix hyperbolic() { return Matrix::from_rows({{0, 1}, {1, 0}}); }

}  // namespace

TEST_SUITE("models") {
  TEST_CASE("K3 intro computation") {
    const auto k3 = make_k3_model(k3_lattice());
    const auto rep = k3_intro_check(k3);
    CHECK(all_pass(rep));
    CHECK(rep.find("k3.pi2.square")->computed == "22");
    CHECK(rep.find("k3.b")->computed == "22");
  }

  TEST_CASE("toy surface: (Δ − π0 − π4)^2 by hand") {
    const auto toy = make_k3_model(make_quadratic_space(2, hyperbolic()), 4);
    const auto rep = k3_intro_check(toy);
    CHECK(all_pass(rep));
    CHECK(rep.find("k3.pi2.square")->computed == "2");
    // With q = U, q^{-1} = U and π² = e1⊗e2 + e2⊗e1; its square is
    // 2 (e1e2)⊗(e2e1) = 2 [pt]⊗[pt] since e1·e2 = [pt].
    const auto& ring = toy.ring;
    const auto e1 = CohClass::basis(ring, 2, 0), e2 = CohClass::basis(ring, 2, 1);
    const auto pi2 = tensor(e1, e2) + tensor(e2, e1);
    CHECK(corr_cup(pi2, pi2) == tensor(toy.point, toy.point) * Rational(2));
  }

  TEST_CASE("Hilbert square model") {
    const auto m = build_k3hilb_model(make_k3_model(k3_lattice()));
    const auto& so = m.point_class;
    const auto& ring = m.ring;
    CHECK(integrate(cup(so, so)) == 1);
    CHECK(integrate(cup(so, cup(m.delta, m.delta))) == -1);
    for (std::size_t i = 0; i < 22; i += 5) {
      const auto a = CohClass::basis(ring, 2, i);
      CHECK(integrate(cup(so, cup(a, m.delta))) == 0);
      for (std::size_t j = 0; j < 22; j += 3) {
        CHECK(integrate(cup(so, cup(a, CohClass::basis(ring, 2, j)))) == ring->space()(i, j));
      }
    }
    CHECK(transpose(m.line_bundle) == m.line_bundle);
    for (std::size_t i = 0; i < 22; ++i) CHECK(ring->space()(i, 22) == 0);
    CHECK(all_pass(verify_k3hilb(m)));
  }

  TEST_CASE("toy Hilbert square keeps the rank-generic checks") {
    const auto m = build_k3hilb_model(make_k3_model(make_quadratic_space(2, hyperbolic())));
    const auto rep = verify_k3hilb(m, false);
    CHECK(all_pass(rep));
    CHECK(rep.find("k3hilb.l_is_b")->status == Status::Pass);
    CHECK(rep.find("k3hilb.i.block04")->status == Status::Pass);
    CHECK(rep.find("k3hilb.i.square")->status == Status::Skipped);
  }

  TEST_CASE("Fano model on the default and an alternative b0") {
    const auto m = build_fano_model(default_fano_b0(), 0);
    CHECK(transpose(m.incidence) == m.incidence);
    CHECK(transpose(m.gamma_h) == m.gamma_h);
    CHECK(transpose(m.gamma_h2) == m.gamma_h2);
    CHECK(integrate(cup(m.sigma2, cup(m.g, m.g))) == 315);
    CHECK(all_pass(verify_fano_incidence(m)));
    CHECK(all_pass(verify_phi(m)));

    // h² in slot 3, a non-diagonal primitive block.
    Matrix b0 = Matrix::identity(23) * Rational(2);
    b0(3, 3) = 3;
    for (std::size_t i = 0; i + 1 < 23; ++i) {
      if (i == 2 || i == 3) continue;
      b0(i, i + 1) = 1;
      b0(i + 1, i) = 1;
    }
    const auto alt = build_fano_model(make_quadratic_space(23, b0), 3);
    CHECK(all_pass(verify_fano_incidence(alt)));
    CHECK(all_pass(verify_phi(alt)));
  }
}
