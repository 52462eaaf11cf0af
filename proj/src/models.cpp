#include "hkv/models.hpp"

#include <string>

#include "hkv/error.hpp"

namespace hkv {

namespace {

Correspondence p1(const CohClass& x) { return pullback1(x); }
Correspondence p2(const CohClass& x) { return pullback2(x); }
Correspondence operator*(const Correspondence& a, const Correspondence& b) { return corr_cup(a, b); }
CohClass operator*(const CohClass& a, const CohClass& b) { return cup(a, b); }

std::string verdict(bool ok) { return ok ? "true" : "false"; }

std::optional<Rational> ratio(const CohClass& x, const CohClass& y) {
  for (int d = 0; d <= x.ring()->top_degree(); d += 2) {
    const auto xs = x.part(d);
    for (std::size_t i = 0; i < xs.size(); ++i) {
      if (sgn(xs[i]) == 0) continue;
      const Rational lambda = y.part(d)[i] / xs[i];
      if (y == x * lambda) return lambda;
      return std::nullopt;
    }
  }
  return std::nullopt;
}

std::string eigen_text(const CohClass& x, const CohClass& y) {
  const auto l = ratio(x, y);
  return l ? to_string(*l) : "not a multiple";
}

std::size_t residual(const CohClass& a, const CohClass& b) {
  std::size_t n = 0;
  for (int d = 0; d <= a.ring()->top_degree(); d += 2) n += count_nonzero((a - b).part(d));
  return n;
}

std::size_t residual(const Correspondence& a, const Correspondence& b) {
  auto r = a - b;
  r.prune();
  return r.nonzero_count();
}

Matrix shifted(const Matrix& m, const Rational& lambda) { return m - Matrix::identity(m.rows()) * lambda; }

// Π (m − λ) over the given roots.
Matrix polynomial(const Matrix& m, std::initializer_list<int> roots) {
  Matrix out = Matrix::identity(m.rows());
  for (int r : roots) out = multiply(out, shifted(m, Rational(r)));
  return out;
}

}  // namespace

K3Model make_k3_model(QuadraticSpace space, Rational c2_degree) {
  auto ring = SurfaceRing::make(std::move(space));
  auto pt = CohClass::point(ring);
  return {std::move(ring), std::move(pt), std::move(c2_degree)};
}

Report k3_intro_check(const K3Model& m) {
  Report rep;
  Stopwatch sw;
  const auto& ring = m.ring;
  const Rational r = Rational(static_cast<long>(ring->rank()));

  Correspondence pure(ring);
  pure.set_block(2, 2, ring->space().inverse_gram());
  const auto b = diag_pullback(pure);
  const auto delta = diagonal_class(ring);
  const auto bb = delta - (p1(b) + p2(b)) * (1 / r);
  rep.expect_zero("k3.bb", "[Δ_S] − (b1+b2)/r_S = B_S", residual(bb, pure), sw);
  rep.expect("k3.b", "ι_Δ* B_S = r_S [pt]", eigen_text(m.point, b), to_string(r), sw);
  rep.expect("k3.euler", "ι_Δ* [Δ_S] = c2 [pt]", eigen_text(m.point, diag_pullback(delta)), to_string(m.c2_degree), sw);

  const auto unit = CohClass::unit(ring);
  const auto pi2 = delta - tensor(m.point, unit) - tensor(unit, m.point);
  const auto sq = pi2 * pi2;
  const auto pt2 = tensor(m.point, m.point);
  const auto* blk = sq.block(4, 4);
  std::string coeff = "not a point multiple";
  if (blk && sq == pt2 * (*blk)(0, 0)) coeff = to_string((*blk)(0, 0));
  rep.expect("k3.pi2.square", "π²·π² = (c2 − 2) [pt]⊗[pt]", coeff, to_string(m.c2_degree - 2), sw);
  return rep;
}

K3HilbModel build_k3hilb_model(const K3Model& k3) {
  const auto& surface = k3.ring->space();
  const std::size_t rs = surface.rank();
  auto ring = HKRing::make(k3hilb_lattice(surface), 1);

  RationalVector f(ring->dim(4));
  for (std::size_t w = 0; w < f.size(); ++w) {
    const auto [i, j] = ring->sym2_pair(w);
    if (i < rs && j < rs) f[w] = surface(i, j);
    else if (i == rs && j == rs) f[w] = -1;
  }
  const auto point_class = solve_by_pairings(ring, 4, f);
  const auto delta = CohClass::basis(ring, 2, rs);
  const auto unit = CohClass::unit(ring);

  Correspondence incidence = tensor(point_class, unit) * Rational(2) + tensor(unit, point_class) * Rational(2);
  auto& mid = incidence.block_ref(2, 2);
  const auto& h = surface.inverse_gram();
  for (std::size_t i = 0; i < rs; ++i) {
    for (std::size_t j = 0; j < rs; ++j) mid(i, j) += h(i, j);
  }
  auto line_bundle = incidence - p1(point_class) * Rational(2) - p2(point_class) * Rational(2) -
                     tensor(delta, delta) * Rational(1, 2);
  line_bundle.prune();
  auto c2 = point_class * Rational(24) - (delta * delta) * Rational(3);
  return {k3, ring, delta, point_class, std::move(incidence), std::move(line_bundle), std::move(c2)};
}

Report verify_k3hilb(const K3HilbModel& m, bool full) {
  Report rep;
  Stopwatch sw;
  const auto& ring = m.ring;
  const auto& so = m.point_class;
  const auto delta2 = m.delta * m.delta;
  const auto B = bb_correspondence(ring);

  rep.expect_zero("k3hilb.l_is_b", "[L] = I − 2p1*S_o − 2p2*S_o − δ1δ2/2 = B", residual(m.line_bundle, B), sw);
  rep.expect("k3hilb.so.delta", "∫ S_o·δ² = −1", integrate(so * delta2), Rational(-1), sw);
  if (full) {
    rep.expect("k3hilb.so.square", "∫ S_o² = 1", integrate(so * so), Rational(1), sw);
    const auto b = b_class(ring);
    rep.expect_zero("k3hilb.b.so", "b = 20 S_o − 5/2 δ²", residual(b, so * Rational(20) - delta2 * Rational(5, 2)), sw);
    rep.expect_zero("k3hilb.b.c2", "b = 5/6 c2(F)", residual(b, m.c2 * Rational(5, 6)), sw);
  }

  const auto& I = m.incidence;
  if (full) {
    const auto dd = p1(delta2) - tensor(m.delta, m.delta) + p2(delta2);
    const auto rhs = diagonal_class(ring) * Rational(2) - dd * I + tensor(so, so) * Rational(24);
    rep.expect_zero("k3hilb.i.square", "I² = 2Δ − (δ1² − δ1δ2 + δ2²)·I + 24 S_o⊗S_o", residual(I * I, rhs), sw);
  } else {
    rep.skip("k3hilb.so.square", "∫ S_o² = 1", "holds only for the rank-22 lattice");
    rep.skip("k3hilb.i.square", "I² = 2Δ − (δ1² − δ1δ2 + δ2²)·I + 24 S_o⊗S_o",
             "no rank-generic form: the residual leaves the span of S_o⊗S_o");
  }

  const auto unit = CohClass::unit(ring);
  const auto expected04 = tensor(unit, so) * Rational(2);
  const auto* got = I.block(0, 4);
  const auto* want = expected04.block(0, 4);
  rep.expect("k3hilb.i.block04", "[I]_(0,4) = 2[F]⊗S_o", verdict(got && want && *got == *want), "true", sw);

  // Negative control: shifting S_o breaks [L] = B.
  auto shifted_so = so + CohClass::basis(ring, 4, 0);
  auto bad = m.line_bundle - p1(shifted_so - so) * Rational(2);
  rep.expect("k3hilb.control", "perturbed S_o breaks [L] = B", residual(bad, B) ? "fails" : "holds", "fails", sw);
  return rep;
}

FanoModel build_fano_model(const QuadraticSpace& b0, std::size_t h2_index) {
  auto ring = HKRing::make(fano_lattice(b0, h2_index), 1);
  const auto g = CohClass::basis(ring, 2, h2_index);
  const auto g2 = g * g;
  const auto c = g2 * Rational(5, 8) - b_class(ring) * Rational(3, 20);
  const auto B = bb_correspondence(ring);
  const auto g1 = p1(g), gg2 = p2(g), c1 = p1(c), c2 = p2(c);
  const auto g1g2 = tensor(g, g);
  const Rational third(1, 3);

  auto incidence = (p1(g2) + g1g2 * Rational(3, 2) + p2(g2) - c1 - c2) * third - B;

  const auto g3 = g2 * g;
  const auto gamma_h = (p1(g3) + tensor(g2, g) + tensor(g, g2) + p2(g3) - (g1 * c1) * Rational(2) - tensor(g, c) -
                        tensor(c, g) - (gg2 * c2) * Rational(2)) *
                       third;
  const auto gamma_h2 = (tensor(g3, g) + tensor(g2, g2) + tensor(g, g3) - tensor(g2, c) -
                         (g1g2 * c2) * Rational(2) - tensor(c, g2) - (g1g2 * c1) * Rational(2) + tensor(c, c)) *
                        third;
  const auto gamma_phi = diagonal_class(ring) * Rational(4) +
                         (p1(g2) * Rational(2) + g1g2 * Rational(3) + p2(g2)) * incidence -
                         (g1 * Rational(5) + gg2 * Rational(4)) * gamma_h + gamma_h2 * Rational(3);
  const auto sigma2 = (g2 - c) * Rational(5);
  return {b0, h2_index, ring, g, c, incidence, gamma_h, gamma_h2, gamma_phi, sigma2};
}

Report verify_fano_incidence(const FanoModel& m) {
  Report rep;
  Stopwatch sw;
  const auto& ring = m.ring;
  const auto& g = m.g;
  const auto& c = m.c;
  const auto g2 = g * g, g3 = g2 * g, g4 = g3 * g;
  const auto unit = CohClass::unit(ring);
  const auto pt = CohClass::point(ring);
  const auto& I = m.incidence;

  rep.expect("fano.q.gg", "q(g,g) = 6", ring->space()(m.h2_index, m.h2_index), Rational(6), sw);
  rep.expect("fano.deg.g4", "∫ g⁴ = 108", integrate(g4), Rational(108), sw);
  rep.expect("fano.deg.g2c", "∫ g²c = 45", integrate(g2 * c), Rational(45), sw);
  rep.expect("fano.deg.c2", "∫ c² = 27", integrate(c * c), Rational(27), sw);
  const auto b = b_class(ring);
  rep.expect("fano.deg.b2", "∫ b² = 575", integrate(b * b), Rational(575), sw);
  rep.expect("fano.sigma2.g2", "∫ Σ2·g² = 315", integrate(m.sigma2 * g2), Rational(315), sw);

  rep.expect("fano.i.symmetric", "transpose(I) = I", verdict(transpose(I) == I), "true", sw);
  rep.expect_zero("fano.i.point", "I_*[pt] = (g² − c)/3", residual(act(I, pt), (g2 - c) * Rational(1, 3)), sw);
  rep.expect_zero("fano.i.point.transpose", "transpose(I)_*[pt] = (g² − c)/3",
                  residual(act(transpose(I), pt), (g2 - c) * Rational(1, 3)), sw);
  rep.expect("fano.i.g2", "I_*(g²) = 21[F]", eigen_text(unit, act(I, g2)), "21", sw);
  rep.expect("fano.i.g3", "I_*(g³) = 36g", eigen_text(g, act(I, g3)), "36", sw);
  rep.expect_zero("fano.i.g4", "I_*(g⁴) = 36(g² − c)", residual(act(I, g4), (g2 - c) * Rational(36)), sw);
  rep.expect_zero("fano.i.diag", "ι_Δ* I = 6c − 3g²", residual(diag_pullback(I), c * Rational(6) - g2 * Rational(3)),
                  sw);

  const auto g1 = p1(g), gg2 = p2(g), c1 = p1(c), c2 = p2(c);
  const auto g1g2 = tensor(g, g);
  const auto gamma2 = -p1(g4) - p2(g4) - tensor(g2, c) - tensor(c, g2) + p1(g2 * c) * Rational(2) +
                      p2(g2 * c) * Rational(2) - g1g2 * (c1 + c2) + tensor(c, c) * Rational(2);
  const auto rhs = diagonal_class(ring) * Rational(2) + I * (p1(g2) + g1g2 + p2(g2)) + gamma2;
  rep.expect_zero("fano.i.square", "I² = 2Δ + I·(g1² + g1g2 + g2²) + Γ2", residual(I * I, rhs), sw);
  rep.expect_zero("fano.gamma2.from_gamma_h", "Γ2 = 6Γ_h² − 3(g1 + g2)Γ_h",
                  residual(gamma2, m.gamma_h2 * Rational(6) - (g1 + gg2) * m.gamma_h * Rational(3)), sw);
  return rep;
}

Report verify_phi(const FanoModel& m) {
  Report rep;
  Stopwatch sw;
  const auto& ring = m.ring;
  const auto& g = m.g;
  const auto& c = m.c;
  const auto g2 = g * g, g3 = g2 * g;
  const auto pull = transpose(m.gamma_phi);
  const auto& push = m.gamma_phi;

  rep.expect("phi.pull.g", "φ*g = 7g", eigen_text(g, act(pull, g)), "7", sw);
  rep.expect("phi.push.g", "φ_*g = 28g", eigen_text(g, act(push, g)), "28", sw);
  rep.expect_zero("phi.pull.g2", "φ*g² = 4g² + 45c", residual(act(pull, g2), g2 * Rational(4) + c * Rational(45)), sw);
  rep.expect_zero("phi.push.g2", "φ_*g² = 4g² + 45c", residual(act(push, g2), g2 * Rational(4) + c * Rational(45)), sw);
  rep.expect("phi.pull.c", "φ*c = 31c", eigen_text(c, act(pull, c)), "31", sw);
  rep.expect("phi.pull.g3", "φ*g³ = 28g³", eigen_text(g3, act(pull, g3)), "28", sw);
  rep.expect("phi.push.g3", "φ_*g³ = 7g³", eigen_text(g3, act(push, g3)), "7", sw);

  const auto m2 = action_matrix(pull, 2, 2);
  const auto m4 = action_matrix(pull, 4, 4);
  const auto m6 = action_matrix(pull, 6, 6);
  rep.expect_zero("phi.minpoly.h2", "(φ* + 2)(φ* − 7) = 0 on H²", polynomial(m2, {-2, 7}).nonzero_count(), sw);
  rep.expect_zero("phi.minpoly.h4", "(φ* − 31)(φ* + 14)(φ* − 4) = 0 on H⁴",
                  polynomial(m4, {31, -14, 4}).nonzero_count(), sw);
  rep.expect_zero("phi.minpoly.h6", "(φ* − 28)(φ* + 8) = 0 on H⁶", polynomial(m6, {28, -8}).nonzero_count(), sw);
  const auto m8 = multiply(action_matrix(push, 8, 8), action_matrix(pull, 8, 8));
  rep.expect("phi.degree", "φ_*φ* = 16 on H⁸", m8(0, 0), Rational(16), sw);

  // H⁴ = ⟨c⟩ ⊕ g·g^⊥ ⊕ rest with eigenvalues 31, −14, 4.
  const std::size_t n4 = ring->dim(4);
  const std::size_t r = ring->rank();
  const auto dims = std::to_string(n4 - rank(shifted(m4, 31))) + "," + std::to_string(n4 - rank(shifted(m4, -14))) +
                    "," + std::to_string(n4 - rank(shifted(m4, 4)));
  rep.expect("phi.h4.dims", "eigenspace dimensions for 31, −14, 4 on H⁴", dims,
             "1," + std::to_string(r - 1) + "," + std::to_string(n4 - r), sw);

  const auto perp = kernel_basis(Matrix::row_vector(ring->space().lower(g.part(2))));
  std::size_t off = 0;
  for (std::size_t k = 0; k < perp.rows(); ++k) {
    const auto x = cup(g, degree2(ring, perp.row(k)));
    off += !(act(pull, x) == x * Rational(-14));
  }
  rep.expect_zero("phi.h4.g_perp", "φ* = −14 on g·g^⊥", off, sw);
  const auto v = g2 - c * Rational(5, 3);
  rep.expect("phi.h4.rest", "g² − 5c/3 lies in the 4-eigenspace", eigen_text(v, act(pull, v)), "4", sw);
  return rep;
}

}  // namespace hkv
