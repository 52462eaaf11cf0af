#include "hkv/fourier.hpp"

#include <optional>
#include <sstream>

#include "hkv/error.hpp"
#include "hkv/lcg.hpp"

namespace hkv {

namespace {

Rational factorial(int k) {
  Rational f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

std::optional<Rational> scalar_of(const Matrix& m) {
  if (m.rows() != m.cols() || m.rows() == 0) return std::nullopt;
  const Rational lambda = m(0, 0);
  if (m == Matrix::identity(m.rows()) * lambda) return lambda;
  return std::nullopt;
}

std::string scalar_text(const Matrix& m) {
  const auto s = scalar_of(m);
  return s ? to_string(*s) : "not scalar";
}

// λ with y = λ x, if any.
std::optional<Rational> eigenvalue(const CohClass& x, const CohClass& y) {
  for (int d = 0; d <= 8; d += 2) {
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
  const auto l = eigenvalue(x, y);
  return l ? to_string(*l) : "not an eigenvector";
}

Rational rank_q(const FourierKit& kit) { return Rational(static_cast<long>(kit.ring->rank())); }

}  // namespace

Correspondence bb_correspondence(const HKRingPtr& ring) {
  Correspondence B(ring);
  B.set_block(2, 2, ring->space().inverse_gram());
  return B;
}

FourierKit make_fourier_kit(const HKRingPtr& ring) {
  FourierKit kit{ring,
                 bb_correspondence(ring),
                 b_class(ring),
                 Correspondence(ring),
                 Correspondence(ring),
                 diagonal_class(ring),
                 {Correspondence(ring), Correspondence(ring), Correspondence(ring), Correspondence(ring),
                  Correspondence(ring)},
                 Correspondence(ring),
                 {Correspondence(ring), Correspondence(ring), Correspondence(ring), Correspondence(ring),
                  Correspondence(ring)},
                 Correspondence(ring)};
  kit.b1 = pullback1(kit.b);
  kit.b2 = pullback2(kit.b);
  kit.powers[0] = unit_correspondence(ring);
  for (int k = 1; k <= 4; ++k) kit.powers[k] = corr_cup(kit.powers[k - 1], kit.B);
  kit.fifth_power = corr_cup(kit.powers[4], kit.B);
  for (int k = 0; k <= 4; ++k) kit.exp_B += kit.powers[k] * (1 / factorial(k));

  const Rational r = rank_q(kit);
  const Rational& c = ring->fujiki_scale();
  const auto b1B = corr_cup(kit.b1, kit.B);
  const auto b2B = corr_cup(kit.b2, kit.B);
  kit.projectors[0] = corr_cup(kit.b1, kit.b1) * (1 / (c * r * (r + 2)));
  kit.projectors[1] = b1B * (1 / (c * (r + 2)));
  kit.projectors[2] = (kit.powers[2] - corr_cup(kit.b1, kit.b2) * (1 / (r + 2))) * (1 / (2 * c));
  kit.projectors[3] = b2B * (1 / (c * (r + 2)));
  kit.projectors[4] = corr_cup(kit.b2, kit.b2) * (1 / (c * r * (r + 2)));
  return kit;
}

Correspondence bb_identity_residual(const FourierKit& kit, const Correspondence& C) {
  require_same_ring(kit.ring, C.ring());
  const Rational r = rank_q(kit);
  const Rational& c = kit.ring->fujiki_scale();
  const auto cc = diag_pullback(C);
  const auto c1 = pullback1(cc);
  const auto c2 = pullback2(cc);
  auto rhs = kit.delta * (2 * c);
  rhs -= corr_cup(c1 + c2, C) * (2 / (r + 2));
  rhs -= (corr_cup(c1, c1) * Rational(2) - corr_cup(c1, c2) * r + corr_cup(c2, c2) * Rational(2)) * (1 / (r * (r + 2)));
  auto res = corr_cup(C, C) - rhs;
  res.prune();
  return res;
}

Report verify_bb_square(const FourierKit& kit) {
  Report rep;
  Stopwatch sw;
  rep.expect_zero("bb.square", "B^2 = 2cΔ - 2/(r+2)(b1+b2)B - (2b1^2 - r b1b2 + 2b2^2)/(r(r+2))",
                  bb_identity_residual(kit, kit.B).nonzero_count(), sw);
  auto perturbed = kit.B;
  perturbed.block_ref(2, 2)(0, 0) += 1;
  const bool control_fails = !bb_identity_residual(kit, perturbed).is_zero();
  rep.expect("bb.square.control", "B + e1⊗e1 violates the identity", control_fails ? "fails" : "holds", "fails", sw);
  if (kit.ring->rank() == 23 && kit.ring->fujiki_scale() == 1) {
    auto rhs = kit.delta * Rational(2);
    rhs -= corr_cup(kit.b1 + kit.b2, kit.B) * Rational(2, 25);
    rhs -= (corr_cup(kit.b1, kit.b1) * Rational(2) - corr_cup(kit.b1, kit.b2) * Rational(23) +
            corr_cup(kit.b2, kit.b2) * Rational(2)) *
           Rational(1, 575);
    auto res = kit.powers[2] - rhs;
    rep.expect_zero("bb.square.r23", "B^2 = 2Δ - 2/25(b1+b2)B - (2b1^2 - 23b1b2 + 2b2^2)/575", res.nonzero_count(),
                    sw);
  } else {
    rep.skip("bb.square.r23", "B^2 = 2Δ - 2/25(b1+b2)B - (2b1^2 - 23b1b2 + 2b2^2)/575", "needs r=23, c=1");
  }
  return rep;
}

Report verify_bb_powers(const FourierKit& kit) {
  Report rep;
  Stopwatch sw;
  const auto& ring = kit.ring;
  const Rational r = rank_q(kit);
  const Rational& c = ring->fujiki_scale();

  rep.expect("bb.symmetric", "transpose(B) = B", transpose(kit.B) == kit.B ? "true" : "false", "true", sw);
  rep.expect("bb.pullback", "diag pullback of B is b", diag_pullback(kit.B) == kit.b ? "true" : "false", "true",
             sw);

  std::size_t bad_support = 0;
  for (int k = 0; k <= 4; ++k) bad_support += !kit.powers[k].is_homogeneous(2 * k);
  rep.expect_zero("bb.powers.support", "B^k has blocks only in total degree 4k", bad_support, sw);
  rep.expect_zero("bb.powers.truncation", "B^5 = 0", kit.fifth_power.nonzero_count(), sw);

  std::size_t nonzero_off = 0;
  for (int k = 0; k <= 4; ++k) {
    for (int d = 0; d <= 8; d += 2) {
      if (d == 8 - 2 * k) continue;
      for (std::size_t i = 0; i < ring->dim(d); ++i) {
        nonzero_off += !act(kit.powers[k], CohClass::basis(ring, d, i)).is_zero();
      }
    }
  }
  rep.expect_zero("bb.powers.off_degree", "(B^k)_* vanishes on H^i for i != 8-2k", nonzero_off, sw);

  for (int k : {0, 1, 3, 4}) {
    const auto comp = compose(kit.powers[4 - k], kit.powers[k]);
    const Rational expected = (k == 0 || k == 4) ? Rational(3 * r * (r + 2) * c * c) : Rational(3 * (r + 2) * c * c);
    const auto m = action_matrix(comp, 2 * k, 2 * k);
    rep.expect("bb.compose.k" + std::to_string(k), "(B^k)_*(B^(4-k))_* on H^" + std::to_string(2 * k), scalar_text(m),
               to_string(expected), sw);
  }

  const auto pt = CohClass::point(ring);
  const Rational b4 = 3 * r * (r + 2) * c * c;
  const auto b4_expected = tensor(pt, pt) * b4;
  const auto* blk = kit.powers[4].block(8, 8);
  const bool single = kit.powers[4] == b4_expected;
  rep.expect("bb.power4.point", "B^4 = 3r(r+2)c^2 [pt]x[pt]", single && blk ? to_string((*blk)(0, 0)) : "not a point multiple",
             to_string(b4), sw);
  return rep;
}

ProjectorSuite kunneth_projectors(const FourierKit& kit) {
  ProjectorSuite out{kit.projectors, {}};
  auto& rep = out.report;
  Stopwatch sw;
  const auto& ring = kit.ring;
  for (int k = 0; k <= 4; ++k) {
    const auto& p = kit.projectors[k];
    auto res = compose(p, p) - p;
    res.prune();
    rep.expect_zero("proj.idempotent.pi" + std::to_string(2 * k), "pi o pi = pi", res.nonzero_count(), sw);
  }
  std::size_t cross = 0;
  for (int a = 0; a <= 4; ++a) {
    for (int b = 0; b <= 4; ++b) {
      if (a != b) cross += compose(kit.projectors[a], kit.projectors[b]).nonzero_count();
    }
  }
  rep.expect_zero("proj.orthogonal", "pi^i o pi^j = 0 for i != j", cross, sw);
  Correspondence sum(ring);
  for (const auto& p : kit.projectors) sum += p;
  auto diff = sum - kit.delta;
  diff.prune();
  rep.expect_zero("proj.sum", "sum of pi^2k = Δ", diff.nonzero_count(), sw);
  std::size_t wrong = 0;
  for (int k = 0; k <= 4; ++k) {
    for (int d = 0; d <= 8; d += 2) {
      for (std::size_t i = 0; i < ring->dim(d); ++i) {
        const auto x = CohClass::basis(ring, d, i);
        const auto y = act(kit.projectors[k], x);
        wrong += !(d == 2 * k ? y == x : y.is_zero());
      }
    }
  }
  rep.expect_zero("proj.degree", "pi^2k is the identity on H^2k and zero elsewhere", wrong, sw);
  return out;
}

CohClass fourier_transform(const FourierKit& kit, const CohClass& x) { return act(kit.exp_B, x); }

Report fourier_square_spectrum(const FourierKit& kit) {
  Report rep;
  Stopwatch sw;
  const auto& ring = kit.ring;
  const Rational r = rank_q(kit);
  const Rational& c = ring->fujiki_scale();

  auto ff = [&](int d) {
    return multiply(action_matrix(kit.exp_B, 8 - d, d), action_matrix(kit.exp_B, d, 8 - d));
  };
  const auto unit = CohClass::unit(ring);
  const auto pt = CohClass::point(ring);
  rep.expect("fourier.unit", "F([F]) = r(r+2)c^2/8 [pt]", eigen_text(pt, fourier_transform(kit, unit)),
             to_string(r * (r + 2) * c * c / 8), sw);
  rep.expect("fourier.point", "F([pt]) = [F]", eigen_text(unit, fourier_transform(kit, pt)), "1", sw);

  const Rational top = r * (r + 2) * c * c / 8;
  const Rational side = (r + 2) * c * c / 2;
  rep.expect("fourier.ff.h0", "F o F on H^0", scalar_text(ff(0)), to_string(top), sw);
  rep.expect("fourier.ff.h2", "F o F on H^2", scalar_text(ff(2)), to_string(side), sw);
  rep.expect("fourier.ff.h6", "F o F on H^6", scalar_text(ff(6)), to_string(side), sw);
  rep.expect("fourier.ff.h8", "F o F on H^8", scalar_text(ff(8)), to_string(top), sw);

  const auto m4 = ff(4);
  const auto& b = kit.b;
  const auto bimg = CohClass::homogeneous(ring, 4, apply(m4, b.part(4)));
  const Rational half = (r + 2) * c / 2;
  rep.expect("fourier.ff.h4.b", "F o F on <b>", eigen_text(b, bimg), to_string(half * half), sw);

  // Complement of b under the degree-4 pairing.
  const auto comp = kernel_basis(Matrix::row_vector(pairing_functional(b, 4)));
  const auto b2 = action_matrix(kit.powers[2], 4, 4);
  std::optional<Rational> ff_comp, b2_comp;
  bool ff_ok = comp.rows() + 1 == ring->dim(4);
  bool b2_ok = ff_ok;
  for (std::size_t k = 0; k < comp.rows() && (ff_ok || b2_ok); ++k) {
    const auto x = CohClass::homogeneous(ring, 4, RationalVector(comp.row(k).begin(), comp.row(k).end()));
    const auto check = [&](const Matrix& m, std::optional<Rational>& lambda, bool& ok) {
      if (!ok) return;
      const auto l = eigenvalue(x, CohClass::homogeneous(ring, 4, apply(m, x.part(4))));
      if (!l || (lambda && *lambda != *l)) ok = false;
      else lambda = l;
    };
    check(m4, ff_comp, ff_ok);
    check(b2, b2_comp, b2_ok);
  }
  rep.expect("fourier.ff.h4.complement", "F o F on the pairing complement of b",
             ff_ok && ff_comp ? to_string(*ff_comp) : "not scalar", to_string(c * c), sw);
  rep.expect("bb.b2.on_b", "(B^2)_* on <b>", eigen_text(b, act(kit.powers[2], b)), to_string((r + 2) * c), sw);
  rep.expect("bb.b2.on_complement", "(B^2)_* on the pairing complement of b",
             b2_ok && b2_comp ? to_string(*b2_comp) : "not scalar", to_string(2 * c), sw);
  return rep;
}

std::vector<std::size_t> sign_solutions_exhaustive(std::size_t r) {
  std::vector<std::size_t> found;
  const Rational rp2 = Rational(static_cast<long>(r) + 2);
  for (std::uint64_t mask = 0; mask < (std::uint64_t{1} << r); ++mask) {
    std::vector<int> s(r);
    long tr = 0;
    for (std::size_t i = 0; i < r; ++i) {
      s[i] = (mask >> i) & 1 ? -1 : 1;
      tr += s[i];
    }
    // Diagonal entries of 2A² + (tr A)A − (r+2)I; off-diagonal entries vanish.
    bool ok = true;
    for (std::size_t i = 0; i < r && ok; ++i) ok = 2 + Rational(tr * s[i]) - rp2 == 0;
    if (ok) found.push_back(static_cast<std::size_t>(__builtin_popcountll(mask)));
  }
  return found;
}

std::vector<std::size_t> sign_solutions_by_count(std::size_t r) {
  std::vector<std::size_t> found;
  const Rational rp2 = Rational(static_cast<long>(r) + 2);
  for (std::size_t k = 0; k <= r; ++k) {
    const long tr = static_cast<long>(r) - 2 * static_cast<long>(k);
    const bool plus_ok = k == r || 2 + Rational(tr) - rp2 == 0;
    const bool minus_ok = k == 0 || 2 - Rational(tr) - rp2 == 0;
    if (plus_ok && minus_ok) found.push_back(k);
  }
  return found;
}

namespace {

std::string join(const std::vector<std::size_t>& v) {
  std::ostringstream out;
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  return out.str();
}

Correspondence symmetric_unit(const HKRingPtr& ring, std::size_t i, std::size_t j, const Rational& v) {
  Correspondence e(ring);
  auto& m = e.block_ref(2, 2);
  m(i, j) += v;
  if (i != j) m(j, i) += v;
  return e;
}

}  // namespace

Report verify_uniqueness(const FourierKit& kit, std::size_t sample_count, std::uint64_t seed) {
  if (sample_count == 0) throw Error(ErrorKind::BadShape, "sample_count must be at least 1");
  Report rep;
  Stopwatch sw;
  const auto& ring = kit.ring;
  const auto r = ring->rank();
  rep.expect_zero("uniq.minus_b", "-B satisfies the quadratic identity", bb_identity_residual(kit, -kit.B).nonzero_count(),
                  sw);

  const std::size_t j = r > 1 ? 1 : 0;
  const auto slot = kit.B + symmetric_unit(ring, 0, j, 1);
  rep.expect("uniq.unit_slot", "B + unit in slot (1,2) violates the identity",
             bb_identity_residual(kit, slot).is_zero() ? "holds" : "fails", "fails", sw);

  Lcg64 rng(seed);
  std::size_t failing = 0;
  for (std::size_t s = 0; s < sample_count; ++s) {
    Correspondence C = kit.B;
    do {
      C = kit.B;
      const auto slots = rng.range(1, 3);
      for (std::int64_t t = 0; t < slots; ++t) {
        const auto a = static_cast<std::size_t>(rng.range(0, static_cast<std::int64_t>(r) - 1));
        const auto b = static_cast<std::size_t>(rng.range(0, static_cast<std::int64_t>(r) - 1));
        auto v = rng.range(-3, 2);
        if (v >= 0) ++v;
        C += symmetric_unit(ring, a, b, Rational(v));
      }
    } while (C == kit.B || C == -kit.B);
    failing += !bb_identity_residual(kit, C).is_zero();
  }
  rep.expect("uniq.perturbations", "seeded symmetric perturbations of B violate the identity",
             std::to_string(failing), std::to_string(sample_count), sw);

  std::size_t bad_small = 0;
  std::ostringstream small;
  for (std::size_t n = 1; n <= 6; ++n) {
    const auto sol = sign_solutions_exhaustive(n);
    small << (n > 1 ? ";" : "") << join(sol);
    bad_small += sol != std::vector<std::size_t>{0, n};
  }
  rep.expect("uniq.signs.exhaustive", "diagonal sign solutions of 2A^2+(trA)A-(r+2)I=0, r<=6 (negative counts)",
             small.str(), "0,1;0,2;0,3;0,4;0,5;0,6", sw);
  rep.expect("uniq.signs.rank", "diagonal sign solutions at the ring rank (negative counts)",
             join(sign_solutions_by_count(r)), join({0, r}), sw);
  return rep;
}

Report mck_vanishing(const FourierKit& kit) {
  Report rep;
  Stopwatch sw;
  const auto res = triple_vanishing_check(kit.powers, 4);
  std::ostringstream anchor;
  anchor << "B^t o Δ123 o (B^p x B^q) = 0 for t+p+q != 4 (" << res.forbidden_triples << " triples, "
         << res.pairs_checked << " evaluations)";
  rep.expect("mck.forbidden", anchor.str(), std::to_string(res.violations), "0", sw);
  const auto& ctl = res.at(2, 1, 1);
  rep.expect("mck.control.211", "admissible triple (2,1,1) is nonzero on some pair",
             ctl.nonzero > 0 ? "nonzero" : "zero", "nonzero", sw);
  return rep;
}

}  // namespace hkv
