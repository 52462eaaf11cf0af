#include "properties.hpp"

#include "bridge.hpp"
#include "hkv/abvar.hpp"
#include "hkv/corr.hpp"
#include "hkv/qform.hpp"

namespace props {

using namespace hkv;

namespace {

CohClass mixed_class(const RingPtr& ring, Lcg64& rng) {
  CohClass x(ring);
  for (int d = 0; d <= ring->top_degree(); d += 2) x += bridge::random_class(ring, rng, d, 3);
  return x;
}

}  // namespace

Report ring_properties(std::uint64_t seed) {
  Report rep;
  Stopwatch sw;
  Lcg64 rng(seed);
  std::size_t comm = 0, assoc = 0, dual = 0, oracle_bad = 0, reference_bad = 0, roundtrip = 0;

  std::vector<HKRingPtr> rings;
  for (std::size_t r : {1, 2, 3, 5}) rings.push_back(HKRing::make(bridge::random_space(r, rng), Rational(rng.range(1, 3))));
  rings.push_back(HKRing::make(k3hilb_lattice(k3_lattice()), 1));

  for (const auto& ring : rings) {
    const auto fj = bridge::to_fujiki(*ring);
    for (int s = 0; s < 6; ++s) {
      const auto x = mixed_class(ring, rng), y = mixed_class(ring, rng), z = mixed_class(ring, rng);
      comm += !(cup(x, y) == cup(y, x));
      assoc += !(cup(cup(x, y), z) == cup(x, cup(y, z)));
      for (int d = 0; d <= 8; d += 2) {
        const auto xd = x.component(d);
        roundtrip += !(solve_by_pairings(ring, d, pairing_functional(xd, d)) == xd);
      }
      for (int da = 2; da <= 4; da += 2) {
        for (int db = 2; db + da <= 8; db += 2) {
          const auto a = x.part(da), b = y.part(db);
          reference_bad += ring->multiply(da, a, db, b) != ring->multiply_reference(da, a, db, b);
        }
      }
      // x2·y4 and x4·y4 against the polynomial model, through pairings with H² and H⁰.
      const auto x2 = x.component(2), y4 = y.component(4), x4 = x.component(4);
      const auto px2 = bridge::to_poly(*ring, x2), py4 = bridge::to_poly(*ring, y4), px4 = bridge::to_poly(*ring, x4);
      const auto prod6 = cup(x2, y4);
      for (std::size_t w = 0; w < ring->rank(); ++w) {
        const auto lhs = integrate(cup(prod6, CohClass::basis(ring, 2, w)));
        oracle_bad += lhs != fj.integrate(oracle::mul(oracle::mul(px2, py4), oracle::var(static_cast<int>(w))));
      }
      oracle_bad += integrate(cup(x4, y4)) != fj.integrate(oracle::mul(px4, py4));
    }
    for (std::size_t i = 0; i < ring->dim(6); ++i) {
      for (std::size_t j = 0; j < ring->dim(2); ++j) {
        const auto v = integrate(cup(CohClass::basis(ring, 6, i), CohClass::basis(ring, 2, j)));
        dual += v != (i == j ? 1 : 0);
      }
    }
  }
  rep.expect_zero("prop.ring.commutative", "x·y = y·x", comm, sw);
  rep.expect_zero("prop.ring.associative", "(x·y)·z = x·(y·z)", assoc, sw);
  rep.expect_zero("prop.ring.dual_basis", "∫ v_i^∨ · v_j = δ_ij", dual, sw);
  rep.expect_zero("prop.ring.pairing_roundtrip", "solve_by_pairings(∫ x·−) = x", roundtrip, sw);
  rep.expect_zero("prop.ring.reference", "closed-form products agree with literal Fujiki sums", reference_bad, sw);
  rep.expect_zero("prop.ring.oracle", "products agree with the polynomial Fujiki model", oracle_bad, sw);
  return rep;
}

Report correspondence_properties(std::uint64_t seed) {
  Report rep;
  Stopwatch sw;
  Lcg64 rng(seed);
  std::size_t functorial = 0, anti = 0, cup_ref = 0, triple_ref = 0;
  for (std::size_t r : {1, 2, 3}) {
    const auto ring = HKRing::make(bridge::random_space(r, rng), Rational(rng.range(1, 2)));
    for (int s = 0; s < 4; ++s) {
      const auto g = bridge::random_corr(ring, rng, 4, 5);
      const auto h = bridge::random_corr(ring, rng, 4, 5);
      const auto gh = compose(g, h);
      for (int d = 0; d <= 8; d += 2) {
        for (std::size_t i = 0; i < ring->dim(d); ++i) {
          const auto x = CohClass::basis(ring, d, i);
          functorial += !(act(gh, x) == act(h, act(g, x)));
        }
      }
      anti += !(transpose(gh) == compose(transpose(h), transpose(g)));
      cup_ref += !(corr_cup(g, h) == corr_cup_reference(g, h));
    }
    std::vector<Correspondence> family;
    for (int k = 0; k < 3; ++k) family.push_back(bridge::random_corr(ring, rng, 3, 4));
    const auto rule = [](int t, int p, int q) { return t + p + q == 2; };
    const auto fast = triple_vanishing_check(family, rule);
    const auto slow = triple_vanishing_check_reference(family, rule);
    triple_ref += fast.violations != slow.violations || fast.pairs_checked != slow.pairs_checked;
    for (std::size_t k = 0; k < fast.stats.size(); ++k) triple_ref += fast.stats[k].nonzero != slow.stats[k].nonzero;
  }
  rep.expect_zero("prop.corr.functorial", "act(h∘g, x) = act(h, act(g, x))", functorial, sw);
  rep.expect_zero("prop.corr.transpose", "transpose(h∘g) = transpose(g)∘transpose(h)", anti, sw);
  rep.expect_zero("prop.corr.cup_reference", "parallel correspondence cup equals the literal sum", cup_ref, sw);
  rep.expect_zero("prop.corr.triple_reference", "parallel triple check equals the serial one", triple_ref, sw);
  return rep;
}

Report exterior_properties(std::uint64_t seed) {
  Report rep;
  Stopwatch sw;
  Lcg64 rng(seed);
  std::size_t graded = 0, assoc = 0, identity = 0, functorial = 0;

  const auto d1 = AbelianRing::make(1, {Factor::Abelian, Factor::Dual});
  const auto all = d1->top_mask();
  for (Monomial a = 0; a <= all; ++a) {
    for (Monomial b = 0; b <= all; ++b) {
      const auto x = ExtClass::monomial(d1, a), y = ExtClass::monomial(d1, b);
      const int sign = (std::popcount(a) * std::popcount(b)) % 2 ? -1 : 1;
      graded += !(wedge(x, y) == wedge(y, x) * Rational(sign));
      for (Monomial c = 0; c <= all; ++c) {
        const auto z = ExtClass::monomial(d1, c);
        assoc += !(wedge(wedge(x, y), z) == wedge(x, wedge(y, z)));
      }
    }
  }
  const auto d2 = AbelianRing::make(2, {Factor::Abelian, Factor::Dual, Factor::Abelian});
  auto sample = [&](const AbelianRingPtr& ring, int degree) {
    ExtClass x(ring);
    for (int k = 0; k < 3; ++k) {
      Monomial m = 0;
      while (std::popcount(m) < degree) m |= Monomial{1} << rng.range(0, static_cast<std::int64_t>(ring->generators()) - 1);
      x.add(m, rng.range(-3, 3));
    }
    return x;
  };
  for (int s = 0; s < 40; ++s) {
    const int da = static_cast<int>(rng.range(0, 5)), db = static_cast<int>(rng.range(0, 5));
    const auto x = sample(d2, da), y = sample(d2, db), z = sample(d2, static_cast<int>(rng.range(0, 4)));
    graded += !(wedge(x, y) == wedge(y, x) * Rational((da * db) % 2 ? -1 : 1));
    assoc += !(wedge(wedge(x, y), z) == wedge(x, wedge(y, z)));
  }

  for (int d : {1, 2}) {
    const auto a = AbelianRing::make(d, {Factor::Abelian});
    const auto diag = ab_diagonal(a);
    for (Monomial m = 0; m <= a->top_mask(); ++m) {
      identity += !(ab_act(diag, ExtClass::monomial(a, m)) == ExtClass::monomial(a, m));
    }
    const auto aa = product(a, a);
    for (int s = 0; s < 10; ++s) {
      const auto g = sample(aa, static_cast<int>(rng.range(0, 4 * d)));
      const auto h = sample(aa, static_cast<int>(rng.range(0, 4 * d)));
      identity += !(ab_compose(diag, g, 1) == g) + !(ab_compose(g, diag, 1) == g);
      const auto hg = ab_compose(g, h, 1);
      for (Monomial m = 0; m <= a->top_mask(); ++m) {
        const auto x = ExtClass::monomial(a, m);
        functorial += !(ab_act(hg, x) == ab_act(h, ab_act(g, x)));
      }
    }
  }
  rep.expect_zero("prop.ext.graded_commutative", "x∧y = (−1)^(|x||y|) y∧x", graded, sw);
  rep.expect_zero("prop.ext.associative", "(x∧y)∧z = x∧(y∧z)", assoc, sw);
  rep.expect_zero("prop.ext.diagonal", "Δ acts as the identity and is a unit for composition", identity, sw);
  rep.expect_zero("prop.ext.functorial", "act(h∘g, x) = act(h, act(g, x))", functorial, sw);
  return rep;
}

}  // namespace props
