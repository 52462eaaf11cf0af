#include "bridge.hpp"

namespace bridge {

using hkv::CohClass;
using hkv::Rational;

oracle::Grid to_grid(const hkv::QuadraticSpace& q) {
  oracle::Grid g(q.rank(), std::vector<oracle::Q>(q.rank()));
  for (std::size_t i = 0; i < q.rank(); ++i) {
    for (std::size_t j = 0; j < q.rank(); ++j) g[i][j] = q(i, j);
  }
  return g;
}

oracle::Fujiki to_fujiki(const hkv::HKRing& ring) { return {to_grid(ring.space()), ring.fujiki_scale()}; }

CohClass to_class(const hkv::RingPtr& ring, const oracle::Poly& p) {
  CohClass out(ring);
  for (const auto& [mono, c] : p) {
    CohClass term = CohClass::unit(ring);
    for (int v : mono) term = cup(term, CohClass::basis(ring, 2, static_cast<std::size_t>(v)));
    out += term * c;
  }
  return out;
}

oracle::Poly to_poly(const hkv::HKRing& ring, const CohClass& x) {
  oracle::Poly p;
  if (sgn(x.at(0, 0)) != 0) p[{}] = x.at(0, 0);
  for (std::size_t i = 0; i < ring.dim(2); ++i) {
    if (sgn(x.at(2, i)) != 0) p[{static_cast<int>(i)}] = x.at(2, i);
  }
  for (std::size_t k = 0; k < ring.dim(4); ++k) {
    if (sgn(x.at(4, k)) == 0) continue;
    const auto [i, j] = ring.sym2_pair(k);
    p[{static_cast<int>(i), static_cast<int>(j)}] = x.at(4, k);
  }
  return p;
}

Rational corr_pair(const hkv::Correspondence& c, const CohClass& p, const CohClass& q) {
  const int top = c.ring()->top_degree();
  Rational total = 0;
  for (const auto& [key, m] : c.blocks()) {
    const auto fp = hkv::pairing_functional(p.component(top - key.first), top - key.first);
    const auto fq = hkv::pairing_functional(q.component(top - key.second), top - key.second);
    for (std::size_t u = 0; u < m.rows(); ++u) {
      if (sgn(fp[u]) == 0) continue;
      for (std::size_t w = 0; w < m.cols(); ++w) total += m(u, w) * fp[u] * fq[w];
    }
  }
  return total;
}

hkv::QuadraticSpace random_space(std::size_t rank, hkv::Lcg64& rng) {
  for (;;) {
    hkv::Matrix g(rank, rank);
    for (std::size_t i = 0; i < rank; ++i) {
      for (std::size_t j = i; j < rank; ++j) {
        const auto v = i == j ? rng.range(-3, 3) : rng.range(-1, 1);
        g(i, j) = v;
        g(j, i) = v;
      }
    }
    if (hkv::determinant(g) != 0) return hkv::make_quadratic_space(rank, g);
  }
}

CohClass random_class(const hkv::RingPtr& ring, hkv::Lcg64& rng, int degree, std::size_t nonzeros) {
  CohClass out(ring);
  const auto n = ring->dim(degree);
  for (std::size_t k = 0; k < nonzeros; ++k) {
    const auto i = static_cast<std::size_t>(rng.range(0, static_cast<std::int64_t>(n) - 1));
    out.at(degree, i) += hkv::ratio(rng.range(-4, 4), rng.range(1, 3));
  }
  return out;
}

hkv::Correspondence random_corr(const hkv::RingPtr& ring, hkv::Lcg64& rng, std::size_t blocks, std::size_t nonzeros) {
  hkv::Correspondence out(ring);
  const int slots = ring->top_degree() / 2;
  for (std::size_t b = 0; b < blocks; ++b) {
    const int i = 2 * static_cast<int>(rng.range(0, slots));
    const int j = 2 * static_cast<int>(rng.range(0, slots));
    auto& m = out.block_ref(i, j);
    for (std::size_t k = 0; k < nonzeros; ++k) {
      const auto r = static_cast<std::size_t>(rng.range(0, static_cast<std::int64_t>(m.rows()) - 1));
      const auto c = static_cast<std::size_t>(rng.range(0, static_cast<std::int64_t>(m.cols()) - 1));
      m(r, c) += rng.range(-3, 3);
    }
  }
  return out;
}

}  // namespace bridge
