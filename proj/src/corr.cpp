#include "hkv/corr.hpp"

#include <omp.h>

#include <algorithm>

#include "hkv/error.hpp"

namespace hkv {

namespace {

RationalVector unit_vector(std::size_t n, std::size_t i) {
  RationalVector e(n);
  e[i] = 1;
  return e;
}

std::vector<std::size_t> nonzero_rows(const Matrix& m) {
  std::vector<std::size_t> rows;
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (!is_zero(m.row(i))) rows.push_back(i);
  }
  return rows;
}

void accumulate_outer(Matrix& out, std::span<const Rational> left, std::span<const Rational> right) {
  for (std::size_t s = 0; s < left.size(); ++s) {
    if (sgn(left[s]) == 0) continue;
    auto row = out.row(s);
    for (std::size_t t = 0; t < right.size(); ++t) {
      if (sgn(right[t]) != 0) row[t] += left[s] * right[t];
    }
  }
}

}  // namespace

const Matrix* Correspondence::block(int i, int j) const {
  const auto it = blocks_.find({i, j});
  return it == blocks_.end() ? nullptr : &it->second;
}

Matrix& Correspondence::block_ref(int i, int j) {
  auto it = blocks_.find({i, j});
  if (it == blocks_.end()) it = blocks_.emplace(std::make_pair(i, j), Matrix(ring_->dim(i), ring_->dim(j))).first;
  return it->second;
}

void Correspondence::set_block(int i, int j, Matrix m) {
  if (m.rows() != ring_->dim(i) || m.cols() != ring_->dim(j)) {
    throw Error(ErrorKind::BadShape, "block (" + std::to_string(i) + "," + std::to_string(j) + ") shape");
  }
  blocks_[{i, j}] = std::move(m);
}

void Correspondence::prune() {
  for (auto it = blocks_.begin(); it != blocks_.end();) {
    it = it->second.is_zero() ? blocks_.erase(it) : std::next(it);
  }
}

bool Correspondence::is_zero() const {
  for (const auto& [key, m] : blocks_) {
    if (!m.is_zero()) return false;
  }
  return true;
}

bool Correspondence::is_homogeneous(int codim) const {
  for (const auto& [key, m] : blocks_) {
    if (key.first + key.second != 2 * codim && !m.is_zero()) return false;
  }
  return true;
}

std::size_t Correspondence::nonzero_count() const {
  std::size_t n = 0;
  for (const auto& [key, m] : blocks_) n += m.nonzero_count();
  return n;
}

Correspondence& Correspondence::operator+=(const Correspondence& other) {
  require_same_ring(ring_, other.ring_);
  for (const auto& [key, m] : other.blocks_) block_ref(key.first, key.second) += m;
  return *this;
}

Correspondence& Correspondence::operator-=(const Correspondence& other) {
  require_same_ring(ring_, other.ring_);
  for (const auto& [key, m] : other.blocks_) block_ref(key.first, key.second) -= m;
  return *this;
}

Correspondence& Correspondence::operator*=(const Rational& s) {
  for (auto& [key, m] : blocks_) m *= s;
  return *this;
}

bool operator==(const Correspondence& a, const Correspondence& b) {
  if (a.ring_.get() != b.ring_.get()) return false;
  for (const auto& [key, m] : a.blocks_) {
    const auto* other = b.block(key.first, key.second);
    if (other ? !(m == *other) : !m.is_zero()) return false;
  }
  for (const auto& [key, m] : b.blocks_) {
    if (!a.block(key.first, key.second) && !m.is_zero()) return false;
  }
  return true;
}

Correspondence tensor(const CohClass& a, const CohClass& b) {
  require_same_ring(a.ring(), b.ring());
  Correspondence g(a.ring());
  const int top = a.ring()->top_degree();
  for (int i = 0; i <= top; i += 2) {
    if (is_zero(a.part(i))) continue;
    for (int j = 0; j <= top; j += 2) {
      if (is_zero(b.part(j))) continue;
      g.block_ref(i, j) += Matrix::outer(a.part(i), b.part(j));
    }
  }
  return g;
}

Correspondence pullback1(const CohClass& x) { return tensor(x, CohClass::unit(x.ring())); }
Correspondence pullback2(const CohClass& x) { return tensor(CohClass::unit(x.ring()), x); }
Correspondence unit_correspondence(const RingPtr& ring) {
  const auto one = CohClass::unit(ring);
  return tensor(one, one);
}

CohClass pushforward2(const Correspondence& g) {
  CohClass y(g.ring());
  const int top = g.ring()->top_degree();
  for (const auto& [key, m] : g.blocks()) {
    if (key.first != top) continue;
    auto out = y.part(key.second);
    for (std::size_t j = 0; j < m.cols(); ++j) out[j] += m(0, j);
  }
  return y;
}

CohClass pushforward1(const Correspondence& g) {
  CohClass y(g.ring());
  const int top = g.ring()->top_degree();
  for (const auto& [key, m] : g.blocks()) {
    if (key.second != top) continue;
    auto out = y.part(key.first);
    for (std::size_t i = 0; i < m.rows(); ++i) out[i] += m(i, 0);
  }
  return y;
}

namespace {

// Σ_{u,w} (e_u e_w) ⊗ (a_u · c_w) for a_u, c_w the rows of the two blocks.
void cup_rows(const GradedRing& ring, int i, int j, const Matrix& a, int k, int l, const Matrix& c, Matrix& out) {
  const auto arows = nonzero_rows(a);
  const auto crows = nonzero_rows(c);
  if (arows.empty() || crows.empty()) return;
  std::vector<RationalVector> ebasis_c(crows.size());
  for (std::size_t t = 0; t < crows.size(); ++t) ebasis_c[t] = unit_vector(c.rows(), crows[t]);
  const auto n = static_cast<long>(arows.size());
#pragma omp parallel
  {
    Matrix local(out.rows(), out.cols());
#pragma omp for schedule(dynamic, 1) nowait
    for (long s = 0; s < n; ++s) {
      const auto u = arows[static_cast<std::size_t>(s)];
      const auto eu = unit_vector(a.rows(), u);
      for (std::size_t t = 0; t < crows.size(); ++t) {
        const auto left = ring.multiply(i, eu, k, ebasis_c[t]);
        if (is_zero(left)) continue;
        const auto right = ring.multiply(j, a.row(u), l, c.row(crows[t]));
        accumulate_outer(local, left, right);
      }
    }
#pragma omp critical(hkv_cup_merge)
    out += local;
  }
}

std::size_t nonzero_cols(const Matrix& m) {
  std::size_t n = 0;
  for (std::size_t j = 0; j < m.cols(); ++j) {
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (sgn(m(i, j)) != 0) {
        ++n;
        break;
      }
    }
  }
  return n;
}

}  // namespace

Correspondence corr_cup(const Correspondence& g, const Correspondence& h) {
  require_same_ring(g.ring(), h.ring());
  const auto& ring = *g.ring();
  const int top = ring.top_degree();
  Correspondence out(g.ring());
  for (const auto& [gk, a] : g.blocks()) {
    for (const auto& [hk, c] : h.blocks()) {
      const int s = gk.first + hk.first;
      const int t = gk.second + hk.second;
      if (s > top || t > top) continue;
      auto& dst = out.block_ref(s, t);
      // Iterate over whichever side has fewer nonzero basis pairs.
      const auto row_cost = nonzero_rows(a).size() * nonzero_rows(c).size();
      const auto col_cost = nonzero_cols(a) * nonzero_cols(c);
      if (row_cost <= col_cost) {
        cup_rows(ring, gk.first, gk.second, a, hk.first, hk.second, c, dst);
      } else {
        Matrix tmp(dst.cols(), dst.rows());
        cup_rows(ring, gk.second, gk.first, a.transposed(), hk.second, hk.first, c.transposed(), tmp);
        dst += tmp.transposed();
      }
    }
  }
  out.prune();
  return out;
}

Correspondence corr_cup_reference(const Correspondence& g, const Correspondence& h) {
  require_same_ring(g.ring(), h.ring());
  const auto& ring = *g.ring();
  const int top = ring.top_degree();
  Correspondence out(g.ring());
  for (const auto& [gk, a] : g.blocks()) {
    for (const auto& [hk, c] : h.blocks()) {
      const auto [i, j] = gk;
      const auto [k, l] = hk;
      if (i + k > top || j + l > top) continue;
      auto& dst = out.block_ref(i + k, j + l);
      for (std::size_t u = 0; u < a.rows(); ++u) {
        for (std::size_t v = 0; v < a.cols(); ++v) {
          for (std::size_t w = 0; w < c.rows(); ++w) {
            for (std::size_t z = 0; z < c.cols(); ++z) {
              const Rational coeff = a(u, v) * c(w, z);
              if (sgn(coeff) == 0) continue;
              const auto left = ring.multiply(i, unit_vector(a.rows(), u), k, unit_vector(c.rows(), w));
              const auto right = ring.multiply(j, unit_vector(a.cols(), v), l, unit_vector(c.cols(), z));
              for (std::size_t s = 0; s < left.size(); ++s) {
                for (std::size_t t = 0; t < right.size(); ++t) dst(s, t) += coeff * left[s] * right[t];
              }
            }
          }
        }
      }
    }
  }
  out.prune();
  return out;
}

Correspondence transpose(const Correspondence& g) {
  Correspondence t(g.ring());
  for (const auto& [key, m] : g.blocks()) t.set_block(key.second, key.first, m.transposed());
  return t;
}

CohClass act(const Correspondence& g, const CohClass& x) {
  require_same_ring(g.ring(), x.ring());
  const auto& ring = *g.ring();
  const int top = ring.top_degree();
  CohClass y(g.ring());
  for (const auto& [key, m] : g.blocks()) {
    const auto [i, j] = key;
    const auto xs = x.part(top - i);
    if (is_zero(xs)) continue;
    const auto p = apply(ring.pairing(i), xs);
    const auto contrib = apply_transpose(m, p);
    auto out = y.part(j);
    for (std::size_t v = 0; v < contrib.size(); ++v) {
      if (sgn(contrib[v]) != 0) out[v] += contrib[v];
    }
  }
  return y;
}

Correspondence compose(const Correspondence& first, const Correspondence& second) {
  require_same_ring(first.ring(), second.ring());
  const auto& ring = *first.ring();
  const int top = ring.top_degree();
  Correspondence out(first.ring());
  for (const auto& [fk, a] : first.blocks()) {
    const auto [i, j] = fk;
    for (int l = 0; l <= top; l += 2) {
      const auto* c = second.block(top - j, l);
      if (!c || a.is_zero() || c->is_zero()) continue;
      out.block_ref(i, l) += multiply(multiply(a, ring.pairing(j)), *c);
    }
  }
  out.prune();
  return out;
}

Correspondence diagonal_class(const RingPtr& ring) {
  Correspondence delta(ring);
  const int top = ring->top_degree();
  for (int i = 0; i <= top; i += 2) {
    const auto n = ring->dim(top - i);
    Matrix m(ring->dim(i), n);
    for (std::size_t v = 0; v < n; ++v) {
      const auto cv = solve_by_pairings(ring, i, unit_vector(n, v));
      const auto coords = cv.part(i);
      for (std::size_t u = 0; u < coords.size(); ++u) m(u, v) = coords[u];
    }
    delta.set_block(i, top - i, std::move(m));
  }
  return delta;
}

CohClass diag_pullback(const Correspondence& g) {
  const auto& ring = *g.ring();
  CohClass y(g.ring());
  for (const auto& [key, m] : g.blocks()) {
    const auto [i, j] = key;
    if (i + j > ring.top_degree()) continue;
    auto out = y.part(i + j);
    for (std::size_t u = 0; u < m.rows(); ++u) {
      if (is_zero(m.row(u))) continue;
      const auto p = ring.multiply(i, unit_vector(m.rows(), u), j, m.row(u));
      for (std::size_t s = 0; s < p.size(); ++s) {
        if (sgn(p[s]) != 0) out[s] += p[s];
      }
    }
  }
  return y;
}

Matrix action_matrix(const Correspondence& g, int from, int to) {
  const auto& ring = *g.ring();
  const int top = ring.top_degree();
  Matrix m(ring.dim(to), ring.dim(from));
  if (const auto* a = g.block(top - from, to)) m += multiply(a->transposed(), ring.pairing(top - from));
  return m;
}

// ---------------------------------------------------------------- triple check

const TripleStat& TripleCheck::at(int t, int p, int q) const {
  for (const auto& s : stats) {
    if (s.t == t && s.p == p && s.q == q) return s;
  }
  throw Error(ErrorKind::DimensionMismatch, "no such triple");
}

namespace {

std::vector<int> source_degrees(const Correspondence& g) {
  const int top = g.ring()->top_degree();
  std::vector<int> degs;
  for (const auto& [key, m] : g.blocks()) {
    if (m.is_zero()) continue;
    const int d = top - key.first;
    if (std::find(degs.begin(), degs.end(), d) == degs.end()) degs.push_back(d);
  }
  std::sort(degs.begin(), degs.end());
  return degs;
}

std::vector<CohClass> basis_images(const Correspondence& g) {
  std::vector<CohClass> out;
  for (int d : source_degrees(g)) {
    for (std::size_t i = 0; i < g.ring()->dim(d); ++i) out.push_back(act(g, CohClass::basis(g.ring(), d, i)));
  }
  return out;
}

// Homogeneous degree of a class, or −1 for zero; throws on mixed degrees.
int degree_of(const CohClass& x) {
  int deg = -1;
  for (int d = 0; d <= x.ring()->top_degree(); d += 2) {
    if (is_zero(x.part(d))) continue;
    if (deg >= 0) return -2;
    deg = d;
  }
  return deg;
}

TripleCheck init_check(std::size_t n, const TripleRule& admissible) {
  TripleCheck res;
  for (int t = 0; t < static_cast<int>(n); ++t)
    for (int p = 0; p < static_cast<int>(n); ++p)
      for (int q = 0; q < static_cast<int>(n); ++q) {
        const bool ok = admissible(t, p, q);
        res.stats.push_back({t, p, q, ok, 0, 0});
        ++(ok ? res.admissible_triples : res.forbidden_triples);
      }
  return res;
}

void finish_check(TripleCheck& res) {
  for (const auto& s : res.stats) {
    if (s.admissible) continue;
    res.pairs_checked += s.pairs;
    res.violations += s.nonzero;
  }
}

}  // namespace

TripleCheck triple_vanishing_check(std::span<const Correspondence> family, const TripleRule& admissible) {
  const auto n = family.size();
  TripleCheck res = init_check(n, admissible);
  if (n == 0) return res;
  const auto ring = family.front().ring();
  for (const auto& g : family) require_same_ring(g.ring(), ring);
  const int top = ring->top_degree();

  std::vector<std::vector<CohClass>> images(n);
  for (std::size_t k = 0; k < n; ++k) images[k] = basis_images(family[k]);

  for (std::size_t p = 0; p < n; ++p) {
    for (std::size_t q = 0; q < n; ++q) {
      const auto& xs = images[p];
      const auto& ys = images[q];
      // Cache ∫(·)·y functionals for pairs landing in the top degree.
      std::vector<int> ydeg(ys.size());
      std::vector<RationalVector> ylow(ys.size());
      for (std::size_t b = 0; b < ys.size(); ++b) {
        ydeg[b] = degree_of(ys[b]);
        if (ydeg[b] >= 0) ylow[b] = apply(ring->pairing(top - ydeg[b]), ys[b].part(ydeg[b]));
      }
      std::vector<std::size_t> pairs(n, 0), nonzero(n, 0);
      const auto na = static_cast<long>(xs.size());
#pragma omp parallel
      {
        std::vector<std::size_t> lp(n, 0), lnz(n, 0);
#pragma omp for schedule(dynamic, 4) nowait
        for (long ia = 0; ia < na; ++ia) {
          const auto& x = xs[static_cast<std::size_t>(ia)];
          const int xd = degree_of(x);
          for (std::size_t b = 0; b < ys.size(); ++b) {
            CohClass z(ring);
            if (xd >= 0 && ydeg[b] >= 0 && xd + ydeg[b] == top) {
              z.at(top, 0) = dot(x.part(xd), ylow[b]);
            } else if (xd != -1 && ydeg[b] != -1) {
              z = cup(x, ys[b]);
            }
            for (std::size_t t = 0; t < n; ++t) {
              ++lp[t];
              if (!z.is_zero() && !act(family[t], z).is_zero()) ++lnz[t];
            }
          }
        }
#pragma omp critical(hkv_triple_merge)
        for (std::size_t t = 0; t < n; ++t) {
          pairs[t] += lp[t];
          nonzero[t] += lnz[t];
        }
      }
      for (std::size_t t = 0; t < n; ++t) {
        auto& s = res.stats[(t * n + p) * n + q];
        s.pairs = pairs[t];
        s.nonzero = nonzero[t];
      }
    }
  }
  finish_check(res);
  return res;
}

TripleCheck triple_vanishing_check(std::span<const Correspondence> family, int target_sum) {
  return triple_vanishing_check(family, [target_sum](int t, int p, int q) { return t + p + q == target_sum; });
}

TripleCheck triple_vanishing_check_reference(std::span<const Correspondence> family, const TripleRule& admissible) {
  const auto n = family.size();
  TripleCheck res = init_check(n, admissible);
  if (n == 0) return res;
  const auto ring = family.front().ring();
  for (auto& s : res.stats) {
    const auto& gp = family[static_cast<std::size_t>(s.p)];
    const auto& gq = family[static_cast<std::size_t>(s.q)];
    const auto& gt = family[static_cast<std::size_t>(s.t)];
    for (int da : source_degrees(gp)) {
      for (std::size_t a = 0; a < ring->dim(da); ++a) {
        const auto x = act(gp, CohClass::basis(ring, da, a));
        for (int db : source_degrees(gq)) {
          for (std::size_t b = 0; b < ring->dim(db); ++b) {
            const auto y = act(gq, CohClass::basis(ring, db, b));
            ++s.pairs;
            if (!act(gt, cup(x, y)).is_zero()) ++s.nonzero;
          }
        }
      }
    }
  }
  finish_check(res);
  return res;
}

}  // namespace hkv
