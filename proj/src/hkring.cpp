#include "hkv/hkring.hpp"

#include <sstream>

#include "hkv/error.hpp"

namespace hkv {

std::size_t GradedRing::total_dim() const noexcept {
  std::size_t n = 0;
  for (int d = 0; d <= top_degree(); d += 2) n += dim(d);
  return n;
}

// ---------------------------------------------------------------- HKRing

HKRing::HKRing(QuadraticSpace space, Rational scale) : space_(std::move(space)), scale_(std::move(scale)) {}

HKRingPtr HKRing::make(QuadraticSpace space, Rational fujiki_scale) {
  if (sgn(fujiki_scale) <= 0) throw Error(ErrorKind::BadShape, "fujiki_scale must be positive");
  std::shared_ptr<HKRing> ring(new HKRing(std::move(space), std::move(fujiki_scale)));
  const auto r = ring->rank();
  ring->index_.assign(r * r, 0);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = i; j < r; ++j) {
      ring->index_[i * r + j] = ring->index_[j * r + i] = ring->pairs_.size();
      ring->pairs_.emplace_back(i, j);
    }
  }
  ring->one_ = Matrix::identity(1);
  ring->ident_ = Matrix::identity(r);

  const auto& q = ring->space_;
  const auto& c = ring->scale_;
  const auto n = ring->pairs_.size();
  Matrix g4(n, n);
  for (std::size_t a = 0; a < n; ++a) {
    const auto [i, j] = ring->pairs_[a];
    for (std::size_t b = a; b < n; ++b) {
      const auto [k, l] = ring->pairs_[b];
      Rational v = q(i, j) * q(k, l) + q(i, k) * q(j, l) + q(i, l) * q(j, k);
      if (sgn(v) == 0) continue;
      v *= c;
      g4(a, b) = v;
      g4(b, a) = v;
    }
  }

  // Candidate inverse from the trace decomposition of the pairing
  //   ⟨M, N⟩ = c (tr(MQ) tr(NQ) + 2 tr(MQNQ)),
  // certified below by an exact product.
  const auto& h = q.inverse_gram();
  const Rational rp2 = Rational(static_cast<long>(r) + 2);
  Matrix s4(n, n);
  for (std::size_t b = 0; b < n; ++b) {
    const auto [k, l] = ring->pairs_[b];
    const Rational tau = (k == l ? h(k, k) : 2 * h(k, l)) / (c * rp2);
    for (std::size_t a = 0; a < n; ++a) {
      const auto [i, j] = ring->pairs_[a];
      Rational hph = h(i, k) * h(l, j);
      if (k != l) hph += h(i, l) * h(k, j);
      Rational m = (hph / c - tau * h(i, j)) / 2;
      if (i != j) m *= 2;
      s4(a, b) = m;
    }
  }
  if (hkv::multiply(g4, s4) != Matrix::identity(n)) {
    auto inv = hkv::inverse(g4);
    if (!inv) throw Error(ErrorKind::DegenerateMiddlePairing, "degree-4 pairing is singular");
    s4 = std::move(*inv);
  }
  ring->gram4_ = std::move(g4);
  ring->gram4_inverse_ = std::move(s4);
  return ring;
}

std::size_t HKRing::sym2_index(std::size_t i, std::size_t j) const { return index_[i * rank() + j]; }

std::size_t HKRing::dim(int degree) const noexcept {
  switch (degree) {
    case 0:
    case 8: return 1;
    case 2:
    case 6: return rank();
    case 4: return sym2_dim();
    default: return 0;
  }
}

const Matrix& HKRing::pairing(int degree) const {
  switch (degree) {
    case 0:
    case 8: return one_;
    case 2:
    case 6: return ident_;
    case 4: return gram4_;
    default: throw Error(ErrorKind::DimensionMismatch, "no pairing in degree " + std::to_string(degree));
  }
}

const Matrix& HKRing::pairing_solver(int degree) const {
  if (degree == 4) return gram4_inverse_;
  return pairing(degree);
}

RationalVector HKRing::times_deg2_into6(std::span<const Rational> x2, std::span<const Rational> m4) const {
  const auto r = rank();
  const auto w = space_.lower(x2);
  RationalVector y(r);
  for (std::size_t a = 0; a < m4.size(); ++a) {
    if (sgn(m4[a]) == 0) continue;
    const auto [i, j] = pairs_[a];
    const Rational m = scale_ * m4[a];
    // ∫ x v_i v_j v_k = c (w_i q_jk + w_j q_ik + w_k q_ij)
    if (sgn(space_(i, j)) != 0) {
      const Rational f = m * space_(i, j);
      for (std::size_t k = 0; k < r; ++k) {
        if (sgn(w[k]) != 0) y[k] += f * w[k];
      }
    }
    if (sgn(w[i]) != 0) {
      const Rational f = m * w[i];
      for (auto k : space_.support(j)) y[k] += f * space_(j, k);
    }
    if (sgn(w[j]) != 0) {
      const Rational f = m * w[j];
      for (auto k : space_.support(i)) y[k] += f * space_(i, k);
    }
  }
  return y;
}

RationalVector HKRing::multiply(int da, std::span<const Rational> a, int db, std::span<const Rational> b) const {
  if (da > db) return multiply(db, b, da, a);
  const int d = da + db;
  if (d > 8) return {};
  if (da == 0) {
    RationalVector y(b.begin(), b.end());
    if (sgn(a[0]) == 0) {
      for (auto& v : y) v = 0;
    } else {
      for (auto& v : y) {
        if (sgn(v) != 0) v *= a[0];
      }
    }
    return y;
  }
  if (da == 2 && db == 2) {
    RationalVector m(sym2_dim());
    for (std::size_t i = 0; i < rank(); ++i) {
      if (sgn(a[i]) == 0) continue;
      for (std::size_t j = 0; j < rank(); ++j) {
        if (sgn(b[j]) == 0) continue;
        m[sym2_index(i, j)] += a[i] * b[j];
      }
    }
    return m;
  }
  if (da == 2 && db == 4) return times_deg2_into6(a, b);
  if (da == 2 && db == 6) return {dot(a, b)};
  if (da == 4 && db == 4) return {dot(a, apply(gram4_, b))};
  throw Error(ErrorKind::DimensionMismatch, "bad degrees in product");
}

RationalVector HKRing::multiply_reference(int da, std::span<const Rational> a, int db, std::span<const Rational> b) const {
  if (da > db) return multiply_reference(db, b, da, a);
  const auto r = rank();
  auto unit = [r](std::size_t i) {
    RationalVector e(r);
    e[i] = 1;
    return e;
  };
  if (da + db > 8) return {};
  if (da == 0 || (da == 2 && db == 2) || (da == 2 && db == 6)) return multiply(da, a, db, b);
  if (da == 2 && db == 4) {
    RationalVector y(r);
    for (std::size_t k = 0; k < r; ++k) {
      const auto ek = unit(k);
      for (std::size_t t = 0; t < sym2_dim(); ++t) {
        const auto [i, j] = pairs_[t];
        y[k] += b[t] * fujiki4(*this, unit(i), unit(j), a, ek);
      }
    }
    return y;
  }
  if (da == 4 && db == 4) {
    Rational s = 0;
    for (std::size_t t = 0; t < sym2_dim(); ++t) {
      const auto [i, j] = pairs_[t];
      for (std::size_t u = 0; u < sym2_dim(); ++u) {
        const auto [k, l] = pairs_[u];
        s += a[t] * b[u] * fujiki4(*this, unit(i), unit(j), unit(k), unit(l));
      }
    }
    return {s};
  }
  throw Error(ErrorKind::DimensionMismatch, "bad degrees in product");
}

// ---------------------------------------------------------------- SurfaceRing

SurfaceRing::SurfaceRing(QuadraticSpace space) : space_(std::move(space)), one_(Matrix::identity(1)) {}

std::shared_ptr<const SurfaceRing> SurfaceRing::make(QuadraticSpace space) {
  return std::shared_ptr<const SurfaceRing>(new SurfaceRing(std::move(space)));
}

std::size_t SurfaceRing::dim(int degree) const noexcept {
  switch (degree) {
    case 0:
    case 4: return 1;
    case 2: return rank();
    default: return 0;
  }
}

RationalVector SurfaceRing::multiply(int da, std::span<const Rational> a, int db, std::span<const Rational> b) const {
  if (da > db) return multiply(db, b, da, a);
  if (da + db > 4) return {};
  if (da == 0) {
    RationalVector y(b.begin(), b.end());
    for (auto& v : y) v *= a[0];
    return y;
  }
  return {space_.pair(a, b)};
}

const Matrix& SurfaceRing::pairing(int degree) const {
  switch (degree) {
    case 0:
    case 4: return one_;
    case 2: return space_.gram();
    default: throw Error(ErrorKind::DimensionMismatch, "no pairing in degree " + std::to_string(degree));
  }
}

const Matrix& SurfaceRing::pairing_solver(int degree) const {
  if (degree == 2) return space_.inverse_gram();
  return pairing(degree);
}

// ---------------------------------------------------------------- CohClass

CohClass::CohClass(RingPtr ring) : ring_(std::move(ring)) {
  for (int d = 0; d <= 8; d += 2) parts_[GradedRing::slot(d)].resize(ring_->dim(d));
}

CohClass CohClass::unit(RingPtr ring) {
  CohClass x(std::move(ring));
  x.parts_[0][0] = 1;
  return x;
}

CohClass CohClass::point(RingPtr ring) {
  CohClass x(std::move(ring));
  x.parts_[GradedRing::slot(x.ring_->top_degree())][0] = 1;
  return x;
}

CohClass CohClass::basis(RingPtr ring, int degree, std::size_t index) {
  CohClass x(std::move(ring));
  x.at(degree, index) = 1;
  return x;
}

CohClass CohClass::homogeneous(RingPtr ring, int degree, RationalVector coords) {
  CohClass x(std::move(ring));
  if (coords.size() != x.ring_->dim(degree)) {
    throw Error(ErrorKind::DimensionMismatch, "degree " + std::to_string(degree) + " expects " +
                                                  std::to_string(x.ring_->dim(degree)) + " coordinates");
  }
  x.parts_[GradedRing::slot(degree)] = std::move(coords);
  return x;
}

std::span<const Rational> CohClass::part(int degree) const {
  if (degree < 0 || degree > 8 || degree % 2) return {};
  return parts_[GradedRing::slot(degree)];
}

std::span<Rational> CohClass::part(int degree) {
  if (degree < 0 || degree > 8 || degree % 2) return {};
  return parts_[GradedRing::slot(degree)];
}

CohClass CohClass::component(int degree) const {
  CohClass x(ring_);
  x.parts_[GradedRing::slot(degree)] = parts_[GradedRing::slot(degree)];
  return x;
}

bool CohClass::is_zero() const {
  for (const auto& p : parts_) {
    if (!hkv::is_zero(p)) return false;
  }
  return true;
}

bool CohClass::is_homogeneous(int degree) const {
  for (int d = 0; d <= 8; d += 2) {
    if (d != degree && !hkv::is_zero(parts_[GradedRing::slot(d)])) return false;
  }
  return true;
}

void require_same_ring(const RingPtr& a, const RingPtr& b) {
  if (a.get() != b.get()) throw Error(ErrorKind::RingMismatch, "operands live in different rings");
}

CohClass& CohClass::operator+=(const CohClass& other) {
  require_same_ring(ring_, other.ring_);
  for (std::size_t s = 0; s < parts_.size(); ++s) {
    for (std::size_t i = 0; i < parts_[s].size(); ++i) {
      if (sgn(other.parts_[s][i]) != 0) parts_[s][i] += other.parts_[s][i];
    }
  }
  return *this;
}

CohClass& CohClass::operator-=(const CohClass& other) {
  require_same_ring(ring_, other.ring_);
  for (std::size_t s = 0; s < parts_.size(); ++s) {
    for (std::size_t i = 0; i < parts_[s].size(); ++i) {
      if (sgn(other.parts_[s][i]) != 0) parts_[s][i] -= other.parts_[s][i];
    }
  }
  return *this;
}

CohClass& CohClass::operator*=(const Rational& s) {
  for (auto& p : parts_) {
    for (auto& v : p) v *= s;
  }
  return *this;
}

bool operator==(const CohClass& a, const CohClass& b) { return a.ring_.get() == b.ring_.get() && a.parts_ == b.parts_; }

std::string CohClass::str() const {
  std::ostringstream out;
  bool first = true;
  for (int d = 0; d <= ring_->top_degree(); d += 2) {
    const auto p = part(d);
    if (hkv::is_zero(p)) continue;
    out << (first ? "" : " + ") << "H" << d << "[";
    for (std::size_t i = 0; i < p.size(); ++i) out << (i ? " " : "") << to_string(p[i]);
    out << "]";
    first = false;
  }
  return first ? "0" : out.str();
}

CohClass cup(const CohClass& x, const CohClass& y) {
  require_same_ring(x.ring(), y.ring());
  const auto& ring = *x.ring();
  CohClass z(x.ring());
  const int top = ring.top_degree();
  for (int a = 0; a <= top; a += 2) {
    const auto xa = x.part(a);
    if (is_zero(xa)) continue;
    for (int b = 0; a + b <= top; b += 2) {
      const auto yb = y.part(b);
      if (is_zero(yb)) continue;
      const auto p = ring.multiply(a, xa, b, yb);
      auto out = z.part(a + b);
      for (std::size_t i = 0; i < p.size(); ++i) {
        if (sgn(p[i]) != 0) out[i] += p[i];
      }
    }
  }
  return z;
}

Rational integrate(const CohClass& x) { return x.part(x.ring()->top_degree())[0]; }

RationalVector pairing_functional(const CohClass& x, int degree) {
  return apply_transpose(x.ring()->pairing(degree), x.part(degree));
}

CohClass solve_by_pairings(const RingPtr& ring, int degree, std::span<const Rational> functional) {
  const int top = ring->top_degree();
  if (degree < 0 || degree > top || degree % 2) {
    throw Error(ErrorKind::DimensionMismatch, "degree " + std::to_string(degree) + " out of range");
  }
  if (functional.size() != ring->dim(top - degree)) {
    throw Error(ErrorKind::DimensionMismatch, "functional has " + std::to_string(functional.size()) +
                                                  " entries, complementary basis has " +
                                                  std::to_string(ring->dim(top - degree)));
  }
  return CohClass::homogeneous(ring, degree, apply(ring->pairing_solver(degree), functional));
}

Rational fujiki4(const HKRing& ring, std::span<const Rational> a, std::span<const Rational> b,
                 std::span<const Rational> c, std::span<const Rational> d) {
  const auto& q = ring.space();
  return ring.fujiki_scale() * (q.pair(a, b) * q.pair(c, d) + q.pair(a, c) * q.pair(b, d) + q.pair(a, d) * q.pair(b, c));
}

const Matrix& pairing4_gram(const HKRing& ring) { return ring.pairing4(); }

CohClass b_class(const HKRingPtr& ring) {
  CohClass b(ring);
  const auto& h = ring->space().inverse_gram();
  auto m = b.part(4);
  for (std::size_t t = 0; t < ring->sym2_dim(); ++t) {
    const auto [i, j] = ring->sym2_pair(t);
    m[t] = i == j ? h(i, i) : 2 * h(i, j);
  }
  return b;
}

CohClass degree2(const RingPtr& ring, std::span<const Rational> coords) {
  return CohClass::homogeneous(ring, 2, RationalVector(coords.begin(), coords.end()));
}

}  // namespace hkv
