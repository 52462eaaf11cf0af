#pragma once

#include <array>
#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "hkv/matrix.hpp"
#include "hkv/qform.hpp"

namespace hkv {

// Even-graded ring with Poincaré duality, H^0 ⊕ H^2 ⊕ … ⊕ H^top.
class GradedRing {
public:
  virtual ~GradedRing() = default;

  virtual int top_degree() const noexcept = 0;
  virtual std::size_t dim(int degree) const noexcept = 0;

  // Product of homogeneous pieces; the result has degree da + db, or is empty
  // when that exceeds the top degree.
  virtual RationalVector multiply(int da, std::span<const Rational> a, int db, std::span<const Rational> b) const = 0;

  // P(u, w) = ∫ e_u · e'_w for e_u of degree d and e'_w of degree top − d.
  virtual const Matrix& pairing(int degree) const = 0;
  // S = (Pᵀ)⁻¹: the degree-d class with pairing functional f is S f.
  virtual const Matrix& pairing_solver(int degree) const = 0;

  std::size_t total_dim() const noexcept;
  static constexpr int slot(int degree) noexcept { return degree / 2; }
};

using RingPtr = std::shared_ptr<const GradedRing>;

class HKRing;
using HKRingPtr = std::shared_ptr<const HKRing>;

// Cohomology of a hyperkähler fourfold with H^4 = Sym²H², H^odd = 0, all
// products determined by the Fujiki relation with scale c_F.
//   H^4 coordinates: class = Σ_{i≤j} m_ij v_i v_j.
//   H^6 coordinates: dual basis, ∫ v_i^∨ · v_j = δ_ij.
class HKRing final : public GradedRing {
public:
  static HKRingPtr make(QuadraticSpace space, Rational fujiki_scale);

  const QuadraticSpace& space() const noexcept { return space_; }
  const Rational& fujiki_scale() const noexcept { return scale_; }
  std::size_t rank() const noexcept { return space_.rank(); }
  std::size_t sym2_dim() const noexcept { return pairs_.size(); }
  std::size_t sym2_index(std::size_t i, std::size_t j) const;
  std::pair<std::size_t, std::size_t> sym2_pair(std::size_t k) const { return pairs_[k]; }

  // Degree-4 Poincaré pairing over the Sym² basis.
  const Matrix& pairing4() const noexcept { return gram4_; }

  int top_degree() const noexcept override { return 8; }
  std::size_t dim(int degree) const noexcept override;
  RationalVector multiply(int da, std::span<const Rational> a, int db, std::span<const Rational> b) const override;
  const Matrix& pairing(int degree) const override;
  const Matrix& pairing_solver(int degree) const override;

  // Literal product rules summed over fujiki4 values; serial reference.
  RationalVector multiply_reference(int da, std::span<const Rational> a, int db, std::span<const Rational> b) const;

private:
  HKRing(QuadraticSpace space, Rational scale);

  RationalVector times_deg2_into6(std::span<const Rational> x2, std::span<const Rational> m4) const;

  QuadraticSpace space_;
  Rational scale_;
  std::vector<std::pair<std::size_t, std::size_t>> pairs_;
  std::vector<std::size_t> index_;
  Matrix one_;
  Matrix ident_;
  Matrix gram4_;
  Matrix gram4_inverse_;
};

// H^0 ⊕ H^2 ⊕ H^4 with H^4 = ⟨[pt]⟩ and α·β = q(α, β)[pt].
class SurfaceRing final : public GradedRing {
public:
  static std::shared_ptr<const SurfaceRing> make(QuadraticSpace space);

  const QuadraticSpace& space() const noexcept { return space_; }
  std::size_t rank() const noexcept { return space_.rank(); }

  int top_degree() const noexcept override { return 4; }
  std::size_t dim(int degree) const noexcept override;
  RationalVector multiply(int da, std::span<const Rational> a, int db, std::span<const Rational> b) const override;
  const Matrix& pairing(int degree) const override;
  const Matrix& pairing_solver(int degree) const override;

private:
  explicit SurfaceRing(QuadraticSpace space);
  QuadraticSpace space_;
  Matrix one_;
};

class CohClass {
public:
  explicit CohClass(RingPtr ring);

  static CohClass unit(RingPtr ring);
  static CohClass point(RingPtr ring);
  static CohClass basis(RingPtr ring, int degree, std::size_t index);
  static CohClass homogeneous(RingPtr ring, int degree, RationalVector coords);

  const RingPtr& ring() const noexcept { return ring_; }
  std::span<const Rational> part(int degree) const;
  std::span<Rational> part(int degree);
  Rational& at(int degree, std::size_t index) { return part(degree)[index]; }
  const Rational& at(int degree, std::size_t index) const { return part(degree)[index]; }

  CohClass component(int degree) const;
  bool is_zero() const;
  bool is_homogeneous(int degree) const;

  CohClass& operator+=(const CohClass& other);
  CohClass& operator-=(const CohClass& other);
  CohClass& operator*=(const Rational& s);
  friend CohClass operator+(CohClass a, const CohClass& b) { return a += b; }
  friend CohClass operator-(CohClass a, const CohClass& b) { return a -= b; }
  friend CohClass operator-(CohClass a) { return a *= Rational(-1); }
  friend CohClass operator*(CohClass a, const Rational& s) { return a *= s; }
  friend CohClass operator*(const Rational& s, CohClass a) { return a *= s; }
  friend bool operator==(const CohClass& a, const CohClass& b);

  std::string str() const;

private:
  RingPtr ring_;
  std::array<RationalVector, 5> parts_;
};

void require_same_ring(const RingPtr& a, const RingPtr& b);

CohClass cup(const CohClass& x, const CohClass& y);
Rational integrate(const CohClass& x);
// ∫ x · e'_w over the basis of degree top − degree.
RationalVector pairing_functional(const CohClass& x, int degree);
CohClass solve_by_pairings(const RingPtr& ring, int degree, std::span<const Rational> functional);

Rational fujiki4(const HKRing& ring, std::span<const Rational> a, std::span<const Rational> b,
                 std::span<const Rational> c, std::span<const Rational> d);
const Matrix& pairing4_gram(const HKRing& ring);
// Σ q^{ij} v_i v_j, the diagonal restriction of the inverse form.
CohClass b_class(const HKRingPtr& ring);

// Degree-2 class with the given coordinates.
CohClass degree2(const RingPtr& ring, std::span<const Rational> coords);

}  // namespace hkv
