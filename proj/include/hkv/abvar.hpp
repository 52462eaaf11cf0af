#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "hkv/report.hpp"

namespace hkv {

enum class Factor { Abelian, Dual };

// H* of a product of abelian varieties of dimension d and their duals. Each
// factor contributes 2d odd generators; generator k of factor f is global
// index 2d·f + k, and monomials are bit sets over the global indices.
class AbelianRing {
public:
  static constexpr std::size_t max_generators = 64;

  static std::shared_ptr<const AbelianRing> make(int dim, std::vector<Factor> roster);

  int dim() const noexcept { return dim_; }
  const std::vector<Factor>& roster() const noexcept { return roster_; }
  std::size_t factors() const noexcept { return roster_.size(); }
  std::size_t generators_per_factor() const noexcept { return static_cast<std::size_t>(2 * dim_); }
  std::size_t generators() const noexcept { return roster_.size() * generators_per_factor(); }
  std::uint64_t top_mask() const noexcept;
  // ∫ of the top monomial: 1 on A, (−1)^d on Â.
  int orientation() const noexcept;
  std::uint64_t factor_mask(std::size_t f) const noexcept;

  friend bool operator==(const AbelianRing& a, const AbelianRing& b) {
    return a.dim_ == b.dim_ && a.roster_ == b.roster_;
  }

private:
  AbelianRing(int dim, std::vector<Factor> roster) : dim_(dim), roster_(std::move(roster)) {}
  int dim_;
  std::vector<Factor> roster_;
};

using AbelianRingPtr = std::shared_ptr<const AbelianRing>;

AbelianRingPtr product(const AbelianRingPtr& a, const AbelianRingPtr& b);

using Monomial = std::uint64_t;

class ExtClass {
public:
  explicit ExtClass(AbelianRingPtr ring) : ring_(std::move(ring)) {}

  static ExtClass unit(AbelianRingPtr ring);
  static ExtClass monomial(AbelianRingPtr ring, Monomial m, Rational coeff = 1);
  // Every generator, ascending; integrates to orientation().
  static ExtClass top(AbelianRingPtr ring);

  const AbelianRingPtr& ring() const noexcept { return ring_; }
  const std::map<Monomial, Rational>& terms() const noexcept { return terms_; }
  Rational coefficient(Monomial m) const;
  void add(Monomial m, const Rational& c);

  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_homogeneous(int degree) const;
  std::size_t size() const noexcept { return terms_.size(); }

  ExtClass& operator+=(const ExtClass& other);
  ExtClass& operator-=(const ExtClass& other);
  ExtClass& operator*=(const Rational& s);
  friend ExtClass operator+(ExtClass a, const ExtClass& b) { return a += b; }
  friend ExtClass operator-(ExtClass a, const ExtClass& b) { return a -= b; }
  friend ExtClass operator*(ExtClass a, const Rational& s) { return a *= s; }
  friend bool operator==(const ExtClass& a, const ExtClass& b);

  std::string str() const;

private:
  AbelianRingPtr ring_;
  std::map<Monomial, Rational> terms_;  // no zero coefficients
};

// Sign of e_S ∧ e_T against e_{S∪T}; zero when S and T meet.
int shuffle_sign(Monomial s, Monomial t) noexcept;
// e_S ∧ e_{S^c} = ε(S)·top inside the given generator mask.
int complement_sign(Monomial s, Monomial all) noexcept;

ExtClass wedge(const ExtClass& x, const ExtClass& y);
Rational integrate_ab(const ExtClass& x);

// Pullback along the projection to the factors `image` (strictly increasing)
// of `target`.
ExtClass pullback(const ExtClass& x, const AbelianRingPtr& target, const std::vector<std::size_t>& image);
// x ⊗ y on the product ring.
ExtClass tensor(const ExtClass& x, const ExtClass& y);
// Koszul transpose X×Y → Y×X, where X is the first `source_factors` factors.
ExtClass swap_factors(const ExtClass& g, std::size_t source_factors);

// p_{Y*}(x ∧ Γ) with x pulled back from the leading factors.
ExtClass ab_act(const ExtClass& g, const ExtClass& x);
// second ∘ first for first on X×Y, second on Y×Z, Y the last `middle_factors`
// factors of first. For first = a⊗b and second = c⊗d the result is (∫ b∧c)·a⊗d.
ExtClass ab_compose(const ExtClass& first, const ExtClass& second, std::size_t middle_factors);

// Class of the diagonal of X inside X×X.
ExtClass ab_diagonal(const AbelianRingPtr& x);

// [L] = Σ e_k ⊗ f_k on A×Â.
ExtClass poincare_class(int dim);
// p!·Σ_{|K|=p} e_K ⊗ e_K^∨ with e_K^∨ = f_{k_p} ∧ … ∧ f_{k_1}.
ExtClass poincare_power_closed_form(int dim, int p);

// Class of the small diagonal {(x, …, x)} in A^n.
ExtClass small_diagonal(int dim, std::size_t n);
// Σ_{∅≠I} (−1)^{m−|I|} Δ^m_I on A^m.
ExtClass modified_diagonal(int dim, std::size_t m);

Report verify_poincare_projectors(int dim);
Report verify_ab_mck(int dim);
Report verify_moddiag(int dim);
Report binomial_vanishing(int max_m);

}  // namespace hkv
