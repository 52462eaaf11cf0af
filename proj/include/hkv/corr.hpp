#pragma once

#include <cstddef>
#include <functional>
#include <map>
#include <span>
#include <utility>
#include <vector>

#include "hkv/hkring.hpp"

namespace hkv {

// Künneth tensor in ⊕ H^i ⊗ H^j of a self-product. Block (i, j) is a
// dim H^i × dim H^j table; a block (i, j) acts H^{top−i} → H^j.
class Correspondence {
public:
  using BlockMap = std::map<std::pair<int, int>, Matrix>;

  explicit Correspondence(RingPtr ring) : ring_(std::move(ring)) {}

  const RingPtr& ring() const noexcept { return ring_; }
  const BlockMap& blocks() const noexcept { return blocks_; }

  const Matrix* block(int i, int j) const;
  Matrix& block_ref(int i, int j);  // zero-initialized on first access
  void set_block(int i, int j, Matrix m);
  void prune();  // drops all-zero blocks

  bool is_zero() const;
  bool is_homogeneous(int codim) const;
  std::size_t nonzero_count() const;

  Correspondence& operator+=(const Correspondence& other);
  Correspondence& operator-=(const Correspondence& other);
  Correspondence& operator*=(const Rational& s);
  friend Correspondence operator+(Correspondence a, const Correspondence& b) { return a += b; }
  friend Correspondence operator-(Correspondence a, const Correspondence& b) { return a -= b; }
  friend Correspondence operator-(Correspondence a) { return a *= Rational(-1); }
  friend Correspondence operator*(Correspondence a, const Rational& s) { return a *= s; }
  friend Correspondence operator*(const Rational& s, Correspondence a) { return a *= s; }
  // Equality up to absent-versus-zero blocks.
  friend bool operator==(const Correspondence& a, const Correspondence& b);

private:
  RingPtr ring_;
  BlockMap blocks_;
};

Correspondence tensor(const CohClass& a, const CohClass& b);  // a ⊗ b
Correspondence pullback1(const CohClass& x);                   // x ⊗ [F]
Correspondence pullback2(const CohClass& x);                   // [F] ⊗ x
Correspondence unit_correspondence(const RingPtr& ring);       // [F×F]

CohClass pushforward1(const Correspondence& g);
CohClass pushforward2(const Correspondence& g);

// (a⊗b)·(c⊗d) = (ac)⊗(bd). Parallel over rows of the left factor.
Correspondence corr_cup(const Correspondence& g, const Correspondence& h);
// Literal quadruple sum over Künneth coefficients; serial reference.
Correspondence corr_cup_reference(const Correspondence& g, const Correspondence& h);

Correspondence transpose(const Correspondence& g);

// pushforward2(g · pullback1(x)).
CohClass act(const Correspondence& g, const CohClass& x);

// The correspondence `second ∘ first`: apply `first`, then `second`.
// For first = Σ a⊗b, second = Σ c⊗d it is Σ (∫ b·c) a⊗d.
Correspondence compose(const Correspondence& first, const Correspondence& second);

Correspondence diagonal_class(const RingPtr& ring);

// ι_Δ*(a⊗b) = a·b.
CohClass diag_pullback(const Correspondence& g);

// Matrix of x ↦ (act(g, x))_to for x ∈ H^from (rows: H^to basis).
Matrix action_matrix(const Correspondence& g, int from, int to);

struct TripleStat {
  int t = 0, p = 0, q = 0;
  bool admissible = false;
  std::size_t pairs = 0;
  std::size_t nonzero = 0;
};

struct TripleCheck {
  std::size_t forbidden_triples = 0;
  std::size_t admissible_triples = 0;
  std::size_t pairs_checked = 0;  // forbidden (t, α, β) evaluations
  std::size_t violations = 0;     // nonzero forbidden evaluations
  std::vector<TripleStat> stats;  // row-major in (t, p, q)

  const TripleStat& at(int t, int p, int q) const;
};

using TripleRule = std::function<bool(int t, int p, int q)>;

// For every (t, p, q) and every basis pair α, β in the source degrees of
// family[p], family[q], evaluates act(family[t], act(family[p], α)·act(family[q], β)).
// Nothing on the triple product is materialized. Pairs fan out over OpenMP.
TripleCheck triple_vanishing_check(std::span<const Correspondence> family, const TripleRule& admissible);
TripleCheck triple_vanishing_check(std::span<const Correspondence> family, int target_sum);
TripleCheck triple_vanishing_check_reference(std::span<const Correspondence> family, const TripleRule& admissible);

}  // namespace hkv
