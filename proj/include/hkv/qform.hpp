#pragma once

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hkv/matrix.hpp"

namespace hkv {

struct InverseForm {
  Matrix coeffs;
};

// Nondegenerate symmetric bilinear form over Q. Immutable once built.
class QuadraticSpace {
public:
  std::size_t rank() const noexcept { return gram_.rows(); }
  const Matrix& gram() const noexcept { return gram_; }
  const Matrix& inverse_gram() const noexcept { return inverse_; }
  const Rational& operator()(std::size_t i, std::size_t j) const { return gram_(i, j); }

  Rational pair(std::span<const Rational> x, std::span<const Rational> y) const;
  RationalVector lower(std::span<const Rational> x) const;  // x ↦ q(x, v_k)_k

  // Column indices of the nonzero entries of row i.
  const std::vector<std::size_t>& support(std::size_t i) const { return support_[i]; }

  friend bool operator==(const QuadraticSpace& a, const QuadraticSpace& b) { return a.gram_ == b.gram_; }

private:
  friend QuadraticSpace make_quadratic_space(std::size_t rank, const Matrix& gram);
  Matrix gram_;
  Matrix inverse_;
  std::vector<std::vector<std::size_t>> support_;
};

QuadraticSpace make_quadratic_space(std::size_t rank, const Matrix& gram);
InverseForm inverse_form(const QuadraticSpace& q);

// Orthogonal sum with a (−2) line; the new last index is the δ-slot.
QuadraticSpace k3hilb_lattice(const QuadraticSpace& k3);

// gram[i][j] = b0[i][h]·b0[j][h] − b0[i][j] with h = h2_index; requires b0[h][h] = 3.
QuadraticSpace fano_lattice(const QuadraticSpace& b0, std::size_t h2_index);

// U³ ⊕ E8(−1)², rank 22.
QuadraticSpace k3_lattice();
// diag(3) ⊕ identity(22), a rational stand-in with the right h²-degree.
QuadraticSpace default_fano_b0();
QuadraticSpace identity_space(std::size_t rank);
QuadraticSpace block_sum(const QuadraticSpace& a, const QuadraticSpace& b);

// Gram file: optional header lines "fujiki_scale p/q" and "h2_index k",
// then "rank r", then r rows of r rationals.
struct GramFile {
  QuadraticSpace space;
  std::optional<Rational> fujiki_scale;
  std::optional<std::size_t> h2_index;
};

GramFile parse_gram(std::istream& in);
GramFile read_gram_file(const std::string& path);
std::string format_gram(const QuadraticSpace& q);

}  // namespace hkv
