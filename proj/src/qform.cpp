#include "hkv/qform.hpp"

#include <fstream>
#include <sstream>

#include "hkv/error.hpp"

namespace hkv {

Rational QuadraticSpace::pair(std::span<const Rational> x, std::span<const Rational> y) const {
  return dot(lower(x), y);
}

RationalVector QuadraticSpace::lower(std::span<const Rational> x) const {
  RationalVector y(rank());
  for (std::size_t i = 0; i < rank(); ++i) {
    if (sgn(x[i]) == 0) continue;
    for (auto j : support_[i]) y[j] += x[i] * gram_(i, j);
  }
  return y;
}

QuadraticSpace make_quadratic_space(std::size_t rank, const Matrix& gram) {
  if (rank == 0 || gram.rows() != rank || gram.cols() != rank) {
    throw Error(ErrorKind::BadShape, "gram must be " + std::to_string(rank) + "x" + std::to_string(rank));
  }
  if (!gram.is_symmetric()) throw Error(ErrorKind::NotSymmetric, "gram is not symmetric");
  auto inv = inverse(gram);
  if (!inv) throw Error(ErrorKind::Degenerate, "gram has determinant 0");
  QuadraticSpace q;
  q.gram_ = gram;
  q.inverse_ = std::move(*inv);
  q.support_.resize(rank);
  for (std::size_t i = 0; i < rank; ++i) {
    for (std::size_t j = 0; j < rank; ++j) {
      if (sgn(gram(i, j)) != 0) q.support_[i].push_back(j);
    }
  }
  return q;
}

InverseForm inverse_form(const QuadraticSpace& q) { return {q.inverse_gram()}; }

QuadraticSpace block_sum(const QuadraticSpace& a, const QuadraticSpace& b) {
  const auto n = a.rank() + b.rank();
  Matrix g(n, n);
  for (std::size_t i = 0; i < a.rank(); ++i)
    for (std::size_t j = 0; j < a.rank(); ++j) g(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.rank(); ++i)
    for (std::size_t j = 0; j < b.rank(); ++j) g(a.rank() + i, a.rank() + j) = b(i, j);
  return make_quadratic_space(n, g);
}

QuadraticSpace k3hilb_lattice(const QuadraticSpace& k3) {
  Matrix delta(1, 1);
  delta(0, 0) = -2;
  return block_sum(k3, make_quadratic_space(1, delta));
}

QuadraticSpace fano_lattice(const QuadraticSpace& b0, std::size_t h2_index) {
  const auto r = b0.rank();
  if (h2_index >= r) throw Error(ErrorKind::BadShape, "h2_index out of range");
  if (b0(h2_index, h2_index) != 3) {
    throw Error(ErrorKind::WrongCubicDegree, "b0(h^2,h^2) = " + to_string(b0(h2_index, h2_index)) + ", expected 3");
  }
  Matrix g(r, r);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < r; ++j) g(i, j) = b0(i, h2_index) * b0(j, h2_index) - b0(i, j);
  }
  return make_quadratic_space(r, g);
}

QuadraticSpace identity_space(std::size_t rank) { return make_quadratic_space(rank, Matrix::identity(rank)); }

QuadraticSpace k3_lattice() {
  Matrix g(22, 22);
  for (std::size_t u = 0; u < 3; ++u) {
    g(2 * u, 2 * u + 1) = 1;
    g(2 * u + 1, 2 * u) = 1;
  }
  // E8 Dynkin diagram: chain 0-2-3-4-5-6-7 with node 1 attached to node 3.
  constexpr std::pair<int, int> edges[] = {{0, 2}, {2, 3}, {3, 4}, {4, 5}, {5, 6}, {6, 7}, {1, 3}};
  for (std::size_t block = 0; block < 2; ++block) {
    const std::size_t o = 6 + 8 * block;
    for (std::size_t i = 0; i < 8; ++i) g(o + i, o + i) = -2;
    for (auto [a, b] : edges) {
      g(o + a, o + b) = 1;
      g(o + b, o + a) = 1;
    }
  }
  return make_quadratic_space(22, g);
}

QuadraticSpace default_fano_b0() {
  Matrix g = Matrix::identity(23);
  g(0, 0) = 3;
  return make_quadratic_space(23, g);
}

GramFile parse_gram(std::istream& in) {
  std::optional<Rational> scale;
  std::optional<std::size_t> h2;
  std::optional<std::size_t> rank;
  std::string line;
  std::vector<RationalVector> rows;
  std::size_t lineno = 0;
  auto fail = [&](const std::string& what) {
    throw Error(ErrorKind::ParseError, "line " + std::to_string(lineno) + ": " + what);
  };
  while (std::getline(in, line)) {
    ++lineno;
    if (auto hash = line.find('#'); hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::vector<std::string> tok;
    for (std::string t; ls >> t;) tok.push_back(t);
    if (tok.empty()) continue;
    if (!rank) {
      if (tok.size() != 2) fail("expected a header line");
      if (tok[0] == "fujiki_scale") {
        scale = parse_rational(tok[1]);
        if (sgn(*scale) <= 0) fail("fujiki_scale must be positive");
      } else if (tok[0] == "h2_index") {
        const auto v = parse_rational(tok[1]);
        if (v.get_den() != 1 || sgn(v) < 0) fail("h2_index must be a nonnegative integer");
        h2 = v.get_num().get_ui();
      } else if (tok[0] == "rank") {
        const auto v = parse_rational(tok[1]);
        if (v.get_den() != 1 || sgn(v) <= 0) fail("rank must be a positive integer");
        rank = v.get_num().get_ui();
      } else {
        fail("unknown header '" + tok[0] + "'");
      }
      continue;
    }
    if (rows.size() == *rank) fail("more than rank rows");
    if (tok.size() != *rank) {
      throw Error(ErrorKind::BadShape, "line " + std::to_string(lineno) + ": expected " + std::to_string(*rank) +
                                           " entries, found " + std::to_string(tok.size()));
    }
    RationalVector row;
    row.reserve(tok.size());
    for (const auto& t : tok) row.push_back(parse_rational(t));
    rows.push_back(std::move(row));
  }
  if (!rank) throw Error(ErrorKind::ParseError, "missing 'rank r' line");
  if (rows.size() != *rank) {
    throw Error(ErrorKind::BadShape, "expected " + std::to_string(*rank) + " rows, found " + std::to_string(rows.size()));
  }
  return {make_quadratic_space(*rank, Matrix::from_rows(rows)), scale, h2};
}

GramFile read_gram_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::FileNotFound, path);
  return parse_gram(in);
}

std::string format_gram(const QuadraticSpace& q) {
  std::ostringstream out;
  out << "rank " << q.rank() << '\n';
  for (std::size_t i = 0; i < q.rank(); ++i) {
    for (std::size_t j = 0; j < q.rank(); ++j) out << (j ? " " : "") << to_string(q(i, j));
    out << '\n';
  }
  return out.str();
}

}  // namespace hkv
