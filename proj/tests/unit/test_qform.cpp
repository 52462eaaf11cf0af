#include <doctest.h>

#include <sstream>

#include "hkv/error.hpp"
#include "hkv/qform.hpp"

using namespace hkv;

namespace {
ErrorKind kind_of(auto&& f) {
  try {
    f();
  } catch (const Error& e) {
    return e.kind();
  }
  FAIL("no error thrown");
  return ErrorKind::BadShape;
}
}  // namespace

TEST_SUITE("qform") {
  TEST_CASE("validation") {
    CHECK(kind_of([] { make_quadratic_space(2, Matrix::from_rows({{1, 2}, {3, 1}})); }) == ErrorKind::NotSymmetric);
    CHECK(kind_of([] { make_quadratic_space(2, Matrix::from_rows({{1, 1}, {1, 1}})); }) == ErrorKind::Degenerate);
    CHECK(kind_of([] { make_quadratic_space(3, Matrix::from_rows({{1, 0}, {0, 1}})); }) == ErrorKind::BadShape);
    CHECK_NOTHROW(make_quadratic_space(1, Matrix::from_rows({{-2}})));
  }

  TEST_CASE("inverse form") {
    const auto six = make_quadratic_space(1, Matrix::from_rows({{6}}));
    CHECK(inverse_form(six).coeffs(0, 0) == Rational(1, 6));
    const auto u = make_quadratic_space(2, Matrix::from_rows({{0, 1}, {1, 0}}));
    CHECK(inverse_form(u).coeffs == u.gram());
  }

  TEST_CASE("K3 lattice and its Hilbert-square extension") {
    const auto k3 = k3_lattice();
    CHECK(k3.rank() == 22);
    CHECK(determinant(k3.gram()) == -1);
    for (std::size_t i = 0; i < 22; ++i) CHECK(Rational(k3(i, i) / 2).get_den() == 1);
    const auto f = k3hilb_lattice(k3);
    CHECK(f.rank() == 23);
    CHECK(f(22, 22) == -2);
    CHECK(determinant(f.gram()) == determinant(k3.gram()) * -2);
    for (std::size_t i = 0; i < 22; ++i) CHECK(f(i, 22) == 0);
  }

  TEST_CASE("Fano lattice") {
    const auto b0 = default_fano_b0();
    const auto q = fano_lattice(b0, 0);
    CHECK(q(0, 0) == 6);
    for (std::size_t i = 1; i < q.rank(); ++i) {
      for (std::size_t j = 1; j < q.rank(); ++j) CHECK(q(i, j) == -b0(i, j));
    }
    Matrix bad = b0.gram();
    bad(0, 0) = 2;
    CHECK(kind_of([&] { fano_lattice(make_quadratic_space(23, bad), 0); }) == ErrorKind::WrongCubicDegree);
  }

  TEST_CASE("Gram file round trip and errors") {
    const auto q = make_quadratic_space(3, Matrix::from_rows({{2, Rational(1, 2), 0}, {Rational(1, 2), -1, 0}, {0, 0, 5}}));
    std::istringstream in(format_gram(q));
    CHECK(parse_gram(in).space == q);

    std::istringstream with_header("# comment\nfujiki_scale 3/2\nh2_index 1\nrank 2\n1 0\n0 3\n");
    const auto file = parse_gram(with_header);
    CHECK(file.fujiki_scale == Rational(3, 2));
    CHECK(file.h2_index == 1u);

    std::istringstream ragged("rank 2\n1 0\n0\n");
    CHECK(kind_of([&] { parse_gram(ragged); }) == ErrorKind::BadShape);
    std::istringstream garbage("rank 2\n1 x\n0 1\n");
    CHECK(kind_of([&] { parse_gram(garbage); }) == ErrorKind::ParseError);
    CHECK(kind_of([] { read_gram_file("/nonexistent/gram.txt"); }) == ErrorKind::FileNotFound);
  }
}
