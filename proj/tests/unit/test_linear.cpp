#include <doctest.h>

#include "hkv/error.hpp"
#include "hkv/matrix.hpp"
#include "hkv/rational.hpp"

using namespace hkv;

TEST_SUITE("linear") {
  TEST_CASE("rational rendering and parsing") {
    CHECK(to_string(ratio(6, 4)) == "3/2");
    CHECK(to_string(ratio(-4, 2)) == "-2");
    CHECK(to_string(ratio(3, -6)) == "-1/2");
    CHECK(parse_rational("-7/21") == Rational(-1, 3));
    CHECK(parse_rational("12") == 12);
    CHECK_THROWS_AS(parse_rational("1/0"), Error);
    CHECK_THROWS_AS(parse_rational("x"), Error);
    CHECK_THROWS_AS(parse_rational("1.5"), Error);
  }

  TEST_CASE("parallel product matches the serial triple loop") {
    Matrix a(5, 7), b(7, 4);
    for (std::size_t i = 0; i < 5; ++i) {
      for (std::size_t j = 0; j < 7; ++j) a(i, j) = (i * 3 + j) % 5 == 0 ? Rational(0) : Rational(long(i) - long(j), j + 1);
    }
    for (std::size_t i = 0; i < 7; ++i) {
      for (std::size_t j = 0; j < 4; ++j) b(i, j) = Rational(long(i * j) - 3, 2);
    }
    CHECK(multiply(a, b) == multiply_reference(a, b));
  }

  TEST_CASE("inverse, determinant, kernel") {
    const auto m = Matrix::from_rows({{2, 1, 0}, {1, 3, 1}, {0, 1, 4}});
    const auto inv = inverse(m);
    REQUIRE(inv);
    CHECK(multiply(m, *inv) == Matrix::identity(3));
    CHECK(determinant(m) == 18);
    const auto singular = Matrix::from_rows({{1, 2}, {2, 4}});
    CHECK_FALSE(inverse(singular));
    CHECK(rank(singular) == 1);
    const auto k = kernel_basis(singular);
    REQUIRE(k.rows() == 1);
    CHECK(is_zero(apply(singular, k.row(0))));
  }
}
