#include "hkv/rational.hpp"

#include <cctype>

#include "hkv/error.hpp"

namespace hkv {

std::string to_string(const Rational& value) {
  // mpq_get_str already omits "/1" for canonical integers.
  return value.get_str();
}

namespace {

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  if (s.empty()) return false;
  for (char ch : s) {
    if (!std::isdigit(static_cast<unsigned char>(ch))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  const auto slash = text.find('/');
  const std::string_view num = text.substr(0, slash);
  const std::string_view den = slash == std::string_view::npos ? std::string_view{"1"} : text.substr(slash + 1);
  if (!is_integer_literal(num) || !is_integer_literal(den) || den.front() == '-' || den.front() == '+') {
    throw Error(ErrorKind::ParseError, "not a rational literal: '" + std::string(text) + "'");
  }
  std::string n(num);
  if (n.front() == '+') n.erase(0, 1);
  mpz_class p(n, 10);
  mpz_class q(std::string(den), 10);
  if (q == 0) throw Error(ErrorKind::ParseError, "zero denominator: '" + std::string(text) + "'");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

Rational ratio(long p, long q) {
  if (q == 0) throw Error(ErrorKind::BadShape, "zero denominator");
  Rational r{mpz_class(p), mpz_class(q)};
  r.canonicalize();
  return r;
}

bool is_zero(std::span<const Rational> v) {
  for (const auto& x : v) {
    if (sgn(x) != 0) return false;
  }
  return true;
}

std::size_t count_nonzero(std::span<const Rational> v) {
  std::size_t n = 0;
  for (const auto& x : v) n += sgn(x) != 0;
  return n;
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  Rational s = 0;
  const auto n = std::min(a.size(), b.size());
  for (std::size_t i = 0; i < n; ++i) {
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
  }
  return s;
}

}  // namespace hkv
