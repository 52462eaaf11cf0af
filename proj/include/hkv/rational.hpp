#pragma once

#include <gmpxx.h>

#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace hkv {

using Rational = mpq_class;
using RationalVector = std::vector<Rational>;

// p/q in lowest terms. The two-argument mpq_class constructor does not reduce,
// and GMP arithmetic requires reduced operands.
Rational ratio(long p, long q);

// Canonical rendering: "p/q" in lowest terms with q > 0, plain "p" for integers.
std::string to_string(const Rational& value);

// Accepts "p", "-p", "p/q"; throws Error(ParseError) otherwise.
Rational parse_rational(std::string_view text);

bool is_zero(std::span<const Rational> v);
std::size_t count_nonzero(std::span<const Rational> v);

Rational dot(std::span<const Rational> a, std::span<const Rational> b);

}  // namespace hkv
