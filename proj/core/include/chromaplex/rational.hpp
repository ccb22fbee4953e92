#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>

namespace chromaplex {

// Exact rationals, always kept in canonical form.
using Rational = mpq_class;

Rational make_rational(std::int64_t numerator, std::int64_t denominator = 1);

// "p/q", or "p" when the denominator is one.
std::string to_string(const Rational& r);
double to_double(const Rational& r);
bool is_integer(const Rational& r);

std::uint64_t factorial(unsigned n);

}  // namespace chromaplex
