#include "chromaplex/rational.hpp"

#include "chromaplex/error.hpp"

namespace chromaplex {

Rational make_rational(std::int64_t numerator, std::int64_t denominator) {
  if (denominator == 0) throw InvalidArgumentError("rational with zero denominator");
  Rational r(mpz_class(std::to_string(numerator)), mpz_class(std::to_string(denominator)));
  r.canonicalize();
  return r;
}

std::string to_string(const Rational& r) {
  if (r.get_den() == 1) return r.get_num().get_str();
  return r.get_num().get_str() + "/" + r.get_den().get_str();
}

double to_double(const Rational& r) { return r.get_d(); }

bool is_integer(const Rational& r) { return r.get_den() == 1; }

std::uint64_t factorial(unsigned n) {
  if (n > 20) throw InvalidSizeError("factorial: result does not fit in 64 bits");
  std::uint64_t f = 1;
  for (unsigned k = 2; k <= n; ++k) f *= k;
  return f;
}

}  // namespace chromaplex
