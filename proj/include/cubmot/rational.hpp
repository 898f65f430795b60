#pragma once

#include <gmpxx.h>

#include <string>
#include <string_view>
#include <vector>

namespace cubmot {

using Rational = mpq_class;
using Vector = std::vector<Rational>;

/// Canonical "p/q" form with q > 0 and gcd(p, q) = 1; integers keep the "/1".
std::string to_string(const Rational& r);

/// Accepts "p/q", "p" and surrounding whitespace. Throws Error{config} otherwise.
Rational parse_rational(std::string_view text);

inline Rational rat(long num, long den = 1) {
  Rational r(num, den);
  r.canonicalize();
  return r;
}

Rational binomial(long n, long k);

Vector zero_vector(std::size_t n);
bool is_zero(const Vector& v);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const Rational& s, const Vector& v);
Rational dot(const Vector& a, const Vector& b);

}  // namespace cubmot
