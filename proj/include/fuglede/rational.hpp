#pragma once

#include <cstdint>
#include <string>
#include <string_view>

#include <boost/multiprecision/cpp_int.hpp>

namespace fuglede {

/// Exact rational number. Always stored in lowest terms with a positive
/// denominator.
using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

/// Parses "p", "-p" or "p/q". Sets `*was_reduced` when the input was not in
/// lowest terms (the value is reduced either way). Throws fuglede::Error on
/// malformed text or a zero denominator.
Rational parse_rational(std::string_view text, bool* was_reduced = nullptr);

/// "p" for integers, "p/q" otherwise.
std::string to_string(const Rational& r);

inline double to_double(const Rational& r) { return r.convert_to<double>(); }

BigInt floor_div(const Rational& r);
BigInt ceil_div(const Rational& r);

inline Rational abs(const Rational& r) { return r < 0 ? Rational(-r) : r; }
inline Rational midpoint(const Rational& a, const Rational& b) {
  return (a + b) / 2;
}

/// Simplest rational (smallest denominator) in the closed interval [lo, hi],
/// provided its denominator does not exceed `max_den`.
bool simplest_rational_in(double lo, double hi, std::int64_t max_den,
                          Rational& out);

}  // namespace fuglede
