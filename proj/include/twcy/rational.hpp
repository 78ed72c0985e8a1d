#pragma once

#include <boost/multiprecision/gmp.hpp>
#include <string>

namespace twcy {

typedef boost::multiprecision::mpq_rational Rational;
typedef boost::multiprecision::mpz_int Integer;

// "p/q", or "p" when the denominator is 1.
std::string to_string(const Rational& r);

// Accepts "p", "-p", "p/q". Throws std::invalid_argument on malformed text
// or a zero denominator.
Rational parse_rational(const std::string& text);

inline int parity_sign(long e) { return (e % 2 == 0) ? 1 : -1; }

}  // namespace twcy
