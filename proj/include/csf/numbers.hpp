#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <stdexcept>
#include <string>

namespace csf {

// Exact arithmetic everywhere; no floating point in any computation path.
using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline std::string to_string(const BigInt& v) { return v.str(); }

// Renders "-12" or "5/6"; the denominator is omitted when it is 1.
inline std::string to_string(const BigRational& v) {
    BigInt num = boost::multiprecision::numerator(v);
    BigInt den = boost::multiprecision::denominator(v);
    if (den == 1) return num.str();
    return num.str() + "/" + den.str();
}

inline bool is_integer(const BigRational& v) {
    return boost::multiprecision::denominator(v) == 1;
}

inline BigInt to_integer(const BigRational& v) {
    if (!is_integer(v)) throw std::domain_error("expected integral value, got " + to_string(v));
    return boost::multiprecision::numerator(v);
}

// Parses "a" or "a/b" with optional sign.
BigRational parse_rational(const std::string& text);

}  // namespace csf
