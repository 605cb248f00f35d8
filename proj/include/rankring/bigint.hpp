#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstdint>
#include <string>

namespace rankring {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

inline BigInt big_pow(const BigInt& base, std::uint64_t exp) {
  BigInt result = 1;
  BigInt b = base;
  while (exp > 0) {
    if (exp & 1U) result *= b;
    b *= b;
    exp >>= 1U;
  }
  return result;
}

inline std::string to_decimal(const BigInt& v) { return v.str(); }

/// Rounds a non-negative rational to the nearest integer, ties upward.
inline BigInt round_nearest(const BigRational& v) {
  BigInt num = boost::multiprecision::numerator(v);
  BigInt den = boost::multiprecision::denominator(v);
  return (2 * num + den) / (2 * den);
}

inline BigInt ceil_div(const BigRational& v) {
  BigInt num = boost::multiprecision::numerator(v);
  BigInt den = boost::multiprecision::denominator(v);
  return (num + den - 1) / den;
}

}  // namespace rankring
