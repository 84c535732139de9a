#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <string>

namespace ordforge {

using BigNat = boost::multiprecision::cpp_int;

enum class Ordering { Less, Equal, Greater };

inline Ordering compare_bignat(const BigNat& a, const BigNat& b) {
  if (a < b) return Ordering::Less;
  if (b < a) return Ordering::Greater;
  return Ordering::Equal;
}

inline const char* to_string(Ordering o) {
  switch (o) {
    case Ordering::Less: return "less";
    case Ordering::Equal: return "equal";
    case Ordering::Greater: return "greater";
  }
  return "?";
}

inline Ordering flip(Ordering o) {
  if (o == Ordering::Less) return Ordering::Greater;
  if (o == Ordering::Greater) return Ordering::Less;
  return Ordering::Equal;
}

// Number of bits in the binary representation; 0 for the value 0.
inline std::size_t bit_length(const BigNat& v) {
  if (v == 0) return 0;
  return static_cast<std::size_t>(boost::multiprecision::msb(v)) + 1;
}

inline BigNat pow2(std::size_t e) {
  BigNat r = 1;
  r <<= e;
  return r;
}

inline std::string decimal(const BigNat& v) { return v.str(); }

}  // namespace ordforge
