#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <string>

namespace ssf {

using BigInt = boost::multiprecision::cpp_int;

inline BigInt pow2(unsigned e) { return BigInt(1) << e; }

// Natural log of a positive integer of any size, accurate to double rounding.
double log_big(const BigInt& v);

inline std::string to_decimal(const BigInt& v) { return v.str(); }

}  // namespace ssf
