#pragma once

#include <cstdint>
#include <string>

namespace ssf {

// Resource limits for the exponential-cost operations.  The defaults keep
// every operation comfortably inside a few seconds and a few hundred MB.
struct Caps {
  uint64_t brute_force = 24;                      // max s for 2^s enumeration
  uint64_t ternary = 16;                          // max s for 3^s enumeration
  uint64_t modulus = (uint64_t(1) << 63) - 1;     // largest addressable modulus
  uint64_t attractor_outputs = uint64_t(1) << 20; // max strings from attractor_digits
};

// Parses an override string of the form "brute=24,ternary=16,modulus=1000,
// attractor=4096".  Keys may appear in any order; missing keys keep the
// value already present in `base`.  Unknown keys or malformed numbers raise
// ParseError.
Caps parse_caps(const std::string& spec, Caps base = Caps{});

}  // namespace ssf
