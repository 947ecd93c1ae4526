#pragma once

#include <cstdint>
#include <vector>

#include "ssfractal/bigint.hpp"
#include "ssfractal/caps.hpp"
#include "ssfractal/instance.hpp"

namespace ssf {

// Exact preimage counts m_c = |G^{-1}(c)| for every residue c in Z/AZ.
// While the total 2^s fits a 64-bit word the counts live in a flat uint64
// array; beyond that they switch to arbitrary-precision integers.  Accessors
// hide the distinction.
class MultiplicityVector {
 public:
  // Validating constructor from raw counts; requires counts.size() == modulus
  // and sum(counts) == 2^s.
  MultiplicityVector(uint64_t modulus, unsigned s, std::vector<BigInt> counts);

  uint64_t modulus() const { return modulus_; }
  unsigned s() const { return s_; }

  BigInt count(uint64_t residue) const;
  bool has_preimage(uint64_t residue) const;
  double log_count(uint64_t residue) const;  // ln m_c; residue must have a preimage
  uint64_t support_size() const;
  std::vector<uint64_t> support() const;     // residues with m_c > 0, ascending
  BigInt min_support_count() const;          // min over support
  BigInt max_count() const;
  BigInt total() const;                      // always 2^s
  // True when the smallest nonzero multiplicity is exactly 1, i.e. some
  // residue has a unique preimage.
  bool unit_min_multiplicity() const;

  template <class F>
  void for_each_support(F&& f) const {
    if (small_) {
      for (uint64_t c = 0; c < u_.size(); ++c)
        if (u_[c] != 0) f(c);
    } else {
      for (uint64_t c = 0; c < z_.size(); ++c)
        if (z_[c] != 0) f(c);
    }
  }

  bool small_storage() const { return small_; }

 private:
  MultiplicityVector(uint64_t modulus, unsigned s, std::vector<uint64_t> counts,
                     int /*tag*/);
  void check_total() const;

  uint64_t modulus_ = 0;
  unsigned s_ = 0;
  bool small_ = true;
  std::vector<uint64_t> u_;
  std::vector<BigInt> z_;

  friend MultiplicityVector multiplicity_dp(const Instance&, const Caps&);
  friend MultiplicityVector multiplicity_bruteforce(const Instance&, const Caps&);
};

// Exact multiplicity vector via s in-place cyclic convolutions with the
// two-point kernel of each weight.  Time O(s*A), memory one counter per
// residue.  Requires A within the modulus cap.
MultiplicityVector multiplicity_dp(const Instance& inst, const Caps& caps = Caps{});

// Independent oracle: walks all 2^s binary vectors (Gray-code order) and
// tallies residues directly.  Requires s within the brute-force cap.
MultiplicityVector multiplicity_bruteforce(const Instance& inst,
                                           const Caps& caps = Caps{});

// One collision class per residue whose preimage has at least min_size
// elements.  Members are binary vectors in lexicographic order; classes are
// ordered by decreasing size, then increasing residue.
struct CollisionClass {
  uint64_t residue = 0;
  std::vector<std::vector<uint8_t>> members;
  size_t size() const { return members.size(); }
};

std::vector<CollisionClass> collision_classes(const Instance& inst,
                                              uint64_t min_size,
                                              const Caps& caps = Caps{});

// How many residues have each multiplicity value: entries (l, N_l) with
// N_l = |{c : m_c = l}|, sorted by increasing l, zeros excluded.
struct MultiplicityHistogram {
  struct Entry {
    BigInt l;
    uint64_t count = 0;
  };
  std::vector<Entry> entries;
};

MultiplicityHistogram multiplicity_histogram(const MultiplicityVector& mv);

std::string multiplicity_to_csv(const MultiplicityVector& mv);
std::string multiplicity_to_json(const MultiplicityVector& mv);
std::string collisions_to_csv(const std::vector<CollisionClass>& classes);
std::string collisions_to_json(const std::vector<CollisionClass>& classes);

}  // namespace ssf
