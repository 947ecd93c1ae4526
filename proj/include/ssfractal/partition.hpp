#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "ssfractal/bigint.hpp"
#include "ssfractal/caps.hpp"
#include "ssfractal/instance.hpp"
#include "ssfractal/multiplicity.hpp"

namespace ssf {

// A weak partition solution: a nonzero vector y in {-1,0,+1}^s with
// sum_i y_i * a_i = 0 mod A.  Solutions are kept canonical: the first
// nonzero digit is +1 (every solution and its negation collapse to one
// representative).  Serialized as a signed-digit string over '+', '0', '-'.
class WeakPartitionSolution {
 public:
  // Canonicalizes by flipping sign if needed; rejects the zero vector and
  // digits outside {-1,0,+1}.
  static WeakPartitionSolution canonical(std::vector<int8_t> y);
  static WeakPartitionSolution from_string(const std::string& digits);

  const std::vector<int8_t>& digits() const { return y_; }
  size_t length() const { return y_.size(); }           // s
  size_t nonzero_count() const;
  size_t zero_count() const;                            // r(y)
  std::vector<size_t> plus_indices() const;             // 0-based, ascending
  std::vector<size_t> minus_indices() const;
  std::string to_string() const;

  bool operator==(const WeakPartitionSolution& o) const { return y_ == o.y_; }

 private:
  explicit WeakPartitionSolution(std::vector<int8_t> y) : y_(std::move(y)) {}
  std::vector<int8_t> y_;
};

// All canonical weak partition solutions, ordered lexicographically with
// digit order 0 < + < -.  Requires s within the ternary cap.
std::vector<WeakPartitionSolution> weak_partition_enumerate(
    const Instance& inst, const Caps& caps = Caps{});

// Exact value of sum over canonical solutions y of 2^(r(y)) where r counts
// the zeros of y, via one pass of cyclic convolutions with the three-point
// kernel (x^-a + 2 + x^a) per weight.  Time O(s*A), no enumeration.
BigInt weighted_zero_count_dp(const Instance& inst, const Caps& caps = Caps{});

// The image lower bound |G({0,1}^s)| >= 2^s - sum_y 2^(r(y)): the exact
// weighted sum, the (possibly negative) right-hand side, the dimension bound
// log(rhs)/log(A) when the rhs is positive, and the true image size when the
// modulus is addressable.
struct LowerBoundReport {
  unsigned s = 0;
  uint64_t modulus = 0;
  BigInt total_weighted;            // sum of 2^(r(y)) over canonical solutions
  BigInt rhs;                       // 2^s - total_weighted
  std::optional<double> d0_bound;   // log(rhs)/log(A), present iff rhs > 0
  std::optional<uint64_t> image_size;
};

LowerBoundReport lower_bound(const Instance& inst, const Caps& caps = Caps{});

// An unordered collision: two distinct binary vectors with G(x1) = G(x2).
struct CollisionPair {
  std::vector<uint8_t> x1, x2;
};

// All 2^(number of zeros) collision pairs induced by one weak partition
// solution: x1 takes the +1 positions, x2 the -1 positions, and every subset
// T of the zero positions joins both sides.  Pairs are ordered by T in
// lexicographic subset order, each verified against the instance.
std::vector<CollisionPair> expand_collisions(const WeakPartitionSolution& sol,
                                             const Instance& inst);

// The reverse direction: the canonical solution y = x1 - x2 of a collision.
WeakPartitionSolution collision_to_partition(const CollisionPair& pair,
                                             const Instance& inst);

// Four pairwise distinct vectors in one preimage, built from a solution and
// two distinct subsets T1, T2 of its zero positions whose weight sums agree
// mod A.  Returns the derived solution supported on the symmetric difference
// together with the witness class of the four vectors.
struct FourCollisionResult {
  WeakPartitionSolution derived;
  CollisionClass witness;
};

FourCollisionResult four_collision(const WeakPartitionSolution& sol,
                                   std::vector<size_t> t1,
                                   std::vector<size_t> t2,
                                   const Instance& inst);

// Whether G has any collision at all, i.e. max multiplicity >= 2.  Picks the
// cheaper of the counting and enumeration routes that fits the caps.
bool has_collision(const Instance& inst, const Caps& caps = Caps{});

std::string solutions_to_text(const std::vector<WeakPartitionSolution>& sols);
std::string solutions_to_json(const std::vector<WeakPartitionSolution>& sols);
std::string lower_bound_to_json(const LowerBoundReport& report);

}  // namespace ssf
