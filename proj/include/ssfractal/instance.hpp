#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "ssfractal/caps.hpp"

namespace ssf {

// A modular subset sum instance: weights a_1..a_s and a modulus A, defining
// G(x) = sum_i x_i * a_i mod A on binary vectors x of length s.  Weights lie
// in [1, A-1]; A >= 2.  Instances are immutable after construction.
class Instance {
 public:
  Instance(std::vector<uint64_t> weights, uint64_t modulus);

  size_t size() const { return weights_.size(); }  // s
  uint64_t modulus() const { return modulus_; }    // A
  const std::vector<uint64_t>& weights() const { return weights_; }
  uint64_t weight(size_t i) const { return weights_[i]; }
  uint64_t max_weight() const;

  const std::optional<std::string>& comment() const { return comment_; }
  void set_comment(std::string c) { comment_ = std::move(c); }

  // G applied to a binary vector given as 0/1 bytes (index i = x_{i+1}).
  uint64_t apply(const std::vector<uint8_t>& x) const;
  // G applied to a bitmask (bit i = x_{i+1}); requires s <= 64.
  uint64_t apply_mask(uint64_t mask) const;

  bool operator==(const Instance& o) const {
    return modulus_ == o.modulus_ && weights_ == o.weights_;
  }

 private:
  std::vector<uint64_t> weights_;
  uint64_t modulus_;
  std::optional<std::string> comment_;
};

// Density s / log2(A): the number of weights per modulus bit.
double density(const Instance& inst);

// Arithmetic-progression instance a, 2a, ..., sa with modulus (s+1)a.
Instance gen_arithmetic(uint64_t s, uint64_t a);

// s weights drawn uniformly from [1, A-1] where A = round(2^(s/rho)), so the
// resulting density is as close to rho as integer rounding allows.
Instance gen_random_density(uint64_t s, double rho, uint64_t seed,
                            const Caps& caps = Caps{});

// A superincreasing weight sequence (each weight exceeds the sum of all
// earlier ones) with a modulus larger than the total sum and larger than 2^s,
// so G is injective but never surjective.
Instance gen_superincreasing(uint64_t s, uint64_t seed,
                             const Caps& caps = Caps{});

// JSON document round-trip.  The file format is an object with fields
// "modulus" (integer), "weights" (array of integers) and an optional
// "comment" (string); anything else is rejected with a diagnostic.
Instance instance_from_json(const std::string& text);
std::string instance_to_json(const Instance& inst);
Instance load_instance(const std::string& path);
void save_instance(const Instance& inst, const std::string& path);

enum class FamilyKind { Arithmetic, RandomDensity, Superincreasing, ExplicitList };

const char* family_kind_name(FamilyKind k);

// An ordered family of instances indexed by strictly increasing size s, used
// for asymptotic dimension estimates.
class InstanceFamily {
 public:
  static InstanceFamily arithmetic(uint64_t a, const std::vector<uint64_t>& sizes);
  static InstanceFamily random_density(double rho, uint64_t seed,
                                       const std::vector<uint64_t>& sizes,
                                       const Caps& caps = Caps{});
  static InstanceFamily superincreasing(uint64_t seed,
                                        const std::vector<uint64_t>& sizes,
                                        const Caps& caps = Caps{});
  static InstanceFamily explicit_list(std::vector<Instance> members);

  FamilyKind kind() const { return kind_; }
  size_t size() const { return members_.size(); }
  const std::vector<Instance>& members() const { return members_; }

 private:
  InstanceFamily(FamilyKind kind, std::vector<Instance> members);
  FamilyKind kind_;
  std::vector<Instance> members_;
};

}  // namespace ssf
