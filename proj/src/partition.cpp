#include "ssfractal/partition.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>

#include "ssfractal/errors.hpp"
#include "src/format_util.hpp"

namespace ssf {

WeakPartitionSolution WeakPartitionSolution::canonical(std::vector<int8_t> y) {
  int8_t lead = 0;
  for (int8_t d : y) {
    if (d < -1 || d > 1)
      fail(ErrorCode::InvalidArgument, "digits must lie in {-1, 0, +1}");
    if (lead == 0) lead = d;
  }
  if (lead == 0)
    fail(ErrorCode::InvalidArgument, "the zero vector is not a solution");
  if (lead < 0)
    for (int8_t& d : y) d = int8_t(-d);
  return WeakPartitionSolution(std::move(y));
}

WeakPartitionSolution WeakPartitionSolution::from_string(const std::string& digits) {
  std::vector<int8_t> y;
  y.reserve(digits.size());
  for (char ch : digits) {
    switch (ch) {
      case '+': y.push_back(1); break;
      case '-': y.push_back(-1); break;
      case '0': y.push_back(0); break;
      default:
        fail(ErrorCode::ParseError,
             std::string("invalid solution digit '") + ch + "'");
    }
  }
  return canonical(std::move(y));
}

size_t WeakPartitionSolution::nonzero_count() const {
  size_t n = 0;
  for (int8_t d : y_)
    if (d != 0) ++n;
  return n;
}

size_t WeakPartitionSolution::zero_count() const {
  return y_.size() - nonzero_count();
}

std::vector<size_t> WeakPartitionSolution::plus_indices() const {
  std::vector<size_t> out;
  for (size_t i = 0; i < y_.size(); ++i)
    if (y_[i] > 0) out.push_back(i);
  return out;
}

std::vector<size_t> WeakPartitionSolution::minus_indices() const {
  std::vector<size_t> out;
  for (size_t i = 0; i < y_.size(); ++i)
    if (y_[i] < 0) out.push_back(i);
  return out;
}

std::string WeakPartitionSolution::to_string() const {
  std::string out;
  out.reserve(y_.size());
  for (int8_t d : y_) out += d > 0 ? '+' : d < 0 ? '-' : '0';
  return out;
}

std::vector<WeakPartitionSolution> weak_partition_enumerate(const Instance& inst,
                                                            const Caps& caps) {
  size_t s = inst.size();
  if (uint64_t(s) > caps.ternary)
    fail(ErrorCode::InstanceTooLarge,
         "s = " + std::to_string(s) + " exceeds the ternary cap " +
             std::to_string(caps.ternary));
  uint64_t modulus = inst.modulus();
  std::vector<WeakPartitionSolution> out;
  std::vector<int8_t> y(s, 0);
  // Depth-first over digits in the order 0, +1, -1; forcing the first
  // nonzero digit to be +1 both canonicalizes and halves the walk.  The
  // visit order makes the output sorted for the digit ranking 0 < + < -.
  std::function<void(size_t, uint64_t, bool)> walk = [&](size_t i, uint64_t sum,
                                                         bool nonzero) {
    if (i == s) {
      if (nonzero && sum == 0)
        out.push_back(WeakPartitionSolution::canonical(y));
      return;
    }
    uint64_t a = inst.weight(i);
    y[i] = 0;
    walk(i + 1, sum, nonzero);
    y[i] = 1;
    uint64_t up = sum + a;
    if (up >= modulus) up -= modulus;
    walk(i + 1, up, true);
    if (nonzero) {
      y[i] = -1;
      uint64_t down = sum + (modulus - a);
      if (down >= modulus) down -= modulus;
      walk(i + 1, down, true);
    }
    y[i] = 0;
  };
  walk(0, 0, false);
  return out;
}

namespace {

// One pass of out[c] = 2 in[c] + in[c - a] + in[c + a] over Z/AZ.
template <class T>
void triple_step(const std::vector<T>& in, std::vector<T>& out, uint64_t modulus,
                 uint64_t a) {
  uint64_t up = a;                 // index offset for c + a
  uint64_t down = modulus - a;     // index offset for c - a
  for (uint64_t c = 0; c < modulus; ++c) {
    uint64_t plus = c + up;
    if (plus >= modulus) plus -= modulus;
    uint64_t minus = c + down;
    if (minus >= modulus) minus -= modulus;
    out[c] = in[c];
    out[c] += in[c];
    out[c] += in[plus];
    out[c] += in[minus];
  }
}

template <class T>
T ternary_kernel_at_zero(const Instance& inst) {
  uint64_t modulus = inst.modulus();
  std::vector<T> cur(modulus, T(0)), next(modulus, T(0));
  cur[0] = T(1);
  for (uint64_t a : inst.weights()) {
    triple_step(cur, next, modulus, a);
    cur.swap(next);
  }
  return cur[0];
}

}  // namespace

BigInt weighted_zero_count_dp(const Instance& inst, const Caps& caps) {
  if (inst.modulus() > caps.modulus)
    fail(ErrorCode::ModulusTooLarge,
         "modulus " + std::to_string(inst.modulus()) +
             " exceeds the addressable cap " + std::to_string(caps.modulus));
  size_t s = inst.size();
  // The accumulated kernel total is (1 + 1 + 2)^s = 4^s, so 64-bit words
  // suffice through s = 31.
  BigInt at_zero;
  if (s <= 31) at_zero = ternary_kernel_at_zero<uint64_t>(inst);
  else at_zero = ternary_kernel_at_zero<BigInt>(inst);
  // at_zero counts all y in {-1,0,+1}^s with G-sum zero, weighting each by
  // 2^(zeros), including y = 0 which contributes exactly 2^s.  The remaining
  // mass splits evenly between each solution and its negation.
  BigInt surplus = at_zero - pow2(unsigned(s));
  if (surplus < 0 || surplus % 2 != 0)
    throw std::logic_error("weighted zero count lost kernel mass");
  return surplus / 2;
}

LowerBoundReport lower_bound(const Instance& inst, const Caps& caps) {
  LowerBoundReport rep;
  rep.s = unsigned(inst.size());
  rep.modulus = inst.modulus();
  rep.total_weighted = weighted_zero_count_dp(inst, caps);
  rep.rhs = pow2(rep.s) - rep.total_weighted;
  if (rep.rhs > 0)
    rep.d0_bound = log_big(rep.rhs) / std::log(double(inst.modulus()));
  rep.image_size = multiplicity_dp(inst, caps).support_size();
  return rep;
}

namespace {

void check_solution_matches(const WeakPartitionSolution& sol,
                            const Instance& inst) {
  if (sol.length() != inst.size())
    fail(ErrorCode::SolutionInstanceMismatch,
         "solution length " + std::to_string(sol.length()) +
             " does not match s = " + std::to_string(inst.size()));
  uint64_t modulus = inst.modulus();
  uint64_t sum = 0;
  for (size_t i = 0; i < sol.length(); ++i) {
    int8_t d = sol.digits()[i];
    if (d > 0) sum += inst.weight(i);
    else if (d < 0) sum += modulus - inst.weight(i);
    if (sum >= modulus) sum -= modulus;
  }
  if (sum != 0)
    fail(ErrorCode::SolutionInstanceMismatch,
         "solution weight sum is " + std::to_string(sum) + " mod " +
             std::to_string(modulus) + ", not 0");
}

}  // namespace

std::vector<CollisionPair> expand_collisions(const WeakPartitionSolution& sol,
                                             const Instance& inst) {
  check_solution_matches(sol, inst);
  size_t s = inst.size();
  std::vector<uint8_t> base1(s, 0), base2(s, 0);
  std::vector<size_t> free;
  for (size_t i = 0; i < s; ++i) {
    int8_t d = sol.digits()[i];
    if (d > 0) base1[i] = 1;
    else if (d < 0) base2[i] = 1;
    else free.push_back(i);
  }
  std::vector<CollisionPair> pairs;
  if (free.size() <= 20) pairs.reserve(size_t(1) << free.size());
  std::vector<uint8_t> x1 = base1, x2 = base2;
  // Subsets of the free positions in lexicographic order over their sorted
  // index sequences: emit the current subset, then extend it.
  std::function<void(size_t)> walk = [&](size_t from) {
    if (inst.apply(x1) != inst.apply(x2))
      throw std::logic_error("expanded pair does not collide");
    pairs.push_back({x1, x2});
    for (size_t k = from; k < free.size(); ++k) {
      x1[free[k]] = 1;
      x2[free[k]] = 1;
      walk(k + 1);
      x1[free[k]] = 0;
      x2[free[k]] = 0;
    }
  };
  walk(0);
  return pairs;
}

WeakPartitionSolution collision_to_partition(const CollisionPair& pair,
                                             const Instance& inst) {
  if (pair.x1.size() != inst.size() || pair.x2.size() != inst.size())
    fail(ErrorCode::SolutionInstanceMismatch,
         "collision vectors do not match s = " + std::to_string(inst.size()));
  if (pair.x1 == pair.x2)
    fail(ErrorCode::NotACollision, "the two vectors are identical");
  if (inst.apply(pair.x1) != inst.apply(pair.x2))
    fail(ErrorCode::NotACollision, "the two vectors map to different residues");
  std::vector<int8_t> y(inst.size());
  for (size_t i = 0; i < y.size(); ++i)
    y[i] = int8_t(int(pair.x1[i]) - int(pair.x2[i]));
  return WeakPartitionSolution::canonical(std::move(y));
}

FourCollisionResult four_collision(const WeakPartitionSolution& sol,
                                   std::vector<size_t> t1,
                                   std::vector<size_t> t2,
                                   const Instance& inst) {
  check_solution_matches(sol, inst);
  size_t s = inst.size();
  auto check_subset = [&](std::vector<size_t>& t, const char* name) {
    std::sort(t.begin(), t.end());
    if (std::adjacent_find(t.begin(), t.end()) != t.end())
      fail(ErrorCode::InvalidArgument,
           std::string(name) + " contains a repeated index");
    for (size_t i : t) {
      if (i >= s)
        fail(ErrorCode::InvalidArgument,
             std::string(name) + " index " + std::to_string(i) +
                 " is out of range");
      if (sol.digits()[i] != 0)
        fail(ErrorCode::SetsNotFree,
             std::string(name) + " index " + std::to_string(i) +
                 " is not a free position of the solution");
    }
  };
  check_subset(t1, "T1");
  check_subset(t2, "T2");
  uint64_t modulus = inst.modulus();
  auto subset_sum = [&](const std::vector<size_t>& t) {
    uint64_t sum = 0;
    for (size_t i : t) {
      sum += inst.weight(i);
      if (sum >= modulus) sum -= modulus;
    }
    return sum;
  };
  if (subset_sum(t1) != subset_sum(t2))
    fail(ErrorCode::HypothesisViolated,
         "the two subsets have different weight sums mod A");
  if (t1 == t2)
    fail(ErrorCode::HypothesisViolated,
         "the two subsets coincide, so no new solution arises");

  // Derived solution on the symmetric difference: +1 where only T1 selects,
  // -1 where only T2 does.
  std::vector<int8_t> y(s, 0);
  for (size_t i : t1) y[i] = 1;
  for (size_t i : t2) y[i] = y[i] == 1 ? 0 : int8_t(-1);
  WeakPartitionSolution derived = WeakPartitionSolution::canonical(std::move(y));
  check_solution_matches(derived, inst);

  auto build = [&](const std::vector<size_t>& side,
                   const std::vector<size_t>& t) {
    std::vector<uint8_t> x(s, 0);
    for (size_t i : side) x[i] = 1;
    for (size_t i : t) x[i] = 1;
    return x;
  };
  std::vector<size_t> plus = sol.plus_indices();
  std::vector<size_t> minus = sol.minus_indices();
  std::vector<std::vector<uint8_t>> members = {
      build(plus, t1), build(plus, t2), build(minus, t1), build(minus, t2)};
  uint64_t residue = inst.apply(members[0]);
  for (const auto& x : members)
    if (inst.apply(x) != residue)
      throw std::logic_error("four-collision members disagree on the residue");
  std::sort(members.begin(), members.end());
  if (std::adjacent_find(members.begin(), members.end()) != members.end())
    throw std::logic_error("four-collision members are not pairwise distinct");

  FourCollisionResult result{std::move(derived), {}};
  result.witness.residue = residue;
  result.witness.members = std::move(members);
  return result;
}

bool has_collision(const Instance& inst, const Caps& caps) {
  size_t s = inst.size();
  uint64_t modulus = inst.modulus();
  // With more vectors than residues a collision is forced.
  if (s >= 64 || (uint64_t(1) << s) > modulus) return true;
  if (uint64_t(s) <= caps.brute_force) {
    std::vector<uint64_t> sums;
    sums.reserve(size_t(1) << s);
    for (uint64_t mask = 0; mask < (uint64_t(1) << s); ++mask)
      sums.push_back(inst.apply_mask(mask));
    std::sort(sums.begin(), sums.end());
    return std::adjacent_find(sums.begin(), sums.end()) != sums.end();
  }
  if (modulus <= caps.modulus)
    return multiplicity_dp(inst, caps).max_count() > 1;
  fail(ErrorCode::InstanceTooLarge,
       "neither the enumeration nor the counting route fits the caps");
}

std::string solutions_to_text(const std::vector<WeakPartitionSolution>& sols) {
  std::string out;
  for (const WeakPartitionSolution& sol : sols) {
    out += sol.to_string();
    out += '\n';
  }
  return out;
}

std::string solutions_to_json(const std::vector<WeakPartitionSolution>& sols) {
  std::string out = "{\"count\":" + std::to_string(sols.size()) +
                    ",\"solutions\":[";
  for (size_t i = 0; i < sols.size(); ++i) {
    if (i) out += ',';
    out += '"' + sols[i].to_string() + '"';
  }
  out += "]}\n";
  return out;
}

std::string lower_bound_to_json(const LowerBoundReport& report) {
  std::string out = "{\"s\":" + std::to_string(report.s) +
                    ",\"modulus\":" + std::to_string(report.modulus) +
                    ",\"total_weighted\":" + to_decimal(report.total_weighted) +
                    ",\"rhs\":" + to_decimal(report.rhs);
  if (report.d0_bound)
    out += ",\"d0_bound\":" + detail::fmt_real(*report.d0_bound);
  if (report.image_size)
    out += ",\"image_size\":" + std::to_string(*report.image_size);
  out += "}\n";
  return out;
}

}  // namespace ssf
