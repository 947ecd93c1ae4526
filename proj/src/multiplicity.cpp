#include "ssfractal/multiplicity.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <utility>

#include "ssfractal/errors.hpp"
#include "src/format_util.hpp"

namespace ssf {

namespace {

void check_modulus_cap(const Instance& inst, const Caps& caps) {
  if (inst.modulus() > caps.modulus)
    fail(ErrorCode::ModulusTooLarge,
         "modulus " + std::to_string(inst.modulus()) +
             " exceeds the addressable cap " + std::to_string(caps.modulus));
}

// Multiplies the count polynomial by (1 + x^a) modulo x^A - 1, in place.
// The update m[c] += m[c - a] must consume each source before it is
// overwritten, which walking every gcd(a, A) cycle backwards guarantees with
// a single saved value per cycle.
template <class T>
void double_step(std::vector<T>& m, uint64_t modulus, uint64_t a) {
  uint64_t g = std::gcd(a, modulus);
  for (uint64_t r = 0; r < g; ++r) {
    uint64_t last = r + (modulus - a);  // r - a mod A; r < g <= a keeps it in range
    T saved = m[last];
    uint64_t c = last;
    while (c != r) {
      uint64_t prev = c >= a ? c - a : c + (modulus - a);
      m[c] += m[prev];
      c = prev;
    }
    m[r] += saved;
  }
}

}  // namespace

MultiplicityVector::MultiplicityVector(uint64_t modulus, unsigned s,
                                       std::vector<BigInt> counts)
    : modulus_(modulus), s_(s), small_(false), z_(std::move(counts)) {
  if (modulus_ < 1) fail(ErrorCode::InvalidArgument, "modulus must be positive");
  if (z_.size() != modulus_)
    fail(ErrorCode::InvalidArgument,
         "expected " + std::to_string(modulus_) + " counts, got " +
             std::to_string(z_.size()));
  for (const BigInt& v : z_)
    if (v < 0) fail(ErrorCode::InvalidArgument, "counts must be nonnegative");
  if (s_ <= 63) {
    u_.resize(z_.size());
    for (size_t i = 0; i < z_.size(); ++i) u_[i] = z_[i].convert_to<uint64_t>();
    z_.clear();
    z_.shrink_to_fit();
    small_ = true;
  }
  check_total();
}

MultiplicityVector::MultiplicityVector(uint64_t modulus, unsigned s,
                                       std::vector<uint64_t> counts, int)
    : modulus_(modulus), s_(s), small_(true), u_(std::move(counts)) {}

void MultiplicityVector::check_total() const {
  BigInt sum = 0;
  if (small_) {
    for (uint64_t v : u_) sum += v;
  } else {
    for (const BigInt& v : z_) sum += v;
  }
  if (sum != pow2(s_))
    fail(ErrorCode::InvalidArgument,
         "counts sum to " + to_decimal(sum) + ", expected 2^" +
             std::to_string(s_));
}

BigInt MultiplicityVector::count(uint64_t residue) const {
  if (residue >= modulus_)
    fail(ErrorCode::InvalidArgument,
         "residue " + std::to_string(residue) + " outside [0, " +
             std::to_string(modulus_) + ")");
  return small_ ? BigInt(u_[residue]) : z_[residue];
}

bool MultiplicityVector::has_preimage(uint64_t residue) const {
  if (residue >= modulus_)
    fail(ErrorCode::InvalidArgument,
         "residue " + std::to_string(residue) + " outside [0, " +
             std::to_string(modulus_) + ")");
  return small_ ? u_[residue] != 0 : z_[residue] != 0;
}

double MultiplicityVector::log_count(uint64_t residue) const {
  if (small_) {
    uint64_t v = u_[residue];
    if (v == 0) fail(ErrorCode::InvalidArgument, "residue has no preimage");
    return std::log(double(v));
  }
  const BigInt& v = z_[residue];
  if (v == 0) fail(ErrorCode::InvalidArgument, "residue has no preimage");
  return log_big(v);
}

uint64_t MultiplicityVector::support_size() const {
  uint64_t n = 0;
  for_each_support([&](uint64_t) { ++n; });
  return n;
}

std::vector<uint64_t> MultiplicityVector::support() const {
  std::vector<uint64_t> out;
  for_each_support([&](uint64_t c) { out.push_back(c); });
  return out;
}

BigInt MultiplicityVector::min_support_count() const {
  if (small_) {
    uint64_t best = 0;
    for (uint64_t v : u_)
      if (v != 0 && (best == 0 || v < best)) best = v;
    return BigInt(best);
  }
  BigInt best = 0;
  for (const BigInt& v : z_)
    if (v != 0 && (best == 0 || v < best)) best = v;
  return best;
}

BigInt MultiplicityVector::max_count() const {
  if (small_) return BigInt(*std::max_element(u_.begin(), u_.end()));
  return *std::max_element(z_.begin(), z_.end());
}

BigInt MultiplicityVector::total() const { return pow2(s_); }

bool MultiplicityVector::unit_min_multiplicity() const {
  return min_support_count() == 1;
}

MultiplicityVector multiplicity_dp(const Instance& inst, const Caps& caps) {
  check_modulus_cap(inst, caps);
  uint64_t modulus = inst.modulus();
  unsigned s = unsigned(inst.size());
  if (s <= 63) {
    std::vector<uint64_t> m(modulus, 0);
    m[0] = 1;
    for (uint64_t a : inst.weights()) double_step(m, modulus, a);
    return MultiplicityVector(modulus, s, std::move(m), 0);
  }
  std::vector<BigInt> m(modulus, BigInt(0));
  m[0] = 1;
  for (uint64_t a : inst.weights()) double_step(m, modulus, a);
  MultiplicityVector mv(modulus, s, std::move(m));
  return mv;
}

MultiplicityVector multiplicity_bruteforce(const Instance& inst,
                                           const Caps& caps) {
  check_modulus_cap(inst, caps);
  unsigned s = unsigned(inst.size());
  if (uint64_t(s) > caps.brute_force)
    fail(ErrorCode::InstanceTooLarge,
         "s = " + std::to_string(s) + " exceeds the brute-force cap " +
             std::to_string(caps.brute_force));
  uint64_t modulus = inst.modulus();
  std::vector<uint64_t> m(modulus, 0);
  // Gray-code walk: one weight added or removed per step.
  uint64_t sum = 0;
  uint64_t mask = 0;
  m[0] = 1;
  uint64_t limit = uint64_t(1) << s;
  for (uint64_t k = 1; k < limit; ++k) {
    unsigned bit = unsigned(__builtin_ctzll(k));
    uint64_t a = inst.weight(bit);
    mask ^= uint64_t(1) << bit;
    if (mask & (uint64_t(1) << bit)) {
      sum += a;
      if (sum >= modulus) sum -= modulus;
    } else {
      sum += modulus - a;
      if (sum >= modulus) sum -= modulus;
    }
    ++m[sum];
  }
  return MultiplicityVector(modulus, s, std::move(m), 0);
}

std::vector<CollisionClass> collision_classes(const Instance& inst,
                                              uint64_t min_size,
                                              const Caps& caps) {
  check_modulus_cap(inst, caps);
  unsigned s = unsigned(inst.size());
  if (uint64_t(s) > caps.brute_force)
    fail(ErrorCode::InstanceTooLarge,
         "s = " + std::to_string(s) + " exceeds the brute-force cap " +
             std::to_string(caps.brute_force));
  if (min_size < 1) min_size = 1;
  uint64_t limit = uint64_t(1) << s;
  std::vector<std::pair<uint64_t, uint64_t>> by_residue;  // (residue, mask)
  by_residue.reserve(limit);
  for (uint64_t mask = 0; mask < limit; ++mask)
    by_residue.emplace_back(inst.apply_mask(mask), mask);
  std::sort(by_residue.begin(), by_residue.end());

  std::vector<CollisionClass> classes;
  size_t i = 0;
  while (i < by_residue.size()) {
    size_t j = i;
    while (j < by_residue.size() && by_residue[j].first == by_residue[i].first)
      ++j;
    if (j - i >= min_size) {
      CollisionClass cls;
      cls.residue = by_residue[i].first;
      cls.members.reserve(j - i);
      for (size_t k = i; k < j; ++k) {
        uint64_t mask = by_residue[k].second;
        std::vector<uint8_t> x(s);
        for (unsigned b = 0; b < s; ++b) x[b] = uint8_t((mask >> b) & 1);
        cls.members.push_back(std::move(x));
      }
      std::sort(cls.members.begin(), cls.members.end());
      classes.push_back(std::move(cls));
    }
    i = j;
  }
  std::stable_sort(classes.begin(), classes.end(),
                   [](const CollisionClass& a, const CollisionClass& b) {
                     if (a.size() != b.size()) return a.size() > b.size();
                     return a.residue < b.residue;
                   });
  return classes;
}

MultiplicityHistogram multiplicity_histogram(const MultiplicityVector& mv) {
  MultiplicityHistogram hist;
  if (mv.small_storage()) {
    std::map<uint64_t, uint64_t> acc;
    mv.for_each_support([&](uint64_t c) {
      ++acc[mv.count(c).convert_to<uint64_t>()];
    });
    for (const auto& [l, n] : acc) hist.entries.push_back({BigInt(l), n});
  } else {
    std::map<BigInt, uint64_t> acc;
    mv.for_each_support([&](uint64_t c) { ++acc[mv.count(c)]; });
    for (const auto& [l, n] : acc) hist.entries.push_back({l, n});
  }
  return hist;
}

std::string multiplicity_to_csv(const MultiplicityVector& mv) {
  std::string out = "residue,count\n";
  for (uint64_t c = 0; c < mv.modulus(); ++c) {
    out += std::to_string(c);
    out += ',';
    out += to_decimal(mv.count(c));
    out += '\n';
  }
  return out;
}

std::string multiplicity_to_json(const MultiplicityVector& mv) {
  std::string out = "{\"modulus\":" + std::to_string(mv.modulus()) +
                    ",\"s\":" + std::to_string(mv.s()) + ",\"counts\":[";
  for (uint64_t c = 0; c < mv.modulus(); ++c) {
    if (c) out += ',';
    out += to_decimal(mv.count(c));
  }
  out += "]}\n";
  return out;
}

namespace {

std::string bits_to_string(const std::vector<uint8_t>& x) {
  std::string out;
  out.reserve(x.size());
  for (uint8_t b : x) out += char('0' + b);
  return out;
}

}  // namespace

std::string collisions_to_csv(const std::vector<CollisionClass>& classes) {
  std::string out = "residue,size,members\n";
  for (const CollisionClass& cls : classes) {
    out += std::to_string(cls.residue);
    out += ',';
    out += std::to_string(cls.size());
    out += ',';
    for (size_t i = 0; i < cls.members.size(); ++i) {
      if (i) out += ' ';
      out += bits_to_string(cls.members[i]);
    }
    out += '\n';
  }
  return out;
}

std::string collisions_to_json(const std::vector<CollisionClass>& classes) {
  std::string out = "{\"classes\":[";
  for (size_t k = 0; k < classes.size(); ++k) {
    if (k) out += ',';
    const CollisionClass& cls = classes[k];
    out += "{\"residue\":" + std::to_string(cls.residue) +
           ",\"size\":" + std::to_string(cls.size()) + ",\"members\":[";
    for (size_t i = 0; i < cls.members.size(); ++i) {
      if (i) out += ',';
      out += '"';
      out += bits_to_string(cls.members[i]);
      out += '"';
    }
    out += "]}";
  }
  out += "]}\n";
  return out;
}

}  // namespace ssf
