#include "ssfractal/instance.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include <nlohmann/json.hpp>

#include "ssfractal/bigint.hpp"
#include "ssfractal/errors.hpp"
#include "ssfractal/rng.hpp"

namespace ssf {

const char* error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::EmptyWeights: return "EmptyWeights";
    case ErrorCode::WeightOutOfRange: return "WeightOutOfRange";
    case ErrorCode::DensityOverflow: return "DensityOverflow";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ModulusTooLarge: return "ModulusTooLarge";
    case ErrorCode::InstanceTooLarge: return "InstanceTooLarge";
    case ErrorCode::DegenerateModulus: return "DegenerateModulus";
    case ErrorCode::DegenerateDenominator: return "DegenerateDenominator";
    case ErrorCode::SolutionInstanceMismatch: return "SolutionInstanceMismatch";
    case ErrorCode::NotACollision: return "NotACollision";
    case ErrorCode::HypothesisViolated: return "HypothesisViolated";
    case ErrorCode::SetsNotFree: return "SetsNotFree";
    case ErrorCode::NotInjective: return "NotInjective";
    case ErrorCode::Surjective: return "Surjective";
    case ErrorCode::NoBoundaryGap: return "NoBoundaryGap";
    case ErrorCode::OutputTooLarge: return "OutputTooLarge";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

double log_big(const BigInt& v) {
  if (v <= 0) fail(ErrorCode::InvalidArgument, "log of a non-positive integer");
  unsigned bits = boost::multiprecision::msb(v);  // floor(log2 v)
  if (bits <= 1000) return std::log(v.convert_to<double>());
  // Shift down to double range; dropping bits below the top 64 perturbs the
  // value by less than one part in 2^63.
  unsigned shift = bits - 63;
  BigInt top = v >> shift;
  return std::log(top.convert_to<double>()) + double(shift) * M_LN2;
}

Caps parse_caps(const std::string& spec, Caps base) {
  Caps caps = base;
  size_t pos = 0;
  while (pos < spec.size()) {
    size_t end = spec.find(',', pos);
    if (end == std::string::npos) end = spec.size();
    std::string item = spec.substr(pos, end - pos);
    pos = end + 1;
    if (item.empty()) continue;
    size_t eq = item.find('=');
    if (eq == std::string::npos)
      fail(ErrorCode::ParseError, "caps entry '" + item + "' is not key=value");
    std::string key = item.substr(0, eq);
    std::string val = item.substr(eq + 1);
    uint64_t num = 0;
    try {
      size_t used = 0;
      num = std::stoull(val, &used);
      if (used != val.size()) throw std::invalid_argument(val);
    } catch (const std::exception&) {
      fail(ErrorCode::ParseError, "caps value '" + val + "' for key '" + key +
                                      "' is not an unsigned integer");
    }
    if (key == "brute") caps.brute_force = num;
    else if (key == "ternary") caps.ternary = num;
    else if (key == "modulus") caps.modulus = num;
    else if (key == "attractor") caps.attractor_outputs = num;
    else fail(ErrorCode::ParseError, "unknown caps key '" + key + "'");
  }
  return caps;
}

Instance::Instance(std::vector<uint64_t> weights, uint64_t modulus)
    : weights_(std::move(weights)), modulus_(modulus) {
  if (modulus_ < 2)
    fail(ErrorCode::DegenerateModulus,
         "modulus must be at least 2, got " + std::to_string(modulus_));
  if (weights_.empty()) fail(ErrorCode::EmptyWeights, "weights must be nonempty");
  for (size_t i = 0; i < weights_.size(); ++i) {
    if (weights_[i] < 1 || weights_[i] >= modulus_)
      fail(ErrorCode::WeightOutOfRange,
           "weight " + std::to_string(weights_[i]) + " at index " +
               std::to_string(i) + " lies outside [1, " +
               std::to_string(modulus_ - 1) + "]");
  }
}

uint64_t Instance::max_weight() const {
  return *std::max_element(weights_.begin(), weights_.end());
}

uint64_t Instance::apply(const std::vector<uint8_t>& x) const {
  if (x.size() != weights_.size())
    fail(ErrorCode::InvalidArgument,
         "vector length " + std::to_string(x.size()) + " does not match s = " +
             std::to_string(weights_.size()));
  uint64_t sum = 0;
  for (size_t i = 0; i < x.size(); ++i) {
    if (x[i] > 1)
      fail(ErrorCode::InvalidArgument, "vector entries must be 0 or 1");
    if (x[i]) {
      sum += weights_[i];
      if (sum >= modulus_) sum -= modulus_;
    }
  }
  return sum;
}

uint64_t Instance::apply_mask(uint64_t mask) const {
  uint64_t sum = 0;
  for (size_t i = 0; i < weights_.size(); ++i) {
    if ((mask >> i) & 1) {
      sum += weights_[i];
      if (sum >= modulus_) sum -= modulus_;
    }
  }
  return sum;
}

double density(const Instance& inst) {
  return double(inst.size()) / std::log2(double(inst.modulus()));
}

Instance gen_arithmetic(uint64_t s, uint64_t a) {
  if (s < 1) fail(ErrorCode::InvalidArgument, "s must be at least 1");
  if (a < 1) fail(ErrorCode::InvalidArgument, "a must be at least 1");
  unsigned __int128 modulus = (unsigned __int128)(s + 1) * a;
  if (modulus > (uint64_t(1) << 63) - 1)
    fail(ErrorCode::ModulusTooLarge,
         "modulus (s+1)*a does not fit the addressable range");
  std::vector<uint64_t> w(s);
  for (uint64_t j = 0; j < s; ++j) w[j] = (j + 1) * a;
  return Instance(std::move(w), uint64_t(modulus));
}

Instance gen_random_density(uint64_t s, double rho, uint64_t seed,
                            const Caps& caps) {
  if (s < 1) fail(ErrorCode::InvalidArgument, "s must be at least 1");
  if (!(rho > 0.0) || !std::isfinite(rho))
    fail(ErrorCode::InvalidArgument, "density must be positive and finite");
  long double exponent = (long double)(s) / (long double)(rho);
  if (exponent >= 63.999L)
    fail(ErrorCode::DensityOverflow,
         "requested density needs a modulus beyond 2^63");
  long double target = roundl(exp2l(exponent));
  uint64_t modulus = target < 2.0L ? 2 : (uint64_t)target;
  if (modulus > caps.modulus)
    fail(ErrorCode::DensityOverflow,
         "requested density needs modulus " + std::to_string(modulus) +
             " above the cap " + std::to_string(caps.modulus));
  SplitMix64 rng(seed);
  std::vector<uint64_t> w(s);
  for (uint64_t i = 0; i < s; ++i) w[i] = rng.uniform(1, modulus - 1);
  return Instance(std::move(w), modulus);
}

Instance gen_superincreasing(uint64_t s, uint64_t seed, const Caps& caps) {
  if (s < 1) fail(ErrorCode::InvalidArgument, "s must be at least 1");
  if (s > 62)
    fail(ErrorCode::DensityOverflow,
         "superincreasing instances need a modulus beyond 2^63 for s > 62");
  SplitMix64 rng(seed);
  std::vector<uint64_t> w(s);
  unsigned __int128 sum = 0;
  for (uint64_t i = 0; i < s; ++i) {
    // Each weight exceeds the running sum by a random positive margin kept
    // small enough that the total stays near 2^s in the worst case.
    uint64_t margin = rng.uniform(1, (uint64_t)(sum / 8) + 1);
    unsigned __int128 next = sum + margin;
    if (next > caps.modulus)
      fail(ErrorCode::DensityOverflow,
           "superincreasing weights exceed the modulus cap");
    w[i] = (uint64_t)next;
    sum += next;
  }
  // Injectivity needs A > sum of all weights; non-surjectivity needs 2^s < A.
  unsigned __int128 floor_needed = sum;
  unsigned __int128 two_s = (unsigned __int128)1 << s;
  if (floor_needed < two_s) floor_needed = two_s;
  unsigned __int128 modulus = floor_needed + 1 + rng.uniform(0, (uint64_t)(sum / 4));
  if (modulus > caps.modulus)
    fail(ErrorCode::DensityOverflow,
         "superincreasing modulus exceeds the cap");
  return Instance(std::move(w), (uint64_t)modulus);
}

namespace {

std::string line_of_offset(const std::string& text, size_t byte) {
  size_t line = 1;
  for (size_t i = 0; i < byte && i < text.size(); ++i)
    if (text[i] == '\n') ++line;
  return std::to_string(line);
}

}  // namespace

Instance instance_from_json(const std::string& text) {
  nlohmann::json doc;
  try {
    doc = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    fail(ErrorCode::ParseError, "line " + line_of_offset(text, e.byte) +
                                    ": " + e.what());
  }
  if (!doc.is_object())
    fail(ErrorCode::ParseError, "top level must be an object");
  if (!doc.contains("modulus"))
    fail(ErrorCode::ParseError, "missing field 'modulus'");
  if (!doc.contains("weights"))
    fail(ErrorCode::ParseError, "missing field 'weights'");
  for (auto it = doc.begin(); it != doc.end(); ++it) {
    if (it.key() != "modulus" && it.key() != "weights" && it.key() != "comment")
      fail(ErrorCode::ParseError, "unknown field '" + it.key() + "'");
  }
  const auto& jm = doc["modulus"];
  if (!jm.is_number_integer() || (jm.is_number_integer() && !jm.is_number_unsigned() && jm.get<int64_t>() < 0))
    fail(ErrorCode::ParseError, "field 'modulus' must be a nonnegative integer");
  uint64_t modulus = jm.get<uint64_t>();
  const auto& jw = doc["weights"];
  if (!jw.is_array())
    fail(ErrorCode::ParseError, "field 'weights' must be an array");
  std::vector<uint64_t> weights;
  weights.reserve(jw.size());
  for (size_t i = 0; i < jw.size(); ++i) {
    const auto& v = jw[i];
    if (!v.is_number_integer())
      fail(ErrorCode::ParseError,
           "weights[" + std::to_string(i) + "] must be an integer");
    if (!v.is_number_unsigned() && v.get<int64_t>() < 0)
      fail(ErrorCode::WeightOutOfRange,
           "weights[" + std::to_string(i) + "] is negative");
    weights.push_back(v.get<uint64_t>());
  }
  Instance inst(std::move(weights), modulus);
  if (doc.contains("comment")) {
    if (!doc["comment"].is_string())
      fail(ErrorCode::ParseError, "field 'comment' must be a string");
    inst.set_comment(doc["comment"].get<std::string>());
  }
  return inst;
}

std::string instance_to_json(const Instance& inst) {
  nlohmann::ordered_json doc;
  doc["modulus"] = inst.modulus();
  doc["weights"] = inst.weights();
  if (inst.comment()) doc["comment"] = *inst.comment();
  return doc.dump() + "\n";
}

Instance load_instance(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) fail(ErrorCode::IoError, "cannot open '" + path + "' for reading");
  std::ostringstream buf;
  buf << in.rdbuf();
  try {
    return instance_from_json(buf.str());
  } catch (const Error& e) {
    if (e.code() == ErrorCode::ParseError)
      fail(ErrorCode::ParseError, path + ": " + e.what());
    throw;
  }
}

void save_instance(const Instance& inst, const std::string& path) {
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) fail(ErrorCode::IoError, "cannot open '" + path + "' for writing");
  out << instance_to_json(inst);
  if (!out) fail(ErrorCode::IoError, "failed writing '" + path + "'");
}

const char* family_kind_name(FamilyKind k) {
  switch (k) {
    case FamilyKind::Arithmetic: return "arithmetic";
    case FamilyKind::RandomDensity: return "random-density";
    case FamilyKind::Superincreasing: return "superincreasing";
    case FamilyKind::ExplicitList: return "explicit-list";
  }
  return "unknown";
}

InstanceFamily::InstanceFamily(FamilyKind kind, std::vector<Instance> members)
    : kind_(kind), members_(std::move(members)) {
  if (members_.empty())
    fail(ErrorCode::InvalidArgument, "a family needs at least one member");
  for (size_t i = 1; i < members_.size(); ++i) {
    if (members_[i].size() <= members_[i - 1].size())
      fail(ErrorCode::InvalidArgument,
           "family member sizes must be strictly increasing (member " +
               std::to_string(i) + " has s = " +
               std::to_string(members_[i].size()) + ")");
  }
}

static void check_sizes(const std::vector<uint64_t>& sizes) {
  if (sizes.empty())
    fail(ErrorCode::InvalidArgument, "a family needs at least one size");
}

InstanceFamily InstanceFamily::arithmetic(uint64_t a,
                                          const std::vector<uint64_t>& sizes) {
  check_sizes(sizes);
  std::vector<Instance> members;
  members.reserve(sizes.size());
  for (uint64_t s : sizes) members.push_back(gen_arithmetic(s, a));
  return InstanceFamily(FamilyKind::Arithmetic, std::move(members));
}

InstanceFamily InstanceFamily::random_density(double rho, uint64_t seed,
                                              const std::vector<uint64_t>& sizes,
                                              const Caps& caps) {
  check_sizes(sizes);
  std::vector<Instance> members;
  members.reserve(sizes.size());
  // Each member gets its own decorrelated stream so that extending the size
  // list never perturbs earlier members.
  for (uint64_t s : sizes) {
    SplitMix64 mix(seed);
    uint64_t member_seed = mix.next() ^ (0x517cc1b727220a95ULL * (s + 1));
    members.push_back(gen_random_density(s, rho, member_seed, caps));
  }
  return InstanceFamily(FamilyKind::RandomDensity, std::move(members));
}

InstanceFamily InstanceFamily::superincreasing(uint64_t seed,
                                               const std::vector<uint64_t>& sizes,
                                               const Caps& caps) {
  check_sizes(sizes);
  std::vector<Instance> members;
  members.reserve(sizes.size());
  for (uint64_t s : sizes) {
    SplitMix64 mix(seed);
    uint64_t member_seed = mix.next() ^ (0x2545f4914f6cdd1dULL * (s + 1));
    members.push_back(gen_superincreasing(s, member_seed, caps));
  }
  return InstanceFamily(FamilyKind::Superincreasing, std::move(members));
}

InstanceFamily InstanceFamily::explicit_list(std::vector<Instance> members) {
  return InstanceFamily(FamilyKind::ExplicitList, std::move(members));
}

}  // namespace ssf
