// Acceptance gate: eleven checks, one pass/fail line each, nonzero exit if
// any fails.  Golden values and tolerances are pinned here on purpose; do
// not loosen them to make a run green.

#include <sys/resource.h>
#include <sys/wait.h>

#include <chrono>
#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <cstring>
#include <functional>
#include <stdexcept>
#include <string>
#include <vector>

#include "ssfractal/hausdorff.hpp"
#include "ssfractal/instance.hpp"
#include "ssfractal/multiplicity.hpp"
#include "ssfractal/partition.hpp"
#include "ssfractal/rng.hpp"
#include "ssfractal/spectrum.hpp"

using namespace ssf;

namespace {

void expect(bool condition, const std::string& what) {
  if (!condition) throw std::runtime_error(what);
}

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
      .count();
}

std::string run_cli(const std::string& command, int& exit_code) {
  std::FILE* pipe = popen(command.c_str(), "r");
  expect(pipe != nullptr, "popen failed for: " + command);
  std::string out;
  char buf[4096];
  size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, pipe)) > 0) out.append(buf, n);
  int status = pclose(pipe);
  exit_code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  return out;
}

Instance random_instance(SplitMix64& rng, uint64_t max_s, uint64_t max_modulus) {
  uint64_t modulus = rng.uniform(2, max_modulus);
  uint64_t s = rng.uniform(1, max_s);
  std::vector<uint64_t> w(s);
  for (uint64_t i = 0; i < s; ++i) w[i] = rng.uniform(1, modulus - 1);
  return Instance(std::move(w), modulus);
}

// The shared corpus of criterion 4, reused by 5, 7 and 8.
std::vector<Instance> build_corpus() {
  SplitMix64 rng(0xACCE5501u);
  std::vector<Instance> corpus;
  corpus.reserve(200);
  for (int i = 0; i < 200; ++i) corpus.push_back(random_instance(rng, 12, 64));
  return corpus;
}

void criterion_cli_goldens() {
  const char* bin = std::getenv("SSF_CLI_BIN");
  expect(bin != nullptr && *bin != '\0', "SSF_CLI_BIN is not set");
  auto start = std::chrono::steady_clock::now();
  int code = 0;
  std::string pos = run_cli("\"" + std::string(bin) + "\" lowerbound --arith 3,1",
                            code);
  expect(code == 0, "exit code " + std::to_string(code) + " for --arith 3,1");
  expect(pos.find("\"rhs\":4,") != std::string::npos,
         "rhs is not exactly 4 in: " + pos);
  std::string neg = run_cli("\"" + std::string(bin) + "\" lowerbound --arith 4,1",
                            code);
  expect(code == 0, "exit code " + std::to_string(code) + " for --arith 4,1");
  expect(neg.find("\"rhs\":-2,") != std::string::npos,
         "rhs is not exactly -2 in: " + neg);
  expect(neg.find("d0_bound") == std::string::npos,
         "vacuous bound must omit d0_bound");
  double elapsed = seconds_since(start);
  expect(elapsed < 1.0, "took " + std::to_string(elapsed) + " s, limit 1 s");
}

void criterion_progression_regime() {
  auto start = std::chrono::steady_clock::now();
  for (uint64_t a : {1, 2, 5}) {
    expect(lower_bound(gen_arithmetic(3, a)).rhs > 0,
           "rhs not positive at s=3, a=" + std::to_string(a));
    for (uint64_t s = 4; s <= 14; ++s)
      expect(lower_bound(gen_arithmetic(s, a)).rhs < 0,
             "rhs not negative at s=" + std::to_string(s) +
                 ", a=" + std::to_string(a));
  }
  double elapsed = seconds_since(start);
  expect(elapsed < 10.0, "took " + std::to_string(elapsed) + " s, limit 10 s");
}

void criterion_solution_goldens() {
  std::vector<WeakPartitionSolution> sols =
      weak_partition_enumerate(Instance({1, 2, 3}, 4));
  expect(sols.size() == 3, "expected 3 solutions, got " +
                               std::to_string(sols.size()));
  expect(sols[0].to_string() == "+0+", "first solution is " +
                                           sols[0].to_string());
  expect(sols[1].to_string() == "++-", "second solution is " +
                                           sols[1].to_string());
  expect(sols[2].to_string() == "+--", "third solution is " +
                                           sols[2].to_string());
}

void criterion_dual_oracles(const std::vector<Instance>& corpus) {
  auto start = std::chrono::steady_clock::now();
  for (const Instance& inst : corpus) {
    MultiplicityVector dp = multiplicity_dp(inst);
    MultiplicityVector brute = multiplicity_bruteforce(inst);
    for (uint64_t c = 0; c < inst.modulus(); ++c)
      expect(dp.count(c) == brute.count(c),
             "count mismatch at residue " + std::to_string(c));
    BigInt from_enumeration = 0;
    for (const WeakPartitionSolution& sol : weak_partition_enumerate(inst))
      from_enumeration += pow2(unsigned(sol.zero_count()));
    expect(weighted_zero_count_dp(inst) == from_enumeration,
           "weighted zero count disagrees with enumeration");
  }
  double elapsed = seconds_since(start);
  expect(elapsed < 60.0, "took " + std::to_string(elapsed) + " s, limit 60 s");
}

void criterion_negative_limit(const std::vector<Instance>& corpus) {
  size_t checked = 0;
  for (const Instance& inst : corpus) {
    MultiplicityVector mv = multiplicity_dp(inst);
    if (mv.min_support_count() != 1) continue;
    ++checked;
    auto [d_neg, d_pos] = dimension_extremes(mv);
    (void)d_pos;
    expect(std::abs(d_neg - density(inst)) <= 1e-12,
           "negative limit misses the density by " +
               std::to_string(std::abs(d_neg - density(inst))));
  }
  expect(checked > 0, "no instance with minimum multiplicity 1");
}

void criterion_collision_equivalence() {
  SplitMix64 rng(0xC0111DE5u);
  for (int i = 0; i < 500; ++i) {
    Instance inst = random_instance(rng, 10, 1024);
    bool collides = has_collision(inst);
    bool nonempty = !weak_partition_enumerate(inst).empty();
    expect(collides == nonempty,
           "disagreement on trial " + std::to_string(i));
  }
}

void criterion_expansion(const std::vector<Instance>& corpus) {
  std::vector<Instance> all = corpus;
  all.push_back(Instance({1, 2, 3}, 4));
  for (const Instance& inst : all) {
    size_t s = inst.size();
    std::vector<uint32_t> stamp(size_t(1) << s, 0);
    uint32_t epoch = 0;
    for (const WeakPartitionSolution& sol : weak_partition_enumerate(inst)) {
      ++epoch;
      std::vector<CollisionPair> pairs = expand_collisions(sol, inst);
      uint64_t expected = uint64_t(1) << sol.zero_count();
      expect(pairs.size() == expected,
             "expected " + std::to_string(expected) + " pairs, got " +
                 std::to_string(pairs.size()));
      for (const CollisionPair& p : pairs) {
        expect(inst.apply(p.x1) == inst.apply(p.x2), "pair does not collide");
        uint64_t mask = 0;
        for (size_t i = 0; i < s; ++i)
          if (p.x1[i]) mask |= uint64_t(1) << i;
        expect(stamp[mask] != epoch, "duplicate pair in one expansion");
        stamp[mask] = epoch;
      }
    }
  }
}

void criterion_spectrum_properties(const std::vector<Instance>& corpus) {
  for (const Instance& inst : corpus) {
    MultiplicityVector mv = multiplicity_dp(inst);
    double entropy = dimension_info(mv);
    double previous = 0.0;
    for (int k = 0; k <= 40; ++k) {
      double q = -10.0 + 0.5 * k;
      double v = std::abs(q - 1.0) < 1e-12 ? entropy : dimension_q(mv, q);
      if (k > 0)
        expect(v <= previous + 1e-9, "spectrum increases at q = " +
                                         std::to_string(q));
      if (q >= 0.0)
        expect(v >= -1e-12 && v <= 1.0 + 1e-12,
               "D_q outside [0,1] at q = " + std::to_string(q));
      previous = v;
    }
    expect(std::abs(dimension_q(mv, 1.0 + 1e-6) - entropy) <= 1e-4,
           "discontinuity above the entropy point");
    expect(std::abs(dimension_q(mv, 1.0 - 1e-6) - entropy) <= 1e-4,
           "discontinuity below the entropy point");
  }

  MultiplicityVector uniform = multiplicity_dp(Instance({1, 2, 3}, 4));
  std::vector<ExtendedQ> grid = {ExtendedQ::neg_inf(), ExtendedQ::pos_inf()};
  for (int k = 0; k <= 40; ++k) grid.push_back(ExtendedQ::finite(-10.0 + 0.5 * k));
  Spectrum sp = spectrum(uniform, grid);
  double lo = sp.points[0].value, hi = sp.points[0].value;
  for (const SpectrumPoint& p : sp.points) {
    lo = std::min(lo, p.value);
    hi = std::max(hi, p.value);
  }
  expect(hi - lo <= 1e-12, "uniform spectrum spread is " +
                               std::to_string(hi - lo));
}

void criterion_hausdorff() {
  auto start = std::chrono::steady_clock::now();
  ImageSet img = image_set_explicit({1, 2, 4, 5, 7}, 9, BoundaryMode::Strict);
  DimensionReport rep = similarity_dimension(components(img), 9);
  expect(std::abs(rep.lower - 0.5) <= 1e-12,
         "lower bound is " + std::to_string(rep.lower));
  expect(std::abs(rep.upper - std::log(5.0) / std::log(9.0)) <= 1e-12,
         "upper bound is " + std::to_string(rep.upper));
  expect(rep.residual <= 1e-12,
         "residual is " + std::to_string(rep.residual));

  // Independent root finder for 2 (2/9)^t + (1/9)^t = 1 on [0, 1].
  double lo = 0.0, hi = 1.0;
  for (int i = 0; i < 200; ++i) {
    double mid = 0.5 * (lo + hi);
    double f = 2.0 * std::pow(2.0 / 9.0, mid) + std::pow(1.0 / 9.0, mid) - 1.0;
    if (f > 0) lo = mid;
    else hi = mid;
  }
  double oracle = 0.5 * (lo + hi);
  expect(std::abs(rep.t - oracle) <= 1e-3,
         "t = " + std::to_string(rep.t) + " vs oracle " +
             std::to_string(oracle));

  SplitMix64 rng(0x5A11D51Cu);
  for (int trial = 0; trial < 100; ++trial) {
    uint64_t modulus = rng.uniform(5, 300);
    uint64_t k = rng.uniform(1, modulus - 1);
    std::vector<uint64_t> all(modulus);
    for (uint64_t i = 0; i < modulus; ++i) all[i] = i;
    for (uint64_t i = 0; i < k; ++i)
      std::swap(all[i], all[rng.uniform(i, modulus - 1)]);
    all.resize(k);
    ImageSet random_img =
        image_set_explicit(all, modulus, BoundaryMode::Lenient);
    DimensionReport r = similarity_dimension(components(random_img), modulus);
    expect(r.t >= r.lower - 1e-12 && r.t <= r.upper + 1e-12,
           "sandwich violated on trial " + std::to_string(trial));
    expect(r.residual <= 1e-12, "residual too large on trial " +
                                    std::to_string(trial));
  }
  double elapsed = seconds_since(start);
  expect(elapsed < 5.0, "took " + std::to_string(elapsed) + " s, limit 5 s");
}

void criterion_performance() {
  const uint64_t modulus = (uint64_t(1) << 24) - 5;
  SplitMix64 rng(0xBEEFCAFEu);
  std::vector<uint64_t> w(24);
  for (auto& v : w) v = rng.uniform(1, modulus - 1);
  Instance inst(std::move(w), modulus);
  auto start = std::chrono::steady_clock::now();
  MultiplicityVector mv = multiplicity_dp(inst);
  double elapsed = seconds_since(start);
  expect(mv.total() == pow2(24), "total is not 2^24");
  expect(elapsed <= 60.0, "took " + std::to_string(elapsed) + " s, limit 60 s");
  struct rusage usage;
  expect(getrusage(RUSAGE_SELF, &usage) == 0, "getrusage failed");
  long limit_kib = long(16 * modulus / 1024) + 256 * 1024;
  expect(usage.ru_maxrss <= limit_kib,
         "peak rss " + std::to_string(usage.ru_maxrss) + " KiB exceeds " +
             std::to_string(limit_kib) + " KiB");
}

void criterion_four_collision() {
  Instance inst({1, 2, 3, 4}, 5);
  FourCollisionResult res = four_collision(
      WeakPartitionSolution::from_string("+00+"), {1, 2}, {}, inst);
  expect(res.derived.to_string() == "0++0",
         "derived solution is " + res.derived.to_string());
  expect(res.witness.residue == 0, "witness residue is " +
                                       std::to_string(res.witness.residue));
  expect(res.witness.size() == 4, "witness size is " +
                                      std::to_string(res.witness.size()));
  // Brute force over all 16 subsets: the full preimage of 0 must equal the
  // witness members exactly.
  std::vector<std::vector<uint8_t>> zero_class;
  for (uint64_t mask = 0; mask < 16; ++mask) {
    std::vector<uint8_t> x(4);
    for (size_t i = 0; i < 4; ++i) x[i] = (mask >> i) & 1;
    if (inst.apply(x) == 0) zero_class.push_back(std::move(x));
  }
  std::sort(zero_class.begin(), zero_class.end());
  expect(zero_class == res.witness.members,
         "witness differs from the brute-force class");
}

}  // namespace

int main() {
  std::vector<Instance> corpus = build_corpus();
  struct Criterion {
    const char* label;
    std::function<void()> body;
  };
  const Criterion criteria[] = {
      {"arithmetic lower-bound golden values through the CLI",
       [] { criterion_cli_goldens(); }},
      {"progression bounds: positive at s=3, negative for s in 4..14",
       [] { criterion_progression_regime(); }},
      {"canonical solution list for weights [1,2,3] mod 4",
       [] { criterion_solution_goldens(); }},
      {"dual-oracle equality of counts and weighted zero counts",
       [&] { criterion_dual_oracles(corpus); }},
      {"unit-multiplicity instances pin the negative limit to the density",
       [&] { criterion_negative_limit(corpus); }},
      {"collision existence agrees with solution enumeration",
       [] { criterion_collision_equivalence(); }},
      {"solution expansion yields exactly the induced collision pairs",
       [&] { criterion_expansion(corpus); }},
      {"spectrum monotonicity, range and entropy continuity",
       [&] { criterion_spectrum_properties(corpus); }},
      {"similarity dimension report, oracle root and sandwich",
       [] { criterion_hausdorff(); }},
      {"large-modulus counting within time and memory budget",
       [] { criterion_performance(); }},
      {"four-way collision construction verified by brute force",
       [] { criterion_four_collision(); }},
  };

  int failures = 0;
  int index = 0;
  for (const Criterion& criterion : criteria) {
    ++index;
    try {
      criterion.body();
      std::printf("CRITERION %2d: PASS  %s\n", index, criterion.label);
    } catch (const std::exception& e) {
      ++failures;
      std::printf("CRITERION %2d: FAIL  %s: %s\n", index, criterion.label,
                  e.what());
    }
    std::fflush(stdout);
  }
  if (failures > 0) {
    std::printf("%d of 11 criteria failed\n", failures);
    return 1;
  }
  std::printf("all 11 criteria passed\n");
  return 0;
}
