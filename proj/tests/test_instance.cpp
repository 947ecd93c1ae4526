#include <doctest.h>

#include <cmath>
#include <cstdio>
#include <fstream>
#include <functional>

#include "ssfractal/errors.hpp"
#include "ssfractal/instance.hpp"
#include "ssfractal/rng.hpp"

using namespace ssf;

namespace {

ErrorCode code_of(const std::function<void()>& body) {
  try {
    body();
  } catch (const Error& e) {
    return e.code();
  }
  FAIL("expected an error");
  return ErrorCode::InvalidArgument;
}

}  // namespace

TEST_CASE("instance construction validates its inputs") {
  Instance ok({1, 2, 3}, 8);
  CHECK(ok.size() == 3);
  CHECK(ok.modulus() == 8);
  CHECK(ok.max_weight() == 3);

  CHECK(code_of([] { Instance({}, 8); }) == ErrorCode::EmptyWeights);
  CHECK(code_of([] { Instance({0, 2}, 8); }) == ErrorCode::WeightOutOfRange);
  CHECK(code_of([] { Instance({1, 8}, 8); }) == ErrorCode::WeightOutOfRange);
  CHECK(code_of([] { Instance({1}, 1); }) == ErrorCode::DegenerateModulus);
  CHECK(code_of([] { Instance({1}, 0); }) == ErrorCode::DegenerateModulus);
}

TEST_CASE("apply reduces subset sums mod A") {
  Instance inst({1, 2, 3}, 8);
  CHECK(inst.apply({1, 0, 1}) == 4);
  CHECK(inst.apply({0, 0, 0}) == 0);
  CHECK(inst.apply({1, 1, 1}) == 6);
  CHECK(inst.apply_mask(0b101) == 4);
  CHECK_THROWS_AS(inst.apply({1, 0}), Error);
  CHECK_THROWS_AS(inst.apply({1, 0, 2}), Error);

  SplitMix64 rng(11);
  for (int trial = 0; trial < 50; ++trial) {
    uint64_t mask = rng.uniform(0, 7);
    std::vector<uint8_t> x(3);
    for (int i = 0; i < 3; ++i) x[i] = uint8_t((mask >> i) & 1);
    CHECK(inst.apply(x) == inst.apply_mask(mask));
  }
}

TEST_CASE("density is s over log2 of the modulus") {
  CHECK(density(Instance({1, 2, 3}, 8)) == doctest::Approx(1.0).epsilon(1e-15));
  CHECK(density(Instance({1, 2, 3}, 4)) == doctest::Approx(1.5).epsilon(1e-15));
}

TEST_CASE("arithmetic progression generator") {
  Instance inst = gen_arithmetic(3, 1);
  CHECK(inst.weights() == std::vector<uint64_t>{1, 2, 3});
  CHECK(inst.modulus() == 4);

  Instance scaled = gen_arithmetic(4, 2);
  CHECK(scaled.weights() == std::vector<uint64_t>{2, 4, 6, 8});
  CHECK(scaled.modulus() == 10);

  CHECK(code_of([] { gen_arithmetic(0, 1); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { gen_arithmetic(3, 0); }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] { gen_arithmetic(uint64_t(1) << 62, 4); }) ==
        ErrorCode::ModulusTooLarge);
}

TEST_CASE("random density generator hits the requested modulus") {
  Instance inst = gen_random_density(8, 1.0, 7);
  CHECK(inst.modulus() == 256);
  CHECK(inst.size() == 8);
  CHECK(density(inst) == doctest::Approx(1.0).epsilon(1e-15));
  for (uint64_t w : inst.weights()) {
    CHECK(w >= 1);
    CHECK(w <= 255);
  }

  CHECK(gen_random_density(4, 2.0, 0).modulus() == 4);

  // Same seed, same instance; the draw is a pure function of its arguments.
  Instance again = gen_random_density(8, 1.0, 7);
  CHECK(again == inst);
  CHECK_FALSE(gen_random_density(8, 1.0, 8) == inst);

  CHECK(code_of([] { gen_random_density(200, 1.0, 0); }) ==
        ErrorCode::DensityOverflow);
  CHECK(code_of([] { gen_random_density(4, 0.0, 0); }) ==
        ErrorCode::InvalidArgument);
  CHECK(code_of([] { gen_random_density(4, -1.0, 0); }) ==
        ErrorCode::InvalidArgument);
  CHECK(code_of([] { gen_random_density(0, 1.0, 0); }) ==
        ErrorCode::InvalidArgument);
}

TEST_CASE("superincreasing generator forces an injective, non-surjective map") {
  for (uint64_t seed = 0; seed < 5; ++seed) {
    Instance inst = gen_superincreasing(10, seed);
    REQUIRE(inst.size() == 10);
    uint64_t prefix = 0;
    for (uint64_t w : inst.weights()) {
      CHECK(w > prefix);
      prefix += w;
    }
    CHECK(inst.modulus() > prefix);
    CHECK(inst.modulus() > 1024);
    CHECK(gen_superincreasing(10, seed) == inst);
  }
  CHECK(code_of([] { gen_superincreasing(63, 0); }) ==
        ErrorCode::DensityOverflow);
}

TEST_CASE("instance json round trip") {
  Instance inst({1, 2, 3}, 8);
  inst.set_comment("toy example");
  std::string text = instance_to_json(inst);
  Instance back = instance_from_json(text);
  CHECK(back == inst);
  CHECK(back.comment() == inst.comment());
  CHECK(instance_to_json(back) == text);

  CHECK(instance_from_json("{\"modulus\":8,\"weights\":[1,2,3]}")
            .comment()
            .has_value() == false);

  CHECK(code_of([] { instance_from_json("not json"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { instance_from_json("[1,2]"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { instance_from_json("{\"weights\":[1]}"); }) ==
        ErrorCode::ParseError);
  CHECK(code_of([] { instance_from_json("{\"modulus\":8}"); }) ==
        ErrorCode::ParseError);
  CHECK(code_of([] {
          instance_from_json("{\"modulus\":8,\"weights\":[1],\"extra\":1}");
        }) == ErrorCode::ParseError);
  CHECK(code_of([] {
          instance_from_json("{\"modulus\":8,\"weights\":[1.5]}");
        }) == ErrorCode::ParseError);
  CHECK(code_of([] {
          instance_from_json("{\"modulus\":8,\"weights\":[-1]}");
        }) == ErrorCode::WeightOutOfRange);
  CHECK(code_of([] {
          instance_from_json("{\"modulus\":4,\"weights\":[5]}");
        }) == ErrorCode::WeightOutOfRange);
  CHECK(code_of([] {
          instance_from_json("{\"modulus\":1,\"weights\":[1]}");
        }) == ErrorCode::DegenerateModulus);
  CHECK(code_of([] {
          instance_from_json("{\"modulus\":8,\"weights\":[1],\"comment\":3}");
        }) == ErrorCode::ParseError);
}

TEST_CASE("instance file round trip") {
  std::string path = "test_instance_roundtrip.json";
  Instance inst({3, 5, 7}, 11);
  inst.set_comment("file check");
  save_instance(inst, path);
  Instance back = load_instance(path);
  CHECK(back == inst);
  CHECK(back.comment() == inst.comment());
  std::remove(path.c_str());

  CHECK(code_of([] { load_instance("definitely_missing_file.json"); }) ==
        ErrorCode::IoError);
}

TEST_CASE("families validate strictly increasing sizes") {
  InstanceFamily fam = InstanceFamily::arithmetic(1, {2, 4, 6});
  CHECK(fam.kind() == FamilyKind::Arithmetic);
  REQUIRE(fam.size() == 3);
  CHECK(fam.members()[0] == gen_arithmetic(2, 1));
  CHECK(fam.members()[2] == gen_arithmetic(6, 1));

  CHECK(code_of([] { InstanceFamily::arithmetic(1, {4, 4}); }) ==
        ErrorCode::InvalidArgument);
  CHECK(code_of([] { InstanceFamily::arithmetic(1, {4, 2}); }) ==
        ErrorCode::InvalidArgument);
  CHECK(code_of([] { InstanceFamily::arithmetic(1, {}); }) ==
        ErrorCode::InvalidArgument);
  CHECK(code_of([] {
          InstanceFamily::explicit_list(
              {Instance({1, 2}, 5), Instance({1, 3}, 5)});
        }) == ErrorCode::InvalidArgument);
}

TEST_CASE("random density families are reproducible and prefix stable") {
  InstanceFamily a = InstanceFamily::random_density(1.0, 42, {4, 6, 8});
  InstanceFamily b = InstanceFamily::random_density(1.0, 42, {4, 6, 8});
  REQUIRE(a.size() == b.size());
  for (size_t i = 0; i < a.size(); ++i) CHECK(a.members()[i] == b.members()[i]);

  InstanceFamily shorter = InstanceFamily::random_density(1.0, 42, {4, 6});
  CHECK(shorter.members()[0] == a.members()[0]);
  CHECK(shorter.members()[1] == a.members()[1]);

  InstanceFamily sup = InstanceFamily::superincreasing(42, {3, 5});
  CHECK(sup.members()[0].size() == 3);
  CHECK(sup.members()[1].size() == 5);
}

TEST_CASE("caps override parsing") {
  Caps caps = parse_caps("brute=10,ternary=5,modulus=1000,attractor=16");
  CHECK(caps.brute_force == 10);
  CHECK(caps.ternary == 5);
  CHECK(caps.modulus == 1000);
  CHECK(caps.attractor_outputs == 16);

  Caps partial = parse_caps("brute=12");
  CHECK(partial.brute_force == 12);
  CHECK(partial.ternary == Caps{}.ternary);

  CHECK(parse_caps("").brute_force == Caps{}.brute_force);
  CHECK(code_of([] { parse_caps("bogus=1"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_caps("brute"); }) == ErrorCode::ParseError);
  CHECK(code_of([] { parse_caps("brute=abc"); }) == ErrorCode::ParseError);
}

TEST_CASE("splitmix stream is platform stable") {
  SplitMix64 rng(0);
  // First outputs of the reference stream for seed 0.
  CHECK(rng.next() == 0xe220a8397b1dcdafULL);
  CHECK(rng.next() == 0x6e789e6aa1b965f4ULL);
  SplitMix64 bounded(123);
  for (int i = 0; i < 100; ++i) {
    uint64_t v = bounded.uniform(5, 9);
    CHECK(v >= 5);
    CHECK(v <= 9);
  }
}
