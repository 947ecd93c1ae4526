#include <doctest.h>

#include <cmath>
#include <functional>

#include "ssfractal/errors.hpp"
#include "ssfractal/multiplicity.hpp"
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

std::vector<uint64_t> counts_of(const MultiplicityVector& mv) {
  std::vector<uint64_t> out(mv.modulus());
  for (uint64_t c = 0; c < mv.modulus(); ++c)
    out[c] = mv.count(c).convert_to<uint64_t>();
  return out;
}

Instance random_instance(SplitMix64& rng, uint64_t max_s, uint64_t max_modulus) {
  uint64_t modulus = rng.uniform(2, max_modulus);
  uint64_t s = rng.uniform(1, max_s);
  std::vector<uint64_t> w(s);
  for (uint64_t i = 0; i < s; ++i) w[i] = rng.uniform(1, modulus - 1);
  return Instance(std::move(w), modulus);
}

}  // namespace

TEST_CASE("multiplicity of small golden instances") {
  MultiplicityVector a = multiplicity_dp(Instance({1, 2, 3}, 8));
  CHECK(counts_of(a) == std::vector<uint64_t>{1, 1, 1, 2, 1, 1, 1, 0});
  CHECK(a.support_size() == 7);
  CHECK(a.max_count() == 2);
  CHECK(a.min_support_count() == 1);
  CHECK(a.unit_min_multiplicity());
  CHECK(a.total() == 8);
  CHECK(a.has_preimage(0));
  CHECK_FALSE(a.has_preimage(7));
  CHECK(a.support() ==
        std::vector<uint64_t>{0, 1, 2, 3, 4, 5, 6});

  MultiplicityVector b = multiplicity_dp(Instance({1, 2, 3}, 4));
  CHECK(counts_of(b) == std::vector<uint64_t>{2, 2, 2, 2});
  CHECK_FALSE(b.unit_min_multiplicity());

  MultiplicityVector c = multiplicity_dp(Instance({1, 2, 3, 4}, 5));
  CHECK(counts_of(c) == std::vector<uint64_t>{4, 3, 3, 3, 3});
}

TEST_CASE("counting and enumeration agree on random instances") {
  SplitMix64 rng(2024);
  for (int trial = 0; trial < 60; ++trial) {
    Instance inst = random_instance(rng, 10, 64);
    MultiplicityVector fast = multiplicity_dp(inst);
    MultiplicityVector slow = multiplicity_bruteforce(inst);
    REQUIRE(fast.modulus() == slow.modulus());
    for (uint64_t c = 0; c < fast.modulus(); ++c)
      CHECK(fast.count(c) == slow.count(c));
    // The empty subset always lands on zero.
    CHECK(fast.count(0) >= 1);
    BigInt sum = 0;
    fast.for_each_support([&](uint64_t c) { sum += fast.count(c); });
    CHECK(sum == fast.total());
  }
}

TEST_CASE("counts stay exact beyond 64-bit totals") {
  // 64 unit weights mod 2: counts split evenly, 2^63 on each residue.
  std::vector<uint64_t> w(64, 1);
  MultiplicityVector mv = multiplicity_dp(Instance(std::move(w), 2));
  CHECK_FALSE(mv.small_storage());
  CHECK(mv.count(0) == pow2(63));
  CHECK(mv.count(1) == pow2(63));
  CHECK(mv.total() == pow2(64));
  CHECK(mv.log_count(0) == doctest::Approx(63 * M_LN2).epsilon(1e-13));
}

TEST_CASE("multiplicity caps are enforced") {
  Caps tight;
  tight.modulus = 10;
  CHECK(code_of([&] { multiplicity_dp(Instance({1, 2}, 16), tight); }) ==
        ErrorCode::ModulusTooLarge);
  Caps shallow;
  shallow.brute_force = 3;
  CHECK(code_of([&] {
          multiplicity_bruteforce(Instance({1, 1, 1, 1}, 5), shallow);
        }) == ErrorCode::InstanceTooLarge);
}

TEST_CASE("raw count vectors are validated") {
  std::vector<BigInt> good = {BigInt(2), BigInt(2), BigInt(2), BigInt(2)};
  MultiplicityVector mv(4, 3, good);
  CHECK(mv.count(1) == 2);

  CHECK(code_of([] {
          MultiplicityVector(4, 3, {BigInt(1), BigInt(1)});
        }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] {
          MultiplicityVector(4, 3,
                             {BigInt(1), BigInt(1), BigInt(1), BigInt(1)});
        }) == ErrorCode::InvalidArgument);
  CHECK(code_of([] {
          MultiplicityVector(2, 1, {BigInt(3), BigInt(-1)});
        }) == ErrorCode::InvalidArgument);
}

TEST_CASE("histogram aggregates multiplicities") {
  MultiplicityHistogram h =
      multiplicity_histogram(multiplicity_dp(Instance({1, 2, 3}, 8)));
  REQUIRE(h.entries.size() == 2);
  CHECK(h.entries[0].l == 1);
  CHECK(h.entries[0].count == 6);
  CHECK(h.entries[1].l == 2);
  CHECK(h.entries[1].count == 1);

  MultiplicityHistogram flat =
      multiplicity_histogram(multiplicity_dp(Instance({1, 2, 3}, 4)));
  REQUIRE(flat.entries.size() == 1);
  CHECK(flat.entries[0].l == 2);
  CHECK(flat.entries[0].count == 4);

  SplitMix64 rng(7);
  for (int trial = 0; trial < 20; ++trial) {
    MultiplicityVector mv = multiplicity_dp(random_instance(rng, 10, 48));
    MultiplicityHistogram hist = multiplicity_histogram(mv);
    BigInt mass = 0;
    uint64_t residues = 0;
    for (size_t i = 0; i < hist.entries.size(); ++i) {
      if (i) CHECK(hist.entries[i - 1].l < hist.entries[i].l);
      mass += hist.entries[i].l * hist.entries[i].count;
      residues += hist.entries[i].count;
    }
    CHECK(mass == mv.total());
    CHECK(residues == mv.support_size());
  }
}

TEST_CASE("collision classes group preimages") {
  std::vector<CollisionClass> one =
      collision_classes(Instance({1, 2, 3}, 8), 2);
  REQUIRE(one.size() == 1);
  CHECK(one[0].residue == 3);
  REQUIRE(one[0].size() == 2);
  CHECK(one[0].members[0] == std::vector<uint8_t>{0, 0, 1});
  CHECK(one[0].members[1] == std::vector<uint8_t>{1, 1, 0});

  CHECK(collision_classes(Instance({1, 2, 3}, 8), 3).empty());

  std::vector<CollisionClass> flat =
      collision_classes(Instance({1, 2, 3}, 4), 2);
  REQUIRE(flat.size() == 4);
  for (size_t i = 0; i < 4; ++i) {
    CHECK(flat[i].residue == i);
    CHECK(flat[i].size() == 2);
  }
  CHECK(flat[0].members[0] == std::vector<uint8_t>{0, 0, 0});
  CHECK(flat[0].members[1] == std::vector<uint8_t>{1, 0, 1});

  // Class sizes must match the multiplicity counts, and members must map to
  // the class residue.
  SplitMix64 rng(99);
  for (int trial = 0; trial < 15; ++trial) {
    Instance inst = random_instance(rng, 9, 32);
    MultiplicityVector mv = multiplicity_dp(inst);
    std::vector<CollisionClass> classes = collision_classes(inst, 2);
    for (size_t i = 0; i < classes.size(); ++i) {
      if (i)
        CHECK((classes[i - 1].size() > classes[i].size() ||
               (classes[i - 1].size() == classes[i].size() &&
                classes[i - 1].residue < classes[i].residue)));
      CHECK(BigInt(classes[i].size()) == mv.count(classes[i].residue));
      for (const auto& x : classes[i].members)
        CHECK(inst.apply(x) == classes[i].residue);
    }
  }
}

TEST_CASE("multiplicity serializers") {
  MultiplicityVector mv = multiplicity_dp(Instance({1, 2, 3}, 4));
  CHECK(multiplicity_to_csv(mv) == "residue,count\n0,2\n1,2\n2,2\n3,2\n");
  CHECK(multiplicity_to_json(mv) ==
        "{\"modulus\":4,\"s\":3,\"counts\":[2,2,2,2]}\n");

  std::vector<CollisionClass> classes =
      collision_classes(Instance({1, 2, 3}, 8), 2);
  CHECK(collisions_to_csv(classes) == "residue,size,members\n3,2,001 110\n");
  CHECK(collisions_to_json(classes) ==
        "{\"classes\":[{\"residue\":3,\"size\":2,\"members\":[\"001\","
        "\"110\"]}]}\n");
}
