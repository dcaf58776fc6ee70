#include "unnet/auth.hpp"

#include <vector>

#include "doctest.h"
#include "unnet/util.hpp"

using namespace unnet;

namespace {

std::vector<std::uint8_t> bytes(std::initializer_list<int> xs) {
  std::vector<std::uint8_t> out;
  for (int x : xs) out.push_back(static_cast<std::uint8_t>(x));
  return out;
}

}  // namespace

TEST_CASE("hash_message fixtures") {
  const PrimeField f257(257);
  SUBCASE("empty message hashes to zero for any key") {
    for (std::uint32_t r = 0; r < 257; r += 19)
      CHECK(hash_message(f257, r, std::vector<std::uint8_t>{}) == 0);
  }
  SUBCASE("single byte with r = 1 gives m0 + 1") {
    for (int m0 : {0, 7, 200, 255})
      CHECK(hash_message(f257, 1, bytes({m0})) == static_cast<std::uint32_t>(m0 + 1) % 257);
  }
  SUBCASE("length augmentation separates prefixes of zeros") {
    CHECK(hash_message(f257, 5, bytes({0})) != hash_message(f257, 5, bytes({0, 0})));
  }
}

TEST_CASE("hash collisions over the key are bounded by the message length") {
  const PrimeField f(257);
  const auto pairs = std::vector<std::pair<std::vector<std::uint8_t>, std::vector<std::uint8_t>>>{
      {bytes({1, 2, 3, 4}), bytes({4, 3, 2, 1})},
      {bytes({0}), bytes({1})},
      {bytes({9, 9}), bytes({9, 9, 9, 9})},
      {bytes({255, 0, 255}), bytes({0, 255, 0})},
  };
  for (const auto& [m1, m2] : pairs) {
    int collisions = 0;
    for (std::uint32_t r = 0; r < 257; ++r)
      if (hash_message(f, r, m1) == hash_message(f, r, m2)) ++collisions;
    CHECK(collisions <= 4);  // max length among the fixtures
  }
}

TEST_CASE("mac and verify") {
  const PrimeField f(257);
  SUBCASE("degenerate keys still follow the affine rule") {
    MacKey zero{0, 0, 0, 0};
    CHECK(make_mac(f, zero, 123, 7).value == 0);
    MacKey identity{1, 0, 0, 0};
    CHECK(make_mac(f, identity, 123, 7).value == 123);
  }
  SUBCASE("round trip verifies, tampering fails") {
    SplitMix64 rng(13);
    for (int trial = 0; trial < 100; ++trial) {
      MacKey key{static_cast<std::uint32_t>(rng.below(257)),
                 static_cast<std::uint32_t>(rng.below(257)),
                 static_cast<std::uint32_t>(rng.below(257)), 0};
      const auto digest = static_cast<std::uint32_t>(rng.below(257));
      const Tag tag = make_mac(f, key, digest, 1);
      CHECK(verify_mac(f, key, digest, tag));
      Tag bumped = tag;
      bumped.value = f.add(bumped.value, 1);
      CHECK_FALSE(verify_mac(f, key, digest, bumped));  // affine map is a function
    }
  }
  SUBCASE("one-time use is enforced") {
    MacKey key{3, 4, 5, 0};
    (void)make_mac(f, key, 10, 0);
    CHECK_THROWS_AS(make_mac(f, key, 11, 0), std::runtime_error);
  }
}

TEST_CASE("substitution forgery succeeds for exactly one key in p") {
  const PrimeField f(17);
  // over all 289 keys: seeing (digest, tag) pins 17 candidate keys; for any
  // forged digest' != digest and fixed tag', exactly one candidate validates.
  for (std::uint32_t digest = 0; digest < 17; ++digest) {
    for (std::uint32_t tag_value = 0; tag_value < 17; ++tag_value) {
      for (std::uint32_t forged_digest = 0; forged_digest < 17; ++forged_digest) {
        if (forged_digest == digest) continue;
        for (std::uint32_t forged_tag = 0; forged_tag < 17; ++forged_tag) {
          int consistent = 0, fooled = 0;
          for (std::uint32_t a = 0; a < 17; ++a) {
            for (std::uint32_t b = 0; b < 17; ++b) {
              const MacKey key{a, b, 0, 0};
              if (!verify_mac(f, key, digest, Tag{tag_value, 0})) continue;
              ++consistent;
              if (verify_mac(f, key, forged_digest, Tag{forged_tag, 0})) ++fooled;
            }
          }
          REQUIRE(consistent == 17);
          REQUIRE(fooled == 1);
        }
      }
    }
  }
}

TEST_CASE("wrong digest rarely verifies over random keys") {
  const PrimeField f(17);
  int accepted = 0;
  const int total = 17 * 17;
  for (std::uint32_t a = 0; a < 17; ++a) {
    for (std::uint32_t b = 0; b < 17; ++b) {
      MacKey key{a, b, 0, 0};
      const Tag tag = make_mac(f, key, 3, 0);
      if (verify_mac(f, key, 4, tag)) ++accepted;
    }
  }
  CHECK(accepted == total / 17);  // exactly 1/p of the keys
}

TEST_CASE("independent votes multiply the forgery bound") {
  const PrimeField f(17);
  // two neighbors, forged digest under both keys: over all 17^4 key pairs,
  // both votes accept for exactly (17*17) of them, i.e. (1/17)^2.
  const std::uint32_t digest = 3, forged = 4;
  long both = 0;
  for (std::uint32_t a1 = 0; a1 < 17; ++a1)
    for (std::uint32_t b1 = 0; b1 < 17; ++b1)
      for (std::uint32_t a2 = 0; a2 < 17; ++a2)
        for (std::uint32_t b2 = 0; b2 < 17; ++b2) {
          MacKey k1{a1, b1, 0, 0}, k2{a2, b2, 0, 0};
          const Tag t1 = make_mac(f, k1, digest, 1);
          const Tag t2 = make_mac(f, k2, digest, 2);
          if (verify_mac(f, k1, forged, t1) && verify_mac(f, k2, forged, t2)) ++both;
        }
  CHECK(both * 17 * 17 == 17L * 17 * 17 * 17);  // exactly (1/17)^2
}

TEST_CASE("derived one-time keys differ across nonces and agree across parties") {
  const PrimeField f(257);
  const MacKey k1 = derive_one_time_key(f, 0xdeadbeef, 0);
  const MacKey k2 = derive_one_time_key(f, 0xdeadbeef, 1);
  const MacKey k1_again = derive_one_time_key(f, 0xdeadbeef, 0);
  CHECK((k1.a != k2.a || k1.b != k2.b || k1.hash_key != k2.hash_key));
  CHECK(k1.a == k1_again.a);
  CHECK(k1.b == k1_again.b);
  CHECK(k1.hash_key == k1_again.hash_key);
}
