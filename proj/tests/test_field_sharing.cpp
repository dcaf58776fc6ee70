#include <map>

#include "doctest.h"
#include "unnet/field.hpp"
#include "unnet/sharing.hpp"
#include "unnet/util.hpp"

using namespace unnet;

TEST_CASE("prime field validation and axioms") {
  CHECK_THROWS_AS(PrimeField(1), std::invalid_argument);
  CHECK_THROWS_AS(PrimeField(15), std::invalid_argument);
  CHECK_THROWS_AS(PrimeField(256), std::invalid_argument);

  for (const std::uint32_t p : {2u, 17u, 257u}) {
    const PrimeField f(p);
    SplitMix64 rng(p);
    for (int trial = 0; trial < 200; ++trial) {
      const auto a = static_cast<std::uint32_t>(rng.below(p));
      const auto b = static_cast<std::uint32_t>(rng.below(p));
      const auto c = static_cast<std::uint32_t>(rng.below(p));
      CHECK(f.add(a, f.add(b, c)) == f.add(f.add(a, b), c));
      CHECK(f.mul(a, f.mul(b, c)) == f.mul(f.mul(a, b), c));
      CHECK(f.mul(a, f.add(b, c)) == f.add(f.mul(a, b), f.mul(a, c)));
      CHECK(f.add(a, f.neg(a)) == 0);
      if (a != 0) CHECK(f.mul(a, f.inv(a)) == 1);
    }
  }
}

TEST_CASE("linear system solving") {
  const PrimeField f(17);
  SUBCASE("unique solution") {
    const auto sol = solve_linear_system(f, {{1, 1}, {1, 16}}, {5, 3});
    REQUIRE(sol);
    // x + y = 5, x - y = 3  ->  x = 4, y = 1
    CHECK((*sol)[0] == 4);
    CHECK((*sol)[1] == 1);
  }
  SUBCASE("inconsistent") {
    CHECK_FALSE(solve_linear_system(f, {{1, 1}, {2, 2}}, {1, 3}));
  }
  SUBCASE("underdetermined picks free variables zero") {
    const auto sol = solve_linear_system(f, {{1, 1}}, {7});
    REQUIRE(sol);
    CHECK((*sol)[0] == 7);
    CHECK((*sol)[1] == 0);
  }
}

TEST_CASE("sharing fixtures") {
  const PrimeField f(17);
  SUBCASE("hand-evaluated polynomial f(x) = 5 + 3x") {
    const std::uint32_t coeffs[] = {3};
    const auto sv = share_with_coefficients(f, 5, coeffs, 3);
    CHECK(sv.shares == std::vector<Share>{{1, 8}, {2, 11}, {3, 14}});
    CHECK(reconstruct_secret(f, std::vector<Share>{{1, 8}, {2, 11}}) == 5);
  }
  SUBCASE("degree-0 sharing repeats the secret") {
    SplitMix64 rng(1);
    const auto sv = share_secret(f, 9, 1, 5, rng);
    for (const auto& s : sv.shares) CHECK(s.y == 9);
    CHECK(reconstruct_secret(f, std::vector<Share>{{3, 9}}) == 9);
  }
  SUBCASE("parameter validation") {
    SplitMix64 rng(2);
    CHECK_THROWS_AS(share_secret(f, 3, 0, 2, rng), std::invalid_argument);
    CHECK_THROWS_AS(share_secret(f, 3, 4, 3, rng), std::invalid_argument);
    CHECK_THROWS_AS(share_secret(f, 3, 2, 17, rng), std::invalid_argument);
    CHECK_THROWS_AS(share_secret(f, 99, 2, 3, rng), std::invalid_argument);
    CHECK_THROWS_AS(reconstruct_secret(f, std::vector<Share>{}), std::invalid_argument);
    CHECK_THROWS_AS(reconstruct_secret(f, std::vector<Share>{{1, 2}, {1, 3}}),
                    std::invalid_argument);
    CHECK_THROWS_AS(reconstruct_secret(f, std::vector<Share>{{0, 2}}),
                    std::invalid_argument);
  }
}

TEST_CASE("every d-subset of shares reconstructs the secret") {
  const PrimeField f(17);
  SplitMix64 rng(3);
  for (std::uint32_t secret = 0; secret < 17; ++secret) {
    for (int d = 1; d <= 5; ++d) {
      for (int k = d; k <= 5; ++k) {
        const auto sv = share_secret(f, secret, d, k, rng);
        // walk all d-subsets via bitmasks
        for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
          if (__builtin_popcount(mask) != d) continue;
          std::vector<Share> subset;
          for (int i = 0; i < k; ++i)
            if (mask & (1u << i)) subset.push_back(sv.shares[i]);
          CHECK(reconstruct_secret(f, subset) == secret);
        }
      }
    }
  }
}

TEST_CASE("any d-1 shares are uniformly distributed regardless of the secret") {
  const PrimeField f(17);
  // d = 2, k = 3: enumerate all 17 polynomials per secret and histogram each
  // single-share view; d = k = 2 covers the "both shares required" case.
  for (const int k : {3, 2}) {
    for (std::uint32_t view_index = 0; view_index < static_cast<std::uint32_t>(k);
         ++view_index) {
      std::map<std::uint32_t, std::map<std::uint32_t, int>> histogram;  // secret -> y -> count
      for (std::uint32_t secret = 0; secret < 17; ++secret) {
        for (std::uint32_t a1 = 0; a1 < 17; ++a1) {
          const std::uint32_t coeffs[] = {a1};
          const auto sv = share_with_coefficients(f, secret, coeffs, k);
          ++histogram[secret][sv.shares[view_index].y];
        }
      }
      for (std::uint32_t secret = 1; secret < 17; ++secret)
        CHECK(histogram[secret] == histogram[0]);
    }
  }
}

TEST_CASE("welch-berlekamp fixtures") {
  const PrimeField f(17);
  SUBCASE("no errors reduces to reconstruction") {
    SplitMix64 rng(4);
    for (std::uint32_t secret = 0; secret < 17; ++secret) {
      const auto sv = share_secret(f, secret, 2, 5, rng);
      CHECK(welch_berlekamp(f, sv) == secret);
    }
  }
  SUBCASE("corrupting one of five shares never hides f(x) = 5 + 3x") {
    const std::uint32_t coeffs[] = {3};
    for (int position = 0; position < 5; ++position) {
      for (std::uint32_t wrong = 0; wrong < 17; ++wrong) {
        auto sv = share_with_coefficients(f, 5, coeffs, 5);
        if (wrong == sv.shares[position].y) continue;
        sv.shares[position].y = wrong;
        CHECK(welch_berlekamp(f, sv) == 5);
      }
    }
  }
  SUBCASE("zero correction budget tolerates nothing, but never lies silently here") {
    const std::uint32_t coeffs[] = {3};
    auto sv = share_with_coefficients(f, 5, coeffs, 3);  // d=2, k=3, e=0
    sv.shares[1].y = f.add(sv.shares[1].y, 1);
    const auto decoded = welch_berlekamp(f, sv);
    CHECK_FALSE(decoded.has_value());
  }
  SUBCASE("requires the full share vector") {
    ShareVector sv{2, 5, {{1, 0}, {2, 0}}};
    CHECK_THROWS_AS(welch_berlekamp(f, sv), std::invalid_argument);
  }
}

TEST_CASE("welch-berlekamp corrects every pattern within the budget") {
  const PrimeField f(17);
  SplitMix64 rng(5);
  for (int d = 1; d <= 3; ++d) {
    for (int k = d; k <= 6; ++k) {
      const int budget = (k - d) / 2;
      for (int rep = 0; rep < 3; ++rep) {
        const auto secret = static_cast<std::uint32_t>(rng.below(17));
        const auto clean = share_secret(f, secret, d, k, rng);
        // all error patterns of weight <= budget at a sampled error value
        for (std::uint32_t mask = 0; mask < (1u << k); ++mask) {
          if (__builtin_popcount(mask) > budget) continue;
          auto sv = clean;
          for (int i = 0; i < k; ++i)
            if (mask & (1u << i))
              sv.shares[i].y =
                  f.add(sv.shares[i].y, 1 + static_cast<std::uint32_t>(rng.below(16)));
          CHECK(welch_berlekamp(f, sv) == secret);
        }
      }
    }
  }
}
