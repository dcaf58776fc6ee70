#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace unnet {

/// Bytes embed directly as field elements with this modulus.
inline constexpr std::uint32_t kDefaultModulus = 257;

/// Arithmetic in GF(p) for a runtime prime modulus p. Elements are plain
/// uint32_t values in [0, p); every operation reduces exactly.
class PrimeField {
 public:
  explicit PrimeField(std::uint32_t p);

  std::uint32_t modulus() const { return p_; }

  std::uint32_t reduce(std::uint64_t x) const { return static_cast<std::uint32_t>(x % p_); }
  std::uint32_t add(std::uint32_t a, std::uint32_t b) const { return reduce(std::uint64_t{a} + b); }
  std::uint32_t sub(std::uint32_t a, std::uint32_t b) const { return reduce(std::uint64_t{a} + p_ - b % p_); }
  std::uint32_t neg(std::uint32_t a) const { return sub(0, a); }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const { return reduce(std::uint64_t{a} * b); }
  std::uint32_t pow(std::uint32_t base, std::uint64_t exp) const;
  /// Multiplicative inverse; a must be nonzero mod p.
  std::uint32_t inv(std::uint32_t a) const;

 private:
  std::uint32_t p_;
};

/// Row-reduces the k x m system (rows | rhs) over GF(p) and returns one
/// solution with free variables set to zero, or nullopt when inconsistent.
std::optional<std::vector<std::uint32_t>> solve_linear_system(
    const PrimeField& f, std::vector<std::vector<std::uint32_t>> rows,
    std::vector<std::uint32_t> rhs);

}  // namespace unnet
