#pragma once

#include <optional>
#include <span>
#include <vector>

#include "unnet/field.hpp"
#include "unnet/util.hpp"

namespace unnet {

struct Share {
  std::uint32_t x = 0;
  std::uint32_t y = 0;

  bool operator==(const Share&) const = default;
};

/// Threshold sharing of one field element: evaluations of a random polynomial
/// of degree < threshold with f(0) = secret, at x = 1..count.
struct ShareVector {
  int threshold = 0;  // d: shares needed to reconstruct
  int count = 0;      // k: shares produced
  std::vector<Share> shares;
};

/// Shamir sharing with caller-supplied higher coefficients:
/// f(x) = secret + coeffs[0]*x + ... + coeffs[d-2]*x^(d-1).
ShareVector share_with_coefficients(const PrimeField& f, std::uint32_t secret,
                                    std::span<const std::uint32_t> coeffs, int k);

/// Shamir sharing with uniformly random higher coefficients. Requires
/// 1 <= d <= k < p.
ShareVector share_secret(const PrimeField& f, std::uint32_t secret, int d, int k,
                         SplitMix64& rng);

/// Lagrange interpolation at x = 0 through exactly the given shares (the
/// caller passes some d of them; x-coordinates must be distinct and nonzero).
std::uint32_t reconstruct_secret(const PrimeField& f, std::span<const Share> shares);

/// Welch-Berlekamp decoder: recovers f(0) from all k shares when at most
/// floor((k-d)/2) of them were corrupted, by solving the key-equation system
/// E(x_i)*y_i = Q(x_i) with deg E = e (monic), deg Q < d+e, then dividing
/// Q by E. Degenerate systems are retried with smaller e; returns nullopt when
/// no candidate polynomial explains enough of the shares.
std::optional<std::uint32_t> welch_berlekamp(const PrimeField& f, const ShareVector& sv);

}  // namespace unnet
