#pragma once

#include <cstdint>
#include <span>

#include "unnet/field.hpp"

namespace unnet {

/// One-time MAC key: the affine pair (a, b) plus the key of the message
/// compression hash. The use counter makes single-use violations loud.
struct MacKey {
  std::uint32_t a = 0;
  std::uint32_t b = 0;
  std::uint32_t hash_key = 0;
  int uses = 0;
};

struct Tag {
  std::uint32_t value = 0;
  int key_owner = -1;  // neighbor holding the matching key

  bool operator==(const Tag&) const = default;
};

/// Polynomial evaluation hash with length augmentation:
///   h_r(m) = sum_j m_j * r^(j+1) + len(m)  (mod p).
/// Two distinct messages of length <= L collide for at most L choices of r.
std::uint32_t hash_message(const PrimeField& f, std::uint32_t hash_key,
                           std::span<const std::uint8_t> message);

/// tag = a * digest + b. Strictly one-time: a second call on the same key
/// throws. Access to a key must be serialized by the caller.
Tag make_mac(const PrimeField& f, MacKey& key, std::uint32_t digest, int owner);

bool verify_mac(const PrimeField& f, const MacKey& key, std::uint32_t digest,
                const Tag& tag);

/// Expands an edge secret into a fresh (a, b, hash_key) triple for one
/// protocol run; both endpoints of the edge derive the same triple from the
/// same nonce.
MacKey derive_one_time_key(const PrimeField& f, std::uint64_t edge_secret,
                           std::uint64_t nonce);

}  // namespace unnet
