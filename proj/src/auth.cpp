#include "unnet/auth.hpp"

#include <stdexcept>

#include "unnet/util.hpp"

namespace unnet {

std::uint32_t hash_message(const PrimeField& f, std::uint32_t hash_key,
                           std::span<const std::uint8_t> message) {
  std::uint32_t acc = 0;
  std::uint32_t rp = hash_key % f.modulus();
  for (const std::uint8_t byte : message) {
    acc = f.add(acc, f.mul(byte % f.modulus(), rp));
    rp = f.mul(rp, hash_key);
  }
  return f.add(acc, f.reduce(message.size()));
}

Tag make_mac(const PrimeField& f, MacKey& key, std::uint32_t digest, int owner) {
  if (key.uses != 0) throw std::runtime_error("make_mac: one-time key already used");
  ++key.uses;
  return Tag{f.add(f.mul(key.a, digest), key.b), owner};
}

bool verify_mac(const PrimeField& f, const MacKey& key, std::uint32_t digest,
                const Tag& tag) {
  return f.add(f.mul(key.a, digest), key.b) == tag.value;
}

MacKey derive_one_time_key(const PrimeField& f, std::uint64_t edge_secret,
                           std::uint64_t nonce) {
  SplitMix64 rng(edge_secret ^ (0x9e3779b97f4a7c15ULL * (nonce + 1)));
  MacKey key;
  key.a = static_cast<std::uint32_t>(rng.below(f.modulus()));
  key.b = static_cast<std::uint32_t>(rng.below(f.modulus()));
  key.hash_key = static_cast<std::uint32_t>(rng.below(f.modulus()));
  return key;
}

}  // namespace unnet
