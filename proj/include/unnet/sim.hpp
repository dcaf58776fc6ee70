#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "unnet/auth.hpp"
#include "unnet/connectivity.hpp"
#include "unnet/construct.hpp"
#include "unnet/graph.hpp"

namespace unnet {

/// The simulation world: a graph with one symmetric secret per keyed edge.
/// In tree-restricted mode only the spanning-tree edges of the extracted
/// unique-neighborhood subgraph carry keys, which is what brings the key
/// count down from O(n^2) pairwise to n-1.
struct Network {
  Graph graph;
  std::map<Edge, std::uint64_t> edge_keys;
  std::optional<UnnSubgraphResult> unn_tree;  // present in restricted mode
  bool restricted = false;
  std::uint64_t mac_nonce = 0;  // bumped per signing run for key freshness
};

Network build_network(const Graph& g, std::uint64_t seed, bool restrict_to_tree);

/// Static adversary: passive nodes record every share routed through them,
/// active nodes additionally corrupt traversing shares by a fixed additive
/// offset. Neither set may contain the sender or receiver of a run.
struct Adversary {
  std::set<int> passive;
  std::set<int> active;
  /// Additive corruption applied by every active node to every traversing
  /// share value (nonzero mod p).
  std::uint32_t offset = 1;

  enum class ReplyStrategy { AlwaysAccept, AlwaysReject, Flip };
  /// How an adversarial neighbor answers a verification request.
  ReplyStrategy reply = ReplyStrategy::Flip;
};

enum class TransmissionStatus { Success, DecodeFailure, RoutingFailure };

/// One share crossing one passive node.
struct Observation {
  int node = 0;
  int path_index = 0;
  int byte_index = 0;
  std::uint32_t x = 0;
  std::uint32_t y = 0;

  bool operator==(const Observation&) const = default;
};

struct TransmissionResult {
  TransmissionStatus status = TransmissionStatus::RoutingFailure;
  std::optional<std::vector<std::uint8_t>> delivered;
  std::vector<Observation> transcript;
  PathSet paths_used;
  std::vector<int> corrupted_paths;  // path indices with an active interior node

  bool operator==(const TransmissionResult&) const = default;
};

/// Multipath transmission: the message is shared byte-wise into k shares
/// that travel over k internally-disjoint paths; the receiver decodes each
/// byte with the Welch-Berlekamp decoder, correcting up to floor((k-d)/2)
/// corrupted paths. Deterministic for a fixed seed.
TransmissionResult mpt_send(const Network& net, int alice, int bob,
                            std::span<const std::uint8_t> message, int d, int k,
                            const Adversary& adv, std::uint64_t seed);

/// Exact eavesdropper view distributions for a one-element secret shared
/// with parameters (d, k) over the chosen paths: for every candidate secret,
/// enumerate all sharing polynomials and histogram the observed share tuple.
/// Views of fewer than d shares yield identical histograms for every secret.
struct ViewDistribution {
  std::vector<std::map<std::string, long>> per_secret;  // index = secret value
  int shares_observed = 0;
};

ViewDistribution eavesdrop_distribution(const Network& net, int alice, int bob, int d,
                                        int k, const std::set<int>& passive,
                                        std::uint32_t modulus);

/// A message undersigned towards a set of the signer's keyed neighbors: one
/// one-time MAC per neighbor over the compressed message.
struct SignedMessage {
  int signer = -1;
  std::uint64_t nonce = 0;
  std::vector<int> neighbors;
  std::vector<std::uint32_t> digests;  // per-neighbor h_r(m)
  std::vector<Tag> tags;
};

SignedMessage mpa_sign(Network& net, int alice, std::span<const std::uint8_t> message,
                       const std::vector<int>& neighbor_subset);

struct AuthResult {
  bool accepted = false;
  std::map<int, bool> votes;  // neighbor -> accept
  int threshold_used = 0;
  /// Set when the graph is not a unique-neighborhood network, i.e. the
  /// claimed signer is not identified by its neighbor set.
  bool non_unique_warning = false;
  std::optional<int> signer_twin;  // a vertex sharing the signer's neighborhood
};

/// Verification by neighbor vote: the receiver forwards (message, tag) to
/// each claimed neighbor along a path and counts accepting replies against
/// the threshold. Adversarial neighbors answer per the configured reply
/// strategy, and active nodes on a route flip the reply crossing them. This
/// surfaces, rather than solves, the exposure of unauthenticated replies to
/// on-path tampering.
AuthResult mpa_verify(const Network& net, int bob, const SignedMessage& sm,
                      std::span<const std::uint8_t> message, int threshold,
                      const Adversary& adv);

struct KeyCountReport {
  int provisioned = 0;
  int tree_bound = 0;           // n - 1
  long long pairwise_bound = 0; // n (n - 1) / 2
};

KeyCountReport key_count_report(const Network& net);

}  // namespace unnet
