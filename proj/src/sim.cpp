#include "unnet/sim.hpp"

#include <algorithm>
#include <stdexcept>

#include "unnet/sharing.hpp"
#include "unnet/unn.hpp"
#include "unnet/util.hpp"

namespace unnet {

namespace {

Edge canonical(int u, int v) { return {std::min(u, v), std::max(u, v)}; }

void check_endpoint(const Graph& g, int v, const char* who) {
  if (v < 0 || v >= g.vertex_count())
    throw std::invalid_argument(std::string(who) + ": vertex out of range");
}

void check_adversary(const Adversary& adv, int alice, int bob, const char* who) {
  for (int v : adv.passive)
    if (v == alice || v == bob)
      throw std::invalid_argument(std::string(who) + ": adversary cannot hold an endpoint");
  for (int v : adv.active)
    if (v == alice || v == bob)
      throw std::invalid_argument(std::string(who) + ": adversary cannot hold an endpoint");
}

}  // namespace

Network build_network(const Graph& g, std::uint64_t seed, bool restrict_to_tree) {
  if (g.is_directed())
    throw std::invalid_argument("build_network: undirected graph required");
  if (!g.connected()) throw std::invalid_argument("build_network: disconnected graph");

  Network net;
  net.graph = g;
  net.restricted = restrict_to_tree;

  std::vector<Edge> keyed_edges;
  if (restrict_to_tree) {
    net.unn_tree = maximal_unn_subgraph(g);
    keyed_edges = net.unn_tree->chosen_tree.edges();
  } else {
    keyed_edges = g.edges();
  }

  SplitMix64 rng(seed);
  std::set<std::uint64_t> seen;
  for (const Edge& e : keyed_edges) {
    std::uint64_t key;
    do {
      key = rng.next();
    } while (key == 0 || !seen.insert(key).second);
    net.edge_keys[e] = key;
  }
  return net;
}

TransmissionResult mpt_send(const Network& net, int alice, int bob,
                            std::span<const std::uint8_t> message, int d, int k,
                            const Adversary& adv, std::uint64_t seed) {
  const Graph& g = net.graph;
  check_endpoint(g, alice, "mpt_send");
  check_endpoint(g, bob, "mpt_send");
  if (alice == bob) throw std::invalid_argument("mpt_send: sender equals receiver");
  if (d < 1 || d > k) throw std::invalid_argument("mpt_send: need 1 <= d <= k");
  check_adversary(adv, alice, bob, "mpt_send");
  const PrimeField field(kDefaultModulus);
  if (adv.offset % field.modulus() == 0)
    throw std::invalid_argument("mpt_send: corruption offset must be nonzero mod p");

  TransmissionResult result;
  const auto routing = disjoint_paths(g, alice, bob, k);
  if (!routing.feasible()) {
    result.status = TransmissionStatus::RoutingFailure;
    result.paths_used = PathSet{alice, bob, {}};
    return result;
  }
  result.paths_used = *routing.path_set;

  // Share every byte, then walk each path once, carrying all byte shares for
  // that path. Passive nodes log a share as it arrives; active nodes corrupt
  // it before forwarding.
  SplitMix64 rng(seed);
  const int bytes = static_cast<int>(message.size());
  std::vector<ShareVector> per_byte;
  per_byte.reserve(bytes);
  for (int j = 0; j < bytes; ++j)
    per_byte.push_back(share_secret(field, message[j], d, k, rng));

  std::vector<std::vector<std::uint32_t>> carried(k, std::vector<std::uint32_t>(bytes));
  for (int i = 0; i < k; ++i)
    for (int j = 0; j < bytes; ++j) carried[i][j] = per_byte[j].shares[i].y;

  for (int i = 0; i < k; ++i) {
    const auto& path = result.paths_used.paths[i];
    bool corrupted = false;
    for (std::size_t step = 1; step + 1 < path.size(); ++step) {
      const int node = path[step];
      if (adv.passive.count(node)) {
        for (int j = 0; j < bytes; ++j)
          result.transcript.push_back(
              {node, i, j, static_cast<std::uint32_t>(i + 1), carried[i][j]});
      }
      if (adv.active.count(node)) {
        corrupted = true;
        for (int j = 0; j < bytes; ++j)
          carried[i][j] = field.add(carried[i][j], adv.offset);
      }
    }
    if (corrupted) result.corrupted_paths.push_back(i);
  }

  std::vector<std::uint8_t> delivered(bytes);
  for (int j = 0; j < bytes; ++j) {
    ShareVector received{d, k, {}};
    for (int i = 0; i < k; ++i)
      received.shares.push_back({static_cast<std::uint32_t>(i + 1), carried[i][j]});
    const auto decoded = welch_berlekamp(field, received);
    if (!decoded || *decoded > 255) {
      result.status = TransmissionStatus::DecodeFailure;
      return result;
    }
    delivered[j] = static_cast<std::uint8_t>(*decoded);
  }
  result.status = TransmissionStatus::Success;
  result.delivered = std::move(delivered);
  return result;
}

ViewDistribution eavesdrop_distribution(const Network& net, int alice, int bob, int d,
                                        int k, const std::set<int>& passive,
                                        std::uint32_t modulus) {
  const Graph& g = net.graph;
  check_endpoint(g, alice, "eavesdrop_distribution");
  check_endpoint(g, bob, "eavesdrop_distribution");
  if (alice == bob) throw std::invalid_argument("eavesdrop_distribution: endpoints equal");
  if (d < 1 || d > k) throw std::invalid_argument("eavesdrop_distribution: need 1 <= d <= k");
  const PrimeField field(modulus);
  if (static_cast<std::uint32_t>(k) >= modulus)
    throw std::invalid_argument("eavesdrop_distribution: need k < p");

  const auto routing = disjoint_paths(g, alice, bob, k);
  if (!routing.feasible())
    throw std::runtime_error("eavesdrop_distribution: graph cannot supply k disjoint paths");

  std::vector<int> observed_indices;
  for (int i = 0; i < k; ++i) {
    const auto& path = routing.path_set->paths[i];
    for (std::size_t step = 1; step + 1 < path.size(); ++step)
      if (passive.count(path[step])) {
        observed_indices.push_back(i);
        break;
      }
  }

  const std::uint32_t p = field.modulus();
  std::uint64_t poly_count = 1;
  for (int i = 1; i < d; ++i) {
    poly_count *= p;
    if (poly_count > 1'000'000)
      throw std::invalid_argument("eavesdrop_distribution: polynomial space too large");
  }

  ViewDistribution dist;
  dist.shares_observed = static_cast<int>(observed_indices.size());
  dist.per_secret.resize(p);
  std::vector<std::uint32_t> coeffs(d - 1, 0);
  for (std::uint32_t secret = 0; secret < p; ++secret) {
    for (std::uint64_t c = 0; c < poly_count; ++c) {
      std::uint64_t rem = c;
      for (int i = 0; i < d - 1; ++i) {
        coeffs[i] = static_cast<std::uint32_t>(rem % p);
        rem /= p;
      }
      const ShareVector sv = share_with_coefficients(field, secret, coeffs, k);
      std::string view;
      for (int idx : observed_indices) {
        view += std::to_string(idx);
        view += ':';
        view += std::to_string(sv.shares[idx].y);
        view += ';';
      }
      ++dist.per_secret[secret][view];
    }
  }
  return dist;
}

SignedMessage mpa_sign(Network& net, int alice, std::span<const std::uint8_t> message,
                       const std::vector<int>& neighbor_subset) {
  check_endpoint(net.graph, alice, "mpa_sign");
  if (neighbor_subset.empty())
    throw std::invalid_argument("mpa_sign: empty neighbor subset carries no authentication");
  const PrimeField field(kDefaultModulus);

  SignedMessage sm;
  sm.signer = alice;
  sm.nonce = net.mac_nonce++;
  for (int nb : neighbor_subset) {
    check_endpoint(net.graph, nb, "mpa_sign");
    const auto it = net.edge_keys.find(canonical(alice, nb));
    if (it == net.edge_keys.end())
      throw std::invalid_argument("mpa_sign: no shared key with neighbor " +
                                  std::to_string(nb));
    MacKey key = derive_one_time_key(field, it->second, sm.nonce);
    const std::uint32_t digest = hash_message(field, key.hash_key, message);
    sm.neighbors.push_back(nb);
    sm.digests.push_back(digest);
    sm.tags.push_back(make_mac(field, key, digest, nb));
  }
  return sm;
}

namespace {

// First hop-minimal route, reused for the request and the reply.
std::vector<int> verification_route(const Graph& g, int from, int to) {
  const auto r = disjoint_paths(g, from, to, 1);
  if (!r.feasible()) return {};
  return r.path_set->paths[0];
}

}  // namespace

AuthResult mpa_verify(const Network& net, int bob, const SignedMessage& sm,
                      std::span<const std::uint8_t> message, int threshold,
                      const Adversary& adv) {
  const Graph& g = net.graph;
  check_endpoint(g, bob, "mpa_verify");
  check_endpoint(g, sm.signer, "mpa_verify");
  if (threshold < 1 || threshold > static_cast<int>(sm.tags.size()))
    throw std::invalid_argument("mpa_verify: threshold must be within 1..|tags|");
  const PrimeField field(kDefaultModulus);

  AuthResult result;
  result.threshold_used = threshold;

  const auto verdict = is_unn_naive(g);
  if (!verdict.is_unn) {
    result.non_unique_warning = true;
    const auto& signer_nb = g.out_neighbors(sm.signer);
    for (int v = 0; v < g.vertex_count(); ++v)
      if (v != sm.signer && g.out_neighbors(v) == signer_nb) {
        result.signer_twin = v;
        break;
      }
  }

  int accepting = 0;
  for (std::size_t i = 0; i < sm.neighbors.size(); ++i) {
    const int nb = sm.neighbors[i];
    const Tag& tag = sm.tags[i];

    bool on_route_adversary = false;
    if (nb != bob) {
      const auto route = verification_route(g, bob, nb);
      if (route.empty()) {
        result.votes[nb] = false;  // unreachable counts as reject
        continue;
      }
      for (std::size_t step = 1; step + 1 < route.size(); ++step)
        if (adv.active.count(route[step])) on_route_adversary = true;
    }

    bool vote;
    if (adv.active.count(nb)) {
      // Adversarial verifier answers per strategy, ignoring the key.
      const auto key_it = net.edge_keys.find(canonical(sm.signer, nb));
      bool honest = false;
      if (key_it != net.edge_keys.end()) {
        const MacKey key = derive_one_time_key(field, key_it->second, sm.nonce);
        honest = verify_mac(field, key, hash_message(field, key.hash_key, message), tag);
      }
      switch (adv.reply) {
        case Adversary::ReplyStrategy::AlwaysAccept: vote = true; break;
        case Adversary::ReplyStrategy::AlwaysReject: vote = false; break;
        case Adversary::ReplyStrategy::Flip: vote = !honest; break;
        default: vote = false; break;
      }
    } else {
      const auto key_it = net.edge_keys.find(canonical(sm.signer, nb));
      if (key_it == net.edge_keys.end()) {
        vote = false;  // no shared key: cannot vouch
      } else {
        const MacKey key = derive_one_time_key(field, key_it->second, sm.nonce);
        const std::uint32_t digest = hash_message(field, key.hash_key, message);
        vote = verify_mac(field, key, digest, tag);
      }
      // The reply crosses the route back to the verifier unauthenticated;
      // active nodes on it flip the bit.
      if (on_route_adversary) vote = !vote;
    }
    result.votes[nb] = vote;
    if (vote) ++accepting;
  }
  result.accepted = accepting >= threshold;
  return result;
}

KeyCountReport key_count_report(const Network& net) {
  const long long n = net.graph.vertex_count();
  KeyCountReport report;
  report.provisioned = static_cast<int>(net.edge_keys.size());
  report.tree_bound = static_cast<int>(n > 0 ? n - 1 : 0);
  report.pairwise_bound = n * (n - 1) / 2;
  return report;
}

}  // namespace unnet
