// unnet: analyze, construct and optimize unique-neighborhood networks, find
// disjoint paths, and simulate multipath transmission/authentication on top.

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "unnet/connectivity.hpp"
#include "unnet/construct.hpp"
#include "unnet/graph.hpp"
#include "unnet/sharing.hpp"
#include "unnet/sim.hpp"
#include "unnet/unn.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw std::runtime_error("cannot read file: " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

unnet::Graph load_graph(const std::string& path) {
  return unnet::parse_edge_list(read_file(path));
}

std::string format_witness(const unnet::UnnVerdict& v) {
  if (v.is_unn) return "UNN: yes";
  return "UNN: no; witness " + std::to_string(v.witness->first) + "," +
         std::to_string(v.witness->second);
}

// "0:1,2:3" -> {(0,1),(2,3)}
std::vector<std::pair<int, int>> parse_pairs(const std::string& text) {
  std::vector<std::pair<int, int>> pairs;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    const auto colon = item.find(':');
    if (colon == std::string::npos)
      throw std::runtime_error("bad pair '" + item + "', expected u:v");
    pairs.emplace_back(std::stoi(item.substr(0, colon)), std::stoi(item.substr(colon + 1)));
  }
  return pairs;
}

// "passive:1,2;active:3"
unnet::Adversary parse_adversary(const std::string& text) {
  unnet::Adversary adv;
  std::stringstream ss(text);
  std::string section;
  while (std::getline(ss, section, ';')) {
    if (section.empty()) continue;
    const auto colon = section.find(':');
    if (colon == std::string::npos)
      throw std::runtime_error("bad adversary section '" + section + "'");
    const std::string kind = section.substr(0, colon);
    std::stringstream nodes(section.substr(colon + 1));
    std::string node;
    while (std::getline(nodes, node, ',')) {
      if (node.empty()) continue;
      if (kind == "passive")
        adv.passive.insert(std::stoi(node));
      else if (kind == "active")
        adv.active.insert(std::stoi(node));
      else
        throw std::runtime_error("unknown adversary kind '" + kind + "'");
    }
  }
  return adv;
}

std::vector<std::uint8_t> to_bytes(const std::string& s) {
  return {s.begin(), s.end()};
}

std::string to_hex(const std::vector<std::uint8_t>& bytes) {
  static const char* digits = "0123456789abcdef";
  std::string out;
  for (const auto b : bytes) {
    out += digits[b >> 4];
    out += digits[b & 0xf];
  }
  return out;
}

unnet::EdgeCosts parse_costs_file(const std::string& path) {
  unnet::EdgeCosts costs;
  std::istringstream in(read_file(path));
  std::string line;
  while (std::getline(in, line)) {
    const auto hash = line.find('#');
    if (hash != std::string::npos) line = line.substr(0, hash);
    std::istringstream ls(line);
    int u, v;
    std::string cost;
    if (!(ls >> u >> v >> cost)) continue;
    const auto slash = cost.find('/');
    long long num = std::stoll(cost.substr(0, slash));
    long long den = slash == std::string::npos ? 1 : std::stoll(cost.substr(slash + 1));
    costs[{std::min(u, v), std::max(u, v)}] = unnet::Rational(num, den);
  }
  return costs;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"unique-neighborhood network toolkit"};
  app.require_subcommand(1);

  std::string file, file2, method = "both", pairs_text, adversary_text, costs_file;
  std::string message = "hello";
  std::string format = "text";
  int from = 0, to = 1, k = 1, d = 1, threshold = 1, trials = 50, max_adv = 1;
  std::string d_range = "1:2", k_range = "2:3";
  std::uint64_t seed = 0, budget = 2'000'000;
  std::uint32_t modulus = 17;
  std::uint32_t secret = 0;
  std::string shares_text;
  bool restrict_tree = false;

  auto* analyze = app.add_subcommand("analyze", "decide the unique-neighborhood property");
  analyze->add_option("file", file)->required();
  analyze->add_option("--method", method)->check(CLI::IsMember({"naive", "algebraic", "both"}));

  auto* extract = app.add_subcommand("extract", "largest tree-based unique-neighborhood subgraph");
  extract->add_option("file", file)->required();
  extract->add_option("--format", format)->check(CLI::IsMember({"text", "dot"}));

  auto* extend = app.add_subcommand("extend", "cheapest edge additions that make the graph a UNN");
  extend->add_option("file", file)->required();
  extend->add_option("--costs", costs_file);
  extend->add_option("--budget", budget);

  auto* join = app.add_subcommand("join", "join two UNNs with pairing edges");
  join->add_option("file1", file)->required();
  join->add_option("file2", file2)->required();
  join->add_option("--pairs", pairs_text)->required();

  auto* kappa = app.add_subcommand("kappa", "exact vertex connectivity");
  kappa->add_option("file", file)->required();

  auto* paths = app.add_subcommand("paths", "internally-vertex-disjoint paths");
  paths->add_option("file", file)->required();
  paths->add_option("--from", from)->required();
  paths->add_option("--to", to)->required();
  paths->add_option("--k", k)->required();

  auto* simulate = app.add_subcommand("simulate", "one multipath transmission");
  simulate->add_option("file", file)->required();
  simulate->add_option("--from", from)->required();
  simulate->add_option("--to", to)->required();
  simulate->add_option("--d", d)->required();
  simulate->add_option("--k", k)->required();
  simulate->add_option("--message", message);
  simulate->add_option("--adversary", adversary_text);
  simulate->add_option("--seed", seed);
  simulate->add_flag("--restrict-tree", restrict_tree);

  auto* sweep = app.add_subcommand("sweep", "parameter sweep, CSV output");
  sweep->add_option("file", file)->required();
  sweep->add_option("--from", from)->required();
  sweep->add_option("--to", to)->required();
  sweep->add_option("--d", d_range, "d range lo:hi");
  sweep->add_option("--k", k_range, "k range lo:hi");
  sweep->add_option("--max-adv", max_adv);
  sweep->add_option("--trials", trials);
  sweep->add_option("--seed", seed);

  auto* share_cmd = app.add_subcommand("share", "split one field element into shares");
  share_cmd->add_option("--secret", secret)->required();
  share_cmd->add_option("--d", d)->required();
  share_cmd->add_option("--k", k)->required();
  share_cmd->add_option("--p", modulus);
  share_cmd->add_option("--seed", seed);

  auto* reconstruct_cmd = app.add_subcommand("reconstruct", "interpolate a secret from shares");
  reconstruct_cmd->add_option("--shares", shares_text, "x:y,x:y,...")->required();
  reconstruct_cmd->add_option("--p", modulus);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << e.what() << "\n";
    return kExitUsage;
  }

  try {
    if (*analyze) {
      const auto g = load_graph(file);
      if (g.is_directed()) {
        const auto m = unnet::adjacency_matrix(g);
        const auto out = unnet::is_unn_directed(m, unnet::EdgeSide::Out);
        const auto in = unnet::is_unn_directed(m, unnet::EdgeSide::In);
        std::cout << "out " << format_witness(out) << "\n";
        std::cout << "in " << format_witness(in) << "\n";
        std::cout << "method: directed\n";
        return (out.is_unn && in.is_unn) ? kExitOk : kExitDomain;
      }
      unnet::UnnVerdict verdict;
      if (method == "naive") {
        verdict = unnet::is_unn_naive(g);
      } else if (method == "algebraic") {
        verdict = unnet::is_unn_algebraic(unnet::adjacency_matrix(g));
      } else {
        verdict = unnet::is_unn_naive(g);
        const auto alg = unnet::is_unn_algebraic(unnet::adjacency_matrix(g));
        if (alg.is_unn != verdict.is_unn) throw std::logic_error("method disagreement");
      }
      std::cout << format_witness(verdict) << "\n";
      std::cout << "method: " << method << "\n";
      return verdict.is_unn ? kExitOk : kExitDomain;
    }

    if (*extract) {
      const auto g = load_graph(file);
      const auto r = unnet::maximal_unn_subgraph(g);
      if (format == "dot") {
        std::cout << unnet::to_dot(r.kept);
        return kExitOk;
      }
      std::cout << "kept:";
      for (int v : r.kept_vertices) std::cout << ' ' << v;
      std::cout << "\nexcluded:";
      for (int v : r.excluded) std::cout << ' ' << v;
      std::cout << "\nflagged:";
      for (int v : r.excluded_with_degree_above_one) std::cout << ' ' << v;
      std::cout << "\n" << unnet::serialize_edge_list(r.kept);
      return kExitOk;
    }

    if (*extend) {
      const auto g = load_graph(file);
      unnet::EdgeCosts costs;
      if (!costs_file.empty()) costs = parse_costs_file(costs_file);
      unnet::ExtensionOptions opt;
      opt.node_budget = budget;
      const auto sol = unnet::smallest_unn_extension(g, costs, opt);
      std::cout << "cost: " << sol.cost.str() << "\n";
      std::cout << "optimal: " << (sol.optimal ? "yes" : "no") << "\n";
      for (const auto& [u, v] : sol.added_edges)
        std::cout << "add: " << u << ' ' << v << "\n";
      return kExitOk;
    }

    if (*join) {
      unnet::JoinSpec spec{load_graph(file), load_graph(file2), parse_pairs(pairs_text)};
      const auto h = unnet::join_unns(spec);
      std::cout << unnet::serialize_edge_list(h);
      const auto verdict = unnet::is_unn_naive(h);
      if (!verdict.is_unn) {
        std::cerr << "warning: joined graph is not a UNN (witness "
                  << verdict.witness->first << "," << verdict.witness->second << ")\n";
        return kExitDomain;
      }
      return kExitOk;
    }

    if (*kappa) {
      std::cout << unnet::vertex_connectivity(load_graph(file)) << "\n";
      return kExitOk;
    }

    if (*paths) {
      const auto g = load_graph(file);
      const auto r = unnet::disjoint_paths(g, from, to, k);
      if (!r.feasible()) {
        std::cout << "infeasible: max=" << r.found << "\n";
        return kExitDomain;
      }
      for (const auto& path : r.path_set->paths) {
        for (std::size_t i = 0; i < path.size(); ++i)
          std::cout << (i ? " " : "") << path[i];
        std::cout << "\n";
      }
      return kExitOk;
    }

    if (*simulate) {
      const auto g = load_graph(file);
      const auto net = unnet::build_network(g, seed, restrict_tree);
      unnet::Adversary adv;
      if (!adversary_text.empty()) adv = parse_adversary(adversary_text);
      const auto bytes = to_bytes(message);
      const auto r = unnet::mpt_send(net, from, to, bytes, d, k, adv, seed);
      const char* status = r.status == unnet::TransmissionStatus::Success ? "success"
                           : r.status == unnet::TransmissionStatus::DecodeFailure
                               ? "decode-failure"
                               : "routing-failure";
      std::cout << "status: " << status << "\n";
      if (r.delivered) std::cout << "delivered: " << to_hex(*r.delivered) << "\n";
      for (const auto& path : r.paths_used.paths) {
        std::cout << "path:";
        for (int v : path) std::cout << ' ' << v;
        std::cout << "\n";
      }
      std::cout << "corrupted-paths: " << r.corrupted_paths.size() << "\n";
      std::cout << "observations: " << r.transcript.size() << "\n";
      const auto keys = unnet::key_count_report(net);
      std::cout << "keys: " << keys.provisioned << " (tree bound " << keys.tree_bound
                << ", pairwise bound " << keys.pairwise_bound << ")\n";
      return r.status == unnet::TransmissionStatus::Success ? kExitOk : kExitDomain;
    }

    if (*sweep) {
      const auto g = load_graph(file);
      const auto net = unnet::build_network(g, seed, false);
      auto parse_range = [](const std::string& text) {
        const auto colon = text.find(':');
        if (colon == std::string::npos)
          throw std::runtime_error("bad range '" + text + "', expected lo:hi");
        return std::pair{std::stoi(text.substr(0, colon)), std::stoi(text.substr(colon + 1))};
      };
      const auto [d_lo, d_hi] = parse_range(d_range);
      const auto [k_lo, k_hi] = parse_range(k_range);
      std::vector<int> candidates;
      for (int v = 0; v < g.vertex_count(); ++v)
        if (v != from && v != to) candidates.push_back(v);
      std::cout << "# unnet-sweep v1\n";
      std::cout << "d,k,adv,success_rate,leaked\n";
      unnet::SplitMix64 rng(seed);
      const auto bytes = to_bytes(message);
      for (int dd = d_lo; dd <= d_hi; ++dd) {
        for (int kk = std::max(dd, k_lo); kk <= k_hi; ++kk) {
          for (int a = 0; a <= max_adv && a <= static_cast<int>(candidates.size()); ++a) {
            int ok = 0;
            bool leaked = false;
            for (int t = 0; t < trials; ++t) {
              unnet::Adversary adv;
              auto pool = candidates;
              for (int pick = 0; pick < a; ++pick) {
                const auto idx = rng.below(pool.size());
                adv.passive.insert(pool[idx]);
                adv.active.insert(pool[idx]);
                pool.erase(pool.begin() + static_cast<long>(idx));
              }
              const auto r = unnet::mpt_send(net, from, to, bytes, dd, kk, adv, rng.next());
              if (r.status == unnet::TransmissionStatus::Success &&
                  r.delivered == std::optional(bytes))
                ++ok;
              std::set<int> seen_indices;
              for (const auto& obs : r.transcript)
                if (obs.byte_index == 0) seen_indices.insert(obs.path_index);
              if (static_cast<int>(seen_indices.size()) >= dd) leaked = true;
            }
            std::printf("%d,%d,%d,%.3f,%s\n", dd, kk, a,
                        trials > 0 ? static_cast<double>(ok) / trials : 0.0,
                        leaked ? "yes" : "no");
          }
        }
      }
      return kExitOk;
    }

    if (*share_cmd) {
      const unnet::PrimeField f(modulus);
      unnet::SplitMix64 rng(seed);
      const auto sv = unnet::share_secret(f, secret, d, k, rng);
      for (const auto& s : sv.shares) std::cout << s.x << ' ' << s.y << "\n";
      return kExitOk;
    }

    if (*reconstruct_cmd) {
      const unnet::PrimeField f(modulus);
      std::vector<unnet::Share> shares;
      for (const auto& [x, y] : parse_pairs(shares_text))
        shares.push_back({static_cast<std::uint32_t>(x), static_cast<std::uint32_t>(y)});
      std::cout << unnet::reconstruct_secret(f, shares) << "\n";
      return kExitOk;
    }
  } catch (const unnet::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitDomain;
  }
  return kExitUsage;
}
