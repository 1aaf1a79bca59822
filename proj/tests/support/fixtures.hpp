#pragma once

#include <algorithm>
#include <random>
#include <string>
#include <vector>

#include "zigzag/decomposition.hpp"
#include "zigzag/network.hpp"
#include "zigzag/ranking.hpp"

namespace zigzag::testing {

// Three 4-arc crowns in series whose second-best local selections carry
// likelihood ratios 1/4, 1/16 and 1/2; every other trail is forced. The
// 8-tree ranking of this network is the reference trace used by the
// golden tests.
inline std::string three_crowns_doc() {
  return "r s1 1\n"
         "s1 u11 1\n"
         "s1 u12 1\n"
         "u11 v11 1\n"
         "u12 v11 1/2\n"
         "u12 v12 1\n"
         "u11 v12 1/2\n"
         "v11 x1 1\n"
         "v12 s2 1\n"
         "s2 u21 1\n"
         "s2 u22 1\n"
         "u21 v21 1\n"
         "u22 v21 1/4\n"
         "u22 v22 1\n"
         "u21 v22 1/4\n"
         "v21 x2 1\n"
         "v22 s3 1\n"
         "s3 u31 1\n"
         "s3 u32 1\n"
         "u31 v31 1\n"
         "u32 v31 1/2\n"
         "u32 v32 1\n"
         "u31 v32 1\n"
         "v31 x3 1\n"
         "v32 x4 1\n";
}

inline PhyloNetwork three_crowns() { return parse_network(three_crowns_doc()); }

inline std::string cherry_doc() { return "rho a 1\na x 1\na y 1\n"; }

// The smallest non-tree-based shape: a reticulation both of whose parents
// are themselves reticulations, leaving a 2-arc fence whose outer
// endpoints are both tails.
inline std::string wfence_gadget_doc() {
  return "rho p 1/2\n"
         "rho q 1/2\n"
         "p v0 1/2\n"
         "p v2 1/2\n"
         "q v0 1/2\n"
         "q v2 1/2\n"
         "v0 v1 1/2\n"
         "v2 v1 1/2\n"
         "v1 x 1/2\n";
}

// Indices of trails with more than one admissible vector, in canonical
// trail order.
inline std::vector<int> nontrivial_trails(const SupportTreeRanking& ranking) {
  std::vector<int> result;
  for (int i = 0; i < ranking.trail_count(); ++i)
    if (ranking.family_size(i) >= 2) result.push_back(i);
  return result;
}

inline RankVector project(const RankVector& full, const std::vector<int>& coords) {
  RankVector small;
  small.reserve(coords.size());
  for (int i : coords) small.push_back(full[i]);
  return small;
}

// Grafts the w-fence gadget below a random arc of a generated network;
// the result is always a valid network that is not tree-based.
inline PhyloNetwork with_wfence_gadget(int leaf_count, int extra_arcs, std::uint64_t seed) {
  PhyloNetwork base = generate_random(leaf_count, extra_arcs, seed);
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  int target = static_cast<int>(rng() % base.arc_count());

  RawNetwork raw;
  raw.labels = base.labels();
  auto fresh = [&raw](const std::string& label) {
    raw.labels.push_back(label);
    return static_cast<int>(raw.labels.size()) - 1;
  };
  int g1 = fresh("g1w"), g2 = fresh("g2w"), p = fresh("pw"), q = fresh("qw");
  int w0 = fresh("w0w"), w2 = fresh("w2w"), w1 = fresh("w1w"), leaf = fresh("xw");

  Rational half(1, 2);
  for (int a = 0; a < base.arc_count(); ++a) {
    const auto& arc = base.arc(a);
    if (a == target) {
      raw.arcs.push_back({arc.tail, g1, arc.weight});
      raw.arcs.push_back({g1, g2, half});
      raw.arcs.push_back({g2, arc.head, half});
    } else {
      raw.arcs.push_back(arc);
    }
  }
  raw.arcs.push_back({g1, p, half});
  raw.arcs.push_back({g2, q, half});
  raw.arcs.push_back({p, w0, half});
  raw.arcs.push_back({p, w2, half});
  raw.arcs.push_back({q, w0, half});
  raw.arcs.push_back({q, w2, half});
  raw.arcs.push_back({w0, w1, half});
  raw.arcs.push_back({w2, w1, half});
  raw.arcs.push_back({w1, leaf, half});
  return PhyloNetwork::from_raw(std::move(raw));
}

// Deterministic batch of small random networks for oracle comparisons.
inline std::vector<PhyloNetwork> small_corpus(int count, int max_arcs, std::uint64_t seed) {
  std::vector<PhyloNetwork> nets;
  std::mt19937_64 rng(seed);
  while (static_cast<int>(nets.size()) < count) {
    int leaves = 2 + static_cast<int>(rng() % 5);
    int extra = static_cast<int>(rng() % 7);
    if (2 * leaves - 2 + 3 * extra > max_arcs) continue;
    nets.push_back(generate_random(leaves, extra, rng()));
  }
  return nets;
}

// A standalone zig-zag trail as a digraph with randomized arc order and
// relabeled vertices, plus weights indexed by arc.
struct TrailFixture {
  Digraph graph;
  std::vector<Rational> weights;
  TrailKind expected_kind = TrailKind::NFence;
  int length = 0;
};

// kind selection: Crown needs even m >= 4; MFence even m >= 2; WFence
// even m >= 2; NFence any odd m >= 1.
inline TrailFixture make_trail(TrailKind kind, int m, std::mt19937_64& rng) {
  std::vector<std::pair<int, int>> arcs;
  int vertex_count;
  if (kind == TrailKind::Crown) {
    vertex_count = m;
    for (int i = 0; i < m; ++i) {
      int a = i, b = (i + 1) % m;
      arcs.emplace_back(i % 2 == 0 ? std::make_pair(a, b) : std::make_pair(b, a));
    }
  } else {
    vertex_count = m + 1;
    // tail-first chains give N (odd m) or W (even m); head-first chains
    // give N (odd m) or M (even m).
    bool tail_first = kind == TrailKind::WFence || (kind == TrailKind::NFence && rng() % 2 == 0);
    for (int i = 0; i < m; ++i) {
      bool down = tail_first ? i % 2 == 0 : i % 2 == 1;
      arcs.emplace_back(down ? std::make_pair(i, i + 1) : std::make_pair(i + 1, i));
    }
  }

  std::vector<int> vertex_map(vertex_count);
  for (int v = 0; v < vertex_count; ++v) vertex_map[v] = v;
  std::shuffle(vertex_map.begin(), vertex_map.end(), rng);
  std::shuffle(arcs.begin(), arcs.end(), rng);

  TrailFixture fixture;
  fixture.expected_kind = kind;
  fixture.length = m;
  fixture.graph.vertex_count = vertex_count;
  for (auto [t, h] : arcs) fixture.graph.arcs.emplace_back(vertex_map[t], vertex_map[h]);
  for (int a = 0; a < m; ++a) {
    Rational w(1 + static_cast<long>(rng() % 64), 64);
    w.canonicalize();
    fixture.weights.push_back(std::move(w));
  }
  return fixture;
}

}  // namespace zigzag::testing
