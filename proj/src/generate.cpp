#include <random>
#include <stdexcept>
#include <string>
#include <vector>

#include "zigzag/network.hpp"

namespace zigzag {

namespace {

// Bounded draw that only depends on the mt19937_64 stream, so documents
// are byte-for-byte reproducible for a fixed seed.
std::uint64_t draw(std::mt19937_64& rng, std::uint64_t n) { return rng() % n; }

struct Builder {
  std::vector<std::string> labels;
  std::vector<std::pair<int, int>> arcs;
  std::vector<char> on_tree_path;
  int internal_counter = 0;

  int add_vertex(const std::string& label) {
    labels.push_back(label);
    return static_cast<int>(labels.size()) - 1;
  }
  int fresh_internal() { return add_vertex("v" + std::to_string(++internal_counter)); }
  int add_arc(int tail, int head, bool tree_path) {
    arcs.emplace_back(tail, head);
    on_tree_path.push_back(tree_path ? 1 : 0);
    return static_cast<int>(arcs.size()) - 1;
  }
  // Splits arc a at a fresh vertex; the first half stays at index a, the
  // second half is appended. Both halves inherit the tree-path flag.
  int subdivide(int a) {
    int w = fresh_internal();
    int head = arcs[a].second;
    arcs[a].second = w;
    add_arc(w, head, on_tree_path[a]);
    return w;
  }
  bool reaches(int from, int to) const {
    if (from == to) return true;
    std::vector<std::vector<int>> out(labels.size());
    for (const auto& [t, h] : arcs) out[t].push_back(h);
    std::vector<char> seen(labels.size(), 0);
    std::vector<int> stack{from};
    seen[from] = 1;
    while (!stack.empty()) {
      int v = stack.back();
      stack.pop_back();
      for (int h : out[v]) {
        if (h == to) return true;
        if (!seen[h]) {
          seen[h] = 1;
          stack.push_back(h);
        }
      }
    }
    return false;
  }
};

}  // namespace

GeneratedNetwork generate_random_with_tree(int leaf_count, int extra_arcs, std::uint64_t seed) {
  if (leaf_count < 2) throw std::invalid_argument("leaf_count must be at least 2");
  if (extra_arcs < 0) throw std::invalid_argument("extra_arcs must be non-negative");
  std::mt19937_64 rng(seed);
  Builder b;

  int root = b.add_vertex("r");
  b.add_arc(root, b.add_vertex("x1"), true);
  b.add_arc(root, b.add_vertex("x2"), true);
  for (int leaf = 3; leaf <= leaf_count; ++leaf) {
    int a = static_cast<int>(draw(rng, b.arcs.size()));
    int w = b.subdivide(a);
    b.add_arc(w, b.add_vertex("x" + std::to_string(leaf)), true);
  }

  std::vector<int> tree_arcs;
  for (int added = 0; added < extra_arcs; ++added) {
    tree_arcs.clear();
    for (int a = 0; a < static_cast<int>(b.arcs.size()); ++a)
      if (b.on_tree_path[a]) tree_arcs.push_back(a);
    for (int attempt = 0;; ++attempt) {
      if (attempt > 100000) throw std::logic_error("no acyclic insertion point found");
      int a1 = tree_arcs[draw(rng, tree_arcs.size())];
      int a2 = tree_arcs[draw(rng, tree_arcs.size())];
      if (a1 == a2) continue;
      // Connecting a point on a1 to a point on a2 closes a cycle exactly
      // when a2's head already reaches a1's tail.
      if (b.reaches(b.arcs[a2].second, b.arcs[a1].first)) continue;
      int w1 = b.subdivide(a1);
      int w2 = b.subdivide(a2);
      b.add_arc(w1, w2, false);
      break;
    }
  }

  RawNetwork raw;
  raw.labels = b.labels;
  raw.arcs.reserve(b.arcs.size());
  for (const auto& [t, h] : b.arcs) {
    Rational w(1 + static_cast<long>(draw(rng, 64)), 64);
    w.canonicalize();
    raw.arcs.push_back({t, h, w});
  }

  GeneratedNetwork result{PhyloNetwork::from_raw(std::move(raw)), {}};
  for (int a = 0; a < static_cast<int>(b.arcs.size()); ++a)
    if (b.on_tree_path[a]) result.planted_tree_arcs.push_back(a);
  return result;
}

PhyloNetwork generate_random(int leaf_count, int extra_arcs, std::uint64_t seed) {
  return generate_random_with_tree(leaf_count, extra_arcs, seed).network;
}

}  // namespace zigzag
