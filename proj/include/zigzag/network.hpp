#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "zigzag/digraph.hpp"
#include "zigzag/rational.hpp"

namespace zigzag {

// Thrown for malformed documents and for graphs that are not valid rooted
// binary phylogenetic networks.
class NetworkError : public std::runtime_error {
 public:
  explicit NetworkError(const std::string& what) : std::runtime_error(what) {}
};

struct WeightedArc {
  int tail = -1;
  int head = -1;
  Rational weight;

  bool operator==(const WeightedArc& o) const {
    return tail == o.tail && head == o.head && weight == o.weight;
  }
};

// A raw labeled arc list, prior to validation. This is what the parser
// produces and what `validate` inspects.
struct RawNetwork {
  std::vector<std::string> labels;  // vertex id -> label, ids dense by first appearance
  std::vector<WeightedArc> arcs;

  Digraph digraph() const;
};

struct ValidationIssue {
  std::string clause;  // e.g. "unique root", "vertex degrees", "acyclicity"
  std::string detail;
};

struct ValidationReport {
  std::vector<ValidationIssue> issues;
  bool ok() const { return issues.empty(); }
  std::string to_string() const;
};

// Checks every structural clause of the network definition: a unique
// in-degree-0 root with out-degree 1 or 2, every other vertex either a
// leaf (1,0), a tree vertex (1,2) or a reticulation (2,1), and acyclicity.
// Violations are collected, not thrown.
ValidationReport validate(const RawNetwork& raw);

// A validated weighted rooted binary phylogenetic network. Immutable after
// construction; safe to share between threads.
class PhyloNetwork {
 public:
  // Builds from a raw arc list; throws NetworkError naming every violated
  // clause if validate(raw) is non-empty.
  static PhyloNetwork from_raw(RawNetwork raw);

  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(int v) const { return labels_[v]; }
  const std::vector<WeightedArc>& arcs() const { return arcs_; }
  const WeightedArc& arc(int a) const { return arcs_[a]; }
  int vertex_count() const { return static_cast<int>(labels_.size()); }
  int arc_count() const { return static_cast<int>(arcs_.size()); }
  int root() const { return root_; }
  const std::vector<int>& leaves() const { return leaves_; }

  Digraph digraph() const;

  bool operator==(const PhyloNetwork& o) const {
    return labels_ == o.labels_ && arcs_ == o.arcs_;
  }

 private:
  PhyloNetwork() = default;
  std::vector<std::string> labels_;
  std::vector<WeightedArc> arcs_;
  int root_ = -1;
  std::vector<int> leaves_;
};

// Parses the line-oriented arc-list format: `tail_label head_label weight`
// per line, `#` comments, blank lines ignored. Vertex ids are assigned in
// order of first appearance; arc indices follow line order. Throws
// NetworkError with a line number on syntax errors, duplicate arcs,
// self-loops and bad weights, and with clause names on structural
// violations.
RawNetwork parse_raw(const std::string& text);
PhyloNetwork parse_network(const std::string& text);

// Emits arcs in canonical order with weights as exact fractions;
// parse_network(serialize(n)) == n.
std::string serialize(const PhyloNetwork& net);

// A network plus the arc set of the tree it was grown from. The planted
// arcs always form an admissible arc-set, so generated networks are
// tree-based by construction.
struct GeneratedNetwork {
  PhyloNetwork network;
  std::vector<int> planted_tree_arcs;
};

// Deterministically builds a random network: a random rooted binary tree
// on `leaf_count` leaves, then `extra_arcs` reticulation arcs, each added
// by subdividing two tree-path arcs and connecting the subdivision points
// without creating a cycle. Weights are uniform k/64, k in 1..64.
GeneratedNetwork generate_random_with_tree(int leaf_count, int extra_arcs, std::uint64_t seed);
PhyloNetwork generate_random(int leaf_count, int extra_arcs, std::uint64_t seed);

}  // namespace zigzag
