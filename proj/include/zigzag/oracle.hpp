#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "zigzag/digraph.hpp"
#include "zigzag/local_ranking.hpp"
#include "zigzag/network.hpp"
#include "zigzag/ranking.hpp"

namespace zigzag::oracle {

// Brute-force reference implementations used as ground truth in tests.
// Degree computation, admissibility checking, likelihood evaluation and
// sorting are all independent of the ranking engine; only the canonical
// trail decomposition is shared, because rank-vector coordinates are
// meaningless without it.

enum class Condition { ForcedArc, HeadExactlyOne, TailAtLeastOne };

const char* to_string(Condition c);

struct Violation {
  Condition condition;
  int vertex = -1;  // shared head/tail, or the forced arc's head/tail anchor
  int arc = -1;     // the missing forced arc, if condition == ForcedArc
};

struct AdmissibilityReport {
  std::vector<int> subset;  // sorted arc indices
  std::vector<Violation> violations;

  bool admissible() const { return violations.empty(); }
  std::vector<Condition> violated_conditions() const;
  std::string to_string(const PhyloNetwork* net = nullptr) const;
};

// Evaluates the three admissibility conditions against the given graph
// (which may be a trail subgraph): every arc out of an out-degree-1 tail
// or into an in-degree-1 head is selected; exactly one arc of each shared
// head pair is selected; at least one arc of each shared tail pair is.
AdmissibilityReport check_admissible(const Digraph& graph, std::vector<int> subset);

// All admissible selections of the subgraph induced by `trail_arcs`,
// found by testing every bit pattern. Vectors are aligned to the given
// arc order. `trail_arcs` must have at most `cap` arcs.
std::vector<AdmissibleVector> local_family(const Digraph& graph, const std::vector<int>& trail_arcs,
                                           int cap = 24);

// Every admissible arc-set of the network, as (sorted arc set, likelihood),
// built per trail and combined across trails. Order is deterministic but
// not ranked. Throws std::length_error above the cap.
std::vector<std::pair<std::vector<int>, Rational>> support_trees(const PhyloNetwork& net, int cap = 24);

// Every admissible arc-set found by filtering all 2^|A| arc subsets
// against the three conditions directly; sorted lexicographically.
// Requires at most 24 arcs (and is only sensible well below that).
std::vector<std::vector<int>> direct_support_tree_sets(const PhyloNetwork& net);

// The full ranking, sorted by likelihood descending with ascending
// lexicographic rank vectors as the tie-break, truncated to k.
std::vector<SupportTree> ranked_support_trees(const PhyloNetwork& net, std::uint64_t k, int cap = 24);

}  // namespace zigzag::oracle
