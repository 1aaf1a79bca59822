#pragma once

#include <string>
#include <vector>

#include "zigzag/digraph.hpp"
#include "zigzag/network.hpp"

namespace zigzag {

enum class TrailKind { Crown, MFence, NFence, WFence };

const char* to_string(TrailKind kind);

// A maximal zig-zag trail in canonical orientation: consecutive arcs
// alternately share a head and a tail. Canonical orientation: an N-fence
// starts at the terminal arc whose outer endpoint is a tail; an M- or
// W-fence starts at the terminal arc with the smaller arc index; a crown
// starts at its smallest arc index and proceeds toward the neighbor
// sharing that arc's head.
struct ZigzagTrail {
  std::vector<int> arcs;  // canonical arc sequence (global arc indices)
  TrailKind kind = TrailKind::NFence;
  int trail_index = -1;

  int length() const { return static_cast<int>(arcs.size()); }
  int min_arc() const;
};

struct Decomposition {
  std::vector<ZigzagTrail> trails;  // sorted by minimum arc index

  int trail_count() const { return static_cast<int>(trails.size()); }
  // Indices of W-fence trails; the network is tree-based iff this is empty.
  std::vector<int> wfence_trails() const;
};

// Partitions the arc set into maximal zig-zag trails. Each arc has at most
// one partner through its head (the other arc into a shared in-degree-2
// head) and at most one through its tail; trails are the chains and cycles
// of this partner relation. Requires in- and out-degrees at most 2.
Decomposition decompose(const Digraph& graph);
Decomposition decompose(const PhyloNetwork& net);

bool is_tree_based(const PhyloNetwork& net);

}  // namespace zigzag
