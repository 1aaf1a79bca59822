#pragma once

#include <cstdint>
#include <vector>

#include "zigzag/decomposition.hpp"
#include "zigzag/rational.hpp"

namespace zigzag {

// 0/1 selection over a trail's canonical arc sequence.
using AdmissibleVector = std::vector<std::uint8_t>;

struct LocalEntry {
  AdmissibleVector bits;
  Rational contribution;  // product of the selected arcs' weights
};

// The totally ordered family of admissible vectors of one trail:
// contribution strictly non-increasing, ties broken by ascending
// lexicographic order on the bit vectors.
struct LocalRanking {
  int trail_index = -1;
  std::vector<LocalEntry> entries;

  int size() const { return static_cast<int>(entries.size()); }
};

// 2 for a crown, 1 for an N-fence, m/2 for an M-fence with m arcs.
// Throws std::domain_error("no admissible arc-set") for a W-fence.
int local_family_size(const ZigzagTrail& trail);

// The admissible vectors of a trail in construction order (not ranked):
// a crown yields the two alternating selections, an N-fence its unique
// selection, an M-fence one vector per split point.
std::vector<AdmissibleVector> admissible_vectors(const ZigzagTrail& trail);

// Builds the complete local ranking. M-fence contributions are computed
// with the one-swap update: consecutive vectors differ by deselecting one
// arc and selecting its successor, so each value is the previous one
// times a single weight ratio. `arc_weights` is indexed by global arc id.
LocalRanking build_local_ranking(const ZigzagTrail& trail, const std::vector<Rational>& arc_weights);

// { trail.arcs[j] : bits[j] == 1 }, in trail sequence order.
std::vector<int> vector_to_arcs(const ZigzagTrail& trail, const AdmissibleVector& bits);

}  // namespace zigzag
