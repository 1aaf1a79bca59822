#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <vector>

#include "zigzag/decomposition.hpp"
#include "zigzag/local_ranking.hpp"
#include "zigzag/network.hpp"
#include "zigzag/rational.hpp"

namespace zigzag {

// One local rank number per trail (1-based), in canonical trail order.
// Singleton trails always carry rank 1.
using RankVector = std::vector<std::uint32_t>;

struct SupportTree {
  RankVector ranks;
  std::vector<int> arcs;  // sorted ascending
  Rational likelihood;
};

class NotTreeBasedError : public std::runtime_error {
 public:
  NotTreeBasedError(std::string what, std::vector<int> wfence_arcs)
      : std::runtime_error(std::move(what)), wfence_arcs_(std::move(wfence_arcs)) {}
  const std::vector<int>& wfence_arcs() const { return wfence_arcs_; }

 private:
  std::vector<int> wfence_arcs_;
};

// 0-based index of the first component above 1, or r.size() if none.
int first_above_one(const RankVector& r);

// The unique predecessor in the search tree over rank vectors: decrement
// the first component above 1. Throws std::invalid_argument on all-ones.
RankVector parent(const RankVector& r);

// Preprocessed ranking state for one network: the trail decomposition,
// every local ranking, and the per-rank likelihood step ratios used by the
// enumerator. Immutable once built.
class SupportTreeRanking {
 public:
  static SupportTreeRanking build(const PhyloNetwork& net);

  const Decomposition& decomposition() const { return decomp_; }
  const LocalRanking& local_ranking(int trail) const { return rankings_[trail]; }
  int trail_count() const { return decomp_.trail_count(); }
  std::uint32_t family_size(int trail) const { return family_size_[trail]; }
  bool tree_based() const { return wfences_.empty(); }
  // Likelihood of the rank-1 tree; every other likelihood is this times
  // the node's relative factor.
  const Rational& base_likelihood() const { return base_likelihood_; }

  BigInt count() const;
  bool count_at_least(std::uint64_t k) const;

  RankVector all_ones() const { return RankVector(trail_count(), 1); }

  // contribution(rank+1) / contribution(rank) within one trail's local
  // ranking; valid for rank in [1, family_size-1].
  const Rational& step_ratio(int trail, std::uint32_t rank) const {
    return step_ratios_[trail][rank - 1];
  }

  // Least child of r in the search tree: the best single increment among
  // positions up to the first component above 1. Returns the trail index
  // to increment, or -1 when r has no children.
  int child_star_index(const RankVector& r) const;
  // Least sibling of r strictly after it in the ranking order, as the
  // trail index where it differs from parent(r); -1 when none.
  int sibling_star_index(const RankVector& r) const;

  std::optional<RankVector> child_star(const RankVector& r) const;
  std::optional<RankVector> sibling_star(const RankVector& r) const;

  Rational likelihood(const RankVector& r) const;
  std::vector<int> arc_set(const RankVector& r) const;
  void arc_set_into(const RankVector& r, std::vector<int>& out) const;
  SupportTree materialize(const RankVector& r) const;

  // Throws NotTreeBasedError naming the first w-fence's arcs.
  void require_tree_based() const;

 private:
  SupportTreeRanking() = default;

  Decomposition decomp_;
  std::vector<LocalRanking> rankings_;
  std::vector<std::vector<Rational>> step_ratios_;
  std::vector<std::uint32_t> family_size_;
  std::vector<int> live_;     // trails with at least two admissible vectors
  std::vector<int> wfences_;  // trail indices
  Rational base_likelihood_;
};

// Streams support trees in ranking order: likelihood non-increasing, ties
// in ascending lexicographic rank-vector order. The candidate queue grows
// by at most one element per emission. Single consumer; the ranking must
// outlive the enumerator.
class RankedEnumerator {
 public:
  explicit RankedEnumerator(const SupportTreeRanking& ranking);

  // Fills `out` (reusing its buffers) and returns true, or returns false
  // once every support tree has been emitted.
  bool next(SupportTree& out);

  std::size_t emitted() const { return emitted_; }
  std::size_t queue_size() const { return heap_.size(); }
  // Snapshot of the queued rank vectors, sorted lexicographically.
  std::vector<RankVector> queue_ranks() const;
  // The vectors inserted by the most recent emission, if any.
  const std::optional<RankVector>& last_child() const { return last_child_; }
  const std::optional<RankVector>& last_sibling() const { return last_sibling_; }

 private:
  struct Node {
    Rational relative;  // likelihood / base_likelihood
    RankVector ranks;
  };
  struct ComesAfter {
    bool operator()(const Node& x, const Node& y) const {
      int c = cmp(x.relative, y.relative);
      if (c != 0) return c < 0;
      return y.ranks < x.ranks;
    }
  };

  void push(Node node);

  const SupportTreeRanking* ranking_;
  std::vector<Node> heap_;  // binary heap, earliest element at the front
  std::size_t emitted_ = 0;
  std::optional<RankVector> last_child_;
  std::optional<RankVector> last_sibling_;
};

// 0 when some trail is a w-fence, otherwise the product of the local
// family sizes.
BigInt count_support_trees(const PhyloNetwork& net);

// The first k support trees in ranking order. Throws NotTreeBasedError,
// or std::out_of_range when k is 0 or exceeds the number of support trees.
std::vector<SupportTree> top_k(const PhyloNetwork& net, std::uint64_t k);

// Every support tree in ranking order.
std::vector<SupportTree> enumerate_all(const PhyloNetwork& net);

struct TraceRow {
  std::vector<RankVector> queue;  // queue contents before the emission, sorted
  RankVector emitted;
  std::optional<RankVector> child;
  std::optional<RankVector> sibling;
};

// Step-by-step record of the first k emissions; for tests and debugging.
std::vector<TraceRow> trace_top_k(const SupportTreeRanking& ranking, std::uint64_t k);

}  // namespace zigzag
