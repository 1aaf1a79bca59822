#include "zigzag/ranking.hpp"

#include <algorithm>
#include <sstream>

namespace zigzag {

int first_above_one(const RankVector& r) {
  for (int i = 0; i < static_cast<int>(r.size()); ++i)
    if (r[i] > 1) return i;
  return static_cast<int>(r.size());
}

RankVector parent(const RankVector& r) {
  int i = first_above_one(r);
  if (i == static_cast<int>(r.size())) throw std::invalid_argument("the all-ones vector has no parent");
  RankVector p = r;
  p[i] -= 1;
  return p;
}

SupportTreeRanking SupportTreeRanking::build(const PhyloNetwork& net) {
  SupportTreeRanking ranking;
  ranking.decomp_ = decompose(net);

  std::vector<Rational> weights;
  weights.reserve(net.arc_count());
  for (const auto& a : net.arcs()) weights.push_back(a.weight);

  const int d = ranking.decomp_.trail_count();
  ranking.rankings_.resize(d);
  ranking.step_ratios_.resize(d);
  ranking.family_size_.assign(d, 0);
  ranking.base_likelihood_ = 1;

  for (int i = 0; i < d; ++i) {
    const ZigzagTrail& trail = ranking.decomp_.trails[i];
    if (trail.kind == TrailKind::WFence) {
      ranking.wfences_.push_back(i);
      continue;
    }
    LocalRanking local = build_local_ranking(trail, weights);
    ranking.family_size_[i] = static_cast<std::uint32_t>(local.size());
    if (local.size() >= 2) {
      ranking.live_.push_back(i);
      auto& ratios = ranking.step_ratios_[i];
      ratios.reserve(local.size() - 1);
      for (int j = 0; j + 1 < local.size(); ++j) {
        Rational ratio = local.entries[j + 1].contribution / local.entries[j].contribution;
        ratios.push_back(std::move(ratio));
      }
    }
    ranking.base_likelihood_ *= local.entries.front().contribution;
    ranking.rankings_[i] = std::move(local);
  }
  return ranking;
}

void SupportTreeRanking::require_tree_based() const {
  if (tree_based()) return;
  const ZigzagTrail& trail = decomp_.trails[wfences_.front()];
  std::ostringstream os;
  os << "network is not tree-based: w-fence trail " << trail.trail_index << " with arcs";
  for (int a : trail.arcs) os << ' ' << a;
  throw NotTreeBasedError(os.str(), trail.arcs);
}

BigInt SupportTreeRanking::count() const {
  if (!tree_based()) return 0;
  BigInt total = 1;
  for (std::uint32_t t : family_size_) total *= t;
  return total;
}

bool SupportTreeRanking::count_at_least(std::uint64_t k) const {
  if (!tree_based()) return k == 0;
  BigInt total = 1;
  BigInt bound(std::to_string(k));
  for (std::uint32_t t : family_size_) {
    total *= t;
    if (total >= bound) return true;
  }
  return total >= bound;
}

int SupportTreeRanking::child_star_index(const RankVector& r) const {
  const int d = trail_count();
  const int id0 = first_above_one(r);
  const int lim = id0 == d ? d - 1 : id0;
  int best = -1;
  const Rational* best_ratio = nullptr;
  for (int i : live_) {
    if (i > lim) break;
    const std::uint32_t rank = r[i];
    if (rank >= family_size_[i]) continue;
    const Rational& ratio = step_ratio(i, rank);
    // On equal ratios the later index wins: it yields the lex-smaller vector.
    if (best < 0 || cmp(ratio, *best_ratio) >= 0) {
      best = i;
      best_ratio = &ratio;
    }
  }
  return best;
}

int SupportTreeRanking::sibling_star_index(const RankVector& r) const {
  const int d = trail_count();
  const int i0 = first_above_one(r);
  if (i0 == d) throw std::invalid_argument("the all-ones vector has no siblings");
  const std::uint32_t parent_rank = r[i0] - 1;
  int idp = i0;
  if (parent_rank == 1) {
    idp = d;
    for (int j = i0 + 1; j < d; ++j) {
      if (r[j] > 1) {
        idp = j;
        break;
      }
    }
  }
  const int lim = idp == d ? d - 1 : idp;
  const Rational& ratio_self = step_ratio(i0, parent_rank);
  int best = -1;
  const Rational* best_ratio = nullptr;
  for (int i : live_) {
    if (i > lim) break;
    if (i == i0) continue;  // incrementing the parent here rebuilds r itself
    const std::uint32_t rank = r[i];  // parent(r) agrees with r away from i0
    if (rank >= family_size_[i]) continue;
    const Rational& ratio = step_ratio(i, rank);
    const int c = cmp(ratio, ratio_self);
    // Strictly after r: smaller ratio, or an equal ratio at an earlier
    // index (which makes the sibling lex-greater).
    if (!(c < 0 || (c == 0 && i < i0))) continue;
    if (best < 0 || cmp(ratio, *best_ratio) >= 0) {
      best = i;
      best_ratio = &ratio;
    }
  }
  return best;
}

std::optional<RankVector> SupportTreeRanking::child_star(const RankVector& r) const {
  int i = child_star_index(r);
  if (i < 0) return std::nullopt;
  RankVector child = r;
  child[i] += 1;
  return child;
}

std::optional<RankVector> SupportTreeRanking::sibling_star(const RankVector& r) const {
  int i = sibling_star_index(r);
  if (i < 0) return std::nullopt;
  RankVector sibling = r;
  sibling[first_above_one(r)] -= 1;
  sibling[i] += 1;
  return sibling;
}

Rational SupportTreeRanking::likelihood(const RankVector& r) const {
  Rational f = 1;
  for (int i = 0; i < trail_count(); ++i) f *= rankings_[i].entries[r[i] - 1].contribution;
  return f;
}

void SupportTreeRanking::arc_set_into(const RankVector& r, std::vector<int>& out) const {
  out.clear();
  for (int i = 0; i < trail_count(); ++i) {
    const ZigzagTrail& trail = decomp_.trails[i];
    const AdmissibleVector& bits = rankings_[i].entries[r[i] - 1].bits;
    for (int j = 0; j < trail.length(); ++j)
      if (bits[j]) out.push_back(trail.arcs[j]);
  }
  std::sort(out.begin(), out.end());
}

std::vector<int> SupportTreeRanking::arc_set(const RankVector& r) const {
  std::vector<int> out;
  arc_set_into(r, out);
  return out;
}

SupportTree SupportTreeRanking::materialize(const RankVector& r) const {
  SupportTree tree;
  tree.ranks = r;
  arc_set_into(r, tree.arcs);
  tree.likelihood = likelihood(r);
  return tree;
}

RankedEnumerator::RankedEnumerator(const SupportTreeRanking& ranking) : ranking_(&ranking) {
  ranking.require_tree_based();
  Node root;
  root.relative = 1;
  root.ranks = ranking.all_ones();
  push(std::move(root));
}

void RankedEnumerator::push(Node node) {
  heap_.push_back(std::move(node));
  std::push_heap(heap_.begin(), heap_.end(), ComesAfter{});
}

bool RankedEnumerator::next(SupportTree& out) {
  if (heap_.empty()) return false;
  std::pop_heap(heap_.begin(), heap_.end(), ComesAfter{});
  Node node = std::move(heap_.back());
  heap_.pop_back();

  last_child_.reset();
  last_sibling_.reset();

  const int ci = ranking_->child_star_index(node.ranks);
  if (ci >= 0) {
    Node child;
    child.relative = node.relative * ranking_->step_ratio(ci, node.ranks[ci]);
    child.ranks = node.ranks;
    child.ranks[ci] += 1;
    last_child_ = child.ranks;
    push(std::move(child));
  }
  const int i0 = first_above_one(node.ranks);
  if (i0 < static_cast<int>(node.ranks.size())) {
    const int si = ranking_->sibling_star_index(node.ranks);
    if (si >= 0) {
      Node sibling;
      sibling.relative = node.relative / ranking_->step_ratio(i0, node.ranks[i0] - 1);
      sibling.relative *= ranking_->step_ratio(si, node.ranks[si]);
      sibling.ranks = node.ranks;
      sibling.ranks[i0] -= 1;
      sibling.ranks[si] += 1;
      last_sibling_ = sibling.ranks;
      push(std::move(sibling));
    }
  }

  ranking_->arc_set_into(node.ranks, out.arcs);
  out.likelihood = ranking_->base_likelihood() * node.relative;
  out.ranks = std::move(node.ranks);
  ++emitted_;
  return true;
}

std::vector<RankVector> RankedEnumerator::queue_ranks() const {
  std::vector<RankVector> ranks;
  ranks.reserve(heap_.size());
  for (const Node& n : heap_) ranks.push_back(n.ranks);
  std::sort(ranks.begin(), ranks.end());
  return ranks;
}

BigInt count_support_trees(const PhyloNetwork& net) {
  Decomposition decomp = decompose(net);
  if (!decomp.wfence_trails().empty()) return 0;
  BigInt total = 1;
  for (const auto& trail : decomp.trails) total *= local_family_size(trail);
  return total;
}

std::vector<SupportTree> top_k(const PhyloNetwork& net, std::uint64_t k) {
  SupportTreeRanking ranking = SupportTreeRanking::build(net);
  ranking.require_tree_based();
  if (k == 0) throw std::out_of_range("k must be positive");
  if (!ranking.count_at_least(k)) throw std::out_of_range("k exceeds the number of support trees");
  std::vector<SupportTree> trees;
  trees.reserve(k);
  RankedEnumerator stream(ranking);
  SupportTree tree;
  for (std::uint64_t j = 0; j < k && stream.next(tree); ++j) trees.push_back(tree);
  return trees;
}

std::vector<SupportTree> enumerate_all(const PhyloNetwork& net) {
  SupportTreeRanking ranking = SupportTreeRanking::build(net);
  ranking.require_tree_based();
  std::vector<SupportTree> trees;
  RankedEnumerator stream(ranking);
  SupportTree tree;
  while (stream.next(tree)) trees.push_back(tree);
  return trees;
}

std::vector<TraceRow> trace_top_k(const SupportTreeRanking& ranking, std::uint64_t k) {
  std::vector<TraceRow> rows;
  RankedEnumerator stream(ranking);
  SupportTree tree;
  for (std::uint64_t j = 0; j < k; ++j) {
    TraceRow row;
    row.queue = stream.queue_ranks();
    if (!stream.next(tree)) break;
    row.emitted = tree.ranks;
    row.child = stream.last_child();
    row.sibling = stream.last_sibling();
    rows.push_back(std::move(row));
  }
  return rows;
}

}  // namespace zigzag
