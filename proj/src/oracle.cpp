#include "zigzag/oracle.hpp"

#include <algorithm>
#include <bit>
#include <sstream>
#include <stdexcept>

#include "zigzag/decomposition.hpp"

namespace zigzag::oracle {

const char* to_string(Condition c) {
  switch (c) {
    case Condition::ForcedArc: return "forced-arc";
    case Condition::HeadExactlyOne: return "head-exactly-one";
    case Condition::TailAtLeastOne: return "tail-at-least-one";
  }
  return "?";
}

std::vector<Condition> AdmissibilityReport::violated_conditions() const {
  std::vector<Condition> conditions;
  for (const auto& v : violations)
    if (std::find(conditions.begin(), conditions.end(), v.condition) == conditions.end())
      conditions.push_back(v.condition);
  return conditions;
}

std::string AdmissibilityReport::to_string(const PhyloNetwork* net) const {
  std::ostringstream os;
  if (admissible()) {
    os << "admissible\n";
    return os.str();
  }
  for (const auto& v : violations) {
    os << "violation: " << oracle::to_string(v.condition);
    if (v.condition == Condition::ForcedArc) {
      os << ": arc " << v.arc << " must be selected";
    } else if (v.vertex >= 0) {
      os << " at vertex " << (net ? net->label(v.vertex) : std::to_string(v.vertex));
    }
    os << '\n';
  }
  return os.str();
}

AdmissibilityReport check_admissible(const Digraph& graph, std::vector<int> subset) {
  std::sort(subset.begin(), subset.end());
  AdmissibilityReport report;
  report.subset = subset;

  std::vector<char> selected(graph.arc_count(), 0);
  for (int a : subset) selected[a] = 1;

  std::vector<int> indeg(graph.vertex_count, 0), outdeg(graph.vertex_count, 0);
  for (int a = 0; a < graph.arc_count(); ++a) {
    outdeg[graph.tail(a)]++;
    indeg[graph.head(a)]++;
  }

  for (int a = 0; a < graph.arc_count(); ++a) {
    bool forced = indeg[graph.head(a)] == 1 || outdeg[graph.tail(a)] == 1;
    if (forced && !selected[a])
      report.violations.push_back({Condition::ForcedArc, graph.head(a), a});
  }

  std::vector<int> selected_in(graph.vertex_count, 0), selected_out(graph.vertex_count, 0);
  for (int a = 0; a < graph.arc_count(); ++a) {
    if (!selected[a]) continue;
    selected_in[graph.head(a)]++;
    selected_out[graph.tail(a)]++;
  }
  for (int v = 0; v < graph.vertex_count; ++v) {
    if (indeg[v] >= 2 && selected_in[v] != 1)
      report.violations.push_back({Condition::HeadExactlyOne, v, -1});
    if (outdeg[v] >= 2 && selected_out[v] < 1)
      report.violations.push_back({Condition::TailAtLeastOne, v, -1});
  }
  return report;
}

std::vector<AdmissibleVector> local_family(const Digraph& graph, const std::vector<int>& trail_arcs,
                                           int cap) {
  const int m = static_cast<int>(trail_arcs.size());
  if (m > cap || m > 30) throw std::length_error("trail exceeds the brute-force cap");

  Digraph sub;
  sub.vertex_count = graph.vertex_count;
  for (int a : trail_arcs) sub.arcs.push_back(graph.arcs[a]);

  // Precompute the three conditions as bit masks over arc positions so the
  // 2^m scan stays cheap; accepted patterns are re-verified below.
  std::vector<std::uint32_t> in_mask(sub.vertex_count, 0), out_mask(sub.vertex_count, 0);
  for (int j = 0; j < m; ++j) {
    in_mask[sub.head(j)] |= 1u << j;
    out_mask[sub.tail(j)] |= 1u << j;
  }
  std::uint32_t forced = 0;
  std::vector<std::uint32_t> head_masks, tail_masks;
  for (int v = 0; v < sub.vertex_count; ++v) {
    if (std::popcount(in_mask[v]) >= 2) head_masks.push_back(in_mask[v]);
    if (std::popcount(out_mask[v]) >= 2) tail_masks.push_back(out_mask[v]);
  }
  for (int j = 0; j < m; ++j)
    if (std::popcount(in_mask[sub.head(j)]) == 1 || std::popcount(out_mask[sub.tail(j)]) == 1)
      forced |= 1u << j;

  std::vector<AdmissibleVector> family;
  for (std::uint32_t mask = 0; mask < (1u << m); ++mask) {
    if ((mask & forced) != forced) continue;
    bool ok = true;
    for (std::uint32_t hm : head_masks)
      if (std::popcount(mask & hm) != 1) {
        ok = false;
        break;
      }
    if (!ok) continue;
    for (std::uint32_t tm : tail_masks)
      if ((mask & tm) == 0) {
        ok = false;
        break;
      }
    if (!ok) continue;
    std::vector<int> subset;
    for (int j = 0; j < m; ++j)
      if (mask & (1u << j)) subset.push_back(j);
    if (!check_admissible(sub, subset).admissible())
      throw std::logic_error("mask scan and condition check disagree");
    AdmissibleVector bits(m, 0);
    for (int j = 0; j < m; ++j) bits[j] = (mask >> j) & 1;
    family.push_back(std::move(bits));
  }
  return family;
}

namespace {

struct TrailFamily {
  const ZigzagTrail* trail;
  std::vector<AdmissibleVector> vectors;
};

std::vector<TrailFamily> per_trail_families(const PhyloNetwork& net, const Decomposition& decomp,
                                            int cap) {
  Digraph g = net.digraph();
  std::vector<TrailFamily> families;
  families.reserve(decomp.trail_count());
  for (const auto& trail : decomp.trails)
    families.push_back({&trail, local_family(g, trail.arcs, cap)});
  return families;
}

Rational direct_likelihood(const PhyloNetwork& net, const std::vector<int>& arcs) {
  Rational f = 1;
  for (int a : arcs) f *= net.arc(a).weight;
  return f;
}

}  // namespace

std::vector<std::pair<std::vector<int>, Rational>> support_trees(const PhyloNetwork& net, int cap) {
  if (net.arc_count() > cap) throw std::length_error("network exceeds the brute-force cap");
  Decomposition decomp = decompose(net);
  std::vector<TrailFamily> families = per_trail_families(net, decomp, cap);

  std::vector<std::pair<std::vector<int>, Rational>> result;
  for (const auto& f : families)
    if (f.vectors.empty()) return result;

  const int d = static_cast<int>(families.size());
  std::vector<std::size_t> choice(d, 0);
  while (true) {
    std::vector<int> arcs;
    for (int i = 0; i < d; ++i) {
      const auto& bits = families[i].vectors[choice[i]];
      for (int j = 0; j < families[i].trail->length(); ++j)
        if (bits[j]) arcs.push_back(families[i].trail->arcs[j]);
    }
    std::sort(arcs.begin(), arcs.end());
    Rational f = direct_likelihood(net, arcs);
    result.emplace_back(std::move(arcs), std::move(f));

    int i = d - 1;
    while (i >= 0 && choice[i] + 1 == families[i].vectors.size()) choice[i--] = 0;
    if (i < 0) break;
    choice[i]++;
  }
  return result;
}

std::vector<std::vector<int>> direct_support_tree_sets(const PhyloNetwork& net) {
  const int m = net.arc_count();
  if (m > 24) throw std::length_error("direct enumeration needs at most 24 arcs");
  Digraph g = net.digraph();

  // Same three conditions as check_admissible, evaluated over bit masks.
  std::vector<int> indeg(g.vertex_count, 0), outdeg(g.vertex_count, 0);
  for (int a = 0; a < m; ++a) {
    outdeg[g.tail(a)]++;
    indeg[g.head(a)]++;
  }
  std::uint32_t forced = 0;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> head_pairs, tail_pairs;
  {
    std::vector<std::vector<int>> in(g.vertex_count), out(g.vertex_count);
    for (int a = 0; a < m; ++a) {
      in[g.head(a)].push_back(a);
      out[g.tail(a)].push_back(a);
    }
    for (int a = 0; a < m; ++a)
      if (indeg[g.head(a)] == 1 || outdeg[g.tail(a)] == 1) forced |= 1u << a;
    for (int v = 0; v < g.vertex_count; ++v) {
      if (in[v].size() == 2) head_pairs.emplace_back(1u << in[v][0], 1u << in[v][1]);
      if (out[v].size() == 2) tail_pairs.emplace_back(1u << out[v][0], 1u << out[v][1]);
    }
  }

  std::vector<std::vector<int>> sets;
  const std::uint32_t end = m == 24 ? 0xFFFFFFu + 1 : (1u << m);
  for (std::uint32_t mask = 0; mask < end; ++mask) {
    if ((mask & forced) != forced) continue;
    bool ok = true;
    for (const auto& [x, y] : head_pairs) {
      if (((mask & x) != 0) == ((mask & y) != 0)) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    for (const auto& [x, y] : tail_pairs) {
      if ((mask & (x | y)) == 0) {
        ok = false;
        break;
      }
    }
    if (!ok) continue;
    std::vector<int> arcs;
    for (int a = 0; a < m; ++a)
      if (mask & (1u << a)) arcs.push_back(a);
    sets.push_back(std::move(arcs));
  }
  std::sort(sets.begin(), sets.end());
  return sets;
}

std::vector<SupportTree> ranked_support_trees(const PhyloNetwork& net, std::uint64_t k, int cap) {
  if (net.arc_count() > cap) throw std::length_error("network exceeds the brute-force cap");
  Decomposition decomp = decompose(net);
  std::vector<TrailFamily> families = per_trail_families(net, decomp, cap);

  // Sort each family by (contribution desc, bits lex asc) to obtain the
  // local rank numbers.
  struct RankedVector {
    AdmissibleVector bits;
    Rational contribution;
  };
  std::vector<std::vector<RankedVector>> locals(families.size());
  for (std::size_t i = 0; i < families.size(); ++i) {
    if (families[i].vectors.empty()) {
      if (k == 0) return {};
      throw std::out_of_range("k exceeds the number of support trees");
    }
    for (const auto& bits : families[i].vectors) {
      Rational c = 1;
      for (int j = 0; j < families[i].trail->length(); ++j)
        if (bits[j]) c *= net.arc(families[i].trail->arcs[j]).weight;
      locals[i].push_back({bits, std::move(c)});
    }
    std::sort(locals[i].begin(), locals[i].end(), [](const RankedVector& x, const RankedVector& y) {
      int c = cmp(x.contribution, y.contribution);
      if (c != 0) return c > 0;
      return x.bits < y.bits;
    });
  }

  const int d = static_cast<int>(families.size());
  std::vector<SupportTree> trees;
  RankVector choice(d, 1);
  while (true) {
    SupportTree tree;
    tree.ranks = choice;
    for (int i = 0; i < d; ++i) {
      const auto& bits = locals[i][choice[i] - 1].bits;
      for (int j = 0; j < families[i].trail->length(); ++j)
        if (bits[j]) tree.arcs.push_back(families[i].trail->arcs[j]);
    }
    std::sort(tree.arcs.begin(), tree.arcs.end());
    tree.likelihood = direct_likelihood(net, tree.arcs);
    trees.push_back(std::move(tree));

    int i = d - 1;
    while (i >= 0 && choice[i] == locals[i].size()) choice[i--] = 1;
    if (i < 0) break;
    choice[i]++;
  }

  std::sort(trees.begin(), trees.end(), [](const SupportTree& x, const SupportTree& y) {
    int c = cmp(x.likelihood, y.likelihood);
    if (c != 0) return c > 0;
    return x.ranks < y.ranks;
  });
  if (k > trees.size()) throw std::out_of_range("k exceeds the number of support trees");
  trees.resize(k);
  return trees;
}

}  // namespace zigzag::oracle
