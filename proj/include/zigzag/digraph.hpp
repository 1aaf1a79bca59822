#pragma once

#include <utility>
#include <vector>

namespace zigzag {

// Minimal arc-list view of a simple digraph. Arc indices are positions in
// `arcs`; this indexing is the canonical arc order everywhere downstream.
struct Digraph {
  int vertex_count = 0;
  std::vector<std::pair<int, int>> arcs;  // (tail, head)

  int tail(int a) const { return arcs[a].first; }
  int head(int a) const { return arcs[a].second; }
  int arc_count() const { return static_cast<int>(arcs.size()); }

  std::vector<std::vector<int>> in_arcs() const {
    std::vector<std::vector<int>> in(vertex_count);
    for (int a = 0; a < arc_count(); ++a) in[arcs[a].second].push_back(a);
    return in;
  }
  std::vector<std::vector<int>> out_arcs() const {
    std::vector<std::vector<int>> out(vertex_count);
    for (int a = 0; a < arc_count(); ++a) out[arcs[a].first].push_back(a);
    return out;
  }
};

}  // namespace zigzag
