#include "zigzag/decomposition.hpp"

#include <algorithm>
#include <stdexcept>

namespace zigzag {

const char* to_string(TrailKind kind) {
  switch (kind) {
    case TrailKind::Crown: return "crown";
    case TrailKind::MFence: return "m-fence";
    case TrailKind::NFence: return "n-fence";
    case TrailKind::WFence: return "w-fence";
  }
  return "?";
}

int ZigzagTrail::min_arc() const { return *std::min_element(arcs.begin(), arcs.end()); }

std::vector<int> Decomposition::wfence_trails() const {
  std::vector<int> result;
  for (const auto& t : trails)
    if (t.kind == TrailKind::WFence) result.push_back(t.trail_index);
  return result;
}

namespace {

struct Partners {
  std::vector<int> via_head;  // arc -> the other arc into the shared head, or -1
  std::vector<int> via_tail;  // arc -> the other arc out of the shared tail, or -1
};

Partners build_partners(const Digraph& g) {
  Partners p;
  p.via_head.assign(g.arc_count(), -1);
  p.via_tail.assign(g.arc_count(), -1);
  auto in = g.in_arcs();
  auto out = g.out_arcs();
  for (int v = 0; v < g.vertex_count; ++v) {
    if (in[v].size() > 2 || out[v].size() > 2)
      throw std::invalid_argument("decompose requires in- and out-degrees at most 2");
    if (in[v].size() == 2) {
      if (g.tail(in[v][0]) == g.tail(in[v][1]))
        throw std::invalid_argument("decompose requires a simple digraph (parallel arcs)");
      p.via_head[in[v][0]] = in[v][1];
      p.via_head[in[v][1]] = in[v][0];
    }
    if (out[v].size() == 2) {
      p.via_tail[out[v][0]] = out[v][1];
      p.via_tail[out[v][1]] = out[v][0];
    }
  }
  return p;
}

int degree(const Partners& p, int a) {
  return (p.via_head[a] >= 0 ? 1 : 0) + (p.via_tail[a] >= 0 ? 1 : 0);
}

// Walks a chain or cycle from `start`, first moving through `first_next`.
// Stops at a dead end or when the walk returns to `start`.
std::vector<int> walk(const Partners& p, int start, int first_next) {
  std::vector<int> seq{start};
  int prev = start;
  int cur = first_next;
  while (cur >= 0 && cur != start) {
    seq.push_back(cur);
    int h = p.via_head[cur];
    int t = p.via_tail[cur];
    int next = (h == prev) ? t : h;
    prev = cur;
    cur = next;
  }
  return seq;
}

// The endpoint of a terminal arc not shared with its neighbor; for a
// single-arc trail the choice is by `at_front`.
bool outer_end_is_tail(const Digraph& g, const std::vector<int>& seq, bool front) {
  int a = front ? seq.front() : seq.back();
  if (seq.size() == 1) return true;  // oriented tail-first by convention
  int b = front ? seq[1] : seq[seq.size() - 2];
  // The shared vertex is a head iff the two arcs have equal heads.
  bool shared_is_head = g.head(a) == g.head(b);
  return shared_is_head;  // inner end is the head, so the outer end is the tail
}

ZigzagTrail orient_fence(const Digraph& g, std::vector<int> seq) {
  ZigzagTrail trail;
  const int m = static_cast<int>(seq.size());
  bool front_tail = outer_end_is_tail(g, seq, true);
  bool back_tail = outer_end_is_tail(g, seq, false);
  if (m % 2 == 1) {
    trail.kind = TrailKind::NFence;
    if (m > 1 && !front_tail) std::reverse(seq.begin(), seq.end());
  } else {
    if (front_tail != back_tail) throw std::logic_error("even fence with mixed terminal ends");
    trail.kind = front_tail ? TrailKind::WFence : TrailKind::MFence;
    if (seq.back() < seq.front()) std::reverse(seq.begin(), seq.end());
  }
  trail.arcs = std::move(seq);
  return trail;
}

ZigzagTrail orient_crown(const Partners& p, std::vector<int> cycle) {
  ZigzagTrail trail;
  trail.kind = TrailKind::Crown;
  int start = *std::min_element(cycle.begin(), cycle.end());
  trail.arcs = walk(p, start, p.via_head[start]);
  return trail;
}

}  // namespace

Decomposition decompose(const Digraph& g) {
  Partners partners = build_partners(g);
  std::vector<char> visited(g.arc_count(), 0);
  Decomposition result;

  // Chains first: start from every arc with fewer than two partners.
  for (int a = 0; a < g.arc_count(); ++a) {
    if (visited[a] || degree(partners, a) == 2) continue;
    int next = partners.via_head[a] >= 0 ? partners.via_head[a] : partners.via_tail[a];
    std::vector<int> seq = walk(partners, a, next);
    for (int arc : seq) visited[arc] = 1;
    result.trails.push_back(orient_fence(g, std::move(seq)));
  }
  // Remaining arcs all sit on cycles.
  for (int a = 0; a < g.arc_count(); ++a) {
    if (visited[a]) continue;
    std::vector<int> cycle = walk(partners, a, partners.via_head[a]);
    for (int arc : cycle) visited[arc] = 1;
    result.trails.push_back(orient_crown(partners, std::move(cycle)));
  }

  std::sort(result.trails.begin(), result.trails.end(),
            [](const ZigzagTrail& x, const ZigzagTrail& y) { return x.min_arc() < y.min_arc(); });
  for (int i = 0; i < result.trail_count(); ++i) result.trails[i].trail_index = i;
  return result;
}

Decomposition decompose(const PhyloNetwork& net) { return decompose(net.digraph()); }

bool is_tree_based(const PhyloNetwork& net) {
  return decompose(net).wfence_trails().empty();
}

}  // namespace zigzag
