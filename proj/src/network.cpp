#include "zigzag/network.hpp"

#include <map>
#include <queue>
#include <sstream>
#include <unordered_map>
#include <utility>

namespace zigzag {

Digraph RawNetwork::digraph() const {
  Digraph g;
  g.vertex_count = static_cast<int>(labels.size());
  g.arcs.reserve(arcs.size());
  for (const auto& a : arcs) g.arcs.emplace_back(a.tail, a.head);
  return g;
}

Digraph PhyloNetwork::digraph() const {
  Digraph g;
  g.vertex_count = vertex_count();
  g.arcs.reserve(arcs_.size());
  for (const auto& a : arcs_) g.arcs.emplace_back(a.tail, a.head);
  return g;
}

std::string ValidationReport::to_string() const {
  std::ostringstream os;
  for (const auto& issue : issues) {
    os << "structural violation: " << issue.clause;
    if (!issue.detail.empty()) os << ": " << issue.detail;
    os << '\n';
  }
  return os.str();
}

namespace {

bool is_acyclic(const Digraph& g) {
  std::vector<int> indeg(g.vertex_count, 0);
  for (const auto& [t, h] : g.arcs) indeg[h]++;
  std::queue<int> q;
  for (int v = 0; v < g.vertex_count; ++v)
    if (indeg[v] == 0) q.push(v);
  auto out = g.out_arcs();
  int seen = 0;
  while (!q.empty()) {
    int v = q.front();
    q.pop();
    ++seen;
    for (int a : out[v])
      if (--indeg[g.head(a)] == 0) q.push(g.head(a));
  }
  return seen == g.vertex_count;
}

}  // namespace

ValidationReport validate(const RawNetwork& raw) {
  ValidationReport report;
  const int n = static_cast<int>(raw.labels.size());
  if (n == 0 || raw.arcs.empty()) {
    report.issues.push_back({"non-empty", "network has no arcs"});
    return report;
  }
  std::vector<int> indeg(n, 0), outdeg(n, 0);
  for (const auto& a : raw.arcs) {
    outdeg[a.tail]++;
    indeg[a.head]++;
  }

  std::vector<int> roots;
  for (int v = 0; v < n; ++v)
    if (indeg[v] == 0) roots.push_back(v);
  if (roots.size() != 1) {
    std::ostringstream os;
    os << roots.size() << " vertices of in-degree 0";
    report.issues.push_back({"unique root", os.str()});
  } else {
    int r = roots[0];
    if (outdeg[r] != 1 && outdeg[r] != 2) {
      report.issues.push_back(
          {"root out-degree", "root " + raw.labels[r] + " has out-degree " + std::to_string(outdeg[r])});
    }
  }

  int leaf_count = 0;
  for (int v = 0; v < n; ++v) {
    if (indeg[v] == 0) continue;  // covered by the root clauses
    if (indeg[v] == 1 && outdeg[v] == 0) {
      ++leaf_count;
      continue;
    }
    bool tree_vertex = indeg[v] == 1 && outdeg[v] == 2;
    bool reticulation = indeg[v] == 2 && outdeg[v] == 1;
    if (!tree_vertex && !reticulation) {
      std::ostringstream os;
      os << "vertex " << raw.labels[v] << " has degrees (" << indeg[v] << "," << outdeg[v] << ")";
      report.issues.push_back({"vertex degrees", os.str()});
    }
  }
  if (leaf_count == 0) report.issues.push_back({"leaf set non-empty", "no vertex of degree (1,0)"});

  if (!is_acyclic(raw.digraph())) report.issues.push_back({"acyclicity", "directed cycle detected"});
  return report;
}

PhyloNetwork PhyloNetwork::from_raw(RawNetwork raw) {
  ValidationReport report = validate(raw);
  if (!report.ok()) throw NetworkError(report.to_string());

  // Renumber vertices by first appearance in the arc list so the same
  // document always yields the same ids regardless of how it was built.
  std::vector<int> remap(raw.labels.size(), -1);
  std::vector<std::string> labels;
  labels.reserve(raw.labels.size());
  auto visit = [&](int v) {
    if (remap[v] < 0) {
      remap[v] = static_cast<int>(labels.size());
      labels.push_back(raw.labels[v]);
    }
  };
  for (auto& a : raw.arcs) {
    visit(a.tail);
    visit(a.head);
  }
  for (auto& a : raw.arcs) {
    a.tail = remap[a.tail];
    a.head = remap[a.head];
  }

  PhyloNetwork net;
  net.labels_ = std::move(labels);
  net.arcs_ = std::move(raw.arcs);
  std::vector<int> indeg(net.labels_.size(), 0), outdeg(net.labels_.size(), 0);
  for (const auto& a : net.arcs_) {
    outdeg[a.tail]++;
    indeg[a.head]++;
  }
  for (int v = 0; v < net.vertex_count(); ++v) {
    if (indeg[v] == 0) net.root_ = v;
    if (indeg[v] == 1 && outdeg[v] == 0) net.leaves_.push_back(v);
  }
  return net;
}

RawNetwork parse_raw(const std::string& text) {
  RawNetwork raw;
  std::unordered_map<std::string, int> vertex_ids;
  std::map<std::pair<int, int>, int> seen_arcs;  // (tail, head) -> first line
  auto intern = [&](const std::string& label) {
    auto [it, inserted] = vertex_ids.emplace(label, static_cast<int>(raw.labels.size()));
    if (inserted) raw.labels.push_back(label);
    return it->second;
  };

  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    auto hash = line.find('#');
    if (hash != std::string::npos) line.erase(hash);
    std::istringstream ls(line);
    std::string tail_label, head_label, weight_text, extra;
    if (!(ls >> tail_label)) continue;  // blank line
    if (!(ls >> head_label >> weight_text)) {
      throw NetworkError("line " + std::to_string(lineno) + ": expected `tail head weight`");
    }
    if (ls >> extra) {
      throw NetworkError("line " + std::to_string(lineno) + ": trailing token `" + extra + "`");
    }
    int tail = intern(tail_label);
    int head = intern(head_label);
    if (tail == head) {
      throw NetworkError("line " + std::to_string(lineno) + ": self-loop at " + tail_label);
    }
    auto [it, inserted] = seen_arcs.emplace(std::make_pair(tail, head), lineno);
    if (!inserted) {
      throw NetworkError("line " + std::to_string(lineno) + ": duplicate arc " + tail_label + " -> " +
                         head_label + " (first on line " + std::to_string(it->second) + ")");
    }
    Rational w;
    try {
      w = parse_weight(weight_text);
    } catch (const std::invalid_argument& e) {
      throw NetworkError("line " + std::to_string(lineno) + ": " + e.what());
    }
    raw.arcs.push_back({tail, head, w});
  }
  return raw;
}

PhyloNetwork parse_network(const std::string& text) {
  return PhyloNetwork::from_raw(parse_raw(text));
}

std::string serialize(const PhyloNetwork& net) {
  std::ostringstream os;
  for (const auto& a : net.arcs()) {
    os << net.label(a.tail) << ' ' << net.label(a.head) << ' ' << to_fraction_string(a.weight) << '\n';
  }
  return os.str();
}

}  // namespace zigzag
