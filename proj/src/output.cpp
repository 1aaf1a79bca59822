#include "zigzag/output.hpp"

#include <nlohmann/json.hpp>

#include <sstream>

namespace zigzag {

std::string format_rank_vector(const RankVector& ranks) {
  std::ostringstream os;
  for (std::size_t i = 0; i < ranks.size(); ++i) {
    if (i) os << ',';
    os << ranks[i];
  }
  return os.str();
}

std::string format_arcs(const std::vector<int>& arcs) {
  std::ostringstream os;
  for (std::size_t i = 0; i < arcs.size(); ++i) {
    if (i) os << ',';
    os << arcs[i];
  }
  return os.str();
}

std::string rank_line_tsv(std::uint64_t rank, const SupportTree& tree, const RankOutputOptions& opts) {
  std::ostringstream os;
  os << rank << '\t' << to_fraction_string(tree.likelihood);
  if (!opts.exact_only) os << '\t' << to_decimal_string(tree.likelihood, opts.decimal_digits);
  os << '\t' << format_rank_vector(tree.ranks);
  if (!opts.ranks_only) os << '\t' << format_arcs(tree.arcs);
  return os.str();
}

nlohmann::json rank_json(std::uint64_t rank, const SupportTree& tree, const RankOutputOptions& opts) {
  nlohmann::json j{
      {"rank", rank},
      {"likelihood_fraction", to_fraction_string(tree.likelihood)},
      {"rank_vector", tree.ranks},
  };
  if (!opts.exact_only) j["likelihood_decimal"] = to_decimal_string(tree.likelihood, opts.decimal_digits);
  if (!opts.ranks_only) j["arcs"] = tree.arcs;
  return j;
}

std::string trail_line_tsv(const ZigzagTrail& trail) {
  std::ostringstream os;
  os << trail.trail_index << '\t' << to_string(trail.kind) << '\t' << trail.length() << '\t'
     << format_arcs(trail.arcs);
  return os.str();
}

nlohmann::json decomposition_json(const Decomposition& decomp) {
  nlohmann::json trails = nlohmann::json::array();
  for (const auto& t : decomp.trails) {
    trails.push_back({{"trail_index", t.trail_index},
                      {"kind", to_string(t.kind)},
                      {"arc_count", t.length()},
                      {"arcs", t.arcs}});
  }
  return {{"format_version", kOutputFormatVersion}, {"trails", trails}};
}

std::string decomposition_dot(const PhyloNetwork& net, const Decomposition& decomp) {
  auto color = [](TrailKind kind) {
    switch (kind) {
      case TrailKind::Crown: return "crimson";
      case TrailKind::MFence: return "royalblue";
      case TrailKind::NFence: return "forestgreen";
      case TrailKind::WFence: return "darkorange";
    }
    return "black";
  };
  std::vector<const ZigzagTrail*> trail_of(net.arc_count(), nullptr);
  for (const auto& t : decomp.trails)
    for (int a : t.arcs) trail_of[a] = &t;

  std::ostringstream os;
  os << "digraph network {\n";
  for (int a = 0; a < net.arc_count(); ++a) {
    const auto& arc = net.arc(a);
    const ZigzagTrail* t = trail_of[a];
    os << "  \"" << net.label(arc.tail) << "\" -> \"" << net.label(arc.head) << "\" [color="
       << color(t->kind) << ", label=\"" << a << ": " << to_fraction_string(arc.weight) << "\"];\n";
  }
  os << "}\n";
  return os.str();
}

}  // namespace zigzag
