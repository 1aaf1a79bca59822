#pragma once

#include <cstdint>
#include <string>

#include <nlohmann/json_fwd.hpp>

#include "zigzag/decomposition.hpp"
#include "zigzag/network.hpp"
#include "zigzag/oracle.hpp"
#include "zigzag/ranking.hpp"

namespace zigzag {

inline constexpr int kOutputFormatVersion = 1;

struct RankOutputOptions {
  bool ranks_only = false;
  bool exact_only = false;
  int decimal_digits = 12;
};

std::string format_rank_vector(const RankVector& ranks);
std::string format_arcs(const std::vector<int>& arcs);

// rank <tab> likelihood_fraction [<tab> likelihood_decimal] <tab>
// rank_vector [<tab> arcs]
std::string rank_line_tsv(std::uint64_t rank, const SupportTree& tree, const RankOutputOptions& opts);
nlohmann::json rank_json(std::uint64_t rank, const SupportTree& tree, const RankOutputOptions& opts);

// trail_index <tab> kind <tab> arc_count <tab> arcs
std::string trail_line_tsv(const ZigzagTrail& trail);
nlohmann::json decomposition_json(const Decomposition& decomp);
// Graphviz rendering with one edge color per trail kind.
std::string decomposition_dot(const PhyloNetwork& net, const Decomposition& decomp);

}  // namespace zigzag
