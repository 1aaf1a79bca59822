#include <CLI11.hpp>
#include <nlohmann/json.hpp>

#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "zigzag/decomposition.hpp"
#include "zigzag/delay_profile.hpp"
#include "zigzag/network.hpp"
#include "zigzag/oracle.hpp"
#include "zigzag/output.hpp"
#include "zigzag/ranking.hpp"

namespace {

using namespace zigzag;

constexpr int kExitOk = 0;
constexpr int kExitDomainError = 1;
constexpr int kExitUsageError = 2;

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream os;
    os << std::cin.rdbuf();
    return os.str();
  }
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

struct RankFormat {
  std::string format = "tsv";
  RankOutputOptions opts;
};

void add_rank_format_flags(CLI::App* cmd, RankFormat& fmt) {
  cmd->add_option("--format", fmt.format, "Output format")->check(CLI::IsMember({"tsv", "json"}));
  cmd->add_flag("--ranks-only", fmt.opts.ranks_only, "Omit arc lists");
  cmd->add_flag("--exact", fmt.opts.exact_only, "Print only the exact fraction");
  cmd->add_option("--decimal-digits", fmt.opts.decimal_digits, "Significant digits of the decimal value")
      ->check(CLI::Range(1, 64));
}

// Streams trees one line (or JSON element) at a time, flushing per tree.
template <typename NextFn>
void emit_trees(NextFn&& next, const RankFormat& fmt) {
  SupportTree tree;
  std::uint64_t rank = 0;
  if (fmt.format == "json") {
    std::cout << "{\"format_version\": " << kOutputFormatVersion << ", \"trees\": [" << std::endl;
    bool first = true;
    while (next(tree)) {
      ++rank;
      if (!first) std::cout << ',' << '\n';
      first = false;
      std::cout << rank_json(rank, tree, fmt.opts).dump() << std::flush;
    }
    std::cout << "\n]}" << std::endl;
  } else {
    std::cout << "# format_version " << kOutputFormatVersion << '\n';
    while (next(tree)) {
      ++rank;
      std::cout << rank_line_tsv(rank, tree, fmt.opts) << std::endl;
    }
  }
}

int run_validate(const std::string& path) {
  RawNetwork raw = parse_raw(read_input(path));
  ValidationReport report = validate(raw);
  if (report.ok()) {
    std::cout << "valid: " << raw.labels.size() << " vertices, " << raw.arcs.size() << " arcs"
              << std::endl;
    return kExitOk;
  }
  std::cout << report.to_string();
  return kExitDomainError;
}

int run_decompose(const std::string& path, const std::string& format) {
  PhyloNetwork net = parse_network(read_input(path));
  Decomposition decomp = decompose(net);
  if (format == "json") {
    std::cout << decomposition_json(decomp).dump(2) << std::endl;
  } else if (format == "dot") {
    std::cout << decomposition_dot(net, decomp);
  } else {
    std::cout << "# format_version " << kOutputFormatVersion << '\n';
    for (const auto& trail : decomp.trails) std::cout << trail_line_tsv(trail) << '\n';
  }
  return kExitOk;
}

int run_count(const std::string& path) {
  PhyloNetwork net = parse_network(read_input(path));
  std::cout << count_support_trees(net).get_str() << std::endl;
  return kExitOk;
}

int run_is_tree_based(const std::string& path) {
  PhyloNetwork net = parse_network(read_input(path));
  Decomposition decomp = decompose(net);
  auto wfences = decomp.wfence_trails();
  if (wfences.empty()) {
    std::cout << "true" << std::endl;
  } else {
    std::cout << "false" << std::endl;
    for (int t : wfences)
      std::cerr << "w-fence trail " << t << ": arcs " << format_arcs(decomp.trails[t].arcs) << '\n';
  }
  return kExitOk;
}

int run_rank(const std::string& path, std::uint64_t k, const RankFormat& fmt) {
  PhyloNetwork net = parse_network(read_input(path));
  SupportTreeRanking ranking = SupportTreeRanking::build(net);
  ranking.require_tree_based();
  if (k == 0) throw std::out_of_range("k must be positive");
  if (!ranking.count_at_least(k)) throw std::out_of_range("k exceeds the number of support trees");
  RankedEnumerator stream(ranking);
  std::uint64_t left = k;
  emit_trees([&](SupportTree& tree) { return left-- > 0 && stream.next(tree); }, fmt);
  return kExitOk;
}

int run_enumerate(const std::string& path, const RankFormat& fmt) {
  PhyloNetwork net = parse_network(read_input(path));
  SupportTreeRanking ranking = SupportTreeRanking::build(net);
  ranking.require_tree_based();
  RankedEnumerator stream(ranking);
  emit_trees([&](SupportTree& tree) { return stream.next(tree); }, fmt);
  return kExitOk;
}

int run_local_rank(const std::string& path, int trail_index) {
  PhyloNetwork net = parse_network(read_input(path));
  SupportTreeRanking ranking = SupportTreeRanking::build(net);
  if (trail_index < 0 || trail_index >= ranking.trail_count())
    throw std::out_of_range("trail index out of range");
  const ZigzagTrail& trail = ranking.decomposition().trails[trail_index];
  if (trail.kind == TrailKind::WFence) throw std::domain_error("no admissible arc-set");
  const LocalRanking& local = ranking.local_ranking(trail_index);
  for (int j = 0; j < local.size(); ++j) {
    const LocalEntry& e = local.entries[j];
    std::cout << (j + 1) << '\t';
    for (auto b : e.bits) std::cout << static_cast<int>(b);
    std::cout << '\t' << to_fraction_string(e.contribution) << '\n';
  }
  return kExitOk;
}

int run_generate(int leaves, int extra, std::uint64_t seed) {
  PhyloNetwork net = generate_random(leaves, extra, seed);
  std::cout << "# generated: leaves=" << leaves << " extra=" << extra << " seed=" << seed << '\n'
            << serialize(net);
  return kExitOk;
}

int run_oracle_rank(const std::string& path, std::uint64_t k, int cap, const RankFormat& fmt) {
  PhyloNetwork net = parse_network(read_input(path));
  auto trees = oracle::ranked_support_trees(net, k, cap);
  std::size_t i = 0;
  emit_trees(
      [&](SupportTree& tree) {
        if (i >= trees.size()) return false;
        tree = trees[i++];
        return true;
      },
      fmt);
  return kExitOk;
}

int run_oracle_check(const std::string& path, const std::vector<int>& arcs) {
  PhyloNetwork net = parse_network(read_input(path));
  for (int a : arcs)
    if (a < 0 || a >= net.arc_count()) throw std::out_of_range("arc index out of range");
  auto report = oracle::check_admissible(net.digraph(), arcs);
  std::cout << report.to_string(&net);
  return kExitOk;
}

int run_profile_delay(const std::vector<int>& sizes, std::uint64_t k, int reps, std::uint64_t seed) {
  DelayProfile profile = profile_delay(sizes, k, reps, seed);
  std::cout << "# format_version " << kOutputFormatVersion << '\n';
  std::cout << "arcs,rep,j,delay_ns\n";
  for (const auto& run : profile.runs) {
    for (std::size_t j = 0; j < run.delays_ns.size(); ++j)
      std::cout << run.arc_count << ',' << run.rep << ',' << (j + 1) << ',' << run.delays_ns[j]
                << '\n';
  }
  auto summaries = summarize(profile);
  for (const auto& s : summaries) {
    std::cerr << "arcs=" << s.arc_count << " median_delay_ns=" << s.median_ns
              << " early_median_ns=" << s.early_median_ns << " late_median_ns=" << s.late_median_ns
              << " preprocess_ns=" << s.preprocess_ns << '\n';
  }
  std::cerr << "slope_ns_per_arc=" << least_squares_slope(summaries) << '\n';
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"zig-zag trail decomposition and ranked support-tree enumeration"};
  app.require_subcommand(1);

  std::string path = "-";
  std::uint64_t k = 1;
  std::uint64_t seed = 0;
  RankFormat fmt;
  std::string decompose_format = "tsv";
  int trail_index = 0;
  int leaves = 2, extra = 0;
  int cap = 24;
  std::vector<int> arc_subset;
  std::vector<int> sizes{200, 400, 800, 1600};
  int reps = 3;

  auto* validate_cmd = app.add_subcommand("validate", "Check a network document");
  validate_cmd->add_option("file", path, "Network file, or - for stdin");

  auto* decompose_cmd = app.add_subcommand("decompose", "Print the maximal zig-zag trails");
  decompose_cmd->add_option("file", path);
  decompose_cmd->add_option("--format", decompose_format)->check(CLI::IsMember({"tsv", "json", "dot"}));

  auto* count_cmd = app.add_subcommand("count", "Count support trees");
  count_cmd->add_option("file", path);

  auto* tb_cmd = app.add_subcommand("is-tree-based", "Decide tree-basedness");
  tb_cmd->add_option("file", path);

  auto* rank_cmd = app.add_subcommand("rank", "Stream the top-k support trees");
  rank_cmd->add_option("file", path);
  rank_cmd->add_option("-k,--top", k, "Number of trees")->required();
  add_rank_format_flags(rank_cmd, fmt);

  auto* enum_cmd = app.add_subcommand("enumerate", "Stream every support tree");
  enum_cmd->add_option("file", path);
  add_rank_format_flags(enum_cmd, fmt);

  auto* local_cmd = app.add_subcommand("local-rank", "Print one trail's local ranking");
  local_cmd->add_option("file", path);
  local_cmd->add_option("trail_index", trail_index)->required();

  auto* gen_cmd = app.add_subcommand("generate", "Emit a random tree-based network");
  gen_cmd->add_option("-n,--leaves", leaves)->check(CLI::Range(2, 1 << 20));
  gen_cmd->add_option("-e,--extra", extra)->check(CLI::Range(0, 1 << 20));
  gen_cmd->add_option("--seed", seed);

  auto* oracle_cmd = app.add_subcommand("oracle", "Brute-force reference commands");
  oracle_cmd->require_subcommand(1);
  auto* oracle_rank_cmd = oracle_cmd->add_subcommand("rank", "Rank by exhaustive enumeration");
  oracle_rank_cmd->add_option("file", path);
  oracle_rank_cmd->add_option("-k,--top", k)->required();
  oracle_rank_cmd->add_option("--cap", cap);
  add_rank_format_flags(oracle_rank_cmd, fmt);
  auto* oracle_check_cmd = oracle_cmd->add_subcommand("check", "Report admissibility of an arc subset");
  oracle_check_cmd->add_option("file", path);
  oracle_check_cmd->add_option("arcs", arc_subset, "Arc indices");

  auto* profile_cmd = app.add_subcommand("profile-delay", "Measure per-emission delay");
  profile_cmd->add_option("--sizes", sizes, "Arc counts to profile")->delimiter(',');
  profile_cmd->add_option("-k,--top", k);
  profile_cmd->add_option("--reps", reps)->check(CLI::Range(1, 1000));
  profile_cmd->add_option("--seed", seed);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsageError;
  }

  try {
    if (app.got_subcommand(validate_cmd)) return run_validate(path);
    if (app.got_subcommand(decompose_cmd)) return run_decompose(path, decompose_format);
    if (app.got_subcommand(count_cmd)) return run_count(path);
    if (app.got_subcommand(tb_cmd)) return run_is_tree_based(path);
    if (app.got_subcommand(rank_cmd)) return run_rank(path, k, fmt);
    if (app.got_subcommand(enum_cmd)) return run_enumerate(path, fmt);
    if (app.got_subcommand(local_cmd)) return run_local_rank(path, trail_index);
    if (app.got_subcommand(gen_cmd)) return run_generate(leaves, extra, seed);
    if (app.got_subcommand(profile_cmd)) return run_profile_delay(sizes, k, reps, seed);
    if (app.got_subcommand(oracle_cmd)) {
      if (oracle_cmd->got_subcommand(oracle_rank_cmd)) return run_oracle_rank(path, k, cap, fmt);
      return run_oracle_check(path, arc_subset);
    }
  } catch (const NotTreeBasedError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDomainError;
  } catch (const NetworkError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDomainError;
  } catch (const std::out_of_range& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDomainError;
  } catch (const std::domain_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDomainError;
  } catch (const std::length_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDomainError;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDomainError;
  }
  return kExitUsageError;
}
