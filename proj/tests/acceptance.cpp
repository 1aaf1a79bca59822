// Acceptance suite: each criterion prints exactly one PASS/FAIL line.
// Exit status is 0 iff every criterion passes.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <iostream>
#include <random>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "support/fixtures.hpp"
#include "zigzag/delay_profile.hpp"
#include "zigzag/oracle.hpp"
#include "zigzag/ranking.hpp"

using namespace zigzag;

namespace {

struct Failure : std::runtime_error {
  using std::runtime_error::runtime_error;
};

void check(bool condition, const std::string& message) {
  if (!condition) throw Failure(message);
}

template <typename T>
std::string str(const T& value) {
  std::ostringstream os;
  os << value;
  return os.str();
}

std::string format_ranks(const RankVector& r) {
  std::string s = "(";
  for (std::size_t i = 0; i < r.size(); ++i) s += (i ? " " : "") + std::to_string(r[i]);
  return s + ")";
}

// --- criterion 1: golden execution trace on the three-crown fixture ----

std::string run_golden_trace() {
  PhyloNetwork net = testing::three_crowns();
  SupportTreeRanking ranking = SupportTreeRanking::build(net);
  std::vector<int> live = testing::nontrivial_trails(ranking);
  check(live.size() == 3, "expected 3 nontrivial trails");
  check(ranking.step_ratio(live[0], 1) == Rational(1, 4), "trail 1 ratio");
  check(ranking.step_ratio(live[1], 1) == Rational(1, 16), "trail 2 ratio");
  check(ranking.step_ratio(live[2], 1) == Rational(1, 2), "trail 3 ratio");

  using R = RankVector;
  const std::vector<R> order = {R{1, 1, 1}, R{1, 1, 2}, R{2, 1, 1}, R{2, 1, 2},
                                R{1, 2, 1}, R{1, 2, 2}, R{2, 2, 1}, R{2, 2, 2}};
  const std::vector<std::vector<R>> queues = {
      {R{1, 1, 1}},           {R{1, 1, 2}},           {R{2, 1, 1}, R{2, 1, 2}},
      {R{1, 2, 1}, R{2, 1, 2}}, {R{1, 2, 1}, R{1, 2, 2}}, {R{1, 2, 2}, R{2, 2, 1}},
      {R{2, 2, 1}, R{2, 2, 2}}, {R{2, 2, 2}}};
  using MaybeR = std::optional<R>;
  const std::vector<MaybeR> children = {R{1, 1, 2}, R{2, 1, 2}, std::nullopt, std::nullopt,
                                        R{2, 2, 1}, R{2, 2, 2}, std::nullopt};
  const std::vector<MaybeR> siblings = {std::nullopt, R{2, 1, 1}, R{1, 2, 1}, R{1, 2, 2},
                                        std::nullopt, std::nullopt, std::nullopt};

  std::vector<TraceRow> trace = trace_top_k(ranking, 8);
  check(trace.size() == 8, "expected 8 emissions");
  for (int j = 0; j < 8; ++j) {
    R emitted = testing::project(trace[j].emitted, live);
    check(emitted == order[j],
          "emission " + str(j + 1) + " is " + format_ranks(emitted) + ", expected " +
              format_ranks(order[j]));
    std::vector<R> queue;
    for (const auto& q : trace[j].queue) queue.push_back(testing::project(q, live));
    std::sort(queue.begin(), queue.end());
    std::vector<R> expected_queue = queues[j];
    std::sort(expected_queue.begin(), expected_queue.end());
    check(queue == expected_queue, "queue mismatch at step " + str(j + 1));
    if (j < 7) {
      MaybeR child = trace[j].child ? MaybeR(testing::project(*trace[j].child, live)) : std::nullopt;
      MaybeR sibling =
          trace[j].sibling ? MaybeR(testing::project(*trace[j].sibling, live)) : std::nullopt;
      check(child == children[j], "child step mismatch at step " + str(j + 1));
      check(sibling == siblings[j], "sibling step mismatch at step " + str(j + 1));
    }
  }

  std::vector<SupportTree> trees = top_k(net, 8);
  Rational expected(1);
  for (int j = 0; j < 8; ++j) {
    if (j > 0) expected /= 2;
    check(trees[j].likelihood == expected, "likelihood mismatch at rank " + str(j + 1));
  }
  return "8 emissions, queues and steps all match";
}

// --- criterion 2: engine ranking equals the brute-force oracle --------

constexpr int kCorpusSize = 1000;
constexpr int kCorpusMaxArcs = 20;
constexpr std::uint64_t kCorpusSeed = 20260809;

std::string run_oracle_equivalence() {
  auto corpus = testing::small_corpus(kCorpusSize, kCorpusMaxArcs, kCorpusSeed);
  std::uint64_t compared = 0;
  std::uint64_t deepest = 0;
  for (std::size_t n = 0; n < corpus.size(); ++n) {
    const PhyloNetwork& net = corpus[n];
    check(net.arc_count() <= kCorpusMaxArcs, "corpus network too large");
    auto expected = oracle::ranked_support_trees(net, oracle::support_trees(net).size());
    std::uint64_t max_k = std::min<std::uint64_t>(expected.size(), 64);
    deepest = std::max(deepest, max_k);
    for (std::uint64_t k = 1; k <= max_k; ++k) {
      auto actual = top_k(net, k);
      check(actual.size() == k, "short ranking on network " + str(n));
      for (std::uint64_t j = 0; j < k; ++j) {
        check(actual[j].ranks == expected[j].ranks,
              "rank vector mismatch at network " + str(n) + ", k=" + str(k) + ", j=" + str(j + 1));
        check(actual[j].arcs == expected[j].arcs,
              "arc set mismatch at network " + str(n) + ", k=" + str(k) + ", j=" + str(j + 1));
        check(actual[j].likelihood == expected[j].likelihood,
              "likelihood mismatch at network " + str(n) + ", k=" + str(k) + ", j=" + str(j + 1));
      }
      ++compared;
    }
  }
  return str(corpus.size()) + " networks, " + str(compared) + " rankings compared exactly (deepest k=" +
         str(deepest) + ")";
}

// --- criterion 3: per-trail products equal direct subset enumeration --

std::string run_factorization() {
  auto corpus = testing::small_corpus(200, 16, 977);
  corpus.push_back(parse_network(testing::cherry_doc()));
  corpus.push_back(parse_network(testing::wfence_gadget_doc()));
  corpus.push_back(parse_network("rho x 1\n"));
  std::size_t sets_checked = 0;
  for (std::size_t n = 0; n < corpus.size(); ++n) {
    const PhyloNetwork& net = corpus[n];
    check(net.arc_count() <= 16, "instance too large");
    std::vector<std::vector<int>> product_sets;
    for (const auto& [arcs, f] : oracle::support_trees(net)) product_sets.push_back(arcs);
    std::sort(product_sets.begin(), product_sets.end());
    auto direct_sets = oracle::direct_support_tree_sets(net);
    check(product_sets == direct_sets, "factorization mismatch on instance " + str(n));
    check(count_support_trees(net) == BigInt(static_cast<unsigned long>(direct_sets.size())),
          "count mismatch on instance " + str(n));
    sets_checked += direct_sets.size();
  }
  return str(corpus.size()) + " instances, " + str(sets_checked) + " support trees cross-checked";
}

// --- criterion 4: local family law over random trails -----------------

std::string run_family_law() {
  std::mt19937_64 rng(424242);
  const TrailKind kinds[] = {TrailKind::Crown, TrailKind::MFence, TrailKind::NFence,
                             TrailKind::WFence};
  int counts[4] = {0, 0, 0, 0};
  for (int iter = 0; iter < 10000; ++iter) {
    TrailKind kind = kinds[rng() % 4];
    int m;
    switch (kind) {
      case TrailKind::Crown: m = 4 + 2 * static_cast<int>(rng() % 7); break;      // 4..16
      case TrailKind::NFence: m = 1 + 2 * static_cast<int>(rng() % 8); break;     // 1..15
      default: m = 2 + 2 * static_cast<int>(rng() % 8); break;                    // 2..16
    }
    testing::TrailFixture fixture = testing::make_trail(kind, m, rng);
    Decomposition decomp = decompose(fixture.graph);
    check(decomp.trail_count() == 1, "trail fixture split unexpectedly");
    const ZigzagTrail& trail = decomp.trails[0];
    check(trail.kind == fixture.expected_kind, "kind mismatch");
    check(trail.length() == m, "length mismatch");
    counts[static_cast<int>(kind)]++;

    auto oracle_family = oracle::local_family(fixture.graph, trail.arcs);
    if (kind == TrailKind::WFence) {
      check(oracle_family.empty(), "w-fence with admissible vectors");
      continue;
    }
    int expected_size = kind == TrailKind::Crown ? 2 : (kind == TrailKind::NFence ? 1 : m / 2);
    check(local_family_size(trail) == expected_size, "family size law");
    auto engine_family = admissible_vectors(trail);
    check(static_cast<int>(engine_family.size()) == expected_size, "engine family size");
    std::sort(engine_family.begin(), engine_family.end());
    std::sort(oracle_family.begin(), oracle_family.end());
    check(engine_family == oracle_family, "family mismatch");
  }
  return "10000 trails (" + str(counts[0]) + " crowns, " + str(counts[1]) + " m-fences, " +
         str(counts[2]) + " n-fences, " + str(counts[3]) + " w-fences)";
}

// --- criterion 5: m-fence one-swap recurrence --------------------------

std::string run_recurrence() {
  std::mt19937_64 rng(5150);
  for (int iter = 0; iter < 1000; ++iter) {
    int m = 4 + 2 * static_cast<int>(rng() % 9);  // 4..20
    testing::TrailFixture fixture = testing::make_trail(TrailKind::MFence, m, rng);
    Decomposition decomp = decompose(fixture.graph);
    check(decomp.trail_count() == 1 && decomp.trails[0].kind == TrailKind::MFence, "bad m-fence");
    const ZigzagTrail& trail = decomp.trails[0];

    auto vectors = admissible_vectors(trail);  // ascending p
    std::vector<Rational> contribution;
    for (const auto& bits : vectors) {
      Rational c = 1;
      for (int j = 0; j < m; ++j)
        if (bits[j]) c *= fixture.weights[trail.arcs[j]];
      contribution.push_back(c);
    }
    for (std::size_t p = 1; p < vectors.size(); ++p) {
      const Rational& out = fixture.weights[trail.arcs[2 * p - 1]];
      const Rational& in = fixture.weights[trail.arcs[2 * p]];
      Rational lhs = contribution[p] * out;
      Rational rhs = contribution[p - 1] * in;
      check(lhs == rhs, "exact recurrence violated");
      double log_step = std::log(contribution[p].get_d()) - std::log(contribution[p - 1].get_d());
      double log_ratio = std::log(in.get_d()) - std::log(out.get_d());
      check(std::abs(log_step - log_ratio) < 1e-12, "log-space recurrence violated");
    }
  }
  return "1000 m-fences, exact and log-space forms hold";
}

// --- criterion 6: delay scales linearly with network size --------------

std::string run_linear_delay() {
  const std::vector<int> sizes{200, 400, 800, 1600};
  DelayProfile profile = profile_delay(sizes, 1000, 3, 97);
  auto summaries = summarize(profile);
  check(summaries.size() == sizes.size(), "missing profile sizes");
  std::ostringstream detail;
  detail.setf(std::ios::fixed);
  detail.precision(2);
  for (std::size_t i = 0; i + 1 < summaries.size(); ++i) {
    double ratio = summaries[i + 1].median_ns / summaries[i].median_ns;
    detail << summaries[i].arc_count << "->" << summaries[i + 1].arc_count << ": x" << ratio << ' ';
    check(ratio >= 1.5 && ratio <= 3.0,
          "median delay ratio " + str(ratio) + " for " + str(summaries[i].arc_count) + "->" +
              str(summaries[i + 1].arc_count) + " outside [1.5, 3.0]");
  }
  for (const auto& s : summaries) {
    double blowup = s.late_median_ns / s.early_median_ns;
    check(blowup <= 5.0,
          "late/early delay ratio " + str(blowup) + " at " + str(s.arc_count) + " arcs exceeds 5");
  }
  detail << "(ns medians:";
  for (const auto& s : summaries) detail << ' ' << s.median_ns;
  detail << ")";
  return detail.str();
}

// --- criterion 7: unit-step and queue discipline ------------------------

std::string run_queue_invariants() {
  auto corpus = testing::small_corpus(kCorpusSize, kCorpusMaxArcs, kCorpusSeed);
  std::uint64_t emissions = 0;
  for (std::size_t n = 0; n < corpus.size(); ++n) {
    SupportTreeRanking ranking = SupportTreeRanking::build(corpus[n]);
    RankedEnumerator stream(ranking);
    std::set<RankVector> ever_queued{ranking.all_ones()};
    std::vector<RankVector> emitted;
    std::size_t prev_queue = stream.queue_size();
    SupportTree tree;
    for (int j = 0; j < 64 && stream.next(tree); ++j) {
      check(ever_queued.count(tree.ranks) == 1, "emitted vector was never queued");
      if (stream.last_child())
        check(ever_queued.insert(*stream.last_child()).second,
              "duplicate queue insertion on network " + str(n));
      if (stream.last_sibling())
        check(ever_queued.insert(*stream.last_sibling()).second,
              "duplicate queue insertion on network " + str(n));
      check(stream.queue_size() <= prev_queue + 1, "queue grew by more than one");
      prev_queue = stream.queue_size();
      if (!emitted.empty()) {
        bool unit = false;
        for (const auto& r : emitted) {
          int dist = 0;
          for (std::size_t i = 0; i < r.size(); ++i)
            dist += std::abs(static_cast<int>(r[i]) - static_cast<int>(tree.ranks[i]));
          unit |= dist == 1;
        }
        check(unit, "no unit-step predecessor on network " + str(n));
      }
      emitted.push_back(tree.ranks);
      ++emissions;
    }
  }
  return str(emissions) + " emissions, zero violations";
}

// --- criterion 8: tree-basedness agreement ------------------------------

std::string run_tree_based_agreement() {
  auto corpus = testing::small_corpus(kCorpusSize, kCorpusMaxArcs, kCorpusSeed);
  int positives = 0, negatives = 0;
  for (const auto& net : corpus) {
    bool engine = is_tree_based(net);
    bool oracle_found = !oracle::support_trees(net).empty();
    check(engine == oracle_found, "tree-basedness mismatch on generated network");
    positives += engine;
  }
  for (std::uint64_t seed = 0; seed < 100; ++seed) {
    PhyloNetwork net = testing::with_wfence_gadget(2 + seed % 3, seed % 2, seed);
    check(net.arc_count() <= 24, "gadget network too large for the oracle");
    bool engine = is_tree_based(net);
    bool oracle_found = !oracle::support_trees(net).empty();
    check(!engine, "gadget network claimed tree-based");
    check(engine == oracle_found, "tree-basedness mismatch on gadget network");
    ++negatives;
  }
  return str(positives) + " tree-based and " + str(negatives) + " non-tree-based agree";
}

struct Criterion {
  int id;
  std::string name;
  double budget_seconds;  // 0 = no stated budget
  std::function<std::string()> run;
};

}  // namespace

int main() {
  const std::vector<Criterion> criteria = {
      {1, "three-crown golden trace", 1.0, run_golden_trace},
      {2, "ranking equals brute-force oracle", 120.0, run_oracle_equivalence},
      {3, "trail-product factorization", 0.0, run_factorization},
      {4, "local family law", 0.0, run_family_law},
      {5, "m-fence one-swap recurrence", 0.0, run_recurrence},
      {6, "linear delay scaling", 60.0, run_linear_delay},
      {7, "unit-step and queue discipline", 0.0, run_queue_invariants},
      {8, "tree-basedness agreement", 0.0, run_tree_based_agreement},
  };

  bool all_pass = true;
  for (const auto& criterion : criteria) {
    auto t0 = std::chrono::steady_clock::now();
    std::string detail;
    bool pass = true;
    try {
      detail = criterion.run();
    } catch (const std::exception& e) {
      pass = false;
      detail = e.what();
    }
    double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (pass && criterion.budget_seconds > 0 && seconds > criterion.budget_seconds) {
      pass = false;
      detail = "exceeded time budget of " + str(criterion.budget_seconds) + "s";
    }
    all_pass &= pass;
    std::printf("criterion %d (%s): %s — %s [%.2fs]\n", criterion.id, criterion.name.c_str(),
                pass ? "PASS" : "FAIL", detail.c_str(), seconds);
    std::fflush(stdout);
  }
  return all_pass ? 0 : 1;
}
