#include "zigzag/delay_profile.hpp"

#include <algorithm>
#include <chrono>
#include <utility>
#include <stdexcept>

#include "zigzag/network.hpp"
#include "zigzag/ranking.hpp"

namespace zigzag {

namespace {

using Clock = std::chrono::steady_clock;

double ns_between(Clock::time_point a, Clock::time_point b) {
  return std::chrono::duration<double, std::nano>(b - a).count();
}

}  // namespace

std::pair<int, int> generation_params_for_arc_count(int arc_count) {
  if (arc_count < 2) throw std::invalid_argument("arc_count must be at least 2");
  int extra = arc_count / 6;
  if ((arc_count - 3 * extra) % 2 != 0) extra = extra > 0 ? extra - 1 : extra + 1;
  while (arc_count - 3 * extra < 2) extra -= 2;
  int leaves = (arc_count - 3 * extra + 2) / 2;
  return {leaves, extra};
}

DelayProfile profile_delay(const std::vector<int>& sizes, std::uint64_t k, int reps,
                           std::uint64_t seed) {
  DelayProfile profile;
  profile.k = k;
  for (int size : sizes) {
    auto [leaves, extra] = generation_params_for_arc_count(size);
    PhyloNetwork net = generate_random(leaves, extra, seed);
    bool enough = false;
    for (std::uint64_t bump = 1; bump <= 64 && !enough; ++bump) {
      enough = SupportTreeRanking::build(net).count_at_least(k);
      if (!enough) net = generate_random(leaves, extra, seed + bump);
    }
    if (!enough)
      throw std::domain_error("no generated network of " + std::to_string(size) +
                              " arcs admits " + std::to_string(k) + " support trees");
    for (int rep = 0; rep < reps; ++rep) {
      DelayRun run;
      run.arc_count = net.arc_count();
      run.rep = rep;
      auto t0 = Clock::now();
      SupportTreeRanking ranking = SupportTreeRanking::build(net);
      RankedEnumerator stream(ranking);
      auto t1 = Clock::now();
      run.preprocess_ns = ns_between(t0, t1);
      run.delays_ns.reserve(k);
      SupportTree tree;
      std::size_t sink = 0;
      auto prev = Clock::now();
      for (std::uint64_t j = 0; j < k; ++j) {
        if (!stream.next(tree)) throw std::logic_error("enumerator ran dry during profiling");
        auto now = Clock::now();
        run.delays_ns.push_back(ns_between(prev, now));
        sink += tree.arcs.size();  // keep the emission from being optimized out
        prev = Clock::now();
      }
      if (sink == 0) throw std::logic_error("empty emissions");
      profile.runs.push_back(std::move(run));
    }
  }
  return profile;
}

double median(std::vector<double> xs) {
  if (xs.empty()) return 0;
  std::sort(xs.begin(), xs.end());
  std::size_t n = xs.size();
  return n % 2 == 1 ? xs[n / 2] : (xs[n / 2 - 1] + xs[n / 2]) / 2;
}

std::vector<DelaySummary> summarize(const DelayProfile& profile) {
  std::vector<int> sizes;
  for (const auto& run : profile.runs)
    if (std::find(sizes.begin(), sizes.end(), run.arc_count) == sizes.end())
      sizes.push_back(run.arc_count);
  std::sort(sizes.begin(), sizes.end());

  std::vector<DelaySummary> summaries;
  for (int size : sizes) {
    DelaySummary s;
    s.arc_count = size;
    std::vector<double> all, early, late, prep;
    for (const auto& run : profile.runs) {
      if (run.arc_count != size) continue;
      prep.push_back(run.preprocess_ns);
      const std::size_t n = run.delays_ns.size();
      for (std::size_t j = 1; j < n; ++j) {  // skip the first emission
        all.push_back(run.delays_ns[j]);
        if (j + 1 <= 100) early.push_back(run.delays_ns[j]);
        if (j + 100 >= n) late.push_back(run.delays_ns[j]);
      }
    }
    s.preprocess_ns = median(prep);
    s.median_ns = median(all);
    s.early_median_ns = median(early);
    s.late_median_ns = median(late);
    summaries.push_back(s);
  }
  return summaries;
}

double least_squares_slope(const std::vector<DelaySummary>& summaries) {
  if (summaries.size() < 2) return 0;
  double n = static_cast<double>(summaries.size());
  double sx = 0, sy = 0, sxx = 0, sxy = 0;
  for (const auto& s : summaries) {
    double x = s.arc_count, y = s.median_ns;
    sx += x;
    sy += y;
    sxx += x * x;
    sxy += x * y;
  }
  return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

}  // namespace zigzag
