#pragma once

#include <cstdint>
#include <vector>

namespace zigzag {

struct DelayRun {
  int arc_count = 0;
  int rep = 0;
  double preprocess_ns = 0;
  std::vector<double> delays_ns;  // one entry per emission
};

struct DelayProfile {
  std::uint64_t k = 0;
  std::vector<DelayRun> runs;
};

struct DelaySummary {
  int arc_count = 0;
  double preprocess_ns = 0;   // median across reps
  double median_ns = 0;       // emissions 2..k, pooled across reps
  double early_median_ns = 0; // emissions 2..100
  double late_median_ns = 0;  // emissions k-100..k
};

// Picks (leaf_count, extra_arcs) with 2*leaves - 2 + 3*extra == arc_count.
std::pair<int, int> generation_params_for_arc_count(int arc_count);

// Generates one network per size (bumping the seed until it admits at
// least k support trees), then times every emission of the first k trees,
// `reps` times per size. Preprocessing is timed separately.
DelayProfile profile_delay(const std::vector<int>& sizes, std::uint64_t k, int reps,
                           std::uint64_t seed);

double median(std::vector<double> xs);
std::vector<DelaySummary> summarize(const DelayProfile& profile);
// Least-squares slope of median delay against arc count, in ns per arc.
double least_squares_slope(const std::vector<DelaySummary>& summaries);

}  // namespace zigzag
