#include "zigzag/local_ranking.hpp"

#include <algorithm>
#include <stdexcept>

namespace zigzag {

int local_family_size(const ZigzagTrail& trail) {
  switch (trail.kind) {
    case TrailKind::Crown: return 2;
    case TrailKind::NFence: return 1;
    case TrailKind::MFence: return trail.length() / 2;
    case TrailKind::WFence: throw std::domain_error("no admissible arc-set");
  }
  throw std::logic_error("unreachable");
}

std::vector<AdmissibleVector> admissible_vectors(const ZigzagTrail& trail) {
  const int m = trail.length();
  std::vector<AdmissibleVector> result;
  switch (trail.kind) {
    case TrailKind::Crown: {
      AdmissibleVector odd(m), even(m);
      for (int j = 0; j < m; ++j) {
        odd[j] = j % 2 == 0;
        even[j] = j % 2 == 1;
      }
      result.push_back(std::move(odd));   // (10)^{m/2}
      result.push_back(std::move(even));  // (01)^{m/2}
      break;
    }
    case TrailKind::NFence: {
      AdmissibleVector v(m);
      for (int j = 0; j < m; ++j) v[j] = j % 2 == 0;
      result.push_back(std::move(v));  // (1(01)^{(m-1)/2})
      break;
    }
    case TrailKind::MFence: {
      // (1 (01)^p (10)^q 1) with p+q = m/2 - 1, in increasing p.
      const int half = m / 2;
      for (int p = 0; p < half; ++p) {
        AdmissibleVector v(m, 0);
        v[0] = 1;
        v[m - 1] = 1;
        for (int i = 0; i < p; ++i) v[2 + 2 * i] = 1;
        for (int i = 0; i < half - 1 - p; ++i) v[2 * p + 1 + 2 * i] = 1;
        result.push_back(std::move(v));
      }
      break;
    }
    case TrailKind::WFence:
      throw std::domain_error("no admissible arc-set");
  }
  return result;
}

LocalRanking build_local_ranking(const ZigzagTrail& trail, const std::vector<Rational>& arc_weights) {
  std::vector<AdmissibleVector> vectors = admissible_vectors(trail);
  LocalRanking ranking;
  ranking.trail_index = trail.trail_index;
  ranking.entries.reserve(vectors.size());

  auto product = [&](const AdmissibleVector& bits) {
    Rational c = 1;
    for (int j = 0; j < trail.length(); ++j)
      if (bits[j]) c *= arc_weights[trail.arcs[j]];
    return c;
  };

  if (trail.kind == TrailKind::MFence) {
    Rational c = product(vectors[0]);
    ranking.entries.push_back({std::move(vectors[0]), c});
    for (int p = 1; p < static_cast<int>(vectors.size()); ++p) {
      // Step p swaps arc 2p out for arc 2p+1 (1-based within the trail).
      c *= arc_weights[trail.arcs[2 * p]];
      c /= arc_weights[trail.arcs[2 * p - 1]];
      ranking.entries.push_back({std::move(vectors[p]), c});
    }
  } else {
    for (auto& v : vectors) {
      Rational c = product(v);
      ranking.entries.push_back({std::move(v), std::move(c)});
    }
  }

  std::sort(ranking.entries.begin(), ranking.entries.end(), [](const LocalEntry& x, const LocalEntry& y) {
    int c = cmp(x.contribution, y.contribution);
    if (c != 0) return c > 0;
    return x.bits < y.bits;
  });
  return ranking;
}

std::vector<int> vector_to_arcs(const ZigzagTrail& trail, const AdmissibleVector& bits) {
  if (static_cast<int>(bits.size()) != trail.length())
    throw std::invalid_argument("vector length does not match trail length");
  std::vector<int> arcs;
  for (int j = 0; j < trail.length(); ++j)
    if (bits[j]) arcs.push_back(trail.arcs[j]);
  return arcs;
}

}  // namespace zigzag
