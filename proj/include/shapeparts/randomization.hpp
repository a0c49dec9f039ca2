#pragma once

#include "shapeparts/dominant_sets.hpp"

#include <cstdint>
#include <vector>

namespace shapeparts {

struct NullEnsembleConfig {
  int num_graphs = 250;
  double std_multiplier = 2.0;
  int swap_factor = 10; // swap attempts per edge
  std::uint64_t rng_seed = 0;
  int num_threads = 0; // 0 = hardware concurrency
};

struct ThresholdReport {
  std::vector<double> samples; // cohesiveness of every null cluster, sorted
  double mean = 0.0;
  double stddev = 0.0; // sample standard deviation (divisor n-1)
  double threshold = 0.0;
  bool rewire_warning = false; // some graph had too few edges to rewire
};

struct RewireResult {
  DiffusionMatrix d;
  bool rewired = false; // false when the graph had fewer than 2 edges
};

// Stable per-graph seed derivation; ensemble members are order-independent.
std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index);

// Degree-preserving double-edge swaps with weights riding along the edges:
// pick edges (a,b), (c,d) on four distinct nodes and rewire to (a,d), (c,b)
// when neither target edge exists. The binary degree sequence and the
// multiset of edge weights are preserved exactly. Deterministic per seed.
RewireResult rewire_preserving_degrees(const DiffusionMatrix& d,
                                       int swap_factor, std::uint64_t seed);

// Mean/std/threshold over an already collected sample list (sorted first so
// aggregation is independent of collection order).
ThresholdReport aggregate_samples(std::vector<double> samples,
                                  double std_multiplier, bool rewire_warning);

// Rewires num_graphs copies of d, runs the full iterative extraction on each,
// and pools every extracted cluster's cohesiveness into a ThresholdReport.
ThresholdReport null_cohesiveness_samples(const DiffusionMatrix& d,
                                          const NullEnsembleConfig& cfg);

// Keeps the clusters with cohesiveness strictly above the threshold; members
// of dropped clusters move to unassigned, order preserved.
Decomposition select_clusters(const Decomposition& d,
                              const ThresholdReport& report);

} // namespace shapeparts
