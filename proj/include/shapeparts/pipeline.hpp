#pragma once

#include "shapeparts/contour.hpp"
#include "shapeparts/diffusion.hpp"
#include "shapeparts/dominant_sets.hpp"
#include "shapeparts/metrics.hpp"
#include "shapeparts/randomization.hpp"
#include "shapeparts/visibility.hpp"

#include <nlohmann/json.hpp>

#include <cstdint>
#include <optional>
#include <string>

namespace shapeparts {

struct PipelineConfig {
  Eigen::Index sample_count = 200;
  std::optional<int> radius; // bypasses profile-based estimation
  double std_multiplier = 2.0;
  int num_random_graphs = 250;
  int swap_factor = 10;
  std::uint64_t rng_seed = 0;
  bool postprocess = false;
  bool include_direct_edges = false;
  bool verbose_report = false; // include null samples in the record
  CrossPairPolicy cross_pair_policy = CrossPairPolicy::IncludeUnassigned;
  int num_threads = 0;
};

struct ShapeResult {
  Contour resampled;
  VisibilityMatrix visibility;
  RestrictedVisibility restricted;
  DiffusionMatrix diffusion;
  int radius = 0;
  bool radius_estimated = false;
  Decomposition extracted;     // every cluster the iteration produced
  ThresholdReport report;      // null-ensemble statistics
  Decomposition decomposition; // after thresholding (and optional pruning)
  MetricsReport metrics;
};

// Full pipeline on one contour: resample, build and restrict the visibility
// graph, diffuse, extract clusters, threshold against the null ensemble,
// optionally prune, compute metrics.
ShapeResult run_pipeline(const Contour& input, const PipelineConfig& cfg);

// One structured document holding everything needed to reproduce or diff a
// run; serialization is byte-stable for fixed inputs, config and seed.
nlohmann::ordered_json result_record(const ShapeResult& r,
                                     const PipelineConfig& cfg);

} // namespace shapeparts
