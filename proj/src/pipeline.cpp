#include "shapeparts/pipeline.hpp"

#include "shapeparts/postprocess.hpp"

#include <stdexcept>

namespace shapeparts {

ShapeResult run_pipeline(const Contour& input, const PipelineConfig& cfg) {
  if (cfg.sample_count < 8)
    throw std::invalid_argument("sample count must be at least 8");

  ShapeResult r;
  r.resampled = resample_uniform(input, cfg.sample_count);
  r.visibility = build_visibility_matrix(r.resampled);

  if (cfg.radius) {
    r.radius = *cfg.radius;
    r.radius_estimated = false;
  } else {
    r.radius = estimate_radius(off_diagonal_profile(r.visibility),
                               cfg.sample_count);
    r.radius_estimated = true;
  }
  const NeighborhoodMask mask = neighborhood_mask(cfg.sample_count, r.radius);
  r.restricted = restrict_visibility(r.visibility, mask);
  r.diffusion = diffuse(r.restricted, cfg.include_direct_edges);

  r.extracted = extract_all(r.diffusion);

  NullEnsembleConfig ncfg;
  ncfg.num_graphs = cfg.num_random_graphs;
  ncfg.std_multiplier = cfg.std_multiplier;
  ncfg.swap_factor = cfg.swap_factor;
  ncfg.rng_seed = cfg.rng_seed;
  ncfg.num_threads = cfg.num_threads;
  r.report = null_cohesiveness_samples(r.diffusion, ncfg);

  r.decomposition = select_clusters(r.extracted, r.report);
  if (cfg.postprocess)
    r.decomposition = prune_weakest(r.decomposition, r.visibility);

  r.metrics = compute_metrics(r.visibility, r.decomposition,
                              cfg.cross_pair_policy);
  return r;
}

nlohmann::ordered_json result_record(const ShapeResult& r,
                                     const PipelineConfig& cfg) {
  nlohmann::ordered_json doc;
  doc["config"] = {
      {"samples", r.resampled.size()},
      {"radius_override", cfg.radius ? nlohmann::ordered_json(*cfg.radius)
                                     : nlohmann::ordered_json(nullptr)},
      {"std_multiplier", cfg.std_multiplier},
      {"null_graphs", cfg.num_random_graphs},
      {"swap_factor", cfg.swap_factor},
      {"seed", cfg.rng_seed},
      {"postprocess", cfg.postprocess},
      {"include_direct_edges", cfg.include_direct_edges},
  };
  doc["radius"] = {{"value", r.radius}, {"estimated", r.radius_estimated}};
  doc["null_ensemble"] = {
      {"num_samples", r.report.samples.size()},
      {"mean", r.report.mean},
      {"stddev", r.report.stddev},
      {"threshold", r.report.threshold},
      {"rewire_warning", r.report.rewire_warning},
  };
  if (cfg.verbose_report) doc["null_ensemble"]["samples"] = r.report.samples;
  doc["clusters_extracted"] = r.extracted.clusters.size();

  auto& clusters = doc["clusters"] = nlohmann::ordered_json::array();
  for (const Cluster& c : r.decomposition.clusters) {
    clusters.push_back({{"start", c.start},
                        {"length", c.length},
                        {"cohesiveness", c.cohesiveness}});
  }
  doc["unassigned"] = r.decomposition.unassigned;
  doc["metrics"] = {
      {"graph_density", r.metrics.graph_density},
      {"internal_density", r.metrics.internal_density},
      {"per_cluster_internal", r.metrics.per_cluster_internal},
      {"external_density", r.metrics.external_density},
      {"modularity", r.metrics.modularity},
  };
  return doc;
}

} // namespace shapeparts
