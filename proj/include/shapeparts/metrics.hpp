#pragma once

#include "shapeparts/dominant_sets.hpp"
#include "shapeparts/visibility.hpp"

#include <vector>

namespace shapeparts {

// Whether the between-cluster edge count includes edges touching unassigned
// nodes (the default) or only edges between two distinct clusters.
enum class CrossPairPolicy { IncludeUnassigned, BetweenClustersOnly };

struct MetricsReport {
  double graph_density = 0.0;
  std::vector<double> per_cluster_internal;
  double internal_density = 0.0; // average of the per-cluster values
  double external_density = 0.0;
  double modularity = 0.0;
};

// |E| / (N choose 2) on the unrestricted visibility graph.
double graph_density(const VisibilityMatrix& a);

// Per-cluster and averaged internal densities on ordered pairs, plus the
// external density over the ordered-pair complement of within-cluster pairs.
// Degenerate denominators yield 0.
MetricsReport internal_external_density(
    const VisibilityMatrix& a, const Decomposition& d,
    CrossPairPolicy policy = CrossPairPolicy::IncludeUnassigned);

// Newman-Girvan modularity of the kept clusters on the undirected edge set;
// unassigned nodes contribute edges to |E| but to no cluster.
double modularity(const VisibilityMatrix& a, const Decomposition& d);

// Cluster label per contour point, 1-based; 0 marks unassigned.
std::vector<int> segmentation_labels(const Decomposition& d);

// Fraction of unordered point pairs on which two segmentations agree
// (co-grouped in both or separated in both). Label 0 is its own singleton,
// so two unassigned points never count as co-grouped.
double rand_index(const std::vector<int>& s1, const std::vector<int>& s2);

MetricsReport compute_metrics(
    const VisibilityMatrix& a, const Decomposition& d,
    CrossPairPolicy policy = CrossPairPolicy::IncludeUnassigned);

} // namespace shapeparts
