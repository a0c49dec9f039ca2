#include "shapeparts/metrics.hpp"

#include <stdexcept>

namespace shapeparts {

namespace {

// -1 for unassigned, otherwise the cluster index.
std::vector<int> cluster_of(const Decomposition& d) {
  std::vector<int> label(static_cast<std::size_t>(d.n_points), -1);
  for (std::size_t c = 0; c < d.clusters.size(); ++c)
    for (const Eigen::Index i : d.clusters[c].members(d.n_points))
      label[static_cast<std::size_t>(i)] = static_cast<int>(c);
  return label;
}

} // namespace

double graph_density(const VisibilityMatrix& a) {
  const Eigen::Index n = a.size();
  if (n < 2) throw std::invalid_argument("graph density needs N >= 2");
  long long edges = 0;
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j)
      if (a.A(i, j) != 0) ++edges;
  const double max_edges = 0.5 * static_cast<double>(n) *
                           static_cast<double>(n - 1);
  return static_cast<double>(edges) / max_edges;
}

MetricsReport internal_external_density(const VisibilityMatrix& a,
                                        const Decomposition& d,
                                        CrossPairPolicy policy) {
  const Eigen::Index n = a.size();
  const std::vector<int> label = cluster_of(d);
  MetricsReport report;
  report.graph_density = graph_density(a);

  long long within_pairs_total = 0; // ordered pair capacity inside clusters
  for (const Cluster& c : d.clusters) {
    const auto members = c.members(d.n_points);
    const long long sz = static_cast<long long>(members.size());
    within_pairs_total += sz * (sz - 1);
    long long internal_edges = 0; // ordered
    for (const Eigen::Index i : members)
      for (const Eigen::Index j : members)
        if (i != j && a.A(i, j) != 0) ++internal_edges;
    report.per_cluster_internal.push_back(
        sz > 1 ? static_cast<double>(internal_edges) /
                     static_cast<double>(sz * (sz - 1))
               : 0.0);
  }
  if (!report.per_cluster_internal.empty()) {
    double sum = 0.0;
    for (const double v : report.per_cluster_internal) sum += v;
    report.internal_density =
        sum / static_cast<double>(report.per_cluster_internal.size());
  }

  long long cross_edges = 0; // ordered
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = 0; j < n; ++j) {
      if (i == j || a.A(i, j) == 0) continue;
      const int li = label[static_cast<std::size_t>(i)];
      const int lj = label[static_cast<std::size_t>(j)];
      if (li >= 0 && li == lj) continue; // within one cluster
      if (policy == CrossPairPolicy::BetweenClustersOnly &&
          (li < 0 || lj < 0))
        continue;
      ++cross_edges;
    }
  }
  const long long denom =
      static_cast<long long>(n) * static_cast<long long>(n - 1) -
      within_pairs_total;
  report.external_density =
      denom > 0 ? static_cast<double>(cross_edges) / static_cast<double>(denom)
                : 0.0;
  return report;
}

double modularity(const VisibilityMatrix& a, const Decomposition& d) {
  const Eigen::Index n = a.size();
  const std::vector<int> label = cluster_of(d);
  long long edges = 0;
  std::vector<long long> within(d.clusters.size(), 0);
  std::vector<long long> endpoints(d.clusters.size(), 0);
  for (Eigen::Index i = 0; i < n; ++i) {
    for (Eigen::Index j = i + 1; j < n; ++j) {
      if (a.A(i, j) == 0) continue;
      ++edges;
      const int li = label[static_cast<std::size_t>(i)];
      const int lj = label[static_cast<std::size_t>(j)];
      if (li >= 0) ++endpoints[static_cast<std::size_t>(li)];
      if (lj >= 0) ++endpoints[static_cast<std::size_t>(lj)];
      if (li >= 0 && li == lj) ++within[static_cast<std::size_t>(li)];
    }
  }
  if (edges == 0) throw std::invalid_argument("modularity needs at least one edge");
  double q = 0.0;
  for (std::size_t c = 0; c < d.clusters.size(); ++c) {
    const double e_ii = static_cast<double>(within[c]) /
                        static_cast<double>(edges);
    const double a_i = static_cast<double>(endpoints[c]) /
                       (2.0 * static_cast<double>(edges));
    q += e_ii - a_i * a_i;
  }
  return q;
}

std::vector<int> segmentation_labels(const Decomposition& d) {
  std::vector<int> labels(static_cast<std::size_t>(d.n_points), 0);
  for (std::size_t c = 0; c < d.clusters.size(); ++c)
    for (const Eigen::Index i : d.clusters[c].members(d.n_points))
      labels[static_cast<std::size_t>(i)] = static_cast<int>(c) + 1;
  return labels;
}

double rand_index(const std::vector<int>& s1, const std::vector<int>& s2) {
  if (s1.size() != s2.size())
    throw std::invalid_argument("rand_index: segmentations differ in length");
  const std::size_t n = s1.size();
  if (n < 2) throw std::invalid_argument("rand_index needs N >= 2");
  const auto together = [](const std::vector<int>& s, std::size_t i,
                           std::size_t j) {
    return s[i] != 0 && s[i] == s[j];
  };
  long long agree = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      if (together(s1, i, j) == together(s2, i, j)) ++agree;
  const double pairs = 0.5 * static_cast<double>(n) *
                       static_cast<double>(n - 1);
  return static_cast<double>(agree) / pairs;
}

MetricsReport compute_metrics(const VisibilityMatrix& a,
                              const Decomposition& d, CrossPairPolicy policy) {
  MetricsReport report = internal_external_density(a, d, policy);
  report.modularity = modularity(a, d);
  return report;
}

} // namespace shapeparts
