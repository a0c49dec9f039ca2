#include "shapeparts/randomization.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <random>
#include <thread>

namespace shapeparts {

namespace {

std::uint64_t splitmix64(std::uint64_t z) {
  z += 0x9E3779B97F4A7C15ULL;
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

struct Edge {
  Eigen::Index a, b;
};

} // namespace

std::uint64_t derive_seed(std::uint64_t base, std::uint64_t index) {
  return splitmix64(base ^ splitmix64(index + 1));
}

RewireResult rewire_preserving_degrees(const DiffusionMatrix& d,
                                       int swap_factor, std::uint64_t seed) {
  const Eigen::Index n = d.size();
  std::vector<Edge> edges;
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = i + 1; j < n; ++j)
      if (d.D(i, j) != 0) edges.push_back(Edge{i, j});

  if (edges.size() < 2) return RewireResult{d, false};

  Eigen::MatrixXi g = d.D;
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<std::size_t> pick(0, edges.size() - 1);
  const std::size_t attempts = static_cast<std::size_t>(swap_factor) *
                               edges.size();
  for (std::size_t t = 0; t < attempts; ++t) {
    const std::size_t e1 = pick(rng);
    const std::size_t e2 = pick(rng);
    if (e1 == e2) continue;
    const Eigen::Index a = edges[e1].a;
    const Eigen::Index b = edges[e1].b;
    Eigen::Index c = edges[e2].a;
    Eigen::Index e = edges[e2].b;
    if (rng() & 1) std::swap(c, e); // both swap orientations reachable
    if (a == c || a == e || b == c || b == e) continue;
    if (g(a, e) != 0 || g(c, b) != 0) continue;
    const int w1 = g(a, b);
    const int w2 = g(c, e);
    g(a, b) = g(b, a) = 0;
    g(c, e) = g(e, c) = 0;
    g(a, e) = g(e, a) = w1;
    g(c, b) = g(b, c) = w2;
    edges[e1] = Edge{a, e};
    edges[e2] = Edge{c, b};
  }
  return RewireResult{DiffusionMatrix{std::move(g), d.radius}, true};
}

ThresholdReport aggregate_samples(std::vector<double> samples,
                                  double std_multiplier, bool rewire_warning) {
  std::sort(samples.begin(), samples.end());
  ThresholdReport report;
  report.rewire_warning = rewire_warning;
  const std::size_t n = samples.size();
  if (n > 0) {
    double sum = 0.0;
    for (const double v : samples) sum += v;
    report.mean = sum / static_cast<double>(n);
    if (n > 1) {
      double sq = 0.0;
      for (const double v : samples) sq += (v - report.mean) * (v - report.mean);
      report.stddev = std::sqrt(sq / static_cast<double>(n - 1));
    }
  }
  report.threshold = report.mean + std_multiplier * report.stddev;
  report.samples = std::move(samples);
  return report;
}

ThresholdReport null_cohesiveness_samples(const DiffusionMatrix& d,
                                          const NullEnsembleConfig& cfg) {
  const int count = std::max(cfg.num_graphs, 0);
  std::vector<std::vector<double>> per_graph(static_cast<std::size_t>(count));
  std::atomic<bool> warning{false};
  std::atomic<int> next{0};

  const auto worker = [&]() {
    for (;;) {
      const int i = next.fetch_add(1);
      if (i >= count) return;
      const RewireResult rr = rewire_preserving_degrees(
          d, cfg.swap_factor, derive_seed(cfg.rng_seed, static_cast<std::uint64_t>(i)));
      if (!rr.rewired) warning = true;
      const Decomposition dec = extract_all(rr.d);
      auto& out = per_graph[static_cast<std::size_t>(i)];
      out.reserve(dec.clusters.size());
      for (const Cluster& c : dec.clusters) out.push_back(c.cohesiveness);
    }
  };

  unsigned n_threads = cfg.num_threads > 0
                           ? static_cast<unsigned>(cfg.num_threads)
                           : std::max(1u, std::thread::hardware_concurrency());
  n_threads = std::min<unsigned>(n_threads, static_cast<unsigned>(std::max(count, 1)));
  if (n_threads <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(n_threads);
    for (unsigned t = 0; t < n_threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  std::vector<double> samples;
  for (const auto& g : per_graph)
    samples.insert(samples.end(), g.begin(), g.end());
  return aggregate_samples(std::move(samples), cfg.std_multiplier, warning);
}

Decomposition select_clusters(const Decomposition& d,
                              const ThresholdReport& report) {
  Decomposition out;
  out.n_points = d.n_points;
  out.unassigned = d.unassigned;
  for (const Cluster& c : d.clusters) {
    if (c.cohesiveness > report.threshold) {
      out.clusters.push_back(c);
    } else {
      const auto members = c.members(d.n_points);
      out.unassigned.insert(out.unassigned.end(), members.begin(),
                            members.end());
    }
  }
  std::sort(out.unassigned.begin(), out.unassigned.end());
  return out;
}

} // namespace shapeparts
