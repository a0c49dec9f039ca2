#pragma once

#include "shapeparts/diffusion.hpp"

#include <Eigen/Core>

#include <vector>

namespace shapeparts {

inline constexpr double kReplicatorTol = 1e-8;
inline constexpr int kReplicatorMaxIter = 10000;
inline constexpr Eigen::Index kMinClusterSize = 4;

// Run of consecutive contour indices modulo N (wraparound allowed).
struct CircularRun {
  Eigen::Index start = 0;
  Eigen::Index length = 0;
};

struct Cluster {
  Eigen::Index start = 0;
  Eigen::Index length = 0;
  double cohesiveness = 0.0; // quadratic form at the uniform member vector

  std::vector<Eigen::Index> members(Eigen::Index n_points) const;
};

// Clusters in extraction order (decreasing dominance) plus the leftover
// nodes; together they partition {0..N-1}.
struct Decomposition {
  std::vector<Cluster> clusters;
  std::vector<Eigen::Index> unassigned; // sorted
  Eigen::Index n_points = 0;
};

// x^T M x.
double objective(const Eigen::MatrixXd& m, const Eigen::VectorXd& x);

// One multiplicative update x_i <- x_i (Mx)_i / x^T Mx, clamped to the
// simplex. Returns the new objective value; x must have positive objective.
double replicator_step(const Eigen::MatrixXd& m, Eigen::VectorXd& x);

struct ReplicatorResult {
  Eigen::VectorXd x;
  int iterations = 0;
  bool degenerate = false; // x^T Mx hit zero, no cohesive set under x0
};

// Iterates until the objective improves by less than tol or max_iter is
// reached. The objective is non-decreasing along the trajectory.
ReplicatorResult replicator_run(const Eigen::MatrixXd& m, Eigen::VectorXd x0,
                                double tol = kReplicatorTol,
                                int max_iter = kReplicatorMaxIter);

// Indices with mass above eps; eps < 0 selects the default 1/(10N).
std::vector<Eigen::Index> support(const Eigen::VectorXd& x, double eps = -1.0);

// Longest run of circularly consecutive indices in the set; ties break to the
// smallest start index. The full set {0..N-1} yields start 0.
CircularRun longest_circular_run(const std::vector<Eigen::Index>& indices,
                                 Eigen::Index n_points);

// Quadratic form at the uniform 1/|members| vector over the given members.
double uniform_cohesiveness(const Eigen::MatrixXi& d,
                            const std::vector<Eigen::Index>& members);

// Iterative peeling: solve on the active submatrix, keep the longest
// consecutive run of the support as a cluster when it has at least
// kMinClusterSize nodes (otherwise its nodes go unassigned), remove the run,
// repeat until nothing is active. Cohesiveness is reported on the original
// matrix.
Decomposition extract_all(const DiffusionMatrix& d);

} // namespace shapeparts
