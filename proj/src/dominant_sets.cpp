#include "shapeparts/dominant_sets.hpp"

#include <algorithm>
#include <stdexcept>

namespace shapeparts {

std::vector<Eigen::Index> Cluster::members(Eigen::Index n_points) const {
  std::vector<Eigen::Index> out;
  out.reserve(static_cast<std::size_t>(length));
  for (Eigen::Index k = 0; k < length; ++k)
    out.push_back((start + k) % n_points);
  return out;
}

double objective(const Eigen::MatrixXd& m, const Eigen::VectorXd& x) {
  if (m.rows() != x.size())
    throw std::invalid_argument("objective: dimension mismatch");
  return x.dot(m * x);
}

double replicator_step(const Eigen::MatrixXd& m, Eigen::VectorXd& x) {
  const Eigen::VectorXd mx = m * x;
  const double j = x.dot(mx);
  if (j <= 0.0) return 0.0;
  x = x.cwiseProduct(mx) / j;
  x = x.cwiseMax(0.0); // round-off only
  x /= x.sum();
  return x.dot(m * x);
}

namespace {

// Mass below this is numerically extinct: its contribution to any (Mx)_i sum
// sits dozens of orders below the double-precision noise floor of the
// retained terms, so compressing such coordinates out of the working set
// leaves the trajectory unchanged at machine precision.
constexpr double kExtinctMass = 1e-40;
constexpr int kCompressStride = 32;

} // namespace

ReplicatorResult replicator_run(const Eigen::MatrixXd& m, Eigen::VectorXd x0,
                                double tol, int max_iter) {
  if (m.rows() != x0.size())
    throw std::invalid_argument("replicator_run: dimension mismatch");
  const Eigen::Index n = x0.size();
  ReplicatorResult res;

  std::vector<Eigen::Index> alive(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) alive[static_cast<std::size_t>(i)] = i;
  Eigen::MatrixXd work = m;
  Eigen::VectorXd x = std::move(x0);

  Eigen::VectorXd mx = work * x;
  double j = x.dot(mx);
  if (j <= 0.0) {
    res.x = Eigen::VectorXd::Zero(n);
    for (std::size_t k = 0; k < alive.size(); ++k)
      res.x(alive[k]) = x(static_cast<Eigen::Index>(k));
    res.degenerate = true;
    return res;
  }

  for (int it = 1; it <= max_iter; ++it) {
    x = x.cwiseProduct(mx) / j;
    x = x.cwiseMax(0.0);
    x /= x.sum();

    if (it % kCompressStride == 0 && x.size() > 4) {
      const Eigen::Index live =
          (x.array() > kExtinctMass).count();
      if (live < x.size() && live >= 1) {
        std::vector<Eigen::Index> keep;
        keep.reserve(static_cast<std::size_t>(live));
        for (Eigen::Index k = 0; k < x.size(); ++k)
          if (x(k) > kExtinctMass) keep.push_back(k);
        Eigen::VectorXd xs(live);
        Eigen::MatrixXd ws(live, live);
        std::vector<Eigen::Index> alive_next(static_cast<std::size_t>(live));
        for (Eigen::Index a = 0; a < live; ++a) {
          xs(a) = x(keep[static_cast<std::size_t>(a)]);
          alive_next[static_cast<std::size_t>(a)] =
              alive[static_cast<std::size_t>(keep[static_cast<std::size_t>(a)])];
          for (Eigen::Index b = 0; b < live; ++b)
            ws(a, b) = work(keep[static_cast<std::size_t>(a)],
                            keep[static_cast<std::size_t>(b)]);
        }
        x = std::move(xs);
        work = std::move(ws);
        alive = std::move(alive_next);
        x /= x.sum();
      }
    }

    mx.noalias() = work * x;
    const double j_next = x.dot(mx);
    res.iterations = it;
    if (j_next <= 0.0) {
      res.degenerate = true;
      break;
    }
    const bool converged = j_next - j < tol;
    j = j_next;
    if (converged) break;
  }

  res.x = Eigen::VectorXd::Zero(n);
  for (std::size_t k = 0; k < alive.size(); ++k)
    res.x(alive[k]) = x(static_cast<Eigen::Index>(k));
  return res;
}

std::vector<Eigen::Index> support(const Eigen::VectorXd& x, double eps) {
  if (eps < 0.0) eps = 1.0 / (10.0 * static_cast<double>(x.size()));
  std::vector<Eigen::Index> out;
  for (Eigen::Index i = 0; i < x.size(); ++i)
    if (x(i) > eps) out.push_back(i);
  return out;
}

CircularRun longest_circular_run(const std::vector<Eigen::Index>& indices,
                                 Eigen::Index n_points) {
  if (indices.empty())
    throw std::invalid_argument("longest_circular_run: empty index set");
  std::vector<char> in(static_cast<std::size_t>(n_points), 0);
  for (const Eigen::Index i : indices) in[static_cast<std::size_t>(i)] = 1;

  if (indices.size() == static_cast<std::size_t>(n_points))
    return CircularRun{0, n_points};

  CircularRun best;
  for (Eigen::Index s = 0; s < n_points; ++s) {
    if (!in[s]) continue;
    if (in[(s + n_points - 1) % n_points]) continue; // not a run start
    Eigen::Index len = 1;
    while (in[(s + len) % n_points]) ++len;
    if (len > best.length) best = CircularRun{s, len};
  }
  return best;
}

double uniform_cohesiveness(const Eigen::MatrixXi& d,
                            const std::vector<Eigen::Index>& members) {
  if (members.empty()) return 0.0;
  double sum = 0.0;
  for (const Eigen::Index i : members)
    for (const Eigen::Index j : members) sum += d(i, j);
  const double nc = static_cast<double>(members.size());
  return sum / (nc * nc);
}

Decomposition extract_all(const DiffusionMatrix& d) {
  const Eigen::Index n = d.size();
  const Eigen::MatrixXd weights = d.D.cast<double>();

  Decomposition out;
  out.n_points = n;

  std::vector<Eigen::Index> active(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) active[static_cast<std::size_t>(i)] = i;

  const auto finish_unassigned = [&]() {
    out.unassigned.insert(out.unassigned.end(), active.begin(), active.end());
    active.clear();
  };

  while (!active.empty()) {
    const Eigen::Index m = static_cast<Eigen::Index>(active.size());
    Eigen::MatrixXd sub(m, m);
    for (Eigen::Index r = 0; r < m; ++r)
      for (Eigen::Index cidx = 0; cidx < m; ++cidx)
        sub(r, cidx) = weights(active[r], active[cidx]);

    const Eigen::VectorXd x0 =
        Eigen::VectorXd::Constant(m, 1.0 / static_cast<double>(m));
    const ReplicatorResult res = replicator_run(sub, x0);
    if (res.degenerate) { // residual graph is edgeless
      finish_unassigned();
      break;
    }
    const std::vector<Eigen::Index> sup = support(res.x);
    if (sup.empty()) {
      finish_unassigned();
      break;
    }

    std::vector<Eigen::Index> sup_orig;
    sup_orig.reserve(sup.size());
    for (const Eigen::Index s : sup) sup_orig.push_back(active[s]);

    const CircularRun run = longest_circular_run(sup_orig, n);
    std::vector<Eigen::Index> run_members;
    run_members.reserve(static_cast<std::size_t>(run.length));
    for (Eigen::Index k = 0; k < run.length; ++k)
      run_members.push_back((run.start + k) % n);

    if (run.length >= kMinClusterSize) {
      out.clusters.push_back(Cluster{
          run.start, run.length, uniform_cohesiveness(d.D, run_members)});
    } else {
      out.unassigned.insert(out.unassigned.end(), run_members.begin(),
                            run_members.end());
    }

    std::vector<char> removed(static_cast<std::size_t>(n), 0);
    for (const Eigen::Index i : run_members)
      removed[static_cast<std::size_t>(i)] = 1;
    std::erase_if(active, [&](Eigen::Index i) {
      return removed[static_cast<std::size_t>(i)] != 0;
    });
  }

  std::sort(out.unassigned.begin(), out.unassigned.end());
  return out;
}

} // namespace shapeparts
