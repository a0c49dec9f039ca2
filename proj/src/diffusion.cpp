#include "shapeparts/diffusion.hpp"

namespace shapeparts {

DiffusionMatrix diffuse(const RestrictedVisibility& a_n,
                        bool include_direct_edges) {
  Eigen::MatrixXi d = a_n.A * a_n.A;
  if (include_direct_edges) d += a_n.A;
  d.diagonal().setZero();
  return DiffusionMatrix{std::move(d), a_n.radius};
}

} // namespace shapeparts
