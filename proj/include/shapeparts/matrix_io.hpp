#pragma once

#include <Eigen/Core>

#include <iosfwd>

namespace shapeparts {

// Plain-text square integer matrix: first line N, then N rows of
// space-separated entries.
void write_matrix(std::ostream& out, const Eigen::MatrixXi& m);
Eigen::MatrixXi read_matrix(std::istream& in);

} // namespace shapeparts
