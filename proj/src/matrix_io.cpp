#include "shapeparts/matrix_io.hpp"

#include <istream>
#include <ostream>
#include <stdexcept>

namespace shapeparts {

void write_matrix(std::ostream& out, const Eigen::MatrixXi& m) {
  out << m.rows() << '\n';
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    for (Eigen::Index j = 0; j < m.cols(); ++j) {
      if (j) out << ' ';
      out << m(i, j);
    }
    out << '\n';
  }
}

Eigen::MatrixXi read_matrix(std::istream& in) {
  Eigen::Index n = 0;
  if (!(in >> n) || n < 0)
    throw std::runtime_error("matrix file: bad size header");
  Eigen::MatrixXi m(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j)
      if (!(in >> m(i, j)))
        throw std::runtime_error("matrix file: truncated at row " +
                                 std::to_string(i));
  return m;
}

} // namespace shapeparts
