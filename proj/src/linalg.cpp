#include "xychain/linalg.hpp"

#include <Eigen/Eigenvalues>
#include <cmath>
#include <stdexcept>

namespace xychain {

bool is_hermitian(const Matrix& a, double tol) {
  if (a.rows() != a.cols()) return false;
  return (a - a.adjoint()).cwiseAbs().maxCoeff() <= tol;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  if (a.rows() != a.cols() || b.rows() != b.cols())
    throw std::invalid_argument("kron: inputs must be square");
  const Eigen::Index dim = a.rows() * b.rows();
  if (dim > kMaxDim)
    throw std::invalid_argument("kron: result dimension exceeds supported range");
  Matrix out(dim, dim);
  for (Eigen::Index i = 0; i < a.rows(); ++i)
    for (Eigen::Index j = 0; j < a.cols(); ++j)
      out.block(i * b.rows(), j * b.cols(), b.rows(), b.cols()) = a(i, j) * b;
  return out;
}

Matrix expm_hermitian_generator(const Matrix& h, double t) {
  if (!is_hermitian(h, 1e-10))
    throw std::invalid_argument("expm_hermitian_generator: generator is not Hermitian");
  Eigen::SelfAdjointEigenSolver<Matrix> es(h);
  if (es.info() != Eigen::Success)
    throw std::runtime_error("expm_hermitian_generator: eigendecomposition failed");
  const Eigen::VectorXd w = es.eigenvalues();
  Vector phases(w.size());
  for (Eigen::Index i = 0; i < w.size(); ++i)
    phases(i) = std::exp(Complex(0.0, -w(i) * t));
  return es.eigenvectors() * phases.asDiagonal() * es.eigenvectors().adjoint();
}

double dist_up_to_global_phase(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols())
    throw std::invalid_argument("dist_up_to_global_phase: dimension mismatch");
  const Complex tr = (a.adjoint() * b).trace();
  const double mag = std::abs(tr);
  if (mag < 1e-300)
    return std::sqrt(a.squaredNorm() + b.squaredNorm());
  return (a - (std::conj(tr) / mag) * b).norm();
}

}  // namespace xychain
