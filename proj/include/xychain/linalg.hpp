#pragma once

#include <Eigen/Dense>
#include <complex>

namespace xychain {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;

/// Entrywise Hermiticity tolerance for operator constructors.
inline constexpr double kHermitianTol = 1e-12;
/// Frobenius tolerance for unitarity checks.
inline constexpr double kUnitaryTol = 1e-10;
/// Largest operator dimension in play (three qubits).
inline constexpr int kMaxDim = 8;

bool is_hermitian(const Matrix& a, double tol = kHermitianTol);

/// Kronecker product. The result dimension must stay within the
/// three-qubit range; larger products are rejected.
Matrix kron(const Matrix& a, const Matrix& b);

/// e^{-i h t} for Hermitian h, computed by eigendecomposition so the
/// result is unitary up to round-off. Non-Hermitian input (beyond
/// 1e-10 entrywise) is rejected.
Matrix expm_hermitian_generator(const Matrix& h, double t);

/// min over unit-modulus phi of ||a - phi b||_F, i.e.
/// sqrt(||a||_F^2 + ||b||_F^2 - 2 |tr(a^dag b)|). Evaluated by aligning
/// the optimal phase and subtracting entrywise, which avoids the
/// cancellation that kills the closed form near zero distance.
double dist_up_to_global_phase(const Matrix& a, const Matrix& b);

}  // namespace xychain
