#pragma once

#include <array>
#include <cmath>
#include <string>
#include <vector>

#include "xychain/linalg.hpp"

namespace xychain {

/// Dimensionless parameters of the three-spin chain: lambda is the ratio
/// of the three-body to the two-body coupling strength.
struct ChainParams {
  double lambda = 0.0;

  /// Evolution frequency k = sqrt(2 + lambda^2/4); always >= sqrt(2).
  double k() const { return std::sqrt(2.0 + 0.25 * lambda * lambda); }
};

/// Physical parameters of the three-spin register (all in Hz).
struct NmrParams {
  double nu1 = 0.0;
  double nu2 = 0.0;
  double nu3 = 0.0;
  double j12 = 0.0;
  double j23 = 0.0;
  double j13 = 0.0;
  double delta_nu13 = 0.0;

  /// The C1/H2/C3 register of carbon-13 labelled trichloroethylene.
  /// Individual offsets are conventions (carriers on resonance with the
  /// carbon mean and the proton); only their difference is pinned.
  static NmrParams tce();

  static NmrParams from_json_file(const std::string& path);
  static NmrParams from_json_text(const std::string& text);

  /// Couplings must be finite; j12 and j23 appear in delay denominators
  /// and must be nonzero.
  void validate() const;
};

enum class Axis { X, Y, Z };

Axis axis_from_string(const std::string& s);
std::string axis_to_string(Axis a);

/// 2x2 Pauli matrix.
Matrix pauli(Axis axis);

/// 8x8 embedding I x..x sigma_axis x..x I acting on `site` (1..3) under
/// basis ordering |q1 q2 q3>, index 4 q1 + 2 q2 + q3.
Matrix pauli_at(int site, Axis axis);

enum class PauliLabel { I, X, Y, Z };

/// One term of a three-site Pauli-basis expansion.
struct PauliString {
  std::array<PauliLabel, 3> labels;
  Complex coefficient;
};

Matrix pauli_string_matrix(const std::array<PauliLabel, 3>& labels);
std::string pauli_string_name(const std::array<PauliLabel, 3>& labels);

/// XY chain with the middle-spin-mediated three-body term.
Matrix build_h_xy3(const ChainParams& p);

/// The two commuting halves of the chain Hamiltonian.
Matrix build_c(const ChainParams& p);
Matrix build_d(const ChainParams& p);

/// Weak-coupling register Hamiltonian (angular frequency units, rad/s);
/// diagonal.
Matrix build_h_nmr_weak(const NmrParams& p);

/// Adds the isotropic carbon-carbon coupling; Hermitian, non-diagonal.
Matrix build_h_nmr_strong(const NmrParams& p);

/// Density operator on the three-qubit register. `Full` carries trace 1,
/// `Deviation` only the traceless part.
struct DensityOperator {
  enum class Convention { Full, Deviation };

  DensityOperator(Matrix m, Convention c);

  Matrix matrix;
  Convention convention;
};

/// Coefficients tr(P^dag rho)/8 over all 64 Pauli strings in lexicographic
/// (I,X,Y,Z) order; reassembly reproduces the operator exactly.
std::vector<PauliString> pauli_decompose(const DensityOperator& rho);

Matrix reassemble(const std::vector<PauliString>& terms);

}  // namespace xychain
