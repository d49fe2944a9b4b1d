#pragma once

#include <array>
#include <cstddef>
#include <string>
#include <vector>

#include "xychain/propagator.hpp"

namespace xychain {

/// (alpha|0> + beta|1>) on qubit 1, spectators in the basis state
/// |q2 q3> = spectator_bits (2 bits, q2 high).
struct PureState {
  Complex alpha;
  Complex beta;
  int spectator_bits = 0;

  void validate() const;
};

/// A single-Pauli deviation density operator (unit factors dropped).
struct DeviationPauli {
  Axis axis = Axis::X;
  int site = 3;
};

/// U(t)|psi>; norm preserved.
Vector evolve_pure(const ChainParams& p, const PureState& state, double t);

/// One row of the conditional-transfer table: the transferred qubit-3
/// operator and the (possibly entangled) factor left on sites 1,2.
struct ConditionalTransfer {
  int spectator_bits = 0;
  Matrix block_12;      // 4x4
  Matrix transferred;   // 2x2
};

/// Sends (alpha,beta) through the 1->3 transfer for each spectator basis
/// state. The conjugated output factorizes exactly as block_12 (x)
/// transferred; the factorization is checked internally.
std::array<ConditionalTransfer, 4> conditional_transfer_table(
    const ChainParams& p, Complex alpha, Complex beta);

/// U(t) P U(t)^dag by conjugation. For qubit-3 x/y deviations the result
/// is cross-checked against evolution under the commuting half that
/// drives it (x: the C half, y: the D half), and mirrored for qubit 1.
DensityOperator evolve_deviation(const ChainParams& p, const DeviationPauli& state,
                                 double t);

struct TraceRow {
  double t = 0.0;
  double c_source = 0.0;
  double c_middle = 0.0;
  double c_target = 0.0;
};

struct TransferReport {
  double lambda = 0.0;
  Axis axis = Axis::X;
  TransferTimes times;
  std::vector<TraceRow> trace;
  std::vector<PauliString> final_pauli_expansion;
  std::size_t peak_target_row = 0;  // first maximum of |c_target|
  std::size_t peak_return_row = 0;  // first later maximum of c_source
};

/// Pauli-coefficient trace of a qubit-3 deviation along the grid.
/// Coefficients are tr(P^dag rho)/8 on the axis-dependent source, middle
/// and target strings.
TransferReport overlap_trace(const ChainParams& p, Axis axis,
                             const std::vector<double>& t_grid);

struct BellTransferRecord {
  std::string input;    // Bell label on sites 2,3
  std::string output;   // Bell label on sites 1,2
  Eigen::Vector4cd state_12;
  Complex phase;        // unit modulus
};

/// Sends |0>_1 (x) Bell_23 through the 1->3 transfer; the output leaves
/// |0> on site 3 and a phase-tagged Bell state on sites 1,2.
std::array<BellTransferRecord, 4> bell_transfer(const ChainParams& p);

/// CSV rows with header t,c_source,c_middle,c_target (12 significant digits).
std::string trace_to_csv(const TransferReport& report);

/// Full report as a JSON document.
std::string report_to_json_text(const TransferReport& report);

}  // namespace xychain
