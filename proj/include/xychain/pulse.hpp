#pragma once

#include <array>
#include <string>
#include <variant>
#include <vector>

#include "xychain/spin_model.hpp"

namespace xychain {

enum class RotAxis { PlusX, MinusX, PlusY, MinusY };

std::string rot_axis_to_string(RotAxis a);

/// Nonselective rotation [angle]_axis = e^{-i(angle/2) sum sigma_axis} over
/// the target sites; a minus axis flips the generator sign.
struct HardRotation {
  std::vector<int> targets;
  RotAxis axis = RotAxis::PlusX;
  double angle = 0.0;
};

/// Chemical-shift rotation e^{-i(angle/2) sigma_z} on one site.
struct ZRotation {
  int site = 1;
  double angle = 0.0;
};

/// Where a coupling evolution sits in the compiled structure; drives the
/// delay bookkeeping of the duration estimate.
enum class ZzRole { None, ThreeSpinCore, TiltBlock, Central };

/// e^{-i(angle/2) sigma_z sigma_z} on a coupled pair. Only the chain
/// couplings (1,2) and (2,3) are schedulable; the end-to-end coupling is
/// never used.
struct ZZEvolution {
  std::array<int, 2> sites{1, 2};
  double angle = 0.0;
  ZzRole role = ZzRole::None;
};

/// e^{+i(angle/2) sigma_z sigma_z sigma_z} on all three spins.
struct ZZZEvolution {
  double angle = 0.0;
};

/// Hardware wait; replay-neutral annotation.
struct Delay {
  double seconds = 0.0;
  std::string note;
};

using PulseOp = std::variant<HardRotation, ZRotation, ZZEvolution, ZZZEvolution, Delay>;

enum class SignVariant { Plus, Minus };
enum class SequenceTarget { UC, UD, ThreeSpinRotation, SelectiveRotation, Composite };

/// Ordered instruction stream; ops.front() is applied first.
struct PulseSequence {
  std::vector<PulseOp> ops;
  SignVariant sign = SignVariant::Plus;
  SequenceTarget target = SequenceTarget::Composite;
  double t = 0.0;
  double lambda = 0.0;
};

/// Frame tilt angles of the two effective-rotation axes:
/// theta_c = atan2(2 sqrt 2, lambda) in (0, pi), theta_d = pi - theta_c.
std::pair<double, double> rotation_frame_angles(const ChainParams& p);

/// Pulse program for the C-half evolution e^{-itC}. Requires lambda >= 0;
/// negative couplings compile through the site-exchange symmetry. At
/// lambda = 0 the tilt blocks vanish and are not emitted.
PulseSequence compile_uc(const ChainParams& p, double t, SignVariant sign);

/// Mirror program for the D-half evolution e^{-itD}.
PulseSequence compile_ud(const ChainParams& p, double t, SignVariant sign);

enum class Flavor { C, D };

/// Pulse program for the three-spin rotation e^{i eta L_z} of the given
/// flavor: carbon sandwich around the all-z core, core lowered to proton
/// rotations and neighbor couplings.
PulseSequence lower_zzz(double eta, Flavor flavor, SignVariant sign);

/// Carbon-selective pi/2 rotation about the given axis, rewritten as
/// nonselective pulses around a chemical-shift z-rotation. Site 2 is a
/// proton and already selective; it is rejected.
PulseSequence lower_selective_rotation(int site, RotAxis axis);

/// Expands every three-spin evolution into its one- and two-qubit core.
PulseSequence lower_sequence(const PulseSequence& seq);

/// Relabels sites 1 <-> 3 in every op (conjugation by the end-exchange
/// permutation); used to compile negative couplings.
PulseSequence exchange_sites_13(const PulseSequence& seq);

/// Joins a C-half and a D-half program (C half runs first). With `fuse`
/// the four carbon pulses at the junction are replaced by one hard
/// [-pi/2]_x pulse on both carbons plus bookkeeping z-rotations.
PulseSequence concatenate(const PulseSequence& uc, const PulseSequence& ud,
                          bool fuse = true);

/// Ideal replay: multiplies exact gate exponentials, first-applied op
/// rightmost. Malformed ops are rejected.
Matrix simulate_sequence(const PulseSequence& seq);

Matrix op_matrix(const PulseOp& op);

/// Occurrence model for the hardware timing: each coupling evolution is
/// split into refocused segments, with a pair of shaped selective pi
/// pulses per evolution when widths are enabled.
struct DurationConfig {
  int segments_per_evolution = 4;
  int selective_pi_per_evolution = 2;
  bool include_pulse_widths = true;
  double c1_selective_pi_seconds = 6.2649e-3;
  double c3_selective_pi_seconds = 2.8252e-3;
};

struct DurationEstimate {
  double d1 = 0, d2 = 0, d3 = 0, d4 = 0, d5 = 0, d6 = 0;
  double total = 0;
  struct Item {
    std::string label;
    int count = 0;
    double each = 0;
    double subtotal = 0;
  };
  std::vector<Item> breakdown;
};

/// Physical duration from the closed-form delay table. Requires a
/// compiled sequence (role annotations present), lambda >= 0 and positive
/// couplings on the scheduled pairs.
DurationEstimate estimate_duration(const PulseSequence& seq, const NmrParams& nmr,
                                   const DurationConfig& config = {});

/// One op per line: ROT / ZROT / ZZ / ZZZ / DELAY.
std::string sequence_to_text(const PulseSequence& seq);

std::string sequence_to_json_text(const PulseSequence& seq);

std::string duration_to_json_text(const DurationEstimate& est);

}  // namespace xychain
