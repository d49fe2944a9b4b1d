#pragma once

#include <numbers>

#include "xychain/spin_model.hpp"

namespace xychain {

/// Transfer time in the absence of the three-body coupling, pi/(2 sqrt 2);
/// the time unit of all reported sweeps.
inline const double kT0 = std::numbers::pi / (2.0 * std::numbers::sqrt2);

/// State-transfer times in chain time units. The fast direction is 3->1
/// for lambda >= 0 and flips with the sign of lambda; the two directions
/// always add up to the period pi/k.
struct TransferTimes {
  double t_3to1 = 0.0;
  double t_1to3 = 0.0;
  double period = 0.0;
  double t0 = kT0;
};

/// Closed-form propagator U(t) of the chain Hamiltonian; unitary to 1e-12.
Matrix propagate_analytic(const ChainParams& p, double t);

TransferTimes transfer_times(const ChainParams& p);

enum class Direction { OneToThree, ThreeToOne };

/// Closed-form propagator at the transfer time of the given direction;
/// equals propagate_analytic there.
Matrix transfer_propagator(const ChainParams& p, Direction dir);

/// The coupling strength above which even the slower transfer direction
/// beats the plain-chain time t0. Bisection on [2,4] to 1e-8.
double find_speedup_threshold();

/// Three-qubit permutation exchanging sites 1 and 3 (a 1-2, 2-3, 1-2
/// swap cascade); involution.
Matrix swap_13();

}  // namespace xychain
