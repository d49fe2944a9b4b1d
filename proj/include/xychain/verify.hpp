#pragma once

#include <string>
#include <vector>

#include "xychain/spin_model.hpp"

namespace xychain {

struct CheckResult {
  std::string name;
  double distance = 0.0;
  double tolerance = 0.0;
  bool pass = false;
};

/// Residual of a candidate propagator matrix against the product of the
/// two commuting half evolutions; the sharp detector for wrong entries.
double check_propagator_matrix(const Matrix& u, const ChainParams& p, double t);

/// Runs the whole invariant suite over the coupling sweep.
std::vector<CheckResult> run_verification(
    const std::vector<double>& lambdas = {-2.0, 0.0, 1.5, 2.71199, 4.0});

bool all_pass(const std::vector<CheckResult>& results);

std::string verification_to_json_text(const std::vector<CheckResult>& results);

}  // namespace xychain
