#pragma once

#include <string>
#include <vector>

#include "xychain/spin_model.hpp"

namespace xychain {

/// Exit codes shared by every command.
inline constexpr int kExitOk = 0;
inline constexpr int kExitCheckFailure = 1;
inline constexpr int kExitUsage = 2;

struct RunConfig {
  std::string command;            // times | trace | compile | verify
  std::vector<double> lambdas;
  double t_max = 2.0;             // grid end, in units of t0
  int steps = 201;
  std::string axis = "x";
  std::string sign = "both";      // plus | minus | both
  std::string nmr_params_path;    // optional JSON file
  std::string output_path;        // file; directory for compile
  std::string format = "csv";     // csv | json
  bool with_threshold = false;    // times: append the threshold row
  bool exchange_symmetry = false; // compile: allow lambda < 0
};

int cmd_times(const RunConfig& cfg);
int cmd_trace(const RunConfig& cfg);
int cmd_compile(const RunConfig& cfg);
int cmd_verify(const RunConfig& cfg);

/// Dispatches on cfg.command; returns the process exit code.
int run_command(const RunConfig& cfg);

}  // namespace xychain
