#include "xychain/cli.hpp"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>

#include <json.hpp>

#include "xychain/propagator.hpp"
#include "xychain/pulse.hpp"
#include "xychain/transfer.hpp"
#include "xychain/verify.hpp"

namespace xychain {

namespace {

namespace fs = std::filesystem;

std::string fmt12(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

int usage_error(const std::string& msg) {
  std::cerr << "error: " << msg << "\n";
  return kExitUsage;
}

/// Writes to the path, or to stdout when the path is empty.
bool emit(const std::string& path, const std::string& payload) {
  if (path.empty()) {
    std::cout << payload;
    return true;
  }
  std::ofstream out(path, std::ios::binary);
  if (!out) {
    std::cerr << "error: cannot write " << path << "\n";
    return false;
  }
  out << payload;
  return true;
}

NmrParams load_nmr(const RunConfig& cfg) {
  return cfg.nmr_params_path.empty() ? NmrParams::tce()
                                     : NmrParams::from_json_file(cfg.nmr_params_path);
}

}  // namespace

int cmd_times(const RunConfig& cfg) {
  if (cfg.lambdas.empty()) return usage_error("times: at least one --lambda is required");

  std::vector<double> lams = cfg.lambdas;
  if (cfg.with_threshold) lams.push_back(find_speedup_threshold());

  std::string payload;
  if (cfg.format == "csv") {
    payload = "lambda,t_1to3_over_t0,t_3to1_over_t0,period_over_t0,t_1to3,t_3to1,period\n";
    for (double lam : lams) {
      const TransferTimes tt = transfer_times({lam});
      payload += fmt12(lam) + "," + fmt12(tt.t_1to3 / kT0) + "," + fmt12(tt.t_3to1 / kT0) +
                 "," + fmt12(tt.period / kT0) + "," + fmt12(tt.t_1to3) + "," +
                 fmt12(tt.t_3to1) + "," + fmt12(tt.period) + "\n";
    }
  } else {
    nlohmann::json rows = nlohmann::json::array();
    for (double lam : lams) {
      const TransferTimes tt = transfer_times({lam});
      rows.push_back({{"lambda", lam},
                      {"t_1to3_over_t0", tt.t_1to3 / kT0},
                      {"t_3to1_over_t0", tt.t_3to1 / kT0},
                      {"period_over_t0", tt.period / kT0},
                      {"t_1to3", tt.t_1to3},
                      {"t_3to1", tt.t_3to1},
                      {"period", tt.period}});
    }
    payload = nlohmann::json{{"t0", kT0}, {"rows", rows}}.dump(2) + "\n";
  }
  return emit(cfg.output_path, payload) ? kExitOk : kExitCheckFailure;
}

int cmd_trace(const RunConfig& cfg) {
  if (cfg.lambdas.size() != 1) return usage_error("trace: exactly one --lambda is required");
  if (cfg.steps < 2) return usage_error("trace: --steps must be at least 2");
  if (cfg.t_max <= 0.0) return usage_error("trace: --t-max must be positive");

  const ChainParams p{cfg.lambdas.front()};
  const Axis axis = axis_from_string(cfg.axis);
  std::vector<double> grid(cfg.steps);
  for (int i = 0; i < cfg.steps; ++i)
    grid[i] = cfg.t_max * kT0 * i / (cfg.steps - 1);

  const TransferReport report = overlap_trace(p, axis, grid);
  const TraceRow& peak = report.trace[report.peak_target_row];
  const TraceRow& ret = report.trace[report.peak_return_row];
  std::cout << "peak |c_target| at t/t0 = " << fmt12(peak.t / kT0)
            << " (c_target = " << fmt12(peak.c_target) << ")\n"
            << "source return at t/t0 = " << fmt12(ret.t / kT0)
            << " (c_source = " << fmt12(ret.c_source) << ")\n";

  const std::string payload =
      cfg.format == "csv" ? trace_to_csv(report) : report_to_json_text(report) + "\n";
  return emit(cfg.output_path, payload) ? kExitOk : kExitCheckFailure;
}

int cmd_compile(const RunConfig& cfg) {
  if (cfg.lambdas.size() != 1) return usage_error("compile: exactly one --lambda is required");
  const double lam = cfg.lambdas.front();
  if (lam < 0.0 && !cfg.exchange_symmetry)
    return usage_error("compile: lambda must be nonnegative; pass --exchange-symmetry to "
                       "compile through the site-exchange map");

  NmrParams nmr;
  try {
    nmr = load_nmr(cfg);
  } catch (const std::exception& e) {
    return usage_error(e.what());
  }

  std::vector<SignVariant> signs;
  if (cfg.sign == "plus") signs = {SignVariant::Plus};
  else if (cfg.sign == "minus") signs = {SignVariant::Minus};
  else if (cfg.sign == "both") signs = {SignVariant::Plus, SignVariant::Minus};
  else return usage_error("compile: --sign must be plus, minus or both");

  const ChainParams p{lam};
  const ChainParams abs_p{std::abs(lam)};
  const double t = transfer_times(p).t_3to1;

  fs::path dir = cfg.output_path.empty() ? fs::path(".") : fs::path(cfg.output_path);
  std::error_code ec;
  fs::create_directories(dir, ec);
  if (ec) return usage_error("compile: cannot create output directory " + dir.string());

  nlohmann::json report;
  report["lambda"] = lam;
  report["t"] = t;
  report["t_over_t0"] = t / kT0;
  if (lam == 0.0)
    report["note"] = "tilt blocks vanish at lambda = 0; sequences carry the reduced op count";
  nlohmann::json entries = nlohmann::json::array();

  bool ok = true;
  for (SignVariant sign : signs) {
    PulseSequence uc, ud;
    if (lam >= 0.0) {
      uc = compile_uc(p, t, sign);
      ud = compile_ud(p, t, sign);
    } else {
      // negative coupling: compile the mirrored chain and relabel the ends
      uc = exchange_sites_13(compile_ud(abs_p, t, sign));
      uc.target = SequenceTarget::UC;
      uc.lambda = lam;
      ud = exchange_sites_13(compile_uc(abs_p, t, sign));
      ud.target = SequenceTarget::UD;
      ud.lambda = lam;
    }

    const std::string sname = sign == SignVariant::Plus ? "plus" : "minus";
    const Matrix uc_ref = expm_hermitian_generator(build_c(p), t);
    const Matrix ud_ref = expm_hermitian_generator(build_d(p), t);
    const double dist_c = dist_up_to_global_phase(simulate_sequence(uc), uc_ref);
    const double dist_d = dist_up_to_global_phase(simulate_sequence(ud), ud_ref);

    for (const auto& [label, seq] : {std::pair{"uc", &uc}, std::pair{"ud", &ud}}) {
      const std::string stem = (dir / (std::string(label) + "_" + sname)).string();
      ok = ok && emit(stem + ".txt", sequence_to_text(*seq));
      ok = ok && emit(stem + ".json", sequence_to_json_text(*seq) + "\n");
    }

    nlohmann::json entry;
    entry["sign"] = sname;
    entry["replay_distance_uc"] = dist_c;
    entry["replay_distance_ud"] = dist_d;
    entry["ops_uc"] = uc.ops.size();
    entry["ops_ud"] = ud.ops.size();
    try {
      const DurationEstimate ec_ = estimate_duration(uc, nmr);
      const DurationEstimate ed_ = estimate_duration(ud, nmr);
      entry["duration_uc"] = nlohmann::json::parse(duration_to_json_text(ec_));
      entry["duration_ud"] = nlohmann::json::parse(duration_to_json_text(ed_));
    } catch (const std::exception& e) {
      entry["duration_error"] = e.what();
    }
    entries.push_back(entry);

    std::cout << "sign=" << sname << " replay distance: uc " << fmt12(dist_c) << ", ud "
              << fmt12(dist_d) << "\n";
    if (dist_c > 1e-9 || dist_d > 1e-9) ok = false;
  }
  report["sequences"] = entries;
  ok = ok && emit((dir / "compile_report.json").string(), report.dump(2) + "\n");
  return ok ? kExitOk : kExitCheckFailure;
}

int cmd_verify(const RunConfig& cfg) {
  const std::vector<CheckResult> results =
      cfg.lambdas.empty() ? run_verification() : run_verification(cfg.lambdas);
  for (const CheckResult& r : results)
    std::cout << (r.pass ? "pass " : "FAIL ") << r.name << " distance " << fmt12(r.distance)
              << " tolerance " << fmt12(r.tolerance) << "\n";
  const std::string payload = verification_to_json_text(results) + "\n";
  if (!cfg.output_path.empty() && !emit(cfg.output_path, payload)) return kExitCheckFailure;
  return all_pass(results) ? kExitOk : kExitCheckFailure;
}

int run_command(const RunConfig& cfg) {
  try {
    if (cfg.command == "times") return cmd_times(cfg);
    if (cfg.command == "trace") return cmd_trace(cfg);
    if (cfg.command == "compile") return cmd_compile(cfg);
    if (cfg.command == "verify") return cmd_verify(cfg);
    return usage_error("unknown command: " + cfg.command);
  } catch (const std::invalid_argument& e) {
    return usage_error(e.what());
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCheckFailure;
  }
}

}  // namespace xychain
