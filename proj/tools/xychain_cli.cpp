#include <CLI11.hpp>

#include "xychain/cli.hpp"

int main(int argc, char** argv) {
  CLI::App app{"Quantum state transfer in a three-qubit chain with a tunable "
               "three-spin interaction: sweeps, traces, pulse compilation and "
               "the verification suite"};

  xychain::RunConfig cfg;
  app.add_option("--command", cfg.command, "times | trace | compile | verify")->required();
  app.add_option("--lambda", cfg.lambdas, "three-spin coupling strength (repeatable)");
  app.add_option("--t-max", cfg.t_max, "trace grid end, in units of t0");
  app.add_option("--steps", cfg.steps, "number of trace grid points");
  app.add_option("--axis", cfg.axis, "initial deviation axis: x | y | z");
  app.add_option("--sign", cfg.sign, "sequence sign variant: plus | minus | both");
  app.add_option("--nmr-params", cfg.nmr_params_path, "JSON file with register parameters");
  app.add_option("--out", cfg.output_path, "output file (directory for compile)");
  app.add_option("--format", cfg.format, "csv | json")->check(CLI::IsMember({"csv", "json"}));
  app.add_flag("--with-threshold", cfg.with_threshold, "times: append the speedup-threshold row");
  app.add_flag("--exchange-symmetry", cfg.exchange_symmetry,
               "compile: map negative couplings through the site exchange");

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {  // --help / --version
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return xychain::kExitUsage;
  }
  return xychain::run_command(cfg);
}
