#include "xychain/transfer.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include <json.hpp>

namespace xychain {

namespace {

const Complex kI{0.0, 1.0};

Matrix half_propagator(const Matrix& gen, double k, double t) {
  // e^{-i t G} for G with G^2 = k^2 I
  return std::cos(k * t) * Matrix::Identity(8, 8) -
         kI * (std::sin(k * t) / k) * gen;
}

double pauli_coeff(const Matrix& rho, const std::array<PauliLabel, 3>& labels) {
  const Complex c = (pauli_string_matrix(labels).adjoint() * rho).trace() / 8.0;
  return c.real();
}

struct AxisStrings {
  std::array<PauliLabel, 3> source, middle, target;
  bool squared;  // z traces carry squared amplitudes; they sum directly
};

AxisStrings strings_for_axis(Axis axis) {
  using L = PauliLabel;
  switch (axis) {
    case Axis::X:
      return {{L::I, L::I, L::X}, {L::I, L::Y, L::Z}, {L::X, L::Z, L::Z}, false};
    case Axis::Y:
      return {{L::I, L::I, L::Y}, {L::I, L::X, L::Z}, {L::Y, L::Z, L::Z}, false};
    default:
      return {{L::I, L::I, L::Z}, {L::I, L::Z, L::I}, {L::Z, L::I, L::I}, true};
  }
}

std::string fmt12(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.12g", v);
  return buf;
}

}  // namespace

void PureState::validate() const {
  if (spectator_bits < 0 || spectator_bits > 3)
    throw std::invalid_argument("PureState: spectator_bits must be 0..3");
  const double n = std::norm(alpha) + std::norm(beta);
  if (std::abs(n - 1.0) > 1e-12)
    throw std::invalid_argument("PureState: amplitudes are not normalized");
}

Vector evolve_pure(const ChainParams& p, const PureState& state, double t) {
  state.validate();
  Vector psi = Vector::Zero(8);
  psi(state.spectator_bits) = state.alpha;
  psi(4 + state.spectator_bits) = state.beta;
  return propagate_analytic(p, t) * psi;
}

std::array<ConditionalTransfer, 4> conditional_transfer_table(
    const ChainParams& p, Complex alpha, Complex beta) {
  PureState{alpha, beta, 0}.validate();
  const Matrix u = transfer_propagator(p, Direction::OneToThree);

  Matrix rho1(2, 2);
  rho1 << std::norm(alpha), alpha * std::conj(beta),
          std::conj(alpha) * beta, std::norm(beta);

  std::array<ConditionalTransfer, 4> table;
  for (int bits = 0; bits < 4; ++bits) {
    Matrix spect = Matrix::Zero(4, 4);
    spect(bits, bits) = 1.0;
    const Matrix out = u * kron(rho1, spect) * u.adjoint();

    // the output is a product state; both partial traces have trace 1
    Matrix block12 = Matrix::Zero(4, 4);
    Matrix q3 = Matrix::Zero(2, 2);
    for (int r = 0; r < 4; ++r)
      for (int c = 0; c < 4; ++c)
        for (int s = 0; s < 2; ++s) block12(r, c) += out(2 * r + s, 2 * c + s);
    for (int r = 0; r < 2; ++r)
      for (int c = 0; c < 2; ++c)
        for (int s = 0; s < 4; ++s) q3(r, c) += out(2 * s + r, 2 * s + c);

    if ((kron(block12, q3) - out).norm() > 1e-10)
      throw std::runtime_error("conditional_transfer_table: output failed to factorize");
    table[bits] = {bits, block12, q3};
  }
  return table;
}

DensityOperator evolve_deviation(const ChainParams& p, const DeviationPauli& state,
                                 double t) {
  const Matrix pm = pauli_at(state.site, state.axis);
  const Matrix u = propagate_analytic(p, t);
  const Matrix out = u * pm * u.adjoint();

  // x/y deviations on the chain ends evolve under one commuting half only
  if (state.site != 2 && state.axis != Axis::Z) {
    const bool c_half = (state.site == 3) == (state.axis == Axis::X);
    const Matrix gen = c_half ? build_c(p) : build_d(p);
    const Matrix uh = half_propagator(gen, p.k(), t);
    if ((uh * pm * uh.adjoint() - out).norm() > 1e-10)
      throw std::runtime_error("evolve_deviation: half-propagator shortcut disagrees");
  }
  return DensityOperator(out, DensityOperator::Convention::Deviation);
}

TransferReport overlap_trace(const ChainParams& p, Axis axis,
                             const std::vector<double>& t_grid) {
  if (t_grid.empty())
    throw std::invalid_argument("overlap_trace: empty time grid");
  for (std::size_t i = 0; i < t_grid.size(); ++i) {
    if (t_grid[i] < 0.0 || (i > 0 && t_grid[i] <= t_grid[i - 1]))
      throw std::invalid_argument("overlap_trace: grid must be nonnegative and strictly increasing");
  }

  const AxisStrings strings = strings_for_axis(axis);
  const Matrix pm = pauli_at(3, axis);

  TransferReport report;
  report.lambda = p.lambda;
  report.axis = axis;
  report.times = transfer_times(p);
  report.trace.reserve(t_grid.size());

  for (double t : t_grid) {
    const Matrix u = propagate_analytic(p, t);
    const Matrix rho = u * pm * u.adjoint();
    TraceRow row;
    row.t = t;
    row.c_source = pauli_coeff(rho, strings.source);
    row.c_middle = pauli_coeff(rho, strings.middle);
    row.c_target = pauli_coeff(rho, strings.target);
    const double sum = strings.squared
        ? row.c_source + row.c_middle + row.c_target
        : row.c_source * row.c_source + row.c_middle * row.c_middle +
              row.c_target * row.c_target;
    if (std::abs(sum - 1.0) > 1e-10)
      throw std::runtime_error("overlap_trace: amplitude normalization violated");
    report.trace.push_back(row);
  }

  for (std::size_t i = 0; i < report.trace.size(); ++i)
    if (std::abs(report.trace[i].c_target) >
        std::abs(report.trace[report.peak_target_row].c_target) + 1e-15)
      report.peak_target_row = i;
  report.peak_return_row = report.peak_target_row;
  for (std::size_t i = report.peak_target_row; i < report.trace.size(); ++i)
    if (report.trace[i].c_source >
        report.trace[report.peak_return_row].c_source + 1e-15)
      report.peak_return_row = i;

  const Matrix u_end = propagate_analytic(p, t_grid.back());
  const DensityOperator rho_end(u_end * pm * u_end.adjoint(),
                                DensityOperator::Convention::Deviation);
  for (const PauliString& term : pauli_decompose(rho_end))
    if (std::abs(term.coefficient) > 1e-12)
      report.final_pauli_expansion.push_back(term);
  return report;
}

std::array<BellTransferRecord, 4> bell_transfer(const ChainParams& p) {
  const Matrix u = transfer_propagator(p, Direction::OneToThree);
  const double r = 1.0 / std::numbers::sqrt2;

  struct BellBasis {
    std::string label;
    Eigen::Vector4cd amps;  // |00>,|01>,|10>,|11>
  };
  const std::array<BellBasis, 4> bells = {{
      {"00+11", {r, 0, 0, r}},
      {"00-11", {r, 0, 0, -r}},
      {"01+10", {0, r, r, 0}},
      {"01-10", {0, r, -r, 0}},
  }};

  std::array<BellTransferRecord, 4> out;
  for (std::size_t n = 0; n < 4; ++n) {
    Vector psi = Vector::Zero(8);
    for (int b = 0; b < 4; ++b) psi(b) = bells[n].amps(b);  // |0>_1 (x) bell_23
    const Vector res = u * psi;

    Eigen::Vector4cd on12;
    double leak = 0.0;
    for (int b = 0; b < 8; ++b) {
      if ((b & 1) == 0)
        on12(b >> 1) = res(b);
      else
        leak += std::norm(res(b));
    }
    if (leak > 1e-20)
      throw std::runtime_error("bell_transfer: population left outside |0>_3");

    std::size_t best = 0;
    Complex phase = 0.0;
    for (std::size_t m = 0; m < 4; ++m) {
      const Complex ov = bells[m].amps.adjoint() * on12;
      if (std::abs(ov) > std::abs(phase)) {
        best = m;
        phase = ov;
      }
    }
    if ((on12 - phase * bells[best].amps).norm() > 1e-12)
      throw std::runtime_error("bell_transfer: output is not a phase times a Bell state");
    out[n] = {bells[n].label, bells[best].label, on12, phase};
  }
  return out;
}

std::string trace_to_csv(const TransferReport& report) {
  std::string s = "t,c_source,c_middle,c_target\n";
  for (const TraceRow& row : report.trace) {
    s += fmt12(row.t) + "," + fmt12(row.c_source) + "," + fmt12(row.c_middle) +
         "," + fmt12(row.c_target) + "\n";
  }
  return s;
}

std::string report_to_json_text(const TransferReport& report) {
  nlohmann::json j;
  j["lambda"] = report.lambda;
  j["axis"] = axis_to_string(report.axis);
  j["times"] = {{"t_3to1", report.times.t_3to1},
                {"t_1to3", report.times.t_1to3},
                {"period", report.times.period},
                {"t0", report.times.t0}};
  nlohmann::json rows = nlohmann::json::array();
  for (const TraceRow& row : report.trace)
    rows.push_back({{"t", row.t},
                    {"c_source", row.c_source},
                    {"c_middle", row.c_middle},
                    {"c_target", row.c_target}});
  j["trace"] = rows;
  j["peaks"] = {{"target_row", report.peak_target_row},
                {"return_row", report.peak_return_row},
                {"target_t", report.trace[report.peak_target_row].t},
                {"return_t", report.trace[report.peak_return_row].t}};
  nlohmann::json expansion = nlohmann::json::array();
  for (const PauliString& term : report.final_pauli_expansion)
    expansion.push_back({{"string", pauli_string_name(term.labels)},
                         {"re", term.coefficient.real()},
                         {"im", term.coefficient.imag()}});
  j["final_pauli_expansion"] = expansion;
  return j.dump(2);
}

}  // namespace xychain
