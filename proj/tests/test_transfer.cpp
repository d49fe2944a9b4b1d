#include <doctest.h>

#include <cmath>
#include <numbers>

#include <json.hpp>

#include "xychain/transfer.hpp"

using namespace xychain;
using L = PauliLabel;

namespace {

std::vector<double> grid(double t_end, int n) {
  std::vector<double> g(n);
  for (int i = 0; i < n; ++i) g[i] = t_end * i / (n - 1);
  return g;
}

double coeff_of(const Matrix& rho, const std::array<L, 3>& labels) {
  return ((pauli_string_matrix(labels).adjoint() * rho).trace() / 8.0).real();
}

}  // namespace

TEST_CASE("the empty chain state is stationary") {
  const PureState vac{1.0, 0.0, 0};
  for (double t : {0.3, 1.1}) {
    const Vector out = evolve_pure({1.5}, vac, t);
    CHECK(std::abs(out(0) - 1.0) < 1e-12);
    CHECK(out.norm() == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("forward transfer moves the superposition and flips the phase") {
  const Complex alpha{0.6, 0.0}, beta{0.0, 0.8};
  for (double lam : {0.0, 1.5, 4.0}) {
    const ChainParams p{lam};
    const Vector out = evolve_pure(p, {alpha, beta, 0}, transfer_times(p).t_1to3);
    Vector expect = Vector::Zero(8);
    expect(0) = alpha;
    expect(1) = -beta;  // ends on qubit 3 with the sign flipped
    CHECK((out - expect).norm() < 1e-12);
  }
}

TEST_CASE("single-excitation amplitudes follow the closed forms") {
  const double lam = 1.5;
  const ChainParams p{lam};
  const double k = p.k();
  for (double t : {0.2, 0.55}) {
    const Vector out = evolve_pure(p, {1.0, 0.0, 1}, t);  // |001>
    const double c = std::cos(k * t), s = std::sin(k * t);
    const double a = ((2 * k * c) * (2 * k * c) - (lam * s) * (lam * s)) / (4 * k * k);
    const double b = (2 * k * c * s - lam * s * s) / (k * k);
    const double g = (2 * s * s + k * lam * c * s) / (k * k);
    CHECK(std::abs(out(1) - Complex(a, 0)) < 1e-12);
    CHECK(std::abs(out(2) - Complex(0, -b)) < 1e-12);
    CHECK(std::abs(out(4) - Complex(-g, 0)) < 1e-12);
    CHECK(a * a + b * b + g * g == doctest::Approx(1.0).epsilon(1e-12));
  }
}

TEST_CASE("pure-state preconditions") {
  CHECK_THROWS_AS(evolve_pure({1.0}, {0.6, 0.7, 0}, 0.1), std::invalid_argument);
  CHECK_THROWS_AS(evolve_pure({1.0}, {1.0, 0.0, 5}, 0.1), std::invalid_argument);
}

TEST_CASE("conditional transfers: aligned spectators flip the coherence") {
  const Complex alpha{0.8, 0.0}, beta{0.36, 0.48};
  for (double lam : {1.5, 4.0}) {
    const auto table = conditional_transfer_table({lam}, alpha, beta);
    for (int bits : {0, 3}) {
      const auto& rec = table[bits];
      CHECK(std::abs(rec.transferred(0, 1) + alpha * std::conj(beta)) < 1e-12);
      CHECK(std::abs(rec.transferred(0, 0) - std::norm(alpha)) < 1e-12);
      Matrix blk = Matrix::Zero(4, 4);
      blk(bits, bits) = 1.0;
      CHECK((rec.block_12 - blk).norm() < 1e-12);
    }
  }
}

TEST_CASE("conditional transfers: mixed spectators entangle, degenerate at lambda 2") {
  const Complex alpha{1.0 / std::numbers::sqrt2, 0.0};
  const auto table = conditional_transfer_table({2.0}, alpha, alpha);
  // the middle populations collapse to a single basis state
  CHECK(std::abs(table[1].block_12(1, 1) - 1.0) < 1e-12);
  CHECK(std::abs(table[1].block_12(2, 2)) < 1e-12);
  CHECK(std::abs(table[2].block_12(2, 2) - 1.0) < 1e-12);
  CHECK(std::abs(table[1].block_12(1, 2)) < 1e-12);  // coherence vanishes too
  // the transferred state keeps its phase
  CHECK(std::abs(table[1].transferred(0, 1) - alpha * std::conj(alpha)) < 1e-12);
}

TEST_CASE("deviation transfer lands on single Pauli strings at the transfer time") {
  for (double lam : {0.0, 1.5, 4.0}) {
    const ChainParams p{lam};
    const double t31 = transfer_times(p).t_3to1;
    const Matrix out_x = evolve_deviation(p, {Axis::X, 3}, t31).matrix;
    CHECK((out_x + pauli_string_matrix({L::X, L::Z, L::Z})).norm() < 1e-10);
    const Matrix out_z = evolve_deviation(p, {Axis::Z, 3}, t31).matrix;
    CHECK((out_z - pauli_at(1, Axis::Z)).norm() < 1e-10);
  }
}

TEST_CASE("deviation transfer three-term expansion at generic time") {
  const double lam = 1.5, t = 0.4;
  const ChainParams p{lam};
  const double k = p.k();
  const double c = std::cos(k * t), s = std::sin(k * t);
  const double a = ((2 * k * c) * (2 * k * c) - (lam * s) * (lam * s)) / (4 * k * k);
  const double b = (2 * k * c * s - lam * s * s) / (k * k);
  const double g = (2 * s * s + k * lam * c * s) / (k * k);

  const Matrix rho = evolve_deviation(p, {Axis::X, 3}, t).matrix;
  CHECK(coeff_of(rho, {L::I, L::I, L::X}) == doctest::Approx(a).epsilon(1e-12));
  CHECK(coeff_of(rho, {L::I, L::Y, L::Z}) == doctest::Approx(-b).epsilon(1e-12));
  CHECK(coeff_of(rho, {L::X, L::Z, L::Z}) == doctest::Approx(-g).epsilon(1e-12));
}

TEST_CASE("deviation outputs stay Hermitian, traceless and norm-preserving") {
  for (int site : {1, 2, 3})
    for (Axis axis : {Axis::X, Axis::Y, Axis::Z}) {
      const DensityOperator out = evolve_deviation({1.5}, {axis, site}, 0.63);
      CHECK(is_hermitian(out.matrix, 1e-12));
      CHECK(std::abs(out.matrix.trace()) < 1e-12);
      CHECK(out.matrix.norm() ==
            doctest::Approx(pauli_at(site, axis).norm()).epsilon(1e-12));
    }
}

TEST_CASE("overlap trace peaks at the transfer times") {
  const auto g = grid(2.0 * kT0, 201);
  const TransferReport flat = overlap_trace({0.0}, Axis::X, g);
  CHECK(flat.trace[flat.peak_target_row].t == doctest::Approx(kT0).epsilon(1e-9));
  CHECK(flat.trace[flat.peak_return_row].t == doctest::Approx(2.0 * kT0).epsilon(1e-9));

  const ChainParams strong{4.0};
  std::vector<double> g2 = grid(transfer_times(strong).period, 400);
  g2.push_back(g2.back() + 1.0);  // keep strictly increasing tail
  g2[120] = transfer_times(strong).t_3to1;  // inject the exact transfer time
  std::sort(g2.begin(), g2.end());
  const TransferReport rep = overlap_trace(strong, Axis::X, g2);
  CHECK(std::abs(rep.trace[rep.peak_target_row].c_target) ==
        doctest::Approx(1.0).epsilon(1e-10));
}

TEST_CASE("the y-axis trace mirrors x with the middle sign flipped") {
  const auto g = grid(1.5 * kT0, 101);
  const TransferReport rx = overlap_trace({1.5}, Axis::X, g);
  const TransferReport ry = overlap_trace({1.5}, Axis::Y, g);
  for (std::size_t i = 0; i < g.size(); ++i) {
    CHECK(ry.trace[i].c_source == doctest::Approx(rx.trace[i].c_source).epsilon(1e-12));
    CHECK(ry.trace[i].c_middle == doctest::Approx(-rx.trace[i].c_middle).epsilon(1e-12));
    CHECK(ry.trace[i].c_target == doctest::Approx(rx.trace[i].c_target).epsilon(1e-12));
  }
}

TEST_CASE("the z-axis trace carries the squared amplitudes") {
  const auto g = grid(1.8 * kT0, 101);
  const TransferReport rz = overlap_trace({1.5}, Axis::Z, g);
  for (const TraceRow& row : rz.trace) {
    CHECK(row.c_source + row.c_middle + row.c_target ==
          doctest::Approx(1.0).epsilon(1e-10));
    CHECK(row.c_source >= -1e-12);
    CHECK(row.c_middle >= -1e-12);
    CHECK(row.c_target >= -1e-12);
  }
}

TEST_CASE("overlap trace rejects bad grids") {
  CHECK_THROWS_AS(overlap_trace({1.0}, Axis::X, {}), std::invalid_argument);
  CHECK_THROWS_AS(overlap_trace({1.0}, Axis::X, {0.0, 0.0}), std::invalid_argument);
  CHECK_THROWS_AS(overlap_trace({1.0}, Axis::X, {-0.1, 0.2}), std::invalid_argument);
}

TEST_CASE("Bell transfer signs and phases") {
  for (double lam : {0.0, 1.5, 2.0, 4.0}) {
    const auto recs = bell_transfer({lam});
    const double q = lam * lam + 4.0;
    const Complex phi{(lam * lam - 4.0) / q, 4.0 * lam / q};

    CHECK(recs[0].input == "00+11");
    CHECK(recs[0].output == "00-11");
    CHECK(std::abs(recs[0].phase - 1.0) < 1e-12);
    CHECK(recs[1].output == "00+11");
    CHECK(std::abs(recs[1].phase - 1.0) < 1e-12);

    CHECK(recs[2].output == "01+10");
    CHECK(std::abs(recs[2].phase - phi) < 1e-12);
    CHECK(recs[3].output == "01-10");
    CHECK(std::abs(recs[3].phase + std::conj(phi)) < 1e-12);
    for (const auto& rec : recs) CHECK(std::abs(std::abs(rec.phase) - 1.0) < 1e-12);
  }
  // spot values for the symmetric-family phase
  CHECK(std::abs(bell_transfer({0.0})[2].phase - Complex(-1.0, 0.0)) < 1e-12);
  CHECK(std::abs(bell_transfer({2.0})[2].phase - Complex(0.0, 1.0)) < 1e-12);
}

TEST_CASE("trace serialization") {
  const TransferReport rep = overlap_trace({1.5}, Axis::X, grid(kT0, 11));
  const std::string csv = trace_to_csv(rep);
  CHECK(csv.rfind("t,c_source,c_middle,c_target\n", 0) == 0);
  CHECK(std::count(csv.begin(), csv.end(), '\n') == 12);
  CHECK(csv == trace_to_csv(rep));  // deterministic

  const auto j = nlohmann::json::parse(report_to_json_text(rep));
  CHECK(j["lambda"] == 1.5);
  CHECK(j["axis"] == "x");
  CHECK(j["trace"].size() == 11);
  CHECK(j.contains("peaks"));
  CHECK(j.contains("final_pauli_expansion"));
}
