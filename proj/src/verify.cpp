#include "xychain/verify.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include <json.hpp>

#include "xychain/propagator.hpp"
#include "xychain/pulse.hpp"
#include "xychain/transfer.hpp"

namespace xychain {

namespace {

constexpr double kPi = std::numbers::pi;

std::string tag(const std::string& name, double lam) {
  char buf[64];
  std::snprintf(buf, sizeof buf, "%s(lambda=%g)", name.c_str(), lam);
  return buf;
}

/// First maximizer of the 3->1 transfer fidelity on (0, period]: dense scan
/// plus golden-section refinement.
double argmax_fidelity_3to1(const ChainParams& p) {
  auto fid = [&p](double t) {
    return std::norm(propagate_analytic(p, t)(4, 1));
  };
  const double hi = kPi / p.k();
  const int n = 10000;
  int best = 1;
  double best_val = -1.0;
  for (int i = 1; i <= n; ++i) {
    const double v = fid(hi * i / n);
    if (v > best_val) {
      best_val = v;
      best = i;
    }
  }
  double a = hi * (best - 1) / n, b = hi * (best + 1) / n;
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = b - gr * (b - a), d = a + gr * (b - a);
  while (b - a > 1e-13) {
    if (fid(c) > fid(d))
      b = d;
    else
      a = c;
    c = b - gr * (b - a);
    d = a + gr * (b - a);
  }
  return 0.5 * (a + b);
}

}  // namespace

double check_propagator_matrix(const Matrix& u, const ChainParams& p, double t) {
  const Complex i{0.0, 1.0};
  const double k = p.k();
  const Matrix id = Matrix::Identity(8, 8);
  const Matrix uc = std::cos(k * t) * id - i * (std::sin(k * t) / k) * build_c(p);
  const Matrix ud = std::cos(k * t) * id - i * (std::sin(k * t) / k) * build_d(p);
  return (u - uc * ud).norm();
}

std::vector<CheckResult> run_verification(const std::vector<double>& lambdas) {
  std::vector<CheckResult> res;
  auto add = [&res](const std::string& name, double dist, double tol) {
    res.push_back({name, dist, tol, dist <= tol});
  };

  const Matrix id = Matrix::Identity(8, 8);

  for (double lam : lambdas) {
    const ChainParams p{lam};
    const double k = p.k();
    const Matrix c = build_c(p), d = build_d(p), h = build_h_xy3(p);

    double split = (c * d - d * c).norm();
    split = std::max(split, (c * c - k * k * id).norm());
    split = std::max(split, (d * d - k * k * id).norm());
    split = std::max(split, (c + d - h).norm());
    add(tag("commuting_split", lam), split, 1e-12);

    double worst = 0.0, factor = 0.0, blocks = 0.0;
    for (int i = 0; i < 25; ++i) {
      const double t = 2.0 * kPi / k * i / 24.0;
      const Matrix u = propagate_analytic(p, t);
      worst = std::max(worst, (u - expm_hermitian_generator(h, t)).norm());
      factor = std::max(factor, check_propagator_matrix(u, p, t));
      double leak = 0.0;
      for (int r = 0; r < 8; ++r)
        for (int col = 0; col < 8; ++col)
          if (std::popcount(unsigned(r)) != std::popcount(unsigned(col)))
            leak = std::max(leak, std::abs(u(r, col)));
      leak = std::max({leak, std::abs(u(0, 0) - 1.0), std::abs(u(7, 7) - 1.0)});
      blocks = std::max(blocks, leak);
    }
    add(tag("analytic_vs_expm", lam), worst, 1e-10);
    add(tag("propagator_factorization", lam), factor, 1e-10);
    add(tag("excitation_blocks", lam), blocks, 1e-12);
    add(tag("periodicity", lam), (propagate_analytic(p, kPi / k) - id).norm(), 1e-10);

    const TransferTimes tt = transfer_times(p);
    add(tag("transfer_propagator_3to1", lam),
        (transfer_propagator(p, Direction::ThreeToOne) - propagate_analytic(p, tt.t_3to1)).norm(),
        1e-10);
    add(tag("transfer_propagator_1to3", lam),
        (transfer_propagator(p, Direction::OneToThree) - propagate_analytic(p, tt.t_1to3)).norm(),
        1e-10);

    double bell_resid = 0.0;
    const auto bells = bell_transfer(p);
    for (const auto& rec : bells)
      bell_resid = std::max(bell_resid, std::abs(std::abs(rec.phase) - 1.0));
    const double q = lam * lam + 4.0;
    const Complex phi{(lam * lam - 4.0) / q, 4.0 * lam / q};
    bell_resid = std::max(bell_resid, std::abs(bells[2].phase - phi));
    bell_resid = std::max(bell_resid, std::abs(bells[0].phase - 1.0));
    add(tag("bell_phase", lam), bell_resid, 1e-12);
  }

  // fast-direction formula against the fidelity scan
  for (double lam : {0.0, 1.5, 4.0}) {
    const ChainParams p{lam};
    const double formula = transfer_times(p).t_3to1;
    add(tag("transfer_time_argmax", lam),
        std::abs(argmax_fidelity_3to1(p) - formula) / formula, 1e-6);
  }

  add("speedup_threshold", std::abs(find_speedup_threshold() - 2.71199), 1e-4);

  {  // plain-chain transfer is the end exchange up to diagonal signs
    const Matrix r = transfer_propagator(ChainParams{0.0}, Direction::OneToThree) * swap_13();
    double resid = 0.0;
    for (int i = 0; i < 8; ++i)
      for (int j = 0; j < 8; ++j)
        resid = std::max(resid, i == j ? std::abs(std::abs(r(i, j)) - 1.0)
                                       : std::abs(r(i, j)));
    add("swap_equivalence(lambda=0)", resid, 1e-10);
  }

  for (double lam : {1.5, 2.0, 4.0}) {
    const ChainParams p{lam};
    const Complex alpha{0.6, 0.0}, beta{0.0, 0.8};
    const double q = lam * lam + 4.0;
    const double pop_big = 16.0 * lam * lam / (q * q);
    const double pop_small = (lam * lam - 4.0) * (lam * lam - 4.0) / (q * q);
    const Complex coh{0.0, 4.0 * lam * (lam * lam - 4.0) / (q * q)};

    Matrix rho1(2, 2), flip(2, 2);
    rho1 << std::norm(alpha), alpha * std::conj(beta), std::conj(alpha) * beta, std::norm(beta);
    flip << std::norm(alpha), -alpha * std::conj(beta), -std::conj(alpha) * beta, std::norm(beta);

    double resid = 0.0;
    const auto table = conditional_transfer_table(p, alpha, beta);
    for (int bits : {0, 3}) {
      Matrix blk = Matrix::Zero(4, 4);
      blk(bits, bits) = 1.0;
      resid = std::max(resid, (table[bits].block_12 - blk).norm());
      resid = std::max(resid, (table[bits].transferred - flip).norm());
    }
    for (int bits : {1, 2}) {
      Matrix blk = Matrix::Zero(4, 4);
      blk(1, 1) = bits == 1 ? pop_big : pop_small;
      blk(2, 2) = bits == 1 ? pop_small : pop_big;
      blk(1, 2) = bits == 1 ? coh : -coh;
      blk(2, 1) = std::conj(blk(1, 2));
      resid = std::max(resid, (table[bits].block_12 - blk).norm());
      resid = std::max(resid, (table[bits].transferred - rho1).norm());
    }

    // deviation transfer through the 1->3 propagator
    const Matrix u = transfer_propagator(p, Direction::OneToThree);
    using L = PauliLabel;
    resid = std::max(resid, (u * pauli_at(1, Axis::X) * u.adjoint() +
                             pauli_string_matrix({L::Z, L::Z, L::X})).norm());
    resid = std::max(resid, (u * pauli_at(1, Axis::Y) * u.adjoint() +
                             pauli_string_matrix({L::Z, L::Z, L::Y})).norm());
    resid = std::max(resid, (u * pauli_at(1, Axis::Z) * u.adjoint() -
                             pauli_at(3, Axis::Z)).norm());
    add(tag("transfer_algebra", lam), resid, 1e-10);
  }

  for (double lam : {0.0, 1.5, 4.0}) {
    const ChainParams p{lam};
    const double k = p.k();
    using L = PauliLabel;
    double resid = 0.0;
    for (int i = 0; i < 100; ++i) {
      const double t = kPi / k * i / 99.0;
      const double cv = std::cos(k * t), sv = std::sin(k * t);
      const double a = ((2 * k * cv) * (2 * k * cv) - (lam * sv) * (lam * sv)) / (4 * k * k);
      const double b = (2 * k * cv * sv - lam * sv * sv) / (k * k);
      const double g = (2 * sv * sv + k * lam * cv * sv) / (k * k);

      const Matrix u = propagate_analytic(p, t);
      const Matrix r1 = u * pauli_at(3, Axis::X) * u.adjoint();
      const Matrix expect = a * pauli_string_matrix({L::I, L::I, L::X}) -
                            b * pauli_string_matrix({L::I, L::Y, L::Z}) -
                            g * pauli_string_matrix({L::X, L::Z, L::Z});
      resid = std::max(resid, (r1 - expect).norm());
      resid = std::max(resid, std::abs(a * a + b * b + g * g - 1.0));

      const Matrix r3 = u * pauli_at(3, Axis::Z) * u.adjoint();
      const Matrix expect3 =
          a * (a * pauli_string_matrix({L::I, L::I, L::Z}) -
               b * pauli_string_matrix({L::I, L::X, L::Y}) +
               g * pauli_string_matrix({L::Y, L::Z, L::Y})) +
          b * (a * pauli_string_matrix({L::I, L::Y, L::X}) +
               b * pauli_string_matrix({L::I, L::Z, L::I}) +
               g * pauli_string_matrix({L::Y, L::X, L::I})) +
          g * (a * pauli_string_matrix({L::X, L::Z, L::X}) -
               b * pauli_string_matrix({L::X, L::Y, L::I}) +
               g * pauli_string_matrix({L::Z, L::I, L::I}));
      resid = std::max(resid, (r3 - expect3).norm());
    }
    add(tag("trace_expansion", lam), resid, 1e-10);
  }

  for (double lam : {0.0, 1.5, 4.0}) {
    const ChainParams p{lam};
    double resid = 0.0;
    for (double t : {transfer_times(p).t_3to1, 0.2, 0.7}) {
      const Matrix uc_ref = expm_hermitian_generator(build_c(p), t);
      const Matrix ud_ref = expm_hermitian_generator(build_d(p), t);
      const Matrix u_ref = propagate_analytic(p, t);
      for (SignVariant sign : {SignVariant::Plus, SignVariant::Minus}) {
        const PulseSequence uc = compile_uc(p, t, sign);
        const PulseSequence ud = compile_ud(p, t, sign);
        resid = std::max(resid, dist_up_to_global_phase(simulate_sequence(uc), uc_ref));
        resid = std::max(resid, dist_up_to_global_phase(simulate_sequence(ud), ud_ref));
        resid = std::max(resid,
                         dist_up_to_global_phase(simulate_sequence(concatenate(uc, ud)), u_ref));
      }
    }
    add(tag("compiler_replay", lam), resid, 1e-9);
  }

  {  // Pauli-basis round trip on a reproducible random deviation operator
    std::mt19937 rng(42);
    std::uniform_real_distribution<double> dist(-1.0, 1.0);
    Matrix m(8, 8);
    for (int i = 0; i < 8; ++i)
      for (int j = 0; j < 8; ++j) m(i, j) = Complex(dist(rng), dist(rng));
    Matrix herm = 0.5 * (m + m.adjoint());
    herm -= (herm.trace() / 8.0) * id;
    const DensityOperator rho(herm, DensityOperator::Convention::Deviation);
    add("pauli_roundtrip", (reassemble(pauli_decompose(rho)) - herm).norm(), 1e-12);
  }

  return res;
}

bool all_pass(const std::vector<CheckResult>& results) {
  return std::all_of(results.begin(), results.end(),
                     [](const CheckResult& r) { return r.pass; });
}

std::string verification_to_json_text(const std::vector<CheckResult>& results) {
  nlohmann::json j;
  j["pass"] = all_pass(results);
  nlohmann::json checks = nlohmann::json::array();
  for (const CheckResult& r : results)
    checks.push_back({{"name", r.name},
                      {"distance", r.distance},
                      {"tolerance", r.tolerance},
                      {"pass", r.pass}});
  j["checks"] = checks;
  return j.dump(2);
}

}  // namespace xychain
