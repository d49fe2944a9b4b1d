#include "xychain/propagator.hpp"

#include <cmath>
#include <stdexcept>

namespace xychain {

namespace {
const Complex kI{0.0, 1.0};

double fast_transfer_time(const ChainParams& p) {
  const double l2 = p.lambda * p.lambda;
  // arcsin branch on [0, pi/2], so the fast time is at most pi/(2k)
  return std::asin(std::sqrt((8.0 + l2) / (8.0 + 2.0 * l2))) / p.k();
}
}  // namespace

Matrix propagate_analytic(const ChainParams& p, double t) {
  const double k = p.k();
  const double lam = p.lambda;
  const double c = std::cos(k * t);
  const double s = std::sin(k * t);
  const double k2 = k * k;

  const double diag = ((2.0 * k * c) * (2.0 * k * c) - (lam * s) * (lam * s)) / (4.0 * k2);
  const double mid = (k2 - 4.0 * s * s) / k2;
  const double hop_m = (2.0 * k * c * s - lam * s * s) / k2;
  const double hop_p = (2.0 * k * c * s + lam * s * s) / k2;
  const double end_m = (k * lam * c * s - 2.0 * s * s) / k2;
  const double end_p = -(2.0 * s * s + k * lam * c * s) / k2;

  Matrix u = Matrix::Zero(8, 8);
  u(0, 0) = 1.0;
  u(7, 7) = 1.0;
  u(1, 1) = diag;         u(1, 2) = -kI * hop_p;  u(1, 4) = end_m;
  u(2, 1) = -kI * hop_m;  u(2, 2) = mid;          u(2, 4) = -kI * hop_p;
  u(3, 3) = diag;         u(3, 5) = -kI * hop_m;  u(3, 6) = end_p;
  u(4, 1) = end_p;        u(4, 2) = -kI * hop_m;  u(4, 4) = diag;
  u(5, 3) = -kI * hop_p;  u(5, 5) = mid;          u(5, 6) = -kI * hop_m;
  u(6, 3) = end_m;        u(6, 5) = -kI * hop_p;  u(6, 6) = diag;
  return u;
}

TransferTimes transfer_times(const ChainParams& p) {
  TransferTimes tt;
  tt.period = std::numbers::pi / p.k();
  const double fast = fast_transfer_time(p);
  if (p.lambda >= 0.0) {
    tt.t_3to1 = fast;
    tt.t_1to3 = tt.period - fast;
  } else {
    tt.t_1to3 = fast;
    tt.t_3to1 = tt.period - fast;
  }
  return tt;
}

Matrix transfer_propagator(const ChainParams& p, Direction dir) {
  const double lam = p.lambda;
  const double q = lam * lam + 4.0;
  const double dg = (lam * lam - 4.0) / q;
  const double od = 4.0 * lam / q;

  Matrix u = Matrix::Zero(8, 8);
  u(0, 0) = 1.0;
  u(7, 7) = 1.0;
  if (dir == Direction::OneToThree) {
    u(1, 4) = -1.0;
    u(2, 1) = kI * od;  u(2, 2) = dg;
    u(3, 5) = kI * od;  u(3, 6) = dg;
    u(4, 1) = dg;       u(4, 2) = kI * od;
    u(5, 5) = dg;       u(5, 6) = kI * od;
    u(6, 3) = -1.0;
  } else {
    u(1, 2) = -kI * od; u(1, 4) = dg;
    u(2, 2) = dg;       u(2, 4) = -kI * od;
    u(3, 6) = -1.0;
    u(4, 1) = -1.0;
    u(5, 3) = -kI * od; u(5, 5) = dg;
    u(6, 3) = dg;       u(6, 5) = -kI * od;
  }
  return u;
}

double find_speedup_threshold() {
  auto slower = [](double lam) {
    const TransferTimes tt = transfer_times({lam});
    return std::max(tt.t_3to1, tt.t_1to3);
  };
  double lo = 2.0, hi = 4.0;
  if ((slower(lo) - kT0) * (slower(hi) - kT0) >= 0.0)
    throw std::runtime_error("find_speedup_threshold: bracket does not straddle t0");
  while (hi - lo > 1e-8) {
    const double mid = 0.5 * (lo + hi);
    if (slower(mid) > kT0)
      lo = mid;
    else
      hi = mid;
  }
  return 0.5 * (lo + hi);
}

Matrix swap_13() {
  Matrix s = Matrix::Zero(8, 8);
  for (int b = 0; b < 8; ++b) {
    const int q1 = (b >> 2) & 1, q2 = (b >> 1) & 1, q3 = b & 1;
    s((q3 << 2) | (q2 << 1) | q1, b) = 1.0;
  }
  return s;
}

}  // namespace xychain
