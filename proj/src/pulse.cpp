#include "xychain/pulse.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <numbers>
#include <stdexcept>

#include <json.hpp>

namespace xychain {

namespace {

constexpr double kPi = std::numbers::pi;
const Complex kI{0.0, 1.0};

Axis base_axis(RotAxis a) {
  return (a == RotAxis::PlusX || a == RotAxis::MinusX) ? Axis::X : Axis::Y;
}

double axis_sign(RotAxis a) {
  return (a == RotAxis::PlusX || a == RotAxis::PlusY) ? 1.0 : -1.0;
}

/// Rotation op for the factor e^{eps * i(pi/4) sigma_base}; eps = -1 gives
/// the plus axis in bracket notation.
HardRotation quarter_rot(int site, Axis base, double eps) {
  RotAxis axis;
  if (base == Axis::X)
    axis = eps < 0 ? RotAxis::PlusX : RotAxis::MinusX;
  else
    axis = eps < 0 ? RotAxis::PlusY : RotAxis::MinusY;
  return {{site}, axis, kPi / 2.0};
}

/// Core program for e^{i(angle/2) zzz}: proton rotations and neighbor
/// couplings only.
std::vector<PulseOp> three_spin_core(double angle) {
  std::vector<PulseOp> ops;
  ops.push_back(quarter_rot(2, Axis::X, -1.0));
  ops.push_back(HardRotation{{2}, RotAxis::PlusY, kPi});
  ops.push_back(ZZEvolution{{1, 2}, kPi / 2.0, ZzRole::ThreeSpinCore});
  ops.push_back(quarter_rot(2, Axis::Y, +1.0));
  ops.push_back(ZZEvolution{{2, 3}, -angle, ZzRole::ThreeSpinCore});
  ops.push_back(quarter_rot(2, Axis::Y, +1.0));
  ops.push_back(ZZEvolution{{1, 2}, kPi / 2.0, ZzRole::ThreeSpinCore});
  ops.push_back(quarter_rot(2, Axis::X, +1.0));
  return ops;
}

Matrix rot2(RotAxis axis, double angle) {
  const Matrix p = pauli(base_axis(axis));
  return std::cos(angle / 2.0) * Matrix::Identity(2, 2) -
         kI * std::sin(angle / 2.0) * axis_sign(axis) * p;
}

void check_pair(const std::array<int, 2>& sites) {
  const bool ok = (sites[0] == 1 && sites[1] == 2) || (sites[0] == 2 && sites[1] == 3);
  if (!ok)
    throw std::invalid_argument("ZZEvolution: only the chain couplings (1,2) and (2,3) are schedulable");
}

std::string fmt17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

double wrap_angle(double a) {
  while (a > kPi) a -= 2.0 * kPi;
  while (a <= -kPi) a += 2.0 * kPi;
  return a;
}

/// Splits a 2x2 unitary with |u00| = 1/sqrt2 as
/// e^{i gamma sz} e^{i pi/4 sx} e^{i delta sz}.
std::pair<double, double> zxz_split_around_x90(const Matrix& u) {
  if (std::abs(std::abs(u(0, 0)) - 1.0 / std::numbers::sqrt2) > 1e-9)
    throw std::runtime_error("junction does not factor through a quarter x pulse");
  const double sum = std::arg(u(0, 0));
  const double diff = std::arg(u(0, 1)) - kPi / 2.0;
  return {wrap_angle(0.5 * (sum + diff)), wrap_angle(0.5 * (sum - diff))};
}

std::string target_to_string(SequenceTarget t) {
  switch (t) {
    case SequenceTarget::UC: return "uc";
    case SequenceTarget::UD: return "ud";
    case SequenceTarget::ThreeSpinRotation: return "zzz";
    case SequenceTarget::SelectiveRotation: return "selective";
    default: return "composite";
  }
}

std::string role_to_string(ZzRole r) {
  switch (r) {
    case ZzRole::ThreeSpinCore: return "three_spin_core";
    case ZzRole::TiltBlock: return "tilt";
    case ZzRole::Central: return "central";
    default: return "none";
  }
}

}  // namespace

std::string rot_axis_to_string(RotAxis a) {
  switch (a) {
    case RotAxis::PlusX: return "+x";
    case RotAxis::MinusX: return "-x";
    case RotAxis::PlusY: return "+y";
    default: return "-y";
  }
}

std::pair<double, double> rotation_frame_angles(const ChainParams& p) {
  const double theta_c = std::atan2(2.0 * std::numbers::sqrt2, p.lambda);
  return {theta_c, kPi - theta_c};
}

PulseSequence compile_uc(const ChainParams& p, double t, SignVariant sign) {
  if (p.lambda < 0.0)
    throw std::invalid_argument("compile_uc: lambda must be nonnegative; use the site-exchange symmetry");
  const double s = sign == SignVariant::Plus ? 1.0 : -1.0;
  const double tilt = kPi / 2.0 - rotation_frame_angles(p).first;
  const double central = 2.0 * t * p.k();

  PulseSequence seq;
  seq.sign = sign;
  seq.target = SequenceTarget::UC;
  seq.t = t;
  seq.lambda = p.lambda;

  auto& ops = seq.ops;
  ops.push_back(quarter_rot(3, Axis::X, -s));
  ops.push_back(quarter_rot(1, Axis::Y, +s));
  ops.push_back(ZZZEvolution{kPi / 4.0});
  if (tilt != 0.0) {
    ops.push_back(quarter_rot(2, Axis::X, -s));
    ops.push_back(ZZEvolution{{2, 3}, tilt, ZzRole::TiltBlock});
    ops.push_back(quarter_rot(2, Axis::X, +s));
  }
  ops.push_back(quarter_rot(2, Axis::Y, +s));
  ops.push_back(ZZEvolution{{1, 2}, central, ZzRole::Central});
  ops.push_back(quarter_rot(2, Axis::Y, -s));
  if (tilt != 0.0) {
    ops.push_back(quarter_rot(2, Axis::X, +s));
    ops.push_back(ZZEvolution{{2, 3}, tilt, ZzRole::TiltBlock});
    ops.push_back(quarter_rot(2, Axis::X, -s));
  }
  ops.push_back(ZZZEvolution{-kPi / 4.0});
  ops.push_back(quarter_rot(3, Axis::X, +s));
  ops.push_back(quarter_rot(1, Axis::Y, -s));
  return seq;
}

PulseSequence compile_ud(const ChainParams& p, double t, SignVariant sign) {
  if (p.lambda < 0.0)
    throw std::invalid_argument("compile_ud: lambda must be nonnegative; use the site-exchange symmetry");
  const double s = sign == SignVariant::Plus ? 1.0 : -1.0;
  const double tilt = kPi / 2.0 - rotation_frame_angles(p).first;
  const double central = 2.0 * t * p.k();

  PulseSequence seq;
  seq.sign = sign;
  seq.target = SequenceTarget::UD;
  seq.t = t;
  seq.lambda = p.lambda;

  auto& ops = seq.ops;
  ops.push_back(quarter_rot(3, Axis::Y, -s));
  ops.push_back(quarter_rot(1, Axis::X, +s));
  ops.push_back(ZZZEvolution{kPi / 4.0});
  if (tilt != 0.0) {
    ops.push_back(quarter_rot(2, Axis::X, -s));
    ops.push_back(ZZEvolution{{1, 2}, tilt, ZzRole::TiltBlock});
    ops.push_back(quarter_rot(2, Axis::X, +s));
  }
  ops.push_back(quarter_rot(2, Axis::Y, -s));
  ops.push_back(ZZEvolution{{2, 3}, central, ZzRole::Central});
  ops.push_back(quarter_rot(2, Axis::Y, +s));
  if (tilt != 0.0) {
    ops.push_back(quarter_rot(2, Axis::X, +s));
    ops.push_back(ZZEvolution{{1, 2}, tilt, ZzRole::TiltBlock});
    ops.push_back(quarter_rot(2, Axis::X, -s));
  }
  ops.push_back(ZZZEvolution{-kPi / 4.0});
  ops.push_back(quarter_rot(3, Axis::Y, +s));
  ops.push_back(quarter_rot(1, Axis::X, -s));
  return seq;
}

PulseSequence lower_zzz(double eta, Flavor flavor, SignVariant sign) {
  const double s = sign == SignVariant::Plus ? 1.0 : -1.0;
  PulseSequence seq;
  seq.sign = sign;
  seq.target = SequenceTarget::ThreeSpinRotation;

  auto& ops = seq.ops;
  if (flavor == Flavor::C) {
    ops.push_back(quarter_rot(1, Axis::Y, +s));
    ops.push_back(quarter_rot(3, Axis::X, -s));
  } else {
    ops.push_back(quarter_rot(1, Axis::X, -s));
    ops.push_back(quarter_rot(3, Axis::Y, +s));
  }
  for (auto& op : three_spin_core(eta)) ops.push_back(std::move(op));
  if (flavor == Flavor::C) {
    ops.push_back(quarter_rot(3, Axis::X, +s));
    ops.push_back(quarter_rot(1, Axis::Y, -s));
  } else {
    ops.push_back(quarter_rot(3, Axis::Y, -s));
    ops.push_back(quarter_rot(1, Axis::X, +s));
  }
  return seq;
}

PulseSequence lower_selective_rotation(int site, RotAxis axis) {
  if (site != 1 && site != 3)
    throw std::invalid_argument("lower_selective_rotation: proton pulses are already selective; site must be 1 or 3");

  PulseSequence seq;
  seq.target = SequenceTarget::SelectiveRotation;

  // hard pulses on both carbons about the complementary axis, around the
  // chemical-shift z-rotation on the addressed site
  const bool about_x = base_axis(axis) == Axis::X;
  const RotAxis first = about_x
      ? (axis == RotAxis::PlusX ? RotAxis::PlusY : RotAxis::MinusY)
      : (axis == RotAxis::PlusY ? RotAxis::MinusX : RotAxis::PlusX);
  const RotAxis last = about_x
      ? (axis == RotAxis::PlusX ? RotAxis::MinusY : RotAxis::PlusY)
      : (axis == RotAxis::PlusY ? RotAxis::PlusX : RotAxis::MinusX);

  seq.ops.push_back(HardRotation{{1, 3}, first, kPi / 2.0});
  seq.ops.push_back(ZRotation{site, -kPi / 2.0});
  seq.ops.push_back(HardRotation{{1, 3}, last, kPi / 2.0});
  return seq;
}

PulseSequence lower_sequence(const PulseSequence& seq) {
  PulseSequence out = seq;
  out.ops.clear();
  for (const PulseOp& op : seq.ops) {
    if (const auto* zzz = std::get_if<ZZZEvolution>(&op)) {
      for (auto& core_op : three_spin_core(zzz->angle))
        out.ops.push_back(std::move(core_op));
    } else {
      out.ops.push_back(op);
    }
  }
  return out;
}

PulseSequence exchange_sites_13(const PulseSequence& seq) {
  auto flip_site = [](int s) { return s == 1 ? 3 : (s == 3 ? 1 : 2); };
  PulseSequence out = seq;
  for (PulseOp& op : out.ops) {
    if (auto* rot = std::get_if<HardRotation>(&op)) {
      for (int& t : rot->targets) t = flip_site(t);
      std::sort(rot->targets.begin(), rot->targets.end());
    } else if (auto* zr = std::get_if<ZRotation>(&op)) {
      zr->site = flip_site(zr->site);
    } else if (auto* zz = std::get_if<ZZEvolution>(&op)) {
      zz->sites = {flip_site(zz->sites[1]), flip_site(zz->sites[0])};
    }
  }
  return out;
}

PulseSequence concatenate(const PulseSequence& uc, const PulseSequence& ud, bool fuse) {
  if (uc.target != SequenceTarget::UC || ud.target != SequenceTarget::UD)
    throw std::invalid_argument("concatenate: expected a C-half followed by a D-half program");
  if (std::abs(uc.t - ud.t) > 1e-12 || std::abs(uc.lambda - ud.lambda) > 1e-12)
    throw std::invalid_argument("concatenate: sequences were compiled for different evolutions");

  PulseSequence out;
  out.sign = uc.sign;
  out.target = SequenceTarget::Composite;
  out.t = uc.t;
  out.lambda = uc.lambda;

  if (!fuse) {
    out.ops = uc.ops;
    out.ops.insert(out.ops.end(), ud.ops.begin(), ud.ops.end());
    return out;
  }

  // the C half ends and the D half begins with one pi/2 carbon pulse per
  // end spin; their per-site product is a quarter x pulse up to z-rotations
  const auto grab = [](const PulseOp& op) -> const HardRotation& {
    const auto* rot = std::get_if<HardRotation>(&op);
    if (!rot || rot->targets.size() != 1 || std::abs(rot->angle - kPi / 2.0) > 1e-12)
      throw std::invalid_argument("concatenate: junction is not made of single-site quarter pulses");
    return *rot;
  };
  const HardRotation& c_last = grab(uc.ops[uc.ops.size() - 1]);
  const HardRotation& c_prev = grab(uc.ops[uc.ops.size() - 2]);
  const HardRotation& d_first = grab(ud.ops[0]);
  const HardRotation& d_second = grab(ud.ops[1]);

  auto site_of = [](const HardRotation& r) { return r.targets[0]; };
  auto pick = [&](int site, const HardRotation& a, const HardRotation& b) -> const HardRotation& {
    if (site_of(a) == site) return a;
    if (site_of(b) == site) return b;
    throw std::invalid_argument("concatenate: junction pulses do not cover both end spins");
  };

  Matrix j1 = rot2(pick(1, d_first, d_second).axis, kPi / 2.0) *
              rot2(pick(1, c_last, c_prev).axis, kPi / 2.0);
  Matrix j3 = rot2(pick(3, d_first, d_second).axis, kPi / 2.0) *
              rot2(pick(3, c_last, c_prev).axis, kPi / 2.0);
  const auto [g1, d1] = zxz_split_around_x90(j1);
  const auto [g3, d3] = zxz_split_around_x90(j3);

  out.ops.assign(uc.ops.begin(), uc.ops.end() - 2);
  auto push_z = [&out](int site, double exponent) {
    if (std::abs(exponent) > 1e-15)
      out.ops.push_back(ZRotation{site, -2.0 * exponent});  // e^{i a sz}
  };
  push_z(1, d1);
  push_z(3, d3);
  out.ops.push_back(HardRotation{{1, 3}, RotAxis::MinusX, kPi / 2.0});
  push_z(1, g1);
  push_z(3, g3);
  out.ops.insert(out.ops.end(), ud.ops.begin() + 2, ud.ops.end());
  return out;
}

Matrix op_matrix(const PulseOp& op) {
  const Matrix id = Matrix::Identity(8, 8);
  if (const auto* rot = std::get_if<HardRotation>(&op)) {
    if (rot->targets.empty())
      throw std::invalid_argument("HardRotation: empty target set");
    Matrix m = id;
    for (int site : rot->targets) {
      if (site < 1 || site > 3)
        throw std::invalid_argument("HardRotation: site out of range");
      const Matrix p = axis_sign(rot->axis) * pauli_at(site, base_axis(rot->axis));
      m = (std::cos(rot->angle / 2.0) * id - kI * std::sin(rot->angle / 2.0) * p) * m;
    }
    return m;
  }
  if (const auto* zr = std::get_if<ZRotation>(&op)) {
    const Matrix p = pauli_at(zr->site, Axis::Z);
    return std::cos(zr->angle / 2.0) * id - kI * std::sin(zr->angle / 2.0) * p;
  }
  if (const auto* zz = std::get_if<ZZEvolution>(&op)) {
    check_pair(zz->sites);
    const Matrix p = pauli_at(zz->sites[0], Axis::Z) * pauli_at(zz->sites[1], Axis::Z);
    return std::cos(zz->angle / 2.0) * id - kI * std::sin(zz->angle / 2.0) * p;
  }
  if (const auto* zzz = std::get_if<ZZZEvolution>(&op)) {
    const Matrix p = pauli_at(1, Axis::Z) * pauli_at(2, Axis::Z) * pauli_at(3, Axis::Z);
    return std::cos(zzz->angle / 2.0) * id + kI * std::sin(zzz->angle / 2.0) * p;
  }
  return id;  // Delay
}

Matrix simulate_sequence(const PulseSequence& seq) {
  Matrix m = Matrix::Identity(8, 8);
  for (const PulseOp& op : seq.ops) m = op_matrix(op) * m;
  return m;
}

DurationEstimate estimate_duration(const PulseSequence& seq, const NmrParams& nmr,
                                   const DurationConfig& config) {
  nmr.validate();
  if (seq.lambda < 0.0)
    throw std::invalid_argument("estimate_duration: lambda must be nonnegative");
  if (nmr.j12 <= 0.0 || nmr.j23 <= 0.0)
    throw std::invalid_argument("estimate_duration: chain couplings must be positive");

  const double lam = seq.lambda;
  const double tk = seq.t * ChainParams{lam}.k();
  const double tilt = kPi / 2.0 - std::atan2(2.0 * std::numbers::sqrt2, lam);

  DurationEstimate est;
  est.d1 = 9.0 / (8.0 * nmr.j12);
  est.d2 = 1.0 / (16.0 * nmr.j23);
  est.d3 = tilt / (4.0 * kPi * nmr.j23);
  est.d4 = (tk + 2.0 * kPi) / (2.0 * kPi * nmr.j12);
  est.d5 = (kPi - 0.5 * tilt) / (2.0 * kPi * nmr.j12);
  est.d6 = tk / (2.0 * kPi * nmr.j23);

  // evolutions per delay class
  int n[6] = {0, 0, 0, 0, 0, 0};
  int on12 = 0, on23 = 0;
  for (const PulseOp& op : lower_sequence(seq).ops) {
    const auto* zz = std::get_if<ZZEvolution>(&op);
    if (!zz) continue;
    const bool pair12 = zz->sites[0] == 1;
    int cls = -1;
    switch (zz->role) {
      case ZzRole::ThreeSpinCore: cls = pair12 ? 0 : 1; break;
      case ZzRole::TiltBlock: cls = pair12 ? 4 : 2; break;
      case ZzRole::Central: cls = pair12 ? 3 : 5; break;
      default:
        throw std::invalid_argument("estimate_duration: coupling evolution lacks a hardware annotation");
    }
    ++n[cls];
    (pair12 ? on12 : on23)++;
  }

  const double d[6] = {est.d1, est.d2, est.d3, est.d4, est.d5, est.d6};
  const char* labels[6] = {"d1", "d2", "d3", "d4", "d5", "d6"};
  for (int i = 0; i < 6; ++i) {
    const int count = n[i] * config.segments_per_evolution;
    if (count == 0) continue;
    est.breakdown.push_back({labels[i], count, d[i], count * d[i]});
    est.total += count * d[i];
  }
  if (config.include_pulse_widths) {
    // a coupling evolution refocuses the uninvolved carbon with shaped pi
    // pulses: C3 during (1,2) periods, C1 during (2,3) periods
    const int n3 = on12 * config.selective_pi_per_evolution;
    const int n1 = on23 * config.selective_pi_per_evolution;
    if (n3 > 0) {
      est.breakdown.push_back({"pi_c3_selective", n3, config.c3_selective_pi_seconds,
                               n3 * config.c3_selective_pi_seconds});
      est.total += n3 * config.c3_selective_pi_seconds;
    }
    if (n1 > 0) {
      est.breakdown.push_back({"pi_c1_selective", n1, config.c1_selective_pi_seconds,
                               n1 * config.c1_selective_pi_seconds});
      est.total += n1 * config.c1_selective_pi_seconds;
    }
  }
  return est;
}

std::string sequence_to_text(const PulseSequence& seq) {
  std::string s;
  for (const PulseOp& op : seq.ops) {
    if (const auto* rot = std::get_if<HardRotation>(&op)) {
      s += "ROT ";
      for (std::size_t i = 0; i < rot->targets.size(); ++i)
        s += (i ? "," : "") + std::to_string(rot->targets[i]);
      s += " " + rot_axis_to_string(rot->axis) + " " + fmt17(rot->angle) + "\n";
    } else if (const auto* zr = std::get_if<ZRotation>(&op)) {
      s += "ZROT " + std::to_string(zr->site) + " " + fmt17(zr->angle) + "\n";
    } else if (const auto* zz = std::get_if<ZZEvolution>(&op)) {
      s += "ZZ " + std::to_string(zz->sites[0]) + "," + std::to_string(zz->sites[1]) +
           " " + fmt17(zz->angle) + "\n";
    } else if (const auto* zzz = std::get_if<ZZZEvolution>(&op)) {
      s += "ZZZ " + fmt17(zzz->angle) + "\n";
    } else if (const auto* dl = std::get_if<Delay>(&op)) {
      s += "DELAY " + fmt17(dl->seconds) + " " + dl->note + "\n";
    }
  }
  return s;
}

std::string sequence_to_json_text(const PulseSequence& seq) {
  nlohmann::json j;
  j["sign"] = seq.sign == SignVariant::Plus ? "plus" : "minus";
  j["target"] = target_to_string(seq.target);
  j["t"] = seq.t;
  j["lambda"] = seq.lambda;
  nlohmann::json ops = nlohmann::json::array();
  for (const PulseOp& op : seq.ops) {
    nlohmann::json o;
    if (const auto* rot = std::get_if<HardRotation>(&op)) {
      o = {{"kind", "rot"}, {"targets", rot->targets},
           {"axis", rot_axis_to_string(rot->axis)}, {"angle", rot->angle}};
    } else if (const auto* zr = std::get_if<ZRotation>(&op)) {
      o = {{"kind", "zrot"}, {"site", zr->site}, {"angle", zr->angle}};
    } else if (const auto* zz = std::get_if<ZZEvolution>(&op)) {
      o = {{"kind", "zz"}, {"pair", zz->sites}, {"angle", zz->angle},
           {"role", role_to_string(zz->role)}};
    } else if (const auto* zzz = std::get_if<ZZZEvolution>(&op)) {
      o = {{"kind", "zzz"}, {"angle", zzz->angle}};
    } else if (const auto* dl = std::get_if<Delay>(&op)) {
      o = {{"kind", "delay"}, {"seconds", dl->seconds}, {"note", dl->note}};
    }
    ops.push_back(o);
  }
  j["ops"] = ops;
  return j.dump(2);
}

std::string duration_to_json_text(const DurationEstimate& est) {
  nlohmann::json j;
  j["d1"] = est.d1;
  j["d2"] = est.d2;
  j["d3"] = est.d3;
  j["d4"] = est.d4;
  j["d5"] = est.d5;
  j["d6"] = est.d6;
  j["total_seconds"] = est.total;
  nlohmann::json items = nlohmann::json::array();
  for (const auto& item : est.breakdown)
    items.push_back({{"label", item.label}, {"count", item.count},
                     {"each", item.each}, {"subtotal", item.subtotal}});
  j["breakdown"] = items;
  return j.dump(2);
}

}  // namespace xychain
