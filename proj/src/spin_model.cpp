#include "xychain/spin_model.hpp"

#include <fstream>
#include <numbers>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace xychain {

namespace {

const Complex kI{0.0, 1.0};

Matrix pauli2(PauliLabel l) {
  Matrix m(2, 2);
  switch (l) {
    case PauliLabel::I: m << 1, 0, 0, 1; break;
    case PauliLabel::X: m << 0, 1, 1, 0; break;
    case PauliLabel::Y: m << 0, -kI, kI, 0; break;
    case PauliLabel::Z: m << 1, 0, 0, -1; break;
  }
  return m;
}

PauliLabel label_of(Axis a) {
  switch (a) {
    case Axis::X: return PauliLabel::X;
    case Axis::Y: return PauliLabel::Y;
    default: return PauliLabel::Z;
  }
}

}  // namespace

NmrParams NmrParams::tce() {
  NmrParams p;
  p.delta_nu13 = 905.3;
  p.nu1 = 0.5 * p.delta_nu13;
  p.nu2 = 0.0;
  p.nu3 = -0.5 * p.delta_nu13;
  p.j12 = 200.9;
  p.j23 = 9.16;
  p.j13 = 103.1;
  return p;
}

NmrParams NmrParams::from_json_text(const std::string& text) {
  nlohmann::json j = nlohmann::json::parse(text);
  NmrParams p = tce();
  auto pick = [&j](const char* key, double& field) {
    if (j.contains(key)) field = j.at(key).get<double>();
  };
  pick("nu1", p.nu1);
  pick("nu2", p.nu2);
  pick("nu3", p.nu3);
  pick("j12", p.j12);
  pick("j23", p.j23);
  pick("j13", p.j13);
  pick("delta_nu13", p.delta_nu13);
  p.validate();
  return p;
}

NmrParams NmrParams::from_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in)
    throw std::runtime_error("cannot open NMR parameter file: " + path);
  std::ostringstream ss;
  ss << in.rdbuf();
  return from_json_text(ss.str());
}

void NmrParams::validate() const {
  for (double v : {nu1, nu2, nu3, j12, j23, j13, delta_nu13})
    if (!std::isfinite(v))
      throw std::invalid_argument("NmrParams: non-finite value");
  if (j12 == 0.0 || j23 == 0.0)
    throw std::invalid_argument("NmrParams: j12 and j23 must be nonzero");
}

Axis axis_from_string(const std::string& s) {
  if (s == "x" || s == "X") return Axis::X;
  if (s == "y" || s == "Y") return Axis::Y;
  if (s == "z" || s == "Z") return Axis::Z;
  throw std::invalid_argument("unknown axis: " + s);
}

std::string axis_to_string(Axis a) {
  switch (a) {
    case Axis::X: return "x";
    case Axis::Y: return "y";
    default: return "z";
  }
}

Matrix pauli(Axis axis) { return pauli2(label_of(axis)); }

Matrix pauli_at(int site, Axis axis) {
  if (site < 1 || site > 3)
    throw std::invalid_argument("pauli_at: site must be 1..3");
  std::array<PauliLabel, 3> labels{PauliLabel::I, PauliLabel::I, PauliLabel::I};
  labels[site - 1] = label_of(axis);
  return pauli_string_matrix(labels);
}

Matrix pauli_string_matrix(const std::array<PauliLabel, 3>& labels) {
  return kron(kron(pauli2(labels[0]), pauli2(labels[1])), pauli2(labels[2]));
}

std::string pauli_string_name(const std::array<PauliLabel, 3>& labels) {
  static const char* names = "IXYZ";
  std::string s(3, 'I');
  for (int i = 0; i < 3; ++i) s[i] = names[static_cast<int>(labels[i])];
  return s;
}

Matrix build_h_xy3(const ChainParams& p) {
  using L = PauliLabel;
  Matrix h = pauli_string_matrix({L::X, L::X, L::I}) +
             pauli_string_matrix({L::Y, L::Y, L::I}) +
             pauli_string_matrix({L::I, L::X, L::X}) +
             pauli_string_matrix({L::I, L::Y, L::Y});
  h += 0.5 * p.lambda * (pauli_string_matrix({L::X, L::Z, L::Y}) -
                         pauli_string_matrix({L::Y, L::Z, L::X}));
  return h;
}

Matrix build_c(const ChainParams& p) {
  using L = PauliLabel;
  return pauli_string_matrix({L::X, L::X, L::I}) +
         pauli_string_matrix({L::I, L::Y, L::Y}) +
         0.5 * p.lambda * pauli_string_matrix({L::X, L::Z, L::Y});
}

Matrix build_d(const ChainParams& p) {
  using L = PauliLabel;
  return pauli_string_matrix({L::Y, L::Y, L::I}) +
         pauli_string_matrix({L::I, L::X, L::X}) -
         0.5 * p.lambda * pauli_string_matrix({L::Y, L::Z, L::X});
}

Matrix build_h_nmr_weak(const NmrParams& p) {
  const double pi = std::numbers::pi;
  Matrix h = -pi * (p.nu1 * pauli_at(1, Axis::Z) + p.nu2 * pauli_at(2, Axis::Z) +
                    p.nu3 * pauli_at(3, Axis::Z));
  using L = PauliLabel;
  h += 0.5 * pi * p.j12 * pauli_string_matrix({L::Z, L::Z, L::I});
  h += 0.5 * pi * p.j23 * pauli_string_matrix({L::I, L::Z, L::Z});
  return h;
}

Matrix build_h_nmr_strong(const NmrParams& p) {
  using L = PauliLabel;
  Matrix h = build_h_nmr_weak(p);
  h += 0.5 * std::numbers::pi * p.j13 *
       (pauli_string_matrix({L::X, L::I, L::X}) +
        pauli_string_matrix({L::Y, L::I, L::Y}) +
        pauli_string_matrix({L::Z, L::I, L::Z}));
  return h;
}

DensityOperator::DensityOperator(Matrix m, Convention c)
    : matrix(std::move(m)), convention(c) {
  if (matrix.rows() != 8 || matrix.cols() != 8)
    throw std::invalid_argument("DensityOperator: expected an 8x8 matrix");
  if (!is_hermitian(matrix, kHermitianTol))
    throw std::invalid_argument("DensityOperator: matrix is not Hermitian");
  const double tr = matrix.trace().real();
  const double want = convention == Convention::Full ? 1.0 : 0.0;
  if (std::abs(tr - want) > kHermitianTol)
    throw std::invalid_argument("DensityOperator: trace violates convention");
}

std::vector<PauliString> pauli_decompose(const DensityOperator& rho) {
  std::vector<PauliString> out;
  out.reserve(64);
  for (int a = 0; a < 4; ++a)
    for (int b = 0; b < 4; ++b)
      for (int c = 0; c < 4; ++c) {
        std::array<PauliLabel, 3> labels{static_cast<PauliLabel>(a),
                                         static_cast<PauliLabel>(b),
                                         static_cast<PauliLabel>(c)};
        const Matrix p = pauli_string_matrix(labels);
        out.push_back({labels, (p.adjoint() * rho.matrix).trace() / 8.0});
      }
  return out;
}

Matrix reassemble(const std::vector<PauliString>& terms) {
  Matrix m = Matrix::Zero(8, 8);
  for (const auto& t : terms)
    m += t.coefficient * pauli_string_matrix(t.labels);
  return m;
}

}  // namespace xychain
