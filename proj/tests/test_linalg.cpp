#include <doctest.h>

#include <numbers>
#include <random>

#include "xychain/linalg.hpp"
#include "xychain/spin_model.hpp"

using namespace xychain;

namespace {

Matrix random_hermitian(std::mt19937& rng, int dim) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  Matrix m(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) m(i, j) = Complex(dist(rng), dist(rng));
  return 0.5 * (m + m.adjoint());
}

Matrix random_unitary(std::mt19937& rng, int dim) {
  std::uniform_real_distribution<double> dist(-1.0, 1.0);
  Matrix m(dim, dim);
  for (int i = 0; i < dim; ++i)
    for (int j = 0; j < dim; ++j) m(i, j) = Complex(dist(rng), dist(rng));
  return Eigen::HouseholderQR<Matrix>(m).householderQ();
}

/// Scaled Taylor series for e^{-i h t}, 30 terms; independent of the
/// eigendecomposition route.
Matrix taylor_expm(const Matrix& h, double t) {
  Matrix a = Complex(0.0, -t) * h;
  int squarings = 0;
  while (a.norm() > 0.5) {
    a *= 0.5;
    ++squarings;
  }
  Matrix term = Matrix::Identity(a.rows(), a.cols());
  Matrix sum = term;
  for (int n = 1; n <= 30; ++n) {
    term = term * a / double(n);
    sum += term;
  }
  for (int i = 0; i < squarings; ++i) sum = sum * sum;
  return sum;
}

}  // namespace

TEST_CASE("kron identity and diagonal products") {
  const Matrix i2 = Matrix::Identity(2, 2);
  CHECK((kron(i2, i2) - Matrix::Identity(4, 4)).norm() == 0.0);

  const Matrix zz = kron(pauli(Axis::Z), pauli(Axis::Z));
  Matrix expect = Matrix::Zero(4, 4);
  expect.diagonal() << 1, -1, -1, 1;
  CHECK((zz - expect).norm() == 0.0);
}

TEST_CASE("kron matches the elementwise definition") {
  const Matrix a = pauli(Axis::X), b = pauli(Axis::Y);
  const Matrix k = kron(a, b);
  for (int i = 0; i < 2; ++i)
    for (int j = 0; j < 2; ++j)
      for (int r = 0; r < 2; ++r)
        for (int c = 0; c < 2; ++c)
          CHECK(k(i * 2 + r, j * 2 + c) == a(i, j) * b(r, c));
}

TEST_CASE("kron is associative on Pauli factors") {
  const Matrix ps[4] = {Matrix::Identity(2, 2), pauli(Axis::X), pauli(Axis::Y),
                        pauli(Axis::Z)};
  for (const auto& a : ps)
    for (const auto& b : ps)
      for (const auto& c : ps)
        CHECK((kron(kron(a, b), c) - kron(a, kron(b, c))).norm() == 0.0);
}

TEST_CASE("kron rejects results beyond three qubits") {
  const Matrix i4 = Matrix::Identity(4, 4);
  CHECK_THROWS_AS(kron(i4, i4), std::invalid_argument);
  CHECK_THROWS_AS(kron(Matrix::Identity(8, 8), Matrix::Identity(2, 2)),
                  std::invalid_argument);
}

TEST_CASE("exponential of the zero generator") {
  const Matrix z = Matrix::Zero(4, 4);
  CHECK((expm_hermitian_generator(z, 2.7) - Matrix::Identity(4, 4)).norm() < 1e-15);
}

TEST_CASE("exponential of sigma_z has the diagonal closed form") {
  const Matrix u = expm_hermitian_generator(pauli(Axis::Z), std::numbers::pi / 2);
  CHECK(std::abs(u(0, 0) - std::exp(Complex(0, -std::numbers::pi / 2))) < 1e-14);
  CHECK(std::abs(u(1, 1) - std::exp(Complex(0, std::numbers::pi / 2))) < 1e-14);
  CHECK(std::abs(u(0, 1)) + std::abs(u(1, 0)) == 0.0);
}

TEST_CASE("exponential matches a scaled Taylor series") {
  const Matrix h = build_h_xy3({1.5});
  CHECK((expm_hermitian_generator(h, 0.3) - taylor_expm(h, 0.3)).norm() < 1e-10);
}

TEST_CASE("exponential rejects non-Hermitian generators") {
  Matrix m = Matrix::Zero(2, 2);
  m(0, 1) = 1.0;
  CHECK_THROWS_AS(expm_hermitian_generator(m, 1.0), std::invalid_argument);
}

TEST_CASE("exponential is unitary and has the group property") {
  std::mt19937 rng(7);
  std::uniform_real_distribution<double> tdist(-5.0, 5.0);
  for (int trial = 0; trial < 20; ++trial) {
    const Matrix h = random_hermitian(rng, 8);
    const double t1 = tdist(rng), t2 = tdist(rng);
    const Matrix u = expm_hermitian_generator(h, t1);
    CHECK((u.adjoint() * u - Matrix::Identity(8, 8)).norm() < 1e-10);
    CHECK((expm_hermitian_generator(h, t1 + t2) -
           u * expm_hermitian_generator(h, t2)).norm() < 1e-10);
  }
}

TEST_CASE("phase distance basics") {
  std::mt19937 rng(11);
  const Matrix u = random_unitary(rng, 8);
  CHECK(dist_up_to_global_phase(u, u) < 1e-12);
  const Complex phase = std::exp(Complex(0, std::numbers::pi / 3));
  CHECK(dist_up_to_global_phase(u, phase * u) < 1e-12);
  CHECK(dist_up_to_global_phase(Matrix::Identity(2, 2), pauli(Axis::X)) ==
        doctest::Approx(2.0).epsilon(1e-12));
}

TEST_CASE("phase distance is symmetric and detects genuine differences") {
  std::mt19937 rng(13);
  for (int trial = 0; trial < 10; ++trial) {
    const Matrix a = random_unitary(rng, 4);
    const Matrix b = random_unitary(rng, 4);
    CHECK(dist_up_to_global_phase(a, b) ==
          doctest::Approx(dist_up_to_global_phase(b, a)).epsilon(1e-12));
    CHECK(dist_up_to_global_phase(a, b) > 1e-3);  // random pairs are far apart
  }
}

TEST_CASE("phase distance rejects mismatched dimensions") {
  CHECK_THROWS_AS(dist_up_to_global_phase(Matrix::Identity(2, 2), Matrix::Identity(4, 4)),
                  std::invalid_argument);
}
