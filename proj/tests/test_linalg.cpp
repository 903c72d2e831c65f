#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <complex>
#include <vector>

#include "cqed/linalg.hpp"
#include "oracles.hpp"

using namespace cqed;
using Complex = std::complex<double>;

TEST_CASE("complex solve against residual check") {
  oracles::Rng rng(9);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 2 + static_cast<std::size_t>(rng.uniform(0.0, 4.0));
    std::vector<Complex> A(n * n), b(n);
    for (auto& v : A) v = Complex(rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0));
    for (auto& v : b) v = Complex(rng.uniform(-2.0, 2.0), rng.uniform(-2.0, 2.0));
    for (std::size_t i = 0; i < n; ++i) A[i * n + i] += 4.0;  // keep well conditioned

    const auto x = linalg::solve_dense(A, b, n);
    for (std::size_t i = 0; i < n; ++i) {
      Complex r = -b[i];
      for (std::size_t j = 0; j < n; ++j) r += A[i * n + j] * x[j];
      CHECK(std::abs(r) < 1e-11);
    }
  }
}

TEST_CASE("singular matrices are reported") {
  std::vector<Complex> A = {Complex(1, 0), Complex(2, 0), Complex(2, 0), Complex(4, 0)};
  const std::vector<Complex> rhs2 = {Complex(1, 0), Complex(1, 0)};
  CHECK_THROWS_AS(linalg::solve_dense(A, rhs2, 2), NumericalError);
  CHECK_THROWS_AS(linalg::solve_dense({Complex(0, 0)}, {Complex(1, 0)}, 1), NumericalError);
}

TEST_CASE("dimension mismatch is rejected") {
  const std::vector<Complex> a1 = {Complex(1, 0)};
  const std::vector<Complex> b2 = {Complex(1, 0), Complex(2, 0)};
  CHECK_THROWS_AS(linalg::solve_dense(a1, b2, 2), ValidationError);
}

TEST_CASE("jacobi eigendecomposition reconstructs the matrix") {
  oracles::Rng rng(13);
  const std::size_t n = 7;
  std::vector<double> M(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      M[i * n + j] = rng.uniform(-1.0, 1.0);
      M[j * n + i] = M[i * n + j];
    }
  const auto eig = linalg::jacobi_eigh(M, n);

  // V diag(w) V^T == M
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      double sum = 0.0;
      for (std::size_t k = 0; k < n; ++k)
        sum += eig.V[i * n + k] * eig.w[k] * eig.V[j * n + k];
      CHECK(sum == doctest::Approx(M[i * n + j]).epsilon(1e-10).scale(1.0));
    }
  // orthogonality
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = 0; b < n; ++b) {
      double dot = 0.0;
      for (std::size_t k = 0; k < n; ++k) dot += eig.V[k * n + a] * eig.V[k * n + b];
      CHECK(dot == doctest::Approx(a == b ? 1.0 : 0.0).epsilon(1e-12).scale(1.0));
    }
}

TEST_CASE("angular momentum x matrix has the z spectrum") {
  // eigenvalues of J_x are m = -j..j, same as J_z
  const int n_spins = 9;
  const std::size_t dim = n_spins + 1;
  const double j = 0.5 * n_spins;
  std::vector<double> Jx(dim * dim, 0.0);
  for (std::size_t k = 0; k + 1 < dim; ++k) {
    const double m = static_cast<double>(k) - j;
    const double c = 0.5 * std::sqrt(j * (j + 1.0) - m * (m + 1.0));
    Jx[(k + 1) * dim + k] = c;
    Jx[k * dim + (k + 1)] = c;
  }
  auto eig = linalg::jacobi_eigh(Jx, dim);
  std::sort(eig.w.begin(), eig.w.end());
  for (std::size_t k = 0; k < dim; ++k)
    CHECK(eig.w[k] == doctest::Approx(static_cast<double>(k) - j).epsilon(1e-11).scale(1.0));
}
