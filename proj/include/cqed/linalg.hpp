#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <utility>
#include <vector>

#include "cqed/errors.hpp"

// Small dense linear algebra: complex Gaussian elimination and a Jacobi
// eigensolver for real symmetric matrices. Sizes here are tiny (3x3
// steady-state systems, (N+1)-dimensional spin matrices), so simplicity
// beats sophistication.

namespace cqed::linalg {

using Complex = std::complex<double>;

/// Solve A x = b for a dense n x n complex matrix (row-major), using
/// Gaussian elimination with partial pivoting. Throws NumericalError on
/// a (near-)singular matrix.
inline std::vector<Complex> solve_dense(std::vector<Complex> A, std::vector<Complex> b,
                                        std::size_t n) {
  if (A.size() != n * n || b.size() != n)
    throw ValidationError("solve_dense: dimension mismatch");

  double scale = 0.0;
  for (const auto& v : A) scale = std::max(scale, std::abs(v));
  if (scale == 0.0) throw NumericalError("solve_dense: zero matrix");

  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    double best = std::abs(A[k * n + k]);
    for (std::size_t i = k + 1; i < n; ++i) {
      const double mag = std::abs(A[i * n + k]);
      if (mag > best) {
        best = mag;
        pivot = i;
      }
    }
    if (best < 1e-14 * scale)
      throw NumericalError("solve_dense: singular or nearly singular matrix");
    if (pivot != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(A[k * n + j], A[pivot * n + j]);
      std::swap(b[k], b[pivot]);
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      const Complex factor = A[i * n + k] / A[k * n + k];
      for (std::size_t j = k; j < n; ++j) A[i * n + j] -= factor * A[k * n + j];
      b[i] -= factor * b[k];
    }
  }

  std::vector<Complex> x(n);
  for (std::size_t ii = n; ii-- > 0;) {
    Complex sum = 0.0;
    for (std::size_t j = ii + 1; j < n; ++j) sum += A[ii * n + j] * x[j];
    x[ii] = (b[ii] - sum) / A[ii * n + ii];
  }
  return x;
}

/// Eigendecomposition of a real symmetric matrix (row-major) by cyclic
/// Jacobi rotations. Returns eigenvalues w and the orthogonal matrix V
/// (columns are eigenvectors), so that M = V diag(w) V^T.
struct SymEig {
  std::vector<double> w;  ///< eigenvalues
  std::vector<double> V;  ///< row-major, column k = eigenvector k
};

inline SymEig jacobi_eigh(std::vector<double> M, std::size_t n) {
  if (M.size() != n * n) throw ValidationError("jacobi_eigh: dimension mismatch");
  std::vector<double> V(n * n, 0.0);
  for (std::size_t i = 0; i < n; ++i) V[i * n + i] = 1.0;

  auto offdiag = [&]() {
    double s = 0.0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j) s += M[i * n + j] * M[i * n + j];
    return s;
  };
  double norm = 0.0;
  for (const auto& v : M) norm = std::max(norm, std::abs(v));
  const double tol = (norm > 0.0 ? norm : 1.0) * 1e-15;

  for (int sweep = 0; sweep < 100 && offdiag() > tol * tol; ++sweep) {
    for (std::size_t p = 0; p < n; ++p) {
      for (std::size_t q = p + 1; q < n; ++q) {
        const double apq = M[p * n + q];
        if (std::abs(apq) <= tol * 1e-2) continue;
        const double app = M[p * n + p];
        const double aqq = M[q * n + q];
        const double theta = (aqq - app) / (2.0 * apq);
        const double t = (theta >= 0.0 ? 1.0 : -1.0) /
                         (std::abs(theta) + std::sqrt(theta * theta + 1.0));
        const double c = 1.0 / std::sqrt(t * t + 1.0);
        const double s = t * c;
        for (std::size_t k = 0; k < n; ++k) {
          const double mkp = M[k * n + p];
          const double mkq = M[k * n + q];
          M[k * n + p] = c * mkp - s * mkq;
          M[k * n + q] = s * mkp + c * mkq;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double mpk = M[p * n + k];
          const double mqk = M[q * n + k];
          M[p * n + k] = c * mpk - s * mqk;
          M[q * n + k] = s * mpk + c * mqk;
        }
        for (std::size_t k = 0; k < n; ++k) {
          const double vkp = V[k * n + p];
          const double vkq = V[k * n + q];
          V[k * n + p] = c * vkp - s * vkq;
          V[k * n + q] = s * vkp + c * vkq;
        }
      }
    }
  }

  SymEig out;
  out.w.resize(n);
  for (std::size_t i = 0; i < n; ++i) out.w[i] = M[i * n + i];
  out.V = std::move(V);
  return out;
}

}  // namespace cqed::linalg
