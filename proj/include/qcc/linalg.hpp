// linalg.hpp: dense complex linear algebra shared by every module.
//
// Conventions: states and operators are column-major Eigen matrices of
// complex<double>; vec() stacks columns, so vec(A X B) = kron(B^T, A) vec(X).
#pragma once

#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include <Eigen/Dense>
#include <unsupported/Eigen/KroneckerProduct>

#include "qcc/errors.hpp"

namespace qcc {

using Complex = std::complex<double>;
using Matrix = Eigen::MatrixXcd;
using Vector = Eigen::VectorXcd;
using RealVector = Eigen::VectorXd;
using Index = Eigen::Index;

// ----------- expression-friendly helpers -----------

template <typename Derived>
Matrix hermitize(const Eigen::MatrixBase<Derived>& a) {
  return 0.5 * (a.derived() + a.derived().adjoint()).eval();
}

template <typename DerivedA, typename DerivedB>
Matrix kron(const Eigen::MatrixBase<DerivedA>& a, const Eigen::MatrixBase<DerivedB>& b) {
  return Eigen::kroneckerProduct(a.derived(), b.derived()).eval();
}

template <typename Derived>
bool is_hermitian(const Eigen::MatrixBase<Derived>& a, double tol = 1e-12) {
  const Matrix m = a.derived();
  if (m.rows() != m.cols()) return false;
  const double scale = std::max(1.0, m.cwiseAbs().maxCoeff());
  return (m - m.adjoint()).cwiseAbs().maxCoeff() <= tol * scale;
}

// Column stacking of a square matrix.
template <typename Derived>
Vector vec(const Eigen::MatrixBase<Derived>& a) {
  const Matrix m = a.derived();
  return Eigen::Map<const Vector>(m.data(), m.size());
}

inline Matrix unvec(const Vector& v, Index dim) {
  if (v.size() != dim * dim) throw std::invalid_argument("unvec: size is not dim^2");
  return Eigen::Map<const Matrix>(v.data(), dim, dim);
}

// Trace over the second (auxiliary) factor of a dim_s*dim_a system.
template <typename Derived>
Matrix partial_trace_aux(const Eigen::MatrixBase<Derived>& tau, Index dim_s, Index dim_a) {
  const Matrix t = tau.derived();
  if (t.rows() != dim_s * dim_a || t.cols() != dim_s * dim_a)
    throw std::invalid_argument("partial_trace_aux: dimension mismatch");
  Matrix out = Matrix::Zero(dim_s, dim_s);
  for (Index i = 0; i < dim_s; ++i)
    for (Index j = 0; j < dim_s; ++j)
      for (Index k = 0; k < dim_a; ++k) out(i, j) += t(i * dim_a + k, j * dim_a + k);
  return out;
}

// Trace over the first (system) factor.
template <typename Derived>
Matrix partial_trace_sys(const Eigen::MatrixBase<Derived>& tau, Index dim_s, Index dim_a) {
  const Matrix t = tau.derived();
  if (t.rows() != dim_s * dim_a || t.cols() != dim_s * dim_a)
    throw std::invalid_argument("partial_trace_sys: dimension mismatch");
  Matrix out = Matrix::Zero(dim_a, dim_a);
  for (Index k = 0; k < dim_a; ++k)
    for (Index l = 0; l < dim_a; ++l)
      for (Index i = 0; i < dim_s; ++i) out(k, l) += t(i * dim_a + k, i * dim_a + l);
  return out;
}

// ----------- hermitian eigenproblems -----------

// Eigenvalues ascending, columns of `vectors` are the matching eigenvectors.
struct HermitianSpectrum {
  RealVector values;
  Matrix vectors;
};

// Rejects inputs farther than tol (relative to the largest entry) from their
// adjoint, symmetrizes, then decomposes.
HermitianSpectrum hermitian_eig(const Matrix& a, double tol = 1e-12);

// Spectral logarithm of a density-like matrix. Eigenvalues below eig_floor
// are clamped to eig_floor and flagged per direction; callers decide whether
// the deficiency actually matters (it does not when the generator has no
// weight there). Eigenvalues below -1e-10 are rejected outright.
struct MatrixLog {
  Matrix value;
  HermitianSpectrum spectrum;
  std::vector<bool> deficient;  // per ascending eigenvalue
  bool support_deficient = false;
  double eig_floor = 0.0;
};

MatrixLog matrix_ln_hermitian(const Matrix& rho, double eig_floor = 1e-14);

Matrix matrix_exp_hermitian(const Matrix& a);

// ----------- linear solves -----------

// Partial-pivot LU with a residual certificate. Throws NumericError with the
// estimated condition number when the system is singular to working
// precision or the residual cannot be certified.
Vector solve_linear(const Matrix& a, const Vector& b);

// ----------- random states -----------

using Rng = std::mt19937_64;

// Haar-distributed pure state (ket). Gaussian samples are produced from raw
// mt19937_64 output with an explicit Box-Muller map so that a given seed
// yields the same state on every platform and standard library.
Vector haar_random_pure_state(Index dim, Rng& rng);
Vector haar_random_pure_state(Index dim, std::uint64_t seed);

}  // namespace qcc
