// linalg.cpp: eigendecompositions, certified solves, Haar sampling.

#include "qcc/linalg.hpp"

#include <cmath>
#include <limits>
#include <sstream>

#include "qcc/units.hpp"

namespace qcc {

HermitianSpectrum hermitian_eig(const Matrix& a, double tol) {
  if (a.rows() != a.cols()) throw std::invalid_argument("hermitian_eig: matrix not square");
  const double scale = std::max(1.0, a.cwiseAbs().maxCoeff());
  const double defect = (a - a.adjoint()).cwiseAbs().maxCoeff();
  if (defect > tol * scale) {
    std::ostringstream msg;
    msg << "hermitian_eig: matrix is not hermitian (defect " << defect << ", allowed "
        << tol * scale << ")";
    throw std::invalid_argument(msg.str());
  }
  Eigen::SelfAdjointEigenSolver<Matrix> es(hermitize(a));
  if (es.info() != Eigen::Success) throw NumericError("hermitian_eig: decomposition failed");
  return {es.eigenvalues(), es.eigenvectors()};
}

MatrixLog matrix_ln_hermitian(const Matrix& rho, double eig_floor) {
  if (eig_floor <= 0.0) throw std::invalid_argument("matrix_ln_hermitian: eig_floor must be > 0");
  MatrixLog out;
  out.eig_floor = eig_floor;
  out.spectrum = hermitian_eig(rho);
  const Index d = rho.rows();
  out.deficient.assign(static_cast<std::size_t>(d), false);
  RealVector logs(d);
  for (Index k = 0; k < d; ++k) {
    double lam = out.spectrum.values(k);
    if (lam < -1e-10) {
      std::ostringstream msg;
      msg << "matrix_ln_hermitian: eigenvalue " << lam << " below -1e-10, not a density matrix";
      throw std::invalid_argument(msg.str());
    }
    if (lam < eig_floor) {
      lam = eig_floor;
      out.deficient[static_cast<std::size_t>(k)] = true;
      out.support_deficient = true;
    }
    logs(k) = std::log(lam);
  }
  out.value = out.spectrum.vectors * logs.asDiagonal() * out.spectrum.vectors.adjoint();
  return out;
}

Matrix matrix_exp_hermitian(const Matrix& a) {
  const HermitianSpectrum s = hermitian_eig(a);
  return s.vectors * s.values.array().exp().matrix().asDiagonal() * s.vectors.adjoint();
}

Vector solve_linear(const Matrix& a, const Vector& b) {
  if (a.rows() != a.cols()) throw std::invalid_argument("solve_linear: matrix not square");
  if (a.rows() != b.size()) throw std::invalid_argument("solve_linear: rhs size mismatch");
  Eigen::PartialPivLU<Matrix> lu(a);
  const double rcond = lu.rcond();
  if (!(rcond > 1e-14)) {
    std::ostringstream msg;
    msg << "solve_linear: system singular to working precision (condition estimate "
        << (rcond > 0.0 ? 1.0 / rcond : std::numeric_limits<double>::infinity()) << ")";
    throw NumericError(msg.str());
  }
  Vector x = lu.solve(b);
  // Eigen's rcond estimate is unreliable with an exact zero pivot; the solve
  // then produces inf/NaN, which a plain residual > tol test would not catch.
  if (!x.allFinite()) throw NumericError("solve_linear: system singular to working precision");
  const double residual = (a * x - b).cwiseAbs().maxCoeff();
  const double scale =
      a.cwiseAbs().maxCoeff() * std::max(1.0, x.cwiseAbs().maxCoeff()) + b.cwiseAbs().maxCoeff();
  if (!(residual <= 1e-10 * std::max(1.0, scale))) {
    std::ostringstream msg;
    msg << "solve_linear: residual " << residual << " too large for scale " << scale;
    throw NumericError(msg.str());
  }
  return x;
}

namespace {

// Uniform double in [0,1) from the full 64-bit word; avoids the
// implementation-defined std::uniform_real_distribution.
double uniform01(Rng& rng) {
  return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

double gaussian(Rng& rng) {
  double u = 0.0;
  do {
    u = uniform01(rng);
  } while (u <= 0.0);
  const double v = uniform01(rng);
  return std::sqrt(-2.0 * std::log(u)) * std::cos(two_pi * v);
}

}  // namespace

Vector haar_random_pure_state(Index dim, Rng& rng) {
  if (dim < 1) throw std::invalid_argument("haar_random_pure_state: dim must be >= 1");
  Vector psi(dim);
  for (Index i = 0; i < dim; ++i) {
    const double re = gaussian(rng);
    const double im = gaussian(rng);
    psi(i) = Complex(re, im);
  }
  const double norm = psi.norm();
  if (norm == 0.0) return haar_random_pure_state(dim, rng);
  return psi / norm;
}

Vector haar_random_pure_state(Index dim, std::uint64_t seed) {
  Rng rng(seed);
  return haar_random_pure_state(dim, rng);
}

}  // namespace qcc
