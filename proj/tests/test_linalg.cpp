// test_linalg.cpp: dense helpers, partial traces, matrix functions, solver.
#include <doctest.h>

#include <Eigen/Dense>
#include <cmath>

#include "helpers.hpp"
#include "qcc/errors.hpp"
#include "qcc/linalg.hpp"
#include "qcc/operators.hpp"

using namespace qcc;
using testutil::max_abs;

TEST_CASE("kron matches explicit index arithmetic") {
  Rng rng(11);
  const Matrix a = testutil::random_ginibre(3, rng);
  const Matrix b = testutil::random_ginibre(2, rng);
  const Matrix k = kron(a, b);
  REQUIRE(k.rows() == 6);
  for (Index i = 0; i < 3; ++i)
    for (Index j = 0; j < 3; ++j)
      for (Index p = 0; p < 2; ++p)
        for (Index q = 0; q < 2; ++q)
          CHECK(std::abs(k(2 * i + p, 2 * j + q) - a(i, j) * b(p, q)) < 1e-15);
}

TEST_CASE("kron is associative and mixed-product compatible") {
  Rng rng(12);
  const Matrix a = testutil::random_ginibre(2, rng);
  const Matrix b = testutil::random_ginibre(3, rng);
  const Matrix c = testutil::random_ginibre(2, rng);
  const Matrix d = testutil::random_ginibre(3, rng);
  CHECK(max_abs(kron(kron(a, b), c) - kron(a, kron(b, c))) < 1e-12);
  CHECK(max_abs(kron(a, b) * kron(c, d) - kron((a * c).eval(), (b * d).eval())) < 1e-12);
}

TEST_CASE("vec and unvec are inverse and column-stacked") {
  Rng rng(13);
  const Matrix a = testutil::random_ginibre(3, rng);
  const Vector v = vec(a);
  CHECK(v(1) == a(1, 0));  // column-major stacking
  CHECK(v(3) == a(0, 1));
  CHECK(max_abs(unvec(v, 3) - a) == 0.0);
  // vec(A X B) = (B^T (x) A) vec(X)
  const Matrix x = testutil::random_ginibre(3, rng);
  const Matrix b = testutil::random_ginibre(3, rng);
  CHECK(max_abs(unvec(kron(b.transpose().eval(), a) * vec(x), 3) - a * x * b) < 1e-12);
}

TEST_CASE("partial traces undo kron") {
  Rng rng(14);
  const Matrix s = testutil::random_density(3, rng);
  const Matrix a = testutil::random_density(4, rng);
  const Matrix joint = kron(s, a);
  CHECK(max_abs(partial_trace_aux(joint, 3, 4) - s) < 1e-13);
  CHECK(max_abs(partial_trace_sys(joint, 3, 4) - a) < 1e-13);
  CHECK(std::abs(partial_trace_aux(joint, 3, 4).trace() - Complex(1.0, 0.0)) < 1e-13);
}

TEST_CASE("partial trace is linear and trace preserving on entangled states") {
  Rng rng(15);
  const Matrix joint = testutil::random_density(6, rng);
  const Matrix red = partial_trace_aux(joint, 2, 3);
  CHECK(std::abs(red.trace().real() - 1.0) < 1e-13);
  CHECK(is_hermitian(red));
  // contract against an observable on the system factor only
  const Matrix obs = testutil::random_hermitian(2, rng);
  const double direct = (kron(obs, identity(3)) * joint).trace().real();
  CHECK(std::abs((obs * red).trace().real() - direct) < 1e-12);
}

TEST_CASE("hermitian matrix functions invert each other") {
  Rng rng(16);
  const Matrix rho = testutil::random_density(4, rng);
  const MatrixLog lg = matrix_ln_hermitian(rho);
  CHECK_FALSE(lg.support_deficient);
  CHECK(max_abs(matrix_exp_hermitian(lg.value) - rho) < 1e-12);
  CHECK(max_abs(lg.value - testutil::naive_log(rho)) < 1e-11);
}

TEST_CASE("matrix log flags rank-deficient input") {
  Matrix pure = Matrix::Zero(2, 2);
  pure(0, 0) = 1.0;
  const MatrixLog lg = matrix_ln_hermitian(pure);
  CHECK(lg.support_deficient);
}

TEST_CASE("solve_linear certifies small residuals and rejects singular systems") {
  Rng rng(17);
  const Matrix a = testutil::random_ginibre(5, rng) + 5.0 * identity(5);
  const Vector b = vec(testutil::random_ginibre(5, rng)).head(5);
  const Vector x = solve_linear(a, b);
  CHECK((a * x - b).cwiseAbs().maxCoeff() < 1e-10 * b.cwiseAbs().maxCoeff());

  Matrix singular = Matrix::Zero(2, 2);
  singular(0, 0) = 1.0;
  Vector rhs(2);
  rhs << 1.0, 1.0;
  CHECK_THROWS_AS((void)solve_linear(singular, rhs), NumericError);
}

TEST_CASE("haar states are normalized and deterministic per seed") {
  const Vector a = haar_random_pure_state(8, 42);
  const Vector b = haar_random_pure_state(8, 42);
  const Vector c = haar_random_pure_state(8, 43);
  CHECK(std::abs(a.norm() - 1.0) < 1e-12);
  CHECK((a - b).cwiseAbs().maxCoeff() == 0.0);
  CHECK((a - c).norm() > 1e-3);
}

TEST_CASE("haar states have uniform moments") {
  // mean overlap with a fixed basis vector is 1/d
  Rng rng(21);
  const Index d = 4;
  double acc = 0.0;
  const int samples = 4000;
  for (int s = 0; s < samples; ++s)
    acc += std::norm(haar_random_pure_state(d, rng)(0));
  CHECK(std::abs(acc / samples - 1.0 / static_cast<double>(d)) < 0.01);
}

TEST_CASE("hermitize and is_hermitian round off antihermitian noise") {
  Rng rng(19);
  Matrix rho = testutil::random_density(3, rng);
  rho(0, 1) += Complex(0.0, 1e-12);
  const Matrix fixed = hermitize(rho);
  CHECK(is_hermitian(fixed));
  CHECK(max_abs(fixed - rho) < 1e-11);
}
