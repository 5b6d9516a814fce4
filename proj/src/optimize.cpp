// optimize.cpp

#include "qcc/optimize.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>

namespace qcc {

namespace {

RealVector clamp_to_box(RealVector x, const RealVector& lo, const RealVector& hi) {
  for (Index i = 0; i < x.size(); ++i) x(i) = std::clamp(x(i), lo(i), hi(i));
  return x;
}

}  // namespace

MinimizeResult minimize_box(const std::function<double(const RealVector&)>& f,
                            const RealVector& lower, const RealVector& upper,
                            const MinimizeOptions& opts) {
  const Index n = lower.size();
  if (n < 1 || upper.size() != n)
    throw std::invalid_argument("minimize_box: bad bounds");
  for (Index i = 0; i < n; ++i)
    if (!(lower(i) <= upper(i))) throw std::invalid_argument("minimize_box: lower > upper");
  if (n > 4) throw std::invalid_argument("minimize_box: grid seeding supports up to 4 axes");

  const std::size_t budget = std::max<std::size_t>(opts.budget, 100);
  std::size_t evals = 0;
  const auto eval = [&](const RealVector& x) {
    ++evals;
    return f(x);
  };

  // Coarse scan, endpoints included.
  const Index per_axis = std::max<Index>(opts.grid_per_axis, 2);
  RealVector best_x = lower;
  double best_f = std::numeric_limits<double>::infinity();
  std::vector<Index> idx(static_cast<std::size_t>(n), 0);
  while (true) {
    RealVector x(n);
    for (Index i = 0; i < n; ++i) {
      const double t = static_cast<double>(idx[static_cast<std::size_t>(i)]) /
                       static_cast<double>(per_axis - 1);
      x(i) = lower(i) + t * (upper(i) - lower(i));
    }
    const double fx = eval(x);
    if (fx < best_f) {
      best_f = fx;
      best_x = x;
    }
    Index axis = 0;
    while (axis < n && ++idx[static_cast<std::size_t>(axis)] == per_axis) {
      idx[static_cast<std::size_t>(axis)] = 0;
      ++axis;
    }
    if (axis == n) break;
  }

  // Simplex around the best grid point.
  std::vector<RealVector> xs;
  std::vector<double> fs;
  xs.push_back(best_x);
  fs.push_back(best_f);
  for (Index i = 0; i < n; ++i) {
    RealVector x = best_x;
    const double span = upper(i) - lower(i);
    double step = span > 0.0 ? 0.1 * span : std::max(1.0, std::abs(best_x(i))) * 0.1;
    if (x(i) + step > upper(i)) step = -step;
    x(i) += step;
    x = clamp_to_box(x, lower, upper);
    xs.push_back(x);
    fs.push_back(eval(x));
  }

  const auto order = [&] {
    std::vector<std::size_t> p(xs.size());
    std::iota(p.begin(), p.end(), 0);
    std::sort(p.begin(), p.end(), [&](std::size_t a, std::size_t b) { return fs[a] < fs[b]; });
    std::vector<RealVector> xs2;
    std::vector<double> fs2;
    for (std::size_t k : p) {
      xs2.push_back(xs[k]);
      fs2.push_back(fs[k]);
    }
    xs.swap(xs2);
    fs.swap(fs2);
  };

  MinimizeResult result;
  while (evals < budget) {
    order();
    const double spread = fs.back() - fs.front();
    if (std::isfinite(spread) && spread <= opts.tol * (1.0 + std::abs(fs.front()))) {
      result.converged = true;
      break;
    }

    RealVector centroid = RealVector::Zero(n);
    for (std::size_t k = 0; k + 1 < xs.size(); ++k) centroid += xs[k];
    centroid /= static_cast<double>(xs.size() - 1);

    const RealVector& worst = xs.back();
    const RealVector refl = clamp_to_box(centroid + (centroid - worst), lower, upper);
    const double f_refl = eval(refl);

    if (f_refl < fs.front()) {
      const RealVector expd = clamp_to_box(centroid + 2.0 * (centroid - worst), lower, upper);
      const double f_expd = eval(expd);
      if (f_expd < f_refl) {
        xs.back() = expd;
        fs.back() = f_expd;
      } else {
        xs.back() = refl;
        fs.back() = f_refl;
      }
    } else if (f_refl < fs[fs.size() - 2]) {
      xs.back() = refl;
      fs.back() = f_refl;
    } else {
      const RealVector contr = clamp_to_box(centroid + 0.5 * (worst - centroid), lower, upper);
      const double f_contr = eval(contr);
      if (f_contr < fs.back()) {
        xs.back() = contr;
        fs.back() = f_contr;
      } else {
        for (std::size_t k = 1; k < xs.size(); ++k) {
          xs[k] = clamp_to_box(xs.front() + 0.5 * (xs[k] - xs.front()), lower, upper);
          fs[k] = eval(xs[k]);
          if (evals >= budget) break;
        }
      }
    }
  }
  order();
  result.x = xs.front();
  result.value = fs.front();
  result.evaluations = evals;
  return result;
}

}  // namespace qcc
