#pragma once

#include <cmath>
#include <optional>
#include <vector>

#include "tautreg/grid.hpp"
#include "tautreg/kernel.hpp"

namespace tautreg {

/// Lower-triangular Toeplitz discretisation of the convolution operator
/// (Au)(t) = int_0^t k(t - tau) u(tau) dtau on a uniform grid.
///
/// Weights are the exact cell integrals w_m = int_{mh}^{(m+1)h} k, so the
/// action (Au)_i = sum_{j<=i} w_{i-j} u_j reproduces (Au)(t_i) exactly for
/// piecewise-constant u. The weakly singular Abel kernel is covered by the
/// closed-form antiderivative; no point evaluation at 0 ever happens.
class VolterraOperator {
public:
  VolterraOperator(Grid grid, std::vector<double> weights, Kernel provenance)
      : grid_(grid), w_(std::move(weights)), kernel_(std::move(provenance)) {
    if (w_.size() != grid_.n)
      throw invalid_parameter("VolterraOperator: need one weight per grid cell");
    if (const auto* e = std::get_if<ExponentialKernel>(&kernel_))
      decay_ = std::exp(-e->rate * grid_.h());
  }

  const Grid& grid() const { return grid_; }
  const std::vector<double>& weights() const { return w_; }
  const Kernel& kernel() const { return kernel_; }

  /// Geometric per-cell decay factor exp(-c h) for exponential kernels;
  /// empty otherwise. Enables O(1) incremental updates downstream.
  std::optional<double> exponential_decay() const { return decay_; }

  /// True if every weight is strictly positive, or the operator is an exact
  /// identity scale (w_0 > 0, all later weights zero). These are the kernels
  /// admitted to the tube DP solver.
  bool positive_weights() const {
    bool all_pos = true, tail_zero = true;
    for (std::size_t m = 0; m < w_.size(); ++m) {
      if (!(w_[m] > 0.0)) all_pos = false;
      if (m > 0 && w_[m] != 0.0) tail_zero = false;
    }
    return all_pos || (w_[0] > 0.0 && tail_zero);
  }

private:
  Grid grid_;
  std::vector<double> w_;
  Kernel kernel_;
  std::optional<double> decay_;
};

/// Exact cell-integrated discretisation of a convolution kernel.
inline VolterraOperator discretize(const Kernel& k, const Grid& g) {
  validate(k);
  const double h = g.h();
  std::vector<double> w(g.n);
  if (const auto* e = std::get_if<ExponentialKernel>(&k)) {
    // w_m = exp(-c m h) (1 - exp(-c h)) / c, evaluated recursively to keep
    // the geometric structure exact in floating point
    const double rho = std::exp(-e->rate * h);
    w[0] = -std::expm1(-e->rate * h) / e->rate;
    for (std::size_t m = 1; m < g.n; ++m) w[m] = w[m - 1] * rho;
    return VolterraOperator(g, std::move(w), k);
  }
  for (std::size_t m = 0; m < g.n; ++m)
    w[m] = kernel_integral(k, static_cast<double>(m) * h, static_cast<double>(m + 1) * h);
  return VolterraOperator(g, std::move(w), k);
}

/// Forward application f_i = sum_{j<=i} w_{i-j} u_j. Exponential kernels use
/// the geometric recursion f_i = w_0 u_i + rho f_{i-1}, which agrees with the
/// direct sum to roundoff.
inline Signal apply(const VolterraOperator& A, const Signal& u) {
  require_same_grid(A.grid(), u.grid(), "apply");
  const std::size_t n = u.size();
  const auto& w = A.weights();
  std::vector<double> f(n);
  if (auto rho = A.exponential_decay()) {
    double prev = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      prev = w[0] * u[i] + *rho * prev;
      f[i] = prev;
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      double acc = 0.0;
      for (std::size_t j = 0; j <= i; ++j) acc += w[i - j] * u[j];
      f[i] = acc;
    }
  }
  return Signal(u.grid(), std::move(f));
}

/// Adjoint action g_j = sum_{i>=j} w_{i-j} v_i (plain transpose of the
/// Toeplitz matrix; used by power iteration).
inline Signal apply_transpose(const VolterraOperator& A, const Signal& v) {
  require_same_grid(A.grid(), v.grid(), "apply_transpose");
  const std::size_t n = v.size();
  const auto& w = A.weights();
  std::vector<double> g(n);
  if (auto rho = A.exponential_decay()) {
    double next = 0.0;
    for (std::size_t j = n; j-- > 0;) {
      next = w[0] * v[j] + *rho * next;
      g[j] = next;
    }
  } else {
    for (std::size_t j = 0; j < n; ++j) {
      double acc = 0.0;
      for (std::size_t i = j; i < n; ++i) acc += w[i - j] * v[i];
      g[j] = acc;
    }
  }
  return Signal(v.grid(), std::move(g));
}

/// Quadratic form <Au, u> with the h-weighted pairing; nonnegative for the
/// monotone kernel classes.
inline double monotone_pairing(const VolterraOperator& A, const Signal& u) {
  return dual_pairing(apply(A, u), u);
}

/// Classical Lavrentiev regularisation: solves (A + alpha I) u = f + alpha
/// offset by forward substitution on the lower-triangular system. The offset
/// defaults to zero and acts as an initial guess.
inline Signal solve_classical_lavrentiev(const VolterraOperator& A, const Signal& f, double alpha,
                                         const Signal* offset = nullptr) {
  require_same_grid(A.grid(), f.grid(), "solve_classical_lavrentiev");
  if (!(alpha > 0.0)) throw invalid_parameter("solve_classical_lavrentiev: alpha must be positive");
  if (offset) require_same_grid(A.grid(), offset->grid(), "solve_classical_lavrentiev");
  const std::size_t n = f.size();
  const auto& w = A.weights();
  const double diag = w[0] + alpha;
  std::vector<double> u(n);
  auto rhs = [&](std::size_t i) { return f[i] + (offset ? alpha * (*offset)[i] : 0.0); };
  if (auto rho = A.exponential_decay()) {
    double conv = 0.0; // sum_{j<i} w_{i-j} u_j
    for (std::size_t i = 0; i < n; ++i) {
      if (i > 0) conv = *rho * (conv + w[0] * u[i - 1]);
      u[i] = (rhs(i) - conv) / diag;
    }
  } else {
    for (std::size_t i = 0; i < n; ++i) {
      double conv = 0.0;
      for (std::size_t j = 0; j < i; ++j) conv += w[i - j] * u[j];
      u[i] = (rhs(i) - conv) / diag;
    }
  }
  return Signal(f.grid(), std::move(u));
}

} // namespace tautreg
