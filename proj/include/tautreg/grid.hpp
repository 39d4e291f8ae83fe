#pragma once

#include <algorithm>
#include <cmath>
#include <limits>
#include <string>
#include <vector>

#include "tautreg/errors.hpp"

namespace tautreg {

/// Uniform partition of [0, T] into n cells of width h = T/n.
///
/// Cell j (1-based in formulas, 0-based in storage) covers [t_{j-1}, t_j)
/// with t_j = j*h. All quantities attached to a grid use the right endpoint
/// convention: sampled data lives at t_1, ..., t_n.
struct Grid {
  double T = 1.0;
  std::size_t n = 1;

  Grid() = default;

  Grid(double horizon, std::size_t cells) : T(horizon), n(cells) {
    if (!(T > 0.0) || !std::isfinite(T)) throw invalid_parameter("Grid: horizon T must be positive and finite");
    if (n < 1) throw invalid_parameter("Grid: cell count n must be >= 1");
  }

  double h() const { return T / static_cast<double>(n); }

  /// Right endpoint t_j of cell j (1-based, j in [1, n]).
  double t(std::size_t j) const { return T * (static_cast<double>(j) / static_cast<double>(n)); }

  /// Midpoint of cell j (1-based).
  double midpoint(std::size_t j) const { return (t(j - 1) + t(j)) / 2.0; }

  friend bool operator==(const Grid& a, const Grid& b) { return a.n == b.n && a.T == b.T; }
  friend bool operator!=(const Grid& a, const Grid& b) { return !(a == b); }
};

/// Piecewise-constant function on a Grid: value j is attached to cell
/// [t_{j-1}, t_j). Entries are validated to be finite on construction.
class Signal {
public:
  Signal() = default;

  Signal(Grid grid, std::vector<double> values) : grid_(grid), values_(std::move(values)) {
    if (values_.size() != grid_.n)
      throw invalid_parameter("Signal: value count " + std::to_string(values_.size()) +
                              " does not match grid cells " + std::to_string(grid_.n));
    for (double v : values_)
      if (!std::isfinite(v)) throw invalid_parameter("Signal: entries must be finite");
  }

  /// Constant signal.
  static Signal constant(Grid grid, double value) {
    return Signal(grid, std::vector<double>(grid.n, value));
  }

  static Signal zero(Grid grid) { return constant(grid, 0.0); }

  const Grid& grid() const { return grid_; }
  const std::vector<double>& values() const { return values_; }
  std::size_t size() const { return values_.size(); }
  double operator[](std::size_t i) const { return values_[i]; }

private:
  Grid grid_;
  std::vector<double> values_;
};

inline void require_same_grid(const Grid& a, const Grid& b, const char* where) {
  if (a != b)
    throw incompatible_grids(std::string(where) + ": signals live on different grids");
}

/// Discrete L^p norm: (h * sum |v_j|^p)^(1/p); p = infinity gives max |v_j|.
inline double lp_norm(const Signal& s, double p) {
  if (std::isinf(p) && p > 0) {
    double m = 0.0;
    for (double v : s.values()) m = std::max(m, std::abs(v));
    return m;
  }
  if (!(p >= 1.0)) throw invalid_parameter("lp_norm: exponent p must be >= 1");
  const double h = s.grid().h();
  if (p == 1.0) {
    double acc = 0.0;
    for (double v : s.values()) acc += std::abs(v);
    return h * acc;
  }
  if (p == 2.0) {
    double acc = 0.0;
    for (double v : s.values()) acc += v * v;
    return std::sqrt(h * acc);
  }
  double acc = 0.0;
  for (double v : s.values()) acc += std::pow(std::abs(v), p);
  return std::pow(h * acc, 1.0 / p);
}

/// Duality pairing <u, v> = h * sum u_j v_j.
inline double dual_pairing(const Signal& u, const Signal& v) {
  require_same_grid(u.grid(), v.grid(), "dual_pairing");
  double acc = 0.0;
  for (std::size_t j = 0; j < u.size(); ++j) acc += u[j] * v[j];
  return u.grid().h() * acc;
}

/// Running integral of a piecewise-constant signal at right endpoints:
/// L_i = h * sum_{j<=i} v_j for i = 1..n (L_0 = 0 is implicit).
inline std::vector<double> cumulative_integral(const Signal& s) {
  const double h = s.grid().h();
  std::vector<double> out(s.size());
  double acc = 0.0;
  for (std::size_t j = 0; j < s.size(); ++j) {
    acc += s[j];
    out[j] = h * acc;
  }
  return out;
}

/// Total variation of a piecewise-constant signal: sum of |jumps|.
inline double total_variation(const Signal& s) {
  double tv = 0.0;
  for (std::size_t j = 1; j < s.size(); ++j) tv += std::abs(s[j] - s[j - 1]);
  return tv;
}

} // namespace tautreg
