#pragma once

#include <cmath>
#include <string>
#include <variant>
#include <vector>

#include "tautreg/errors.hpp"

namespace tautreg {

/// k(t) = v for all t >= 0.
struct ConstantKernel {
  double value = 1.0;
};

/// k(t) = exp(-c t), c > 0.
struct ExponentialKernel {
  double rate = 1.0;
};

/// Abel (Riemann-Liouville) kernel k(t) = t^(s-1) / Gamma(s), 0 < s <= 1.
/// Weakly singular at t = 0 for s < 1; all integrals are taken in closed
/// form through the antiderivative t^s / Gamma(s+1).
struct AbelKernel {
  double order = 0.5;
};

/// Piecewise-constant kernel: value i holds on [breakpoints[i],
/// breakpoints[i+1]), the last value extends to +infinity. Breakpoints are
/// strictly increasing and start at 0; values are finite and nonnegative.
struct TableKernel {
  std::vector<double> breakpoints;
  std::vector<double> values;
};

using Kernel = std::variant<ConstantKernel, ExponentialKernel, AbelKernel, TableKernel>;

inline void validate(const Kernel& k) {
  if (const auto* e = std::get_if<ExponentialKernel>(&k)) {
    if (!(e->rate > 0.0) || !std::isfinite(e->rate))
      throw invalid_parameter("ExponentialKernel: rate c must be positive");
  } else if (const auto* a = std::get_if<AbelKernel>(&k)) {
    if (!(a->order > 0.0 && a->order <= 1.0))
      throw invalid_parameter("AbelKernel: order s must lie in (0, 1]");
  } else if (const auto* t = std::get_if<TableKernel>(&k)) {
    if (t->breakpoints.empty() || t->breakpoints.size() != t->values.size())
      throw invalid_parameter("TableKernel: need matching nonempty breakpoints and values");
    if (t->breakpoints.front() != 0.0)
      throw invalid_parameter("TableKernel: first breakpoint must be 0");
    for (std::size_t i = 1; i < t->breakpoints.size(); ++i)
      if (!(t->breakpoints[i] > t->breakpoints[i - 1]))
        throw invalid_parameter("TableKernel: breakpoints must be strictly increasing");
    for (double v : t->values)
      if (!std::isfinite(v) || v < 0.0)
        throw invalid_parameter("TableKernel: values must be finite and nonnegative");
  } else if (const auto* c = std::get_if<ConstantKernel>(&k)) {
    if (!std::isfinite(c->value)) throw invalid_parameter("ConstantKernel: value must be finite");
  }
}

/// Exact integral of the kernel over [a, b], 0 <= a <= b.
inline double kernel_integral(const Kernel& k, double a, double b) {
  if (!(b >= a) || a < 0.0) throw invalid_parameter("kernel_integral: need 0 <= a <= b");
  if (a == b) return 0.0;
  if (const auto* c = std::get_if<ConstantKernel>(&k)) {
    return c->value * (b - a);
  }
  if (const auto* e = std::get_if<ExponentialKernel>(&k)) {
    // (exp(-c a) - exp(-c b)) / c without cancellation
    return std::exp(-e->rate * a) * (-std::expm1(-e->rate * (b - a))) / e->rate;
  }
  if (const auto* ab = std::get_if<AbelKernel>(&k)) {
    const double s = ab->order;
    const double gamma_s1 = std::tgamma(s + 1.0);
    double diff;
    if (a == 0.0) {
      diff = std::pow(b, s);
    } else {
      // b^s - a^s = a^s expm1(s log1p((b-a)/a)), stable for b close to a
      diff = std::pow(a, s) * std::expm1(s * std::log1p((b - a) / a));
    }
    return diff / gamma_s1;
  }
  const auto& t = std::get<TableKernel>(k);
  double acc = 0.0;
  for (std::size_t i = 0; i < t.values.size(); ++i) {
    const double lo = t.breakpoints[i];
    const double hi = (i + 1 < t.breakpoints.size())
                          ? t.breakpoints[i + 1]
                          : std::max(b, lo); // last value extends to +inf
    const double ov_lo = std::max(a, lo);
    const double ov_hi = std::min(b, hi);
    if (ov_hi > ov_lo) acc += t.values[i] * (ov_hi - ov_lo);
  }
  return acc;
}

/// Pointwise evaluation k(t), t > 0 (Abel diverges at t = 0 for s < 1).
inline double kernel_eval(const Kernel& k, double t) {
  if (const auto* c = std::get_if<ConstantKernel>(&k)) return c->value;
  if (const auto* e = std::get_if<ExponentialKernel>(&k)) return std::exp(-e->rate * t);
  if (const auto* ab = std::get_if<AbelKernel>(&k))
    return std::pow(t, ab->order - 1.0) / std::tgamma(ab->order);
  const auto& tab = std::get<TableKernel>(k);
  std::size_t i = 0;
  while (i + 1 < tab.breakpoints.size() && t >= tab.breakpoints[i + 1]) ++i;
  return tab.values[i];
}

/// Short human-readable tag, e.g. "exp:0.1".
inline std::string kernel_tag(const Kernel& k) {
  char buf[64];
  if (const auto* c = std::get_if<ConstantKernel>(&k)) {
    std::snprintf(buf, sizeof buf, "const:%.17g", c->value);
  } else if (const auto* e = std::get_if<ExponentialKernel>(&k)) {
    std::snprintf(buf, sizeof buf, "exp:%.17g", e->rate);
  } else if (const auto* ab = std::get_if<AbelKernel>(&k)) {
    std::snprintf(buf, sizeof buf, "abel:%.17g", ab->order);
  } else {
    std::snprintf(buf, sizeof buf, "table[%zu]", std::get<TableKernel>(k).values.size());
  }
  return buf;
}

/// Table kernel approximating the identity operator on step h: height 1/h on
/// [0, h), zero afterwards, so that w_0 = 1 and w_m = 0 for m > 0.
inline Kernel identity_spike_kernel(double h) {
  return TableKernel{{0.0, h}, {1.0 / h, 0.0}};
}

} // namespace tautreg
