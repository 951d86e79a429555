#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <random>
#include <vector>

#include "orbitsum/dynamics.hpp"
#include "orbitsum/error.hpp"
#include "orbitsum/numeric/roots.hpp"
#include "orbitsum/poly.hpp"

namespace orbitsum {

inline constexpr double kCycleTol = 1e-6;
inline constexpr std::uint64_t kDefaultSeed = 20260518;

struct NumericOrbit {
  Complex c;
  std::vector<Complex> points;
  Complex sum;
  bool degenerate = false;
};

inline Complex quad(Complex x, Complex c) { return x * x + c; }

/// max_i |f_c(p_i) - p_{i+1}|, indices cyclic
inline double cycle_residual(const NumericOrbit& o) {
  double worst = 0.0;
  const std::size_t n = o.points.size();
  for (std::size_t i = 0; i < n; ++i) worst = std::max(worst, std::abs(quad(o.points[i], o.c) - o.points[(i + 1) % n]));
  return worst;
}

inline double min_separation(const std::vector<Complex>& pts) {
  double gap = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < pts.size(); ++i)
    for (std::size_t j = i + 1; j < pts.size(); ++j) gap = std::min(gap, std::abs(pts[i] - pts[j]));
  return gap;
}

/// Smallest k <= max_n with f_c^k(x) back at x, else 0.
inline int exact_period(Complex x, Complex c, int max_n, double tol = kCycleTol) {
  Complex y = x;
  for (int k = 1; k <= max_n; ++k) {
    y = quad(y, c);
    if (std::abs(y - x) < tol * std::max(1.0, std::abs(x))) return k;
  }
  return 0;
}

/// Newton on f_c^n(x) - x, derivative by the chain rule.
inline Complex polish_cycle_point(Complex x, Complex c, int n, int steps = 4) {
  for (int s = 0; s < steps; ++s) {
    Complex y = x, d = 1.0;
    for (int k = 0; k < n; ++k) {
      d *= 2.0 * y;
      y = quad(y, c);
    }
    Complex den = d - 1.0;
    if (std::abs(den) < 1e-14) break;
    Complex step = (y - x) / den;
    x -= step;
    if (std::abs(step) < 1e-16 * std::max(1.0, std::abs(x))) break;
  }
  return x;
}

inline NumericOrbit make_orbit(Complex x0, Complex c, int n) {
  NumericOrbit o{c, {}, 0.0, false};
  Complex x = x0;
  for (int k = 0; k < n; ++k) {
    o.points.push_back(x);
    o.sum += x;
    x = quad(x, c);
  }
  o.degenerate = n > 1 && min_separation(o.points) < kCycleTol;
  return o;
}

/// Every cycle of exact period n of x^2 + c.
inline std::vector<NumericOrbit> orbit_oracle(Complex c, int n) {
  if (n < 1 || n > 6) throw Error(ErrorKind::dimension, "oracle period must be in 1..6");
  RootCensus census = find_roots(compose_quadratic(c, n));
  std::vector<Complex> roots = census.roots;
  for (auto& r : roots) r = polish_cycle_point(r, c, n);
  std::vector<bool> used(roots.size(), false);
  std::vector<NumericOrbit> out;
  for (std::size_t i = 0; i < roots.size(); ++i) {
    if (used[i]) continue;
    used[i] = true;
    if (exact_period(roots[i], c, n) != n) continue;
    NumericOrbit o{c, {roots[i]}, roots[i], false};
    Complex x = roots[i];
    for (int k = 1; k < n; ++k) {
      x = quad(x, c);
      std::size_t best = roots.size();
      double best_d = kCycleTol * std::max(1.0, std::abs(x));
      for (std::size_t j = 0; j < roots.size(); ++j) {
        if (used[j]) continue;
        double d = std::abs(roots[j] - x);
        if (d < best_d) best_d = d, best = j;
      }
      if (best == roots.size()) {
        o.degenerate = true;
      } else {
        used[best] = true;
        x = roots[best];
      }
      o.points.push_back(x);
      o.sum += x;
    }
    if (min_separation(o.points) < kCycleTol) o.degenerate = true;
    out.push_back(std::move(o));
  }
  return out;
}

/// Images (u_i, v_i) of consecutive pairs (x_i, x_{i+1}).
inline std::vector<std::pair<Complex, Complex>> uv_images(const NumericOrbit& o) {
  std::vector<std::pair<Complex, Complex>> out;
  const std::size_t n = o.points.size();
  for (std::size_t i = 0; i < n; ++i) out.push_back(xy_to_uv(o.points[i], o.points[(i + 1) % n]));
  return out;
}

inline Complex eval_uv(const MultiPoly& f, Complex u, Complex v) {
  const std::array<Complex, 2> pt{u, v};
  return evaluate(f, pt);
}

/// Uniform in the disc |z| <= radius.
inline Complex sample_disc(std::mt19937_64& rng, double radius) {
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const double r = radius * std::sqrt(unit(rng));
  const double t = 2 * M_PI * unit(rng);
  return std::polar(r, t);
}

/// Uniform in [-half, half] x [-half, half] i.
inline Complex sample_box(std::mt19937_64& rng, double half) {
  std::uniform_real_distribution<double> d(-half, half);
  const double re = d(rng);
  return {re, d(rng)};
}

/// `count` non-degenerate exact period-n orbits, one per sampled c.
inline std::vector<NumericOrbit> sample_orbits(int n, int count, std::uint64_t seed = kDefaultSeed,
                                               double c_radius = 1.0) {
  std::mt19937_64 rng(seed + static_cast<std::uint64_t>(n));
  std::vector<NumericOrbit> out;
  int attempts = 0;
  while (static_cast<int>(out.size()) < count) {
    if (++attempts > 50 * count) throw Error(ErrorKind::convergence, "could not sample enough orbits");
    const Complex c = sample_disc(rng, c_radius);
    auto orbits = orbit_oracle(c, n);
    std::uniform_int_distribution<std::size_t> pick(0, orbits.empty() ? 0 : orbits.size() - 1);
    if (orbits.empty()) continue;
    const NumericOrbit& o = orbits[pick(rng)];
    if (o.degenerate) continue;
    out.push_back(o);
  }
  return out;
}

struct CurveValidation {
  int n = 0;
  int orbits = 0;
  double max_on_curve = 0.0;
  double min_off_curve = std::numeric_limits<double>::infinity();
  bool passed = false;
};

/// |P_n| on sampled genuine orbits and at random (u, v) points.
inline CurveValidation validate_period_curve(const MultiPoly& p, int n, int samples = 10,
                                             std::uint64_t seed = kDefaultSeed, double on_tol = 1e-8,
                                             double off_tol = 1e-3) {
  CurveValidation out;
  out.n = n;
  for (const auto& o : sample_orbits(n, samples, seed)) {
    ++out.orbits;
    for (auto [u, v] : uv_images(o)) out.max_on_curve = std::max(out.max_on_curve, std::abs(eval_uv(p, u, v)));
  }
  std::mt19937_64 rng(seed ^ 0x9e3779b97f4a7c15ULL);
  for (int k = 0; k < samples; ++k) {
    const Complex u = sample_box(rng, 2.0), v = sample_box(rng, 2.0);
    out.min_off_curve = std::min(out.min_off_curve, std::abs(eval_uv(p, u, v)));
  }
  out.passed = out.max_on_curve < on_tol && out.min_off_curve > off_tol;
  return out;
}

/// Throws data_integrity when the curve fails validation.
inline PeriodCurve validated_period_curve(int n) {
  PeriodCurve pc = period_curve(n);
  auto check = validate_period_curve(pc.poly, n);
  if (!check.passed) {
    throw Error(ErrorKind::data_integrity, "P" + std::to_string(n) + " fails numeric validation (on-curve " +
                                               std::to_string(check.max_on_curve) + ", off-curve " +
                                               std::to_string(check.min_off_curve) + ")");
  }
  return pc;
}

struct SumIdentity {
  Complex sum_x, sum_u, sum_v;
  double du() const { return std::abs(sum_u - 2.0 * sum_x); }
  double dv() const { return std::abs(sum_v - 2.0 * sum_x); }
};

/// sum u_i and sum v_i against twice the point sum.
inline SumIdentity sum_identity(const NumericOrbit& o) {
  SumIdentity s{o.sum, 0.0, 0.0};
  for (auto [u, v] : uv_images(o)) {
    s.sum_u += u;
    s.sum_v += v;
  }
  return s;
}

}  // namespace orbitsum
