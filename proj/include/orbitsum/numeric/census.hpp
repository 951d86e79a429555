#pragma once

#include <algorithm>
#include <array>
#include <cmath>
#include <complex>
#include <string>
#include <vector>

#include "orbitsum/dynamics.hpp"
#include "orbitsum/error.hpp"
#include "orbitsum/numeric/orbits.hpp"
#include "orbitsum/numeric/roots.hpp"
#include "orbitsum/poly.hpp"

namespace orbitsum {

inline constexpr double kLiftTol = 1e-7;
inline constexpr double kObstructionTol = 1e-7;

/// Coefficients (low to high) of f viewed as a polynomial in var, with the
/// other variables fixed at point (entry for var is ignored).
inline ComplexPoly specialize(const MultiPoly& f, std::string_view var, std::vector<Complex> point) {
  const std::size_t x = f.ring().index_of(var);
  if (point.size() != f.ring().size()) throw Error(ErrorKind::dimension, "specialization point has wrong dimension");
  const int d = degree_in(f, x);
  if (d < 0) return {};
  std::vector<Complex> coeffs(static_cast<std::size_t>(d) + 1);
  point[x] = 0.0;
  for (int k = 0; k <= d; ++k) {
    MultiPoly ck = coefficient_of_power(f, x, static_cast<unsigned>(k));
    coeffs[static_cast<std::size_t>(k)] = evaluate(ck, point);
  }
  return ComplexPoly(std::move(coeffs));
}

/// C(v, s5) as a univariate polynomial in v.
inline ComplexPoly specialized_eliminant(Complex s5) {
  static const MultiPoly c = sum_eliminant_factor();
  return specialize(c, "v", {0.0, 0.0, s5});
}

struct LiftedPoint {
  Complex v;
  Complex u;
  bool obstructed = false;
  std::string note;
  double lift_gap = 0.0;  // distance between the matched B5 and P5 roots
  Complex c;
  Complex x0;
  int orbit_id = -1;
  double cycle_residual = 0.0;
  double sum_error = 0.0;
};

struct SumCensus {
  Complex s5;
  RootCensus v_roots;
  std::vector<LiftedPoint> points;
  std::vector<NumericOrbit> orbits;
  bool degenerate = false;
  double max_cycle_residual = 0.0;
  double max_sum_error = 0.0;
  double max_uv_sum_error = 0.0;
  int distinct_orbits() const { return static_cast<int>(orbits.size()); }
};

/// Lifts every root of C(v, s5) to period-5 orbits and groups them.
inline SumCensus sum_census(Complex s5) {
  static const MultiPoly p5 = change_ring(period_curve(5).poly, sum_ring(5));
  static const MultiPoly b5 = sum_constraint(5).poly;

  SumCensus out;
  out.s5 = s5;
  out.v_roots = find_roots(specialized_eliminant(s5));
  if (out.v_roots.min_gap < kLiftTol) out.degenerate = true;

  for (const Complex v : out.v_roots.roots) {
    LiftedPoint lp;
    lp.v = v;
    if (std::abs(v) < kObstructionTol || std::abs(v - 1.0) < kObstructionTol) {
      lp.obstructed = true;
      lp.note = std::abs(v) < kObstructionTol ? "v = 0: leading coefficients in u vanish"
                                               : "v = 1: leading coefficients in u vanish";
      out.points.push_back(lp);
      continue;
    }
    const std::vector<Complex> pt{0.0, v, s5};
    auto pu = find_roots(specialize(p5, "u", pt));
    auto bu = find_roots(specialize(b5, "u", pt));
    double best = std::numeric_limits<double>::infinity();
    for (const Complex a : bu.roots)
      for (const Complex b : pu.roots) {
        const double d = std::abs(a - b) / std::max(1.0, std::abs(a));
        if (d < best) best = d, lp.u = a;
      }
    lp.lift_gap = best;
    if (!(best < kLiftTol)) {
      throw Error(ErrorKind::lifting, "no common u root for v = (" + std::to_string(v.real()) + ", " +
                                          std::to_string(v.imag()) + "), gap " + std::to_string(best));
    }
    const OrbitData od = uv_to_orbit_data(lp.u, lp.v);
    lp.c = od.c;
    lp.x0 = polish_cycle_point(od.x0, od.c, 5);
    out.points.push_back(lp);
  }

  for (auto& lp : out.points) {
    if (lp.obstructed) continue;
    for (std::size_t k = 0; k < out.orbits.size() && lp.orbit_id < 0; ++k) {
      const NumericOrbit& o = out.orbits[k];
      if (std::abs(o.c - lp.c) > kCycleTol * std::max(1.0, std::abs(lp.c))) continue;
      for (const Complex x : o.points)
        if (std::abs(x - lp.x0) < kCycleTol * std::max(1.0, std::abs(x))) lp.orbit_id = static_cast<int>(k);
    }
    if (lp.orbit_id < 0) {
      lp.orbit_id = static_cast<int>(out.orbits.size());
      out.orbits.push_back(make_orbit(lp.x0, lp.c, 5));
    }
    const NumericOrbit& o = out.orbits[static_cast<std::size_t>(lp.orbit_id)];
    lp.cycle_residual = std::max(cycle_residual(o), std::abs(quad(o.points.back(), o.c) - o.points.front()));
    lp.sum_error = std::abs(o.sum - s5);
    out.max_cycle_residual = std::max(out.max_cycle_residual, lp.cycle_residual);
    out.max_sum_error = std::max(out.max_sum_error, lp.sum_error);
  }
  for (const auto& o : out.orbits) {
    if (o.degenerate || exact_period(o.points.front(), o.c, 5) != 5) out.degenerate = true;
    const SumIdentity s = sum_identity(o);
    out.max_uv_sum_error =
        std::max({out.max_uv_sum_error, std::abs(s.sum_u - 2.0 * s5), std::abs(s.sum_v - 2.0 * s5)});
  }
  return out;
}

}  // namespace orbitsum
