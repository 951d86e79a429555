#pragma once

#include <complex>
#include <string>
#include <utility>
#include <vector>

#include "orbitsum/division.hpp"
#include "orbitsum/error.hpp"
#include "orbitsum/poly.hpp"
#include "orbitsum/poly_gcd.hpp"
#include "orbitsum/poly_io.hpp"

namespace orbitsum {

using Complex = std::complex<double>;

inline constexpr double kPoleTol = 1e-300;

inline const VarSet& uv_ring() {
  static const VarSet ring{"u", "v"};
  return ring;
}

inline std::string sum_symbol(int n) { return "S" + std::to_string(n); }

/// (u, v, S_n), ordered u > v > S_n.
inline VarSet sum_ring(int n) { return VarSet{"u", "v", sum_symbol(n)}; }

inline void check_period(int n) {
  if (n < 3 || n > 5) throw Error(ErrorKind::dimension, "period must be 3, 4 or 5, got " + std::to_string(n));
}

/// One step of the (u, v)-plane map G.
inline std::pair<Complex, Complex> uv_step_numeric(Complex u, Complex v) {
  if (std::abs(u) <= kPoleTol) throw Error(ErrorKind::pole, "uv step at u = 0");
  Complex r = (-u + v + u * v) / u;
  Complex q = (u * u - u + v - u * u * v - u * v + u * v * v + v * v) / u;
  return {r, q};
}

/// (R_n, Q_n) = (numerator_R / denominator, numerator_Q / denominator).
struct RationalMapPair {
  MultiPoly numerator_R;
  MultiPoly numerator_Q;
  MultiPoly denominator;
};

namespace detail {

inline RationalMapPair reduce_pair(MultiPoly r, MultiPoly q, MultiPoly d) {
  MultiPoly g = poly_gcd(poly_gcd(r, q), d);
  r = must_divide(r, g);
  q = must_divide(q, g);
  d = must_divide(d, g);
  const ExactScalar inv = 1 / leading_coeff(d, MonomialOrder::lex());
  return {r * inv, q * inv, d * inv};
}

}  // namespace detail

/// Entries 0..n: entry 0 is the identity pair (u, v), entry k the k-th iterate.
inline std::vector<RationalMapPair> uv_iterates_symbolic(int n) {
  if (n < 0) throw Error(ErrorKind::dimension, "iterate count must be nonnegative");
  if (n > 6) throw Error(ErrorKind::budget_exceeded, "symbolic iteration is capped at n = 6");
  const VarSet& ring = uv_ring();
  std::vector<RationalMapPair> out;
  out.push_back({MultiPoly::variable(ring, "u"), MultiPoly::variable(ring, "v"), MultiPoly::constant(ring, 1)});
  for (int k = 0; k < n; ++k) {
    const auto& [a, b, d] = out.back();
    // R = a/d, Q = b/d; R' = (-R + Q + RQ)/R, Q' = (R^2 - R + Q - R^2 Q - RQ + RQ^2 + Q^2)/R.
    MultiPoly nr = (-a * d + b * d + a * b) * d;
    MultiPoly nq = a * a * d - a * d * d + b * d * d - a * a * b - a * b * d + a * b * b + b * b * d;
    MultiPoly den = a * d * d;
    if (a.is_zero()) throw Error(ErrorKind::pole, "iterate hits u = 0 identically");
    out.push_back(detail::reduce_pair(std::move(nr), std::move(nq), std::move(den)));
  }
  return out;
}

/// Rational function numerator / denominator in (u, v).
struct RationalFunction {
  MultiPoly numerator;
  MultiPoly denominator;
};

/// S_n(u, v) in the closed form used downstream; agrees with half the sum of
/// the iterated u-coordinates on the period-n curve.
inline RationalFunction sum_poly(int n) {
  check_period(n);
  const VarSet& ring = uv_ring();
  switch (n) {
    case 3:
      return {parse_poly("u^2 - u + v + 2*u*v", ring), parse_poly("2*u", ring)};
    case 4:
      return {parse_poly("-(-v + u - u^2 + u^2*v - u*v^2 - v^2)", ring), parse_poly("u", ring)};
    default:
      return {parse_poly("-3*u^2 + 4*u^2*v + 3*u*v - 4*u^3*v^3 + 2*u^2*v^4 + 4*u*v^4 + u^3 - 2*u^4*v - 2*u^3*v"
                         " + 2*u^2*v^2 - 2*u*v^2 + 2*v^3 + 2*u^4*v^2 + 6*u^3*v^2 - 8*u^2*v^3 - 2*u*v^3 + 2*v^4",
                         ring),
              parse_poly("2*u^2", ring)};
  }
}

/// Half the sum of u_0..u_{n-1} straight from the symbolic iterates.
inline RationalFunction iteration_sum(int n) {
  auto its = uv_iterates_symbolic(n - 1);
  const VarSet& ring = uv_ring();
  MultiPoly num(ring), den = MultiPoly::constant(ring, 1);
  for (const auto& it : its) {
    MultiPoly g = poly_gcd(den, it.denominator);
    MultiPoly scale_new = detail::must_divide(den, g), scale_old = detail::must_divide(it.denominator, g);
    num = num * scale_old + it.numerator_R * scale_new;
    den = den * scale_old;
  }
  MultiPoly g = poly_gcd(num, den);
  return {detail::must_divide(num, g), detail::must_divide(den, g) * 2};
}

struct PeriodCurve;
inline PeriodCurve period_curve(int n);

/// Cross-multiplied difference between sum_poly(n) and iteration_sum(n).
inline MultiPoly sum_form_difference(int n) {
  auto a = sum_poly(n);
  auto b = iteration_sum(n);
  return a.numerator * b.denominator - b.numerator * a.denominator;
}

struct PeriodCurve {
  int n;
  MultiPoly poly;
};

/// P_n(u, v).
inline PeriodCurve period_curve(int n) {
  check_period(n);
  const VarSet& ring = uv_ring();
  switch (n) {
    case 3:
      return {3, parse_poly("u*v + 1 + v", ring)};
    case 4:
      return {4, parse_poly("u^2*(-v^2 + v) + u*(v^3 - v^2 - v + 1) + v^3 + v^2", ring)};
    default:
      return {5, parse_poly("u^7*(-v^4 + 2*v^3 - v^2) + u^6*(3*v^5 - 8*v^4 + 5*v^3 + v^2 - v)"
                            " + u^5*(-3*v^6 + 14*v^5 - 12*v^4 - 5*v^3 + 7*v^2 - v)"
                            " + u^4*(v^7 - 12*v^6 + 18*v^5 + 6*v^4 - 16*v^3 + 3*v^2 + 2*v)"
                            " + u^3*(4*v^7 - 16*v^6 + 19*v^4 - 5*v^3 - 4*v^2 + 2*v + 1)"
                            " + u^2*(6*v^7 - 6*v^6 - 12*v^5 + 6*v^4 + 4*v^3 - 2*v^2)"
                            " + u*(4*v^7 + 3*v^6 - 4*v^5 - 2*v^4 + v^3) + v^7 + 2*v^6 + v^5",
                            ring)};
  }
}

/// The period-5 curve in the reference data, with +3v^6 in the u^5 coefficient.
inline MultiPoly period_curve_5_reference() {
  return period_curve(5).poly + parse_poly("6*u^5*v^6", uv_ring());
}

/// Common factor of the numerators of R_n - u and Q_n - v; P_n must divide it.
inline MultiPoly period_condition(int n) {
  auto its = uv_iterates_symbolic(n);
  const auto& last = its.back();
  const VarSet& ring = uv_ring();
  MultiPoly fr = last.numerator_R - MultiPoly::variable(ring, "u") * last.denominator;
  MultiPoly fq = last.numerator_Q - MultiPoly::variable(ring, "v") * last.denominator;
  return poly_gcd(fr, fq);
}

/// The closed form and the raw iteration sum agree on the curve P_n = 0.
inline bool sum_forms_agree_on_curve(int n) {
  MultiPoly diff = sum_form_difference(n);
  return diff.is_zero() || divides(period_curve(n).poly, diff);
}

struct SumConstraint {
  int n;
  std::string sum_symbol;
  MultiPoly poly;
};

/// B_n(u, v, S_n), linear in S_n.
inline SumConstraint sum_constraint(int n) {
  check_period(n);
  const VarSet ring = sum_ring(n);
  std::string b;
  switch (n) {
    case 3:
      b = "-u^2 + (2*S3 + 1 - 2*v)*u - v";
      break;
    case 4:
      b = "(-1 + v)*u^2 + (S4 - v^2 + 1)*u - v - v^2";
      break;
    default:
      b = "u^4*(2*v^2 - 2*v) + u^3*(-4*v^3 + 6*v^2 - 2*v + 1) + u^2*(-2*S5 + 2*v^4 - 8*v^3 + 2*v^2 + 4*v - 3)"
          " + u*(4*v^4 - 2*v^3 - 2*v^2 + 3*v) + 2*v^4 + 2*v^3";
  }
  MultiPoly poly = parse_poly(b, ring);
  auto s = sum_poly(n);
  MultiPoly cleared = change_ring(s.denominator, ring) * MultiPoly::variable(ring, sum_symbol(n)) -
                      change_ring(s.numerator, ring);
  if (!(cleared == poly || cleared == -poly)) {
    throw Error(ErrorKind::data_integrity, "B" + std::to_string(n) + " does not clear the denominator of S" +
                                               std::to_string(n));
  }
  return {n, sum_symbol(n), std::move(poly)};
}

/// C(v, S5): the degree-15 factor of the period-5 eliminant, in sum_ring(5).
inline MultiPoly sum_eliminant_factor() {
  static const char* const c[16] = {
      "27",
      "-162*S5",
      "252*S5^2 - 432*S5 - 684",
      "280*S5^3 + 2592*S5^2 + 4128*S5 + 556",
      "-1264*S5^4 - 5760*S5^3 - 8712*S5^2 + 236*S5 + 4002",
      "1440*S5^5 + 5888*S5^4 + 6864*S5^3 - 8440*S5^2 - 19596*S5 - 4336",
      "-704*S5^6 - 2816*S5^5 + 320*S5^4 - 8380 + 19584*S5^3 + 37536*S5^2 + 11528*S5",
      "128*S5^7 + 512*S5^6 - 3328*S5^5 - 18112*S5^4 - 30144*S5^3 + 1120*S5^2 + 39192*S5 + 14868",
      "1664*S5^6 + 7488*S5^5 + 7824*S5^4 - 21520*S5^3 - 64076*S5^2 - 38238*S5 + 4003",
      "-256*S5^7 - 1152*S5^6 + 1952*S5^5 + 19360*S5^4 + 44040*S5^3 + 22980*S5^2 - 29970*S5 - 19924",
      "-1216*S5^6 - 6336*S5^5 - 11216*S5^4 + 5848*S5^3 + 46108*S5^2 + 43516*S5 + 5736",
      "128*S5^7 + 640*S5^6 - 160*S5^5 - 8208*S5^4 - 25384*S5^3 - 25368*S5^2 + 3504*S5 + 10380",
      "256*S5^6 + 1664*S5^5 - 16730*S5 + 4432*S5^4 + 2056*S5^3 - 11160*S5^2 - 4909",
      "96*S5^5 + 1104*S5^4 + 4240*S5^3 + 6396*S5^2 + 2070*S5 - 1934",
      "216*S5^3 + 1068*S5^2 + 1974*S5 + 1347",
      "-27",
  };
  const VarSet ring = sum_ring(5);
  MultiPoly out(ring);
  for (int k = 0; k < 16; ++k) out += parse_poly(c[k], ring) * MultiPoly::variable(ring, "v", 15 - k);
  return out;
}

/// Coefficients c_0..c_15 (of v^15..v^0) of a polynomial in v with
/// coefficients in S5.
inline std::vector<MultiPoly> coefficients_in_v(const MultiPoly& f) {
  std::vector<MultiPoly> out;
  const int d = degree_in(f, "v");
  for (int k = d; k >= 0; --k) out.push_back(coefficient_of_power(f, "v", static_cast<unsigned>(k)));
  return out;
}

/// u = x0 + x1, v = x0 + x1^2 + x1 - x0^2.
inline std::pair<Complex, Complex> xy_to_uv(Complex x0, Complex x1) {
  return {x0 + x1, x0 + x1 * x1 + x1 - x0 * x0};
}

struct OrbitData {
  Complex x0, x1, c;
};

inline OrbitData uv_to_orbit_data(Complex u, Complex v) {
  if (std::abs(u) <= kPoleTol) throw Error(ErrorKind::pole, "orbit data at u = 0");
  Complex d = (v - u) / u;  // x1 - x0
  Complex x0 = (u - d) / 2.0;
  Complex x1 = u - x0;
  return {x0, x1, x1 - x0 * x0};
}

}  // namespace orbitsum
