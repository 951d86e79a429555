#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <limits>
#include <string>
#include <vector>

#include "orbitsum/error.hpp"

namespace orbitsum {

using Complex = std::complex<double>;

/// Dense univariate polynomial, coefficients low to high.
class ComplexPoly {
 public:
  ComplexPoly() = default;
  explicit ComplexPoly(std::vector<Complex> coeffs) : c_(std::move(coeffs)) { trim(); }

  const std::vector<Complex>& coefficients() const noexcept { return c_; }
  int degree() const noexcept { return c_.empty() ? -1 : static_cast<int>(c_.size()) - 1; }
  bool is_zero() const noexcept { return c_.empty(); }
  Complex leading() const { return c_.empty() ? Complex{} : c_.back(); }

  Complex operator()(Complex z) const {
    Complex acc = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * z + *it;
    return acc;
  }

  /// sum |c_k| |z|^k
  double magnitude_at(Complex z) const {
    const double r = std::abs(z);
    double acc = 0.0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * r + std::abs(*it);
    return acc;
  }

  double norm1() const {
    double s = 0.0;
    for (const auto& c : c_) s += std::abs(c);
    return s;
  }

  friend ComplexPoly operator*(const ComplexPoly& a, const ComplexPoly& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Complex> out(a.c_.size() + b.c_.size() - 1);
    for (std::size_t i = 0; i < a.c_.size(); ++i)
      for (std::size_t j = 0; j < b.c_.size(); ++j) out[i + j] += a.c_[i] * b.c_[j];
    return ComplexPoly(std::move(out));
  }

  friend ComplexPoly operator+(const ComplexPoly& a, const ComplexPoly& b) {
    std::vector<Complex> out(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < a.c_.size(); ++i) out[i] += a.c_[i];
    for (std::size_t i = 0; i < b.c_.size(); ++i) out[i] += b.c_[i];
    return ComplexPoly(std::move(out));
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back() == Complex{}) c_.pop_back();
  }
  std::vector<Complex> c_;
};

struct RootOptions {
  int max_sweeps = 1000;
  double step_tol = 1e-13;
  double residual_tol = 1e-9;
  double real_tol = 1e-7;
};

struct RootCensus {
  std::vector<Complex> roots;
  int real_count = 0;
  /// |p(z)| / max(1, sum |c_k| |z|^k)
  std::vector<double> residuals;
  double min_gap = std::numeric_limits<double>::infinity();
  int sweeps = 0;
  /// step tolerance never reached; accepted on residuals alone
  bool stalled = false;
};

inline bool is_real_root(Complex z, double tol = 1e-7) {
  return std::abs(z.imag()) <= tol * std::max(1.0, std::abs(z));
}

inline double scaled_residual(const ComplexPoly& p, Complex z) {
  return std::abs(p(z)) / std::max(1.0, p.magnitude_at(z));
}

namespace detail {

/// Fujiwara bound on root moduli of a monic polynomial.
inline double root_radius(const std::vector<Complex>& monic) {
  const std::size_t n = monic.size() - 1;
  double r = 0.0;
  for (std::size_t k = 1; k <= n; ++k) {
    double a = std::abs(monic[n - k]);
    if (k == n) a /= 2;
    r = std::max(r, std::pow(a, 1.0 / static_cast<double>(k)));
  }
  return 2 * r;
}

/// Returns sweeps used, or -1 when the step never dropped below tol.
inline int durand_kerner(const std::vector<Complex>& monic, std::vector<Complex>& z, const RootOptions& opt) {
  const std::size_t n = z.size();
  auto eval = [&](Complex x) {
    Complex acc = 0.0;
    for (auto it = monic.rbegin(); it != monic.rend(); ++it) acc = acc * x + *it;
    return acc;
  };
  for (int sweep = 1; sweep <= opt.max_sweeps; ++sweep) {
    double worst = 0.0;
    for (std::size_t k = 0; k < n; ++k) {
      Complex den = 1.0;
      for (std::size_t j = 0; j < n; ++j)
        if (j != k) den *= z[k] - z[j];
      if (den == Complex{}) den = Complex(1e-300, 0);
      Complex step = eval(z[k]) / den;
      if (!std::isfinite(step.real()) || !std::isfinite(step.imag())) return -1;
      z[k] -= step;
      worst = std::max(worst, std::abs(step) / std::max(1.0, std::abs(z[k])));
    }
    if (worst < opt.step_tol) return sweep;
  }
  return -1;
}

}  // namespace detail

/// All roots with multiplicity by Durand-Kerner.
inline RootCensus find_roots(const ComplexPoly& p, const RootOptions& opt = {}) {
  if (p.degree() < 1) throw Error(ErrorKind::dimension, "root finding needs degree >= 1");
  const std::size_t n = static_cast<std::size_t>(p.degree());
  std::vector<Complex> monic(p.coefficients());
  const Complex lc = monic.back();
  for (auto& c : monic) c /= lc;

  const Complex seed(0.4, 0.9);
  auto start = [&](double scale) {
    std::vector<Complex> z(n);
    Complex w = 1.0;
    for (std::size_t k = 0; k < n; ++k, w *= seed) z[k] = scale * w;
    return z;
  };

  auto worst_residual = [&](const std::vector<Complex>& zs) {
    double w = 0.0;
    for (const auto& r : zs) {
      const double e = scaled_residual(p, r);
      w = std::isfinite(e) ? std::max(w, e) : std::numeric_limits<double>::infinity();
    }
    return w;
  };
  std::vector<Complex> z = start(1.0);
  int sweeps = detail::durand_kerner(monic, z, opt);
  if (sweeps < 0 && !(worst_residual(z) <= opt.residual_tol)) {
    std::vector<Complex> alt = start(std::max(1.0, detail::root_radius(monic)));
    const int alt_sweeps = detail::durand_kerner(monic, alt, opt);
    if (alt_sweeps >= 0 || worst_residual(alt) < worst_residual(z)) z = std::move(alt), sweeps = alt_sweeps;
  }

  RootCensus out;
  out.sweeps = sweeps < 0 ? opt.max_sweeps : sweeps;
  out.stalled = sweeps < 0;
  out.roots = z;
  double worst = 0.0;
  for (const auto& r : z) {
    out.residuals.push_back(scaled_residual(p, r));
    worst = std::max(worst, out.residuals.back());
    if (is_real_root(r, opt.real_tol)) ++out.real_count;
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) out.min_gap = std::min(out.min_gap, std::abs(z[i] - z[j]));
  std::sort(out.roots.begin(), out.roots.end(), [](Complex a, Complex b) {
    return a.real() != b.real() ? a.real() < b.real() : a.imag() < b.imag();
  });
  for (std::size_t i = 0; i < n; ++i) out.residuals[i] = scaled_residual(p, out.roots[i]);

  if (!(worst <= opt.residual_tol)) {
    throw Error(ErrorKind::convergence, "Durand-Kerner did not converge (degree " + std::to_string(n) +
                                            ", worst scaled residual " + std::to_string(worst) + ")");
  }
  return out;
}

/// f_c^n(x) - x as a dense polynomial of degree 2^n.
inline ComplexPoly compose_quadratic(Complex c, int n) {
  if (n < 1) throw Error(ErrorKind::dimension, "composition count must be >= 1");
  if (n > 6) throw Error(ErrorKind::budget_exceeded, "composition capped at n = 6 (degree 64)");
  ComplexPoly f(std::vector<Complex>{0.0, 1.0});
  const ComplexPoly cst(std::vector<Complex>{c});
  for (int k = 0; k < n; ++k) f = f * f + cst;
  return f + ComplexPoly(std::vector<Complex>{0.0, -1.0});
}

}  // namespace orbitsum
