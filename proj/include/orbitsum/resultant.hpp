#pragma once

#include <string_view>
#include <utility>
#include <vector>

#include "orbitsum/division.hpp"
#include "orbitsum/error.hpp"
#include "orbitsum/poly.hpp"
#include "orbitsum/poly_gcd.hpp"

namespace orbitsum {

/// Sylvester matrix of f and g with respect to var. Entries live in the same
/// ring and are free of var.
inline std::vector<std::vector<MultiPoly>> sylvester_matrix(const MultiPoly& f, const MultiPoly& g,
                                                            std::size_t var) {
  const int m = degree_in(f, var), n = degree_in(g, var);
  const std::size_t size = static_cast<std::size_t>(m + n);
  const MultiPoly zero(f.ring());
  std::vector<std::vector<MultiPoly>> rows(size, std::vector<MultiPoly>(size, zero));
  auto fill = [&](const MultiPoly& p, int deg, int copies, std::size_t row0) {
    for (int r = 0; r < copies; ++r) {
      for (int k = 0; k <= deg; ++k) {
        rows[row0 + r][static_cast<std::size_t>(r + k)] =
            coefficient_of_power(p, var, static_cast<unsigned>(deg - k));
      }
    }
  };
  fill(f, m, n, 0);
  fill(g, n, m, static_cast<std::size_t>(n));
  return rows;
}

/// Determinant by Bareiss fraction-free elimination; every division is exact.
inline MultiPoly bareiss_determinant(std::vector<std::vector<MultiPoly>> a, const VarSet& ring) {
  const std::size_t n = a.size();
  if (n == 0) return MultiPoly::constant(ring, 1);
  bool negate = false;
  MultiPoly prev = MultiPoly::constant(ring, 1);
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k].is_zero()) {
      std::size_t r = k + 1;
      while (r < n && a[r][k].is_zero()) ++r;
      if (r == n) return MultiPoly(ring);
      std::swap(a[k], a[r]);
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        MultiPoly num = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        a[i][j] = detail::must_divide(num, prev);
      }
      a[i][k] = MultiPoly(ring);
    }
    prev = a[k][k];
  }
  return negate ? -a[n - 1][n - 1] : a[n - 1][n - 1];
}

/// Res_var(f, g) as the Sylvester determinant.
inline MultiPoly sylvester_resultant(const MultiPoly& f, const MultiPoly& g, std::string_view var) {
  MultiPoly::check_ring(f, g);
  if (f.is_zero() || g.is_zero()) throw Error(ErrorKind::zero_divisor, "resultant of the zero polynomial");
  const std::size_t x = f.ring().index_of(var);
  if (degree_in(f, x) <= 0 && degree_in(g, x) <= 0) {
    throw Error(ErrorKind::unknown_variable, "neither input contains " + std::string(var));
  }
  return bareiss_determinant(sylvester_matrix(f, g, x), f.ring());
}

struct TrialFactorization {
  MultiPoly cofactor;
  std::vector<unsigned> multiplicities;
};

/// Divides each candidate out of f as often as it goes exactly.
inline TrialFactorization trial_factor(const MultiPoly& f, const std::vector<MultiPoly>& candidates) {
  TrialFactorization out{f, {}};
  for (const auto& c : candidates) {
    if (c.is_zero()) throw Error(ErrorKind::zero_divisor, "zero candidate factor");
    unsigned k = 0;
    if (!c.is_constant() && !out.cofactor.is_zero()) {
      while (auto q = exact_quotient(out.cofactor, c)) {
        out.cofactor = std::move(*q);
        ++k;
      }
    }
    out.multiplicities.push_back(k);
  }
  return out;
}

}  // namespace orbitsum
