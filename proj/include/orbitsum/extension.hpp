#pragma once

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

#include "orbitsum/error.hpp"
#include "orbitsum/groebner.hpp"
#include "orbitsum/poly.hpp"

namespace orbitsum {

struct LeadingCoefficient {
  std::size_t generator;
  MultiPoly coeff;  // g_i, free of the eliminated variable
  int degree;       // N_i
};

/// Leading data of each generator in one variable, plus generators of the
/// locus where a partial solution may fail to extend.
struct ExtensionReport {
  VarSet ring;
  std::string eliminated_var;
  std::vector<LeadingCoefficient> leading_coeffs;
  /// Reduced lex basis of <g_1, ..., g_s>; empty when the locus is empty.
  std::vector<MultiPoly> obstruction;
};

inline ExtensionReport extension_report(const IdealBasis& ideal, std::string_view var) {
  const std::size_t x = ideal.ring.index_of(var);
  ExtensionReport out{ideal.ring, std::string(var), {}, {}};
  std::vector<MultiPoly> gs;
  for (std::size_t i = 0; i < ideal.generators.size(); ++i) {
    const MultiPoly& f = ideal.generators[i];
    const int n = degree_in(f, x);
    MultiPoly g = coefficient_of_power(f, x, static_cast<unsigned>(n));
    out.leading_coeffs.push_back({i, g, n});
    gs.push_back(std::move(g));
  }
  auto gb = buchberger(IdealBasis(ideal.ring, gs), MonomialOrder::lex());
  if (!(gb.basis.size() == 1 && gb.basis.front().is_constant())) out.obstruction = std::move(gb.basis);
  return out;
}

/// Point over the remaining variables in ring order, the eliminated one
/// skipped.
inline bool check_extends(const ExtensionReport& report, std::span<const std::complex<double>> partial_point,
                          double tol = 1e-9) {
  const std::size_t x = report.ring.index_of(report.eliminated_var);
  if (partial_point.size() + 1 != report.ring.size()) {
    throw Error(ErrorKind::dimension, "partial point needs " + std::to_string(report.ring.size() - 1) +
                                          " coordinates, got " + std::to_string(partial_point.size()));
  }
  std::vector<std::complex<double>> full;
  for (std::size_t i = 0, k = 0; i < report.ring.size(); ++i) full.push_back(i == x ? 0.0 : partial_point[k++]);
  for (const auto& lc : report.leading_coeffs) {
    if (std::abs(evaluate(lc.coeff, full)) > tol) return true;
  }
  return false;
}

}  // namespace orbitsum
