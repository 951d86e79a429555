#pragma once

// Multivariate gcd over Q by recursive primitive polynomial remainder
// sequences. Adequate for the low-variable-count fractions built by the
// dynamics module; not intended as a general-purpose fast gcd.

#include <optional>
#include <vector>

#include "orbitsum/division.hpp"
#include "orbitsum/poly.hpp"

namespace orbitsum {

namespace detail {

inline std::optional<std::size_t> main_variable(const MultiPoly& f, const MultiPoly& g) {
  auto sf = support(f), sg = support(g);
  for (std::size_t i = 0; i < sf.size(); ++i) {
    if (sf[i] || sg[i]) return i;
  }
  return std::nullopt;
}

inline std::vector<MultiPoly> coefficients_in(const MultiPoly& f, std::size_t var) {
  int d = degree_in(f, var);
  std::vector<std::vector<Term>> buckets(d < 0 ? 0 : static_cast<std::size_t>(d) + 1);
  for (const auto& t : f.terms()) {
    Monomial m = t.mono;
    m.set(var, 0);
    buckets[t.mono[var]].push_back({m, t.coeff});
  }
  std::vector<MultiPoly> out;
  out.reserve(buckets.size());
  for (auto& b : buckets) out.push_back(MultiPoly::from_terms(f.ring(), std::move(b)));
  return out;
}

inline MultiPoly must_divide(const MultiPoly& f, const MultiPoly& g) {
  auto q = exact_quotient(f, g);
  if (!q) throw Error(ErrorKind::data_integrity, "expected exact polynomial division");
  return std::move(*q);
}

/// Pseudo-remainder of a by b with respect to var.
inline MultiPoly pseudo_remainder(MultiPoly a, const MultiPoly& b, std::size_t var) {
  const int db = degree_in(b, var);
  const MultiPoly lb = coefficient_of_power(b, var, static_cast<unsigned>(db));
  const VarSet& ring = a.ring();
  int da;
  while (!a.is_zero() && (da = degree_in(a, var)) >= db) {
    MultiPoly la = coefficient_of_power(a, var, static_cast<unsigned>(da));
    Monomial shift(ring.size());
    shift.set(var, static_cast<unsigned>(da - db));
    a = lb * a - (la * b).mul_term(shift, 1);
  }
  return a;
}

}  // namespace detail

inline MultiPoly poly_gcd(const MultiPoly& f, const MultiPoly& g);

namespace detail {

inline MultiPoly content_in(const MultiPoly& f, std::size_t var) {
  MultiPoly c(f.ring());
  for (const auto& coeff : coefficients_in(f, var)) {
    if (coeff.is_zero()) continue;
    c = c.is_zero() ? primitive_part(coeff) : poly_gcd(c, coeff);
    if (c.is_constant()) break;
  }
  return c;
}

}  // namespace detail

/// Greatest common divisor, normalized to a primitive integer polynomial with
/// positive lex-leading coefficient. gcd(0, 0) = 0.
inline MultiPoly poly_gcd(const MultiPoly& f, const MultiPoly& g) {
  MultiPoly::check_ring(f, g);
  if (f.is_zero()) return primitive_part(g);
  if (g.is_zero()) return primitive_part(f);
  const VarSet& ring = f.ring();
  auto var = detail::main_variable(f, g);
  if (!var) return MultiPoly::constant(ring, 1);
  const std::size_t x = *var;

  MultiPoly cf = detail::content_in(f, x), cg = detail::content_in(g, x);
  MultiPoly content = poly_gcd(cf, cg);
  MultiPoly a = primitive_part(detail::must_divide(f, cf));
  MultiPoly b = primitive_part(detail::must_divide(g, cg));
  if (degree_in(a, x) < degree_in(b, x)) std::swap(a, b);
  while (degree_in(b, x) > 0) {
    MultiPoly r = detail::pseudo_remainder(a, b, x);
    if (r.is_zero()) break;
    if (degree_in(r, x) == 0) {
      b = MultiPoly::constant(ring, 1);
      break;
    }
    a = std::move(b);
    b = primitive_part(detail::must_divide(r, detail::content_in(r, x)));
  }
  if (degree_in(b, x) <= 0) b = MultiPoly::constant(ring, 1);
  return primitive_part(content * primitive_part(b));
}

}  // namespace orbitsum
