// Period-3 orbit sums end to end: build the ideal, eliminate u, solve for the
// sum, then check one numeric orbit against the result.

#include <iostream>

#include "orbitsum/dynamics.hpp"
#include "orbitsum/groebner.hpp"
#include "orbitsum/numeric/orbits.hpp"
#include "orbitsum/poly_io.hpp"

using namespace orbitsum;

int main() {
  const VarSet ring = sum_ring(3);
  const IdealBasis ideal(ring, {change_ring(period_curve(3).poly, ring), sum_constraint(3).poly});

  const GroebnerResult gb = buchberger(ideal, MonomialOrder::lex());
  std::cout << "reduced lex basis:\n";
  for (const auto& g : gb.basis) std::cout << "  " << format(g) << "\n";

  const MultiPoly eliminant = eliminate(gb, {"v", "S3"}).front();
  std::cout << "eliminant in v, S3: " << format(eliminant) << "\n";

  // S3 = -a0 / a1 where eliminant = a1*S3 + a0
  const MultiPoly a1 = change_ring(coefficient_of_power(eliminant, "S3", 1), uv_ring());
  const MultiPoly a0 = change_ring(coefficient_of_power(eliminant, "S3", 0), uv_ring());
  std::cout << "S3 = (" << format(-a0) << ") / (" << format(a1) << ")\n";

  const NumericOrbit orbit = orbit_oracle(Complex(-0.1, 0.2), 3).front();
  const auto [u, v] = xy_to_uv(orbit.points[0], orbit.points[1]);
  const Complex predicted = eval_uv(-a0, u, v) / eval_uv(a1, u, v);
  std::cout << "numeric orbit sum " << orbit.sum << ", predicted from (u, v) " << predicted << "\n";
  return std::abs(predicted - orbit.sum) < 1e-9 ? 0 : 1;
}
