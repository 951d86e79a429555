// Frozen reference values computed independently of this library (exact
// Groebner bases and resultants, polynomial roots, roots of unity).

#include <gtest/gtest.h>

#include <cmath>
#include <complex>

#include "orbitsum/dynamics.hpp"
#include "orbitsum/groebner.hpp"
#include "orbitsum/numeric/census.hpp"
#include "orbitsum/numeric/orbits.hpp"
#include "orbitsum/numeric/roots.hpp"
#include "orbitsum/poly_io.hpp"
#include "orbitsum/resultant.hpp"

using namespace orbitsum;

namespace {

void expect_same_basis(const std::vector<MultiPoly>& got, const std::vector<std::string>& want, const VarSet& ring) {
  ASSERT_EQ(got.size(), want.size());
  for (const auto& w : want) {
    const MultiPoly f = parse_poly(w, ring);
    bool found = false;
    for (const auto& g : got) found = found || equal_up_to_scalar(g, f);
    EXPECT_TRUE(found) << w;
  }
}

MultiPoly P3(const VarSet& r) { return parse_poly("u*v + 1 + v", r); }
MultiPoly B3(const VarSet& r) { return parse_poly("-u^2 + (2*S3 + 1 - 2*v)*u - v", r); }
MultiPoly P4(const VarSet& r) { return parse_poly("u^2*(-v^2 + v) + u*(v^3 - v^2 - v + 1) + v^3 + v^2", r); }
MultiPoly B4(const VarSet& r) { return parse_poly("(-1 + v)*u^2 + (S4 - v^2 + 1)*u - v - v^2", r); }

}  // namespace

TEST(Oracle, Period3LexBasis) {
  const VarSet r{"u", "v", "S3"};
  auto gb = buchberger(IdealBasis(r, {P3(r), B3(r)}), MonomialOrder::lex());
  expect_same_basis(gb.basis,
                    {"-2*S3*v - 2*S3 + u + v^2 - 2", "-2*S3*v^2 - 2*S3*v + v^3 - 3*v - 1"}, r);
}

TEST(Oracle, Period4LexBasis) {
  const VarSet r{"u", "v", "S4"};
  auto gb = buchberger(IdealBasis(r, {P4(r), B4(r)}), MonomialOrder::lex());
  expect_same_basis(gb.basis,
                    {"-S4*u*v + S4*u + u^2*v - u^2 - v^2 - v",
                     "-S4^2*u + S4*u^2 + S4*v^2 + S4*v - v^3 - 2*v^2 - v", "-S4*u*v + u*v^2 - u",
                     "-S4*v^3 - S4*v^2 + v^4 + v^3 - v^2 - v"},
                    r);
}

TEST(Oracle, Period3EliminateV) {
  const VarSet r{"v", "u", "S3"};
  auto gb = buchberger(IdealBasis(r, {P3(r), B3(r)}), MonomialOrder::lex());
  expect_same_basis(gb.basis, {"2*S3*u - u^2 + u + v + 2", "-2*S3*u^2 - 2*S3*u + u^3 - 3*u - 1"}, r);
}

TEST(Oracle, Period4EliminateV) {
  const VarSet r{"v", "u", "S4"};
  auto gb = buchberger(IdealBasis(r, {P4(r), B4(r)}), MonomialOrder::lex());
  expect_same_basis(gb.basis,
                    {"-S4^2*u^2 + S4*u^3 - S4*u - u^2*v + u^2 - 2*u*v - 2*u + v^2 + v",
                     "S4^2*u^3 + S4^2*u^2 - S4*u^4 - S4*u^3 + S4*u^2 + u^3*v - u^3 + 2*u^2*v + 2*u^2 + u*v + u",
                     "S4^2*u^2 - S4*u^3 + S4*u*v + 2*u*v + 2*u",
                     "S4^3*u^3 + S4^3*u^2 - 2*S4^2*u^4 - S4^2*u^3 + 2*S4^2*u^2 + S4*u^5 - 2*S4*u^3 + 4*S4*u^2 + S4*u "
                     "- 4*u^3"},
                    r);
}

TEST(Oracle, GradedBases) {
  const VarSet r{"x", "y"};
  auto a = buchberger(IdealBasis(r, {parse_poly("x^2 + y^2 - 1", r), parse_poly("x*y - 1", r)}),
                      MonomialOrder::grlex());
  expect_same_basis(a.basis, {"x + y^3 - y", "x^2 + y^2 - 1", "x*y - 1"}, r);
  auto b = buchberger(IdealBasis(r, {parse_poly("x^3 - 2*x*y", r), parse_poly("x^2*y - 2*y^2 + x", r)}),
                      MonomialOrder::grevlex());
  expect_same_basis(b.basis, {"x^2", "x*y", "-x + 2*y^2"}, r);
}

TEST(Oracle, Resultants) {
  const VarSet r3{"u", "v", "S3"};
  EXPECT_EQ(sylvester_resultant(P3(r3), B3(r3), "u"), parse_poly("-2*S3*v^2 - 2*S3*v + v^3 - 3*v - 1", r3));
  const VarSet r4{"u", "v", "S4"};
  const MultiPoly res4 = sylvester_resultant(P4(r4), B4(r4), "u");
  EXPECT_TRUE(equal_up_to_scalar(res4, parse_poly("-v*(v - 1)*(v + 1)*(-S4*v + v^2 - 1)^2", r4)));
  const VarSet rx{"x", "a", "b"};
  EXPECT_EQ(sylvester_resultant(parse_poly("x^2 - 1", rx), parse_poly("x - 2", rx), "x"), parse_poly("3", rx));
  EXPECT_TRUE(equal_up_to_scalar(sylvester_resultant(parse_poly("x - a", rx), parse_poly("x - b", rx), "x"),
                                 parse_poly("a - b", rx)));
}

TEST(Oracle, UvStep) {
  auto [r, q] = uv_step_numeric(1.0, 2.0);
  EXPECT_NEAR(std::abs(r - Complex(3.0)), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(q - Complex(6.0)), 0.0, 1e-15);
}

TEST(Oracle, RealRootsAtZeroSum) {
  const double want[] = {-4.729510857989675, -1.2034558313671115, 0.020690020106210183, 2.4590550963086852,
                         3.4532215729418785};
  auto census = find_roots(specialized_eliminant(0.0));
  ASSERT_EQ(census.real_count, 5);
  std::vector<double> got;
  for (auto z : census.roots)
    if (is_real_root(z)) got.push_back(z.real());
  std::sort(got.begin(), got.end());
  for (int k = 0; k < 5; ++k) EXPECT_NEAR(got[static_cast<std::size_t>(k)], want[k], 1e-9);
}

TEST(Oracle, CyclesOfZeroParameter) {
  // x^8 = x: the 3-cycles are {z, z^2, z^4} and {z^3, z^6, z^5} with z = exp(2 pi i / 7).
  auto orbits = orbit_oracle(0.0, 3);
  ASSERT_EQ(orbits.size(), 2u);
  const Complex s1(-0.5, std::sqrt(7.0) / 2), s2(-0.5, -std::sqrt(7.0) / 2);
  for (const auto& o : orbits) EXPECT_LT(std::min(std::abs(o.sum - s1), std::abs(o.sum - s2)), 1e-12);
  EXPECT_GT(std::abs(orbits[0].sum - orbits[1].sum), 1.0);

  // period 5 at c = 0: six cycles of 31st roots of unity under doubling
  auto five = orbit_oracle(0.0, 5);
  ASSERT_EQ(five.size(), 6u);
  Complex total = 0.0;
  for (const auto& o : five) {
    Complex gauss = 0.0;
    const double t = std::arg(o.points[0]) / (2 * M_PI) * 31;
    const int k = static_cast<int>(std::lround(t)) % 31;
    for (int j = 0, e = (k + 31) % 31; j < 5; ++j, e = (2 * e) % 31) gauss += std::polar(1.0, 2 * M_PI * e / 31);
    EXPECT_LT(std::abs(o.sum - gauss), 1e-12);
    total += o.sum;
  }
  EXPECT_LT(std::abs(total + 1.0), 1e-12);  // all nontrivial 31st roots sum to -1
}

TEST(Oracle, CompositionCoefficients) {
  auto p = compose_quadratic(0.0, 2);
  const std::vector<Complex> want{0.0, -1.0, 0.0, 0.0, 1.0};
  ASSERT_EQ(p.coefficients().size(), want.size());
  for (std::size_t k = 0; k < want.size(); ++k) EXPECT_EQ(p.coefficients()[k], want[k]);
  auto q = compose_quadratic(1.0, 1);
  EXPECT_EQ(q.coefficients(), (std::vector<Complex>{1.0, -1.0, 1.0}));
}
