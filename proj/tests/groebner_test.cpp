#include <gtest/gtest.h>

#include <complex>
#include <cstdlib>
#include <vector>

#include "orbitsum/dynamics.hpp"
#include "orbitsum/error.hpp"
#include "orbitsum/extension.hpp"
#include "orbitsum/groebner.hpp"
#include "orbitsum/poly_io.hpp"
#include "orbitsum/resultant.hpp"

using namespace orbitsum;

namespace {

IdealBasis ideal(int n) {
  return IdealBasis(sum_ring(n), {change_ring(period_curve(n).poly, sum_ring(n)), sum_constraint(n).poly});
}

}  // namespace

TEST(SPolynomial, Basics) {
  const VarSet r{"x", "y"};
  const auto lex = MonomialOrder::lex();
  auto f = parse_poly("x^2 + y^2", r), g = parse_poly("x - y", r);
  EXPECT_TRUE(s_polynomial(f, f, lex).is_zero());
  auto s = s_polynomial(f, g, lex);
  EXPECT_EQ(s, parse_poly("x*y + y^2", r));
  EXPECT_EQ(normal_form(s, {g}, lex), parse_poly("2*y^2", r));
  EXPECT_THROW(s_polynomial(f, MultiPoly(r), lex), Error);
}

TEST(Buchberger, SingleGenerator) {
  const VarSet r{"x", "y"};
  auto gb = buchberger(IdealBasis(r, {parse_poly("x - y", r)}), MonomialOrder::lex());
  ASSERT_EQ(gb.basis.size(), 1u);
  EXPECT_EQ(gb.basis[0], parse_poly("x - y", r));
}

TEST(Buchberger, Period3MatchesReference) {
  auto I = ideal(3);
  for (bool h : {false, true}) {
    GroebnerOptions o;
    o.homogenize = h;
    auto gb = buchberger(I, MonomialOrder::lex(), o);
    ASSERT_EQ(gb.basis.size(), 2u);
    const VarSet& r = I.ring;
    EXPECT_EQ(gb.basis[0], parse_poly("v^3 - 2*v^2*S3 - 2*v*S3 - 3*v - 1", r));
    EXPECT_EQ(gb.basis[1], parse_poly("u + v^2 - 2*v*S3 - 2*S3 - 2", r));
    EXPECT_TRUE(is_groebner_basis(gb.basis, gb.order));
    EXPECT_TRUE(is_reduced_basis(gb.basis, gb.order));
    EXPECT_EQ(gb.homogenized, h);
  }
}

TEST(Buchberger, Period4HasFourElements) {
  auto gb = buchberger(ideal(4), MonomialOrder::lex());
  ASSERT_EQ(gb.basis.size(), 4u);
  EXPECT_TRUE(equal_up_to_scalar(gb.basis[0], parse_poly("v^4 - v^3*S4 + v^3 - v^2*S4 - v^2 - v", sum_ring(4))));
  EXPECT_TRUE(all_reduce_to_zero(ideal(4).generators, gb.basis, gb.order));
}

TEST(Buchberger, Deterministic) {
  auto a = buchberger(ideal(4), MonomialOrder::lex());
  auto b = buchberger(ideal(4), MonomialOrder::lex());
  EXPECT_EQ(a.basis, b.basis);
  EXPECT_EQ(a.stats.pairs_formed, b.stats.pairs_formed);
}

TEST(Buchberger, BudgetIsHardError) {
  GroebnerOptions o;
  o.max_pair_reductions = 1;
  try {
    buchberger(ideal(4), MonomialOrder::lex(), o);
    FAIL() << "expected budget error";
  } catch (const Error& e) {
    EXPECT_EQ(e.kind(), ErrorKind::budget_exceeded);
  }
}

TEST(Buchberger, BudgetFromEnvironment) {
  ::setenv("ORBITSUM_PAIR_BUDGET", "1234", 1);
  EXPECT_EQ(GroebnerOptions::from_environment().max_pair_reductions, 1234u);
  ::setenv("ORBITSUM_PAIR_BUDGET", "abc", 1);
  EXPECT_THROW(GroebnerOptions::from_environment(), Error);
  ::unsetenv("ORBITSUM_PAIR_BUDGET");
  EXPECT_EQ(GroebnerOptions::from_environment().max_pair_reductions, 200000u);
}

TEST(Buchberger, BlockOrder) {
  const VarSet r{"x", "y", "z"};
  IdealBasis I(r, {parse_poly("x^2 - y", r), parse_poly("x*y - z", r)});
  auto ord = MonomialOrder::block({{1, OrderKind::lex}, {2, OrderKind::grevlex}});
  for (bool h : {false, true}) {
    GroebnerOptions o;
    o.homogenize = h;
    auto gb = buchberger(I, ord, o);
    EXPECT_TRUE(is_groebner_basis(gb.basis, ord));
    auto elim = eliminate(gb, {"y", "z"});
    ASSERT_EQ(elim.size(), 1u);
    EXPECT_TRUE(equal_up_to_scalar(elim[0], parse_poly("y^3 - z^2", r)));
  }
}

TEST(Eliminate, Examples) {
  auto gb = buchberger(ideal(3), MonomialOrder::lex());
  auto e = eliminate(gb, {"v", "S3"});
  ASSERT_EQ(e.size(), 1u);
  EXPECT_EQ(e[0], parse_poly("v^3 - 2*v^2*S3 - 2*v*S3 - 3*v - 1", sum_ring(3)));
  EXPECT_EQ(eliminate(gb, {"u", "v", "S3"}).size(), gb.basis.size());
  EXPECT_THROW(eliminate(gb, {"u", "S3"}), Error);
  auto graded = buchberger(ideal(3), MonomialOrder::grevlex());
  EXPECT_THROW(eliminate(graded, {"v", "S3"}), Error);
}

TEST(Extension, Period5LeadingCoefficients) {
  auto rep = extension_report(ideal(5), "u");
  const VarSet& r = rep.ring;
  ASSERT_EQ(rep.leading_coeffs.size(), 2u);
  EXPECT_EQ(rep.leading_coeffs[0].degree, 7);
  EXPECT_EQ(rep.leading_coeffs[0].coeff, parse_poly("-v^4 + 2*v^3 - v^2", r));
  EXPECT_EQ(rep.leading_coeffs[1].degree, 4);
  EXPECT_EQ(rep.leading_coeffs[1].coeff, parse_poly("2*v^2 - 2*v", r));
  ASSERT_EQ(rep.obstruction.size(), 1u);
  EXPECT_TRUE(equal_up_to_scalar(rep.obstruction[0], parse_poly("v^2 - v", r)));

  using C = std::complex<double>;
  const std::vector<C> a{0.0, 3.0}, b{1.0, C(0.2, 0.4)}, c{2.0, 0.0};
  EXPECT_FALSE(check_extends(rep, a));
  EXPECT_FALSE(check_extends(rep, b));
  EXPECT_TRUE(check_extends(rep, c));
  const std::vector<C> wrong{1.0};
  EXPECT_THROW(check_extends(rep, wrong), Error);
}

TEST(Extension, ConstantLeadingCoefficient) {
  const VarSet r{"x", "y"};
  auto rep = extension_report(IdealBasis(r, {parse_poly("x^2 + 1", r)}), "x");
  EXPECT_EQ(rep.leading_coeffs[0].degree, 2);
  EXPECT_EQ(rep.leading_coeffs[0].coeff, MultiPoly::constant(r, 1));
  EXPECT_TRUE(rep.obstruction.empty());
  auto free = extension_report(IdealBasis(r, {parse_poly("y + 2", r)}), "x");
  EXPECT_EQ(free.leading_coeffs[0].degree, 0);
  EXPECT_EQ(free.leading_coeffs[0].coeff, parse_poly("y + 2", r));
}

TEST(Resultant, Errors) {
  const VarSet r{"x", "y"};
  EXPECT_THROW(sylvester_resultant(parse_poly("y", r), parse_poly("y + 1", r), "x"), Error);
  EXPECT_THROW(sylvester_resultant(MultiPoly(r), parse_poly("x", r), "x"), Error);
}

TEST(Resultant, Period5OracleDividesByC) {
  auto I = ideal(5);
  auto res = sylvester_resultant(I.generators[0], I.generators[1], "u");
  EXPECT_TRUE(divides(primitive_part(sum_eliminant_factor()), res));
}

TEST(TrialFactor, Examples) {
  const VarSet r{"v"};
  auto v = MultiPoly::variable(r, "v");
  auto t = trial_factor(parse_poly("v^2 + v", r), {v});
  EXPECT_EQ(t.cofactor, parse_poly("v + 1", r));
  EXPECT_EQ(t.multiplicities, std::vector<unsigned>{1});
  auto c = trial_factor(parse_poly("v^2 + 1", r), {v});
  EXPECT_EQ(c.multiplicities, std::vector<unsigned>{0});
  EXPECT_EQ(c.cofactor, parse_poly("v^2 + 1", r));

  const VarSet rs = sum_ring(5);
  auto vv = MultiPoly::variable(rs, "v"), one = MultiPoly::constant(rs, 1);
  auto g = pow(vv, 6) * pow(vv + one, 2) * sum_eliminant_factor();
  auto f = trial_factor(g, {vv, vv + one});
  EXPECT_EQ(f.multiplicities, (std::vector<unsigned>{6, 2}));
  EXPECT_EQ(degree_in(f.cofactor, "v"), 15);
  EXPECT_EQ(degree_in(g, "v"), 23);
  EXPECT_EQ(degree_in(g, "S5"), 7);
}
