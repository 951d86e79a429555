#include <chrono>
#include <cstdio>
#include <iostream>
#include <random>
#include <sstream>
#include <string>

#include "orbitsum/division.hpp"
#include "orbitsum/dynamics.hpp"
#include "orbitsum/numeric/census.hpp"
#include "orbitsum/numeric/orbits.hpp"
#include "orbitsum/order.hpp"
#include "orbitsum/pipeline.hpp"

using namespace orbitsum;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) {
  return std::chrono::duration<double>(Clock::now() - t0).count();
}

struct Outcome {
  bool ok = true;
  std::ostringstream note;
  void require(bool cond, const std::string& what) {
    if (!cond) {
      ok = false;
      note << " [failed: " << what << "]";
    }
  }
};

int failures = 0;

void report(int id, const std::string& title, Outcome& o) {
  std::cout << (o.ok ? "PASS" : "FAIL") << " " << id << " " << title << o.note.str() << std::endl;
  if (!o.ok) ++failures;
}

VerifyOptions options() {
  VerifyOptions opt;
  opt.golden_dir = ORBITSUM_GOLDEN_DIR;
  return opt;
}

void require_checks(Outcome& o, const VerificationReport& r, std::initializer_list<const char*> names) {
  for (const char* n : names) o.require(r.passed(n), r.name + ": " + n);
}

void require_sound(Outcome& o, const VerificationReport& r) {
  o.require(r.status() != Status::fail, r.name + " status " + to_string(r.status()));
  require_checks(o, r, {"S-polynomial certificate", "basis is reduced", "generators reduce to zero"});
}

template <class F>
void guarded(int id, const std::string& title, F&& f) {
  Outcome o;
  try {
    f(o);
  } catch (const std::exception& e) {
    o.require(false, std::string("error: ") + e.what());
  }
  report(id, title, o);
}

}  // namespace

int main() {
  const VerifyOptions opt = options();

  guarded(1, "period-3 pipeline", [&](Outcome& o) {
    const auto t0 = Clock::now();
    auto r = verify_period(3, 'u', opt);
    const double dt = seconds_since(t0);
    require_sound(o, r);
    require_checks(o, r, {"g31 matches up to scalar", "g32 matches up to scalar", "S3 closed form"});
    o.require(dt < 1.0, "runtime < 1 s");
    o.note << " (" << dt << " s)";
  });

  guarded(2, "period-4 pipeline", [&](Outcome& o) {
    const auto t0 = Clock::now();
    auto ru = verify_period(4, 'u', opt);
    auto rv = verify_period(4, 'v', opt);
    const double dt = seconds_since(t0);
    require_sound(o, ru);
    require_sound(o, rv);
    require_checks(o, ru, {"g41 matches up to scalar", "S4 closed form"});
    require_checks(o, rv, {"G4v matches up to scalar"});
    o.require(dt < 5.0, "runtime < 5 s");
    o.note << " (" << dt << " s)";
  });

  VerificationReport r5;
  double t5 = 0.0;
  bool have5 = false;
  guarded(3, "period-5 pipeline", [&](Outcome& o) {
    const auto t0 = Clock::now();
    r5 = verify_period(5, 'u', opt);
    t5 = seconds_since(t0);
    have5 = true;
    require_sound(o, r5);
    require_checks(o, r5,
                   {"elimination ideal has one generator", "eliminant v-degree", "eliminant S5-degree",
                    "factor v multiplicity", "factor v+1 multiplicity", "cofactor v-degree 15",
                    "coefficient table c0..c15 up to one scalar", "C divides Res_u(P5, B5)"});
    for (const auto& d : r5.discrepancies) {
      o.require(d.arbitrated, "discrepancy " + d.item + " arbitrated");
      o.note << " [discrepancy " << d.item << ": arbitrated]";
    }
    o.require(t5 < 600.0, "runtime < 10 min");
    o.note << " (" << t5 << " s)";
  });

  guarded(4, "extension analysis", [&](Outcome& o) {
    o.require(have5, "period-5 report available");
    require_checks(o, r5,
                   {"leading coefficient g1 = a7", "leading coefficient g2 = b4",
                    "obstruction locus is {v=0} u {v=1}"});
  });

  guarded(5, "S5=0 specialization", [&](Outcome& o) {
    o.require(have5, "period-5 report available");
    require_checks(o, r5, {"S5=0 specialization matches exactly", "S5=0 has 15 roots, 5 real"});
    const auto j = r5.to_json();
    const bool gap = j["actual"].contains("S5=0") && j["actual"]["S5=0"].contains("min_gap");
    o.require(gap, "minimum gap reported");
    if (gap) o.note << " (min gap " << j["actual"]["S5=0"]["min_gap"].get<double>() << ")";
  });

  guarded(6, "three-valuedness", [&](Outcome& o) {
    const auto t0 = Clock::now();
    std::vector<Complex> sums{0.0};
    std::mt19937_64 rng(kDefaultSeed);
    for (int k = 0; k < 20; ++k) sums.push_back(sample_box(rng, 2.0));
    int max_orbits = 0, degenerate = 0;
    for (const Complex s : sums) {
      const SumCensus c = sum_census(s);
      for (const auto& p : c.points) {
        if (p.obstructed) continue;
        o.require(p.orbit_id >= 0, "every non-obstructed root lifts");
      }
      o.require(c.max_cycle_residual < 1e-9, "cycle residual < 1e-9");
      o.require(c.max_sum_error < 1e-8, "orbit sum within 1e-8");
      o.require(c.distinct_orbits() <= 3, "at most 3 orbits");
      if (c.degenerate)
        ++degenerate;
      else
        o.require(c.distinct_orbits() == 3, "exactly 3 orbits when non-degenerate");
      max_orbits = std::max(max_orbits, c.distinct_orbits());
    }
    const double dt = seconds_since(t0);
    o.require(dt < 30.0, "runtime < 30 s");
    o.note << " (" << sums.size() << " sums, max " << max_orbits << " orbits, " << degenerate << " degenerate, "
           << dt << " s)";
  });

  guarded(7, "sum identity on sampled orbits", [&](Outcome& o) {
    double worst = 0.0;
    for (int n = 3; n <= 5; ++n) {
      for (const auto& orb : sample_orbits(n, 10)) {
        const SumIdentity s = sum_identity(orb);
        worst = std::max({worst, s.du(), s.dv()});
      }
    }
    o.require(worst < 1e-10, "|sum u - 2 sum x|, |sum v - 2 sum x| < 1e-10");
    o.note << " (worst " << worst << ")";
  });

  guarded(8, "curve validation", [&](Outcome& o) {
    for (int n = 3; n <= 5; ++n) {
      const CurveValidation v = validate_period_curve(period_curve(n).poly, n);
      o.require(v.max_on_curve < 1e-8, "P" + std::to_string(n) + " on orbits < 1e-8");
      o.require(v.min_off_curve > 1e-3, "P" + std::to_string(n) + " off curve > 1e-3");
      o.note << " (P" << n << ": " << v.max_on_curve << " / " << v.min_off_curve << ")";
    }
  });

  guarded(9, "algebra properties", [&](Outcome& o) {
    const VarSet ring{"x", "y", "z"};
    const std::vector<MonomialOrder> orders{MonomialOrder::lex(), MonomialOrder::grlex(), MonomialOrder::grevlex()};
    std::mt19937_64 rng(9);
    std::uniform_int_distribution<unsigned> e(0, 3);
    std::uniform_int_distribution<int> c(-9, 9), terms(1, 5);
    auto mono = [&] { return Monomial{e(rng), e(rng), e(rng)}; };
    auto poly = [&](int max_terms) {
      MultiPoly f(ring);
      const int t = std::uniform_int_distribution<int>(1, max_terms)(rng);
      for (int k = 0; k < t; ++k) f += MultiPoly::monomial(ring, mono(), ExactScalar(c(rng)));
      return f.is_zero() ? MultiPoly::constant(ring, 1) : f;
    };
    int division_failures = 0;
    for (int k = 0; k < 1000; ++k) {
      const MonomialOrder& ord = orders[static_cast<std::size_t>(k) % orders.size()];
      const MultiPoly f = poly(6);
      const std::vector<MultiPoly> divs{poly(3), poly(3)};
      const auto d = divide_multi(f, divs, ord);
      MultiPoly back = d.remainder;
      for (std::size_t i = 0; i < divs.size(); ++i) back += d.quotients[i] * divs[i];
      bool ok = back == f;
      for (const auto& t : d.remainder.sorted_terms(ord))
        for (const auto& g : divs) ok = ok && !leading_monomial(g, ord).divides(t.mono);
      if (!ok) ++division_failures;
    }
    o.require(division_failures == 0, std::to_string(division_failures) + " division failures");

    int order_failures = 0;
    const Monomial one{0, 0, 0};
    for (const auto& ord : orders) {
      for (int k = 0; k < 500; ++k) {
        const Monomial a = mono(), b = mono(), m = mono();
        const auto ab = compare(a, b, ord);
        bool ok = (ab == 0) == (a == b) && compare(b, a, ord) == (0 <=> ab) && compare(a * m, b * m, ord) == ab &&
                  compare(a, one, ord) >= 0;
        if (ab < 0 && compare(b, m, ord) < 0) ok = ok && compare(a, m, ord) < 0;
        if (!ok) ++order_failures;
      }
    }
    o.require(order_failures == 0, std::to_string(order_failures) + " order-axiom failures");

    int certificate_failures = 0;
    for (int n = 3; n <= 4; ++n) {
      for (char var : {'u', 'v'}) {
        if (!verify_period(n, var, opt).passed("S-polynomial certificate")) ++certificate_failures;
      }
    }
    if (have5 && !r5.passed("S-polynomial certificate")) ++certificate_failures;
    for (int k = 0; k < 30; ++k) {
      const MonomialOrder& ord = orders[static_cast<std::size_t>(k) % orders.size()];
      auto gb = buchberger(IdealBasis(ring, {poly(3), poly(3)}), ord);
      if (!is_groebner_basis(gb.basis, ord)) ++certificate_failures;
    }
    o.require(certificate_failures == 0, std::to_string(certificate_failures) + " certificate failures");
    o.note << " (1000 divisions, 1500 order triples, 35 bases)";
  });

  std::cout << (failures == 0 ? "ALL PASS" : std::to_string(failures) + " FAILED") << std::endl;
  return failures == 0 ? 0 : 1;
}
