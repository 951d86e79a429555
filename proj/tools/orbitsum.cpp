#include <cmath>
#include <complex>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "orbitsum/pipeline.hpp"

#ifndef ORBITSUM_GOLDEN_DIR
#define ORBITSUM_GOLDEN_DIR "tests/golden"
#endif

namespace {

using namespace orbitsum;

enum Exit { kPass = 0, kUsage = 2, kNumeric = 3, kInvariant = 4, kBudget = 5 };

int exit_code(ErrorKind k) {
  switch (k) {
    case ErrorKind::parse:
    case ErrorKind::unknown_variable:
    case ErrorKind::dimension:
    case ErrorKind::order:
      return kUsage;
    case ErrorKind::budget_exceeded:
      return kBudget;
    case ErrorKind::convergence:
    case ErrorKind::pole:
    case ErrorKind::lifting:
      return kNumeric;
    default:
      return kInvariant;
  }
}

/// "1.5", "-2i", "0.3-1.2i", "1e9", "i"
Complex parse_complex(std::string s) {
  s.erase(std::remove_if(s.begin(), s.end(), ::isspace), s.end());
  auto fail = [&] { throw Error(ErrorKind::parse, "cannot parse complex number '" + s + "'"); };
  if (s.empty()) fail();
  auto number = [&](const std::string& t) {
    if (t.empty() || t == "+") return 1.0;
    if (t == "-") return -1.0;
    std::size_t used = 0;
    double x = 0;
    try {
      x = std::stod(t, &used);
    } catch (...) {
      fail();
    }
    if (used != t.size()) fail();
    return x;
  };
  if (s.back() != 'i') return {number(s), 0.0};
  s.pop_back();
  std::size_t split = std::string::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  if (split == std::string::npos) return {0.0, number(s)};
  return {number(s.substr(0, split)), number(s.substr(split))};
}

std::string complex_text(Complex z) {
  std::ostringstream os;
  os.precision(17);
  os << z.real() << (z.imag() < 0 ? "-" : "+") << std::abs(z.imag()) << "i";
  return os.str();
}

json complex_json(Complex z) { return json::array({z.real(), z.imag()}); }

struct Output {
  std::string out;
  std::string csv;

  void emit(const json& j) const {
    if (out.empty()) {
      std::cout << j.dump(2) << "\n";
      return;
    }
    std::ofstream f(out);
    if (!f) throw Error(ErrorKind::parse, "cannot write " + out);
    f << j.dump(2) << "\n";
  }

  std::string csv_path() const {
    if (!csv.empty()) return csv;
    if (out.empty()) return {};
    auto dot = out.rfind('.');
    return (dot == std::string::npos ? out : out.substr(0, dot)) + ".csv";
  }
};

struct CsvRow {
  Complex z;
  double residual;
  int orbit_id;
  Complex sum;
  bool has_orbit;
};

void write_csv(const std::string& path, const std::vector<CsvRow>& rows) {
  if (path.empty()) return;
  std::ofstream f(path);
  if (!f) throw Error(ErrorKind::parse, "cannot write " + path);
  f.precision(17);
  f << "re,im,residual,orbit_id,sum_re,sum_im\n";
  for (const auto& r : rows) {
    f << r.z.real() << ',' << r.z.imag() << ',' << r.residual << ',';
    if (r.has_orbit)
      f << r.orbit_id << ',' << r.sum.real() << ',' << r.sum.imag();
    else
      f << ",,";
    f << '\n';
  }
}

json error_doc(const std::string& name, const Error& e) {
  json j;
  j["schema"] = kSchemaVersion;
  j["name"] = name;
  j["status"] = "fail";
  j["error"] = {{"kind", to_string(e.kind())}, {"message", e.what()}};
  return j;
}

// verify

int cmd_verify(int period, const std::string& elim, const std::string& golden, const Output& o) {
  VerifyOptions opt;
  opt.golden_dir = golden;
  auto report = verify_period(period, elim.at(0), opt);
  o.emit(report.to_json());
  return report.status() == Status::fail ? kInvariant : kPass;
}

// roots

int cmd_roots(const std::string& s5_text, const std::string& golden, const Output& o) {
  const Complex s5 = parse_complex(s5_text);
  const ComplexPoly p = specialized_eliminant(s5);
  json j;
  j["schema"] = kSchemaVersion;
  j["name"] = "roots";
  j["inputs"] = {{"s5", complex_text(s5)}, {"eliminant", text(sum_eliminant_factor())}};
  json coeffs = json::array();
  for (auto it = p.coefficients().rbegin(); it != p.coefficients().rend(); ++it) coeffs.push_back(complex_json(*it));
  j["inputs"]["coefficients_high_to_low"] = coeffs;

  bool ok = true;
  json checks = json::array();
  if (s5.imag() == 0.0) {
    const VarSet ring = sum_ring(5);
    const MultiPoly exact = substitute(sum_eliminant_factor(), "S5", ExactScalar(s5.real()));
    j["inputs"]["polynomial"] = text(exact);
    if (s5.real() == 0.0) {
      const auto gold = GoldenFile::load(std::filesystem::path(golden) / "period5.txt");
      const bool same = exact == gold.poly("G5u_S0", ring);
      j["expected"] = {{"polynomial", gold.text("G5u_S0")}, {"real_roots", gold.integer("S0_real_roots")}};
      checks.push_back({{"name", "polynomial matches reference specialization"}, {"ok", same}});
      ok = ok && same;
    }
  }

  RootCensus census;
  try {
    census = find_roots(p);
  } catch (const Error& e) {
    j["status"] = "fail";
    j["error"] = {{"kind", to_string(e.kind())}, {"message", e.what()}};
    o.emit(j);
    return exit_code(e.kind());
  }
  double worst = 0.0;
  json roots = json::array();
  std::vector<CsvRow> rows;
  for (std::size_t k = 0; k < census.roots.size(); ++k) {
    worst = std::max(worst, census.residuals[k]);
    roots.push_back({{"re", census.roots[k].real()},
                     {"im", census.roots[k].imag()},
                     {"residual", census.residuals[k]},
                     {"real", is_real_root(census.roots[k])}});
    rows.push_back({census.roots[k], census.residuals[k], -1, 0.0, false});
  }
  j["actual"] = {{"degree", p.degree()},   {"root_count", census.roots.size()}, {"real_count", census.real_count},
                 {"min_gap", census.min_gap}, {"max_residual", worst},          {"sweeps", census.sweeps},
                 {"stalled", census.stalled}, {"roots", roots}};
  const bool count_ok = census.roots.size() == 15;
  checks.push_back({{"name", "15 roots"}, {"ok", count_ok}});
  ok = ok && count_ok;
  if (s5 == Complex(0.0, 0.0)) {
    const bool real_ok = census.real_count == 5;
    checks.push_back({{"name", "5 real roots"}, {"ok", real_ok}});
    ok = ok && real_ok;
  }
  j["checks"] = checks;
  j["status"] = ok ? "pass" : "fail";
  o.emit(j);
  write_csv(o.csv_path(), rows);
  return ok ? kPass : kInvariant;
}

// oracle

json census_json(const SumCensus& c) {
  json pts = json::array();
  for (const auto& p : c.points) {
    json e = {{"v", complex_json(p.v)}, {"obstructed", p.obstructed}};
    if (p.obstructed) {
      e["note"] = p.note;
    } else {
      e["u"] = complex_json(p.u);
      e["c"] = complex_json(p.c);
      e["x0"] = complex_json(p.x0);
      e["orbit_id"] = p.orbit_id;
      e["lift_gap"] = p.lift_gap;
    }
    pts.push_back(e);
  }
  json orbits = json::array();
  for (const auto& o : c.orbits) {
    json xs = json::array();
    for (auto x : o.points) xs.push_back(complex_json(x));
    orbits.push_back({{"c", complex_json(o.c)}, {"sum", complex_json(o.sum)}, {"points", xs}, {"degenerate", o.degenerate}});
  }
  return {{"s5", complex_text(c.s5)},
          {"v_roots", c.v_roots.roots.size()},
          {"real_v_roots", c.v_roots.real_count},
          {"min_gap", c.v_roots.min_gap},
          {"distinct_orbits", c.distinct_orbits()},
          {"degenerate", c.degenerate},
          {"max_cycle_residual", c.max_cycle_residual},
          {"max_sum_error", c.max_sum_error},
          {"max_uv_sum_error", c.max_uv_sum_error},
          {"points", pts},
          {"orbits", orbits}};
}

/// Invariants of one census; empty when all hold.
std::vector<std::string> census_violations(const SumCensus& c) {
  std::vector<std::string> v;
  if (c.distinct_orbits() > 3 && !c.degenerate) v.push_back("more than three orbits share the sum");
  if (c.max_cycle_residual >= 1e-9) v.push_back("cycle residual above 1e-9");
  if (c.max_sum_error >= 1e-8) v.push_back("orbit sum misses the target by more than 1e-8");
  if (c.max_uv_sum_error >= 1e-8) v.push_back("sum of u or v differs from twice the target");
  return v;
}

/// Number of cycles of exact period n of a generic quadratic map.
int generic_cycle_count(int n) {
  std::vector<long> points(static_cast<std::size_t>(n) + 1, 0);
  for (int d = 1; d <= n; ++d) {
    long total = 1L << d;
    for (int e = 1; e < d; ++e)
      if (d % e == 0) total -= points[static_cast<std::size_t>(e)];
    points[static_cast<std::size_t>(d)] = total;
  }
  return static_cast<int>(points[static_cast<std::size_t>(n)] / n);
}

int cmd_oracle_s5(const std::string& s5_text, int period, int samples, std::uint64_t seed, const Output& o) {
  if (period != 5) throw Error(ErrorKind::dimension, "--s5 requires --period 5");
  const Complex s5 = parse_complex(s5_text);
  json j;
  j["schema"] = kSchemaVersion;
  j["name"] = "oracle-s5";
  j["inputs"] = {{"s5", complex_text(s5)}, {"period", period}, {"samples", samples}, {"seed", seed}};
  const SumCensus c = sum_census(s5);
  j["actual"] = census_json(c);
  std::vector<std::string> violations = census_violations(c);

  std::vector<CsvRow> rows;
  for (std::size_t k = 0; k < c.orbits.size(); ++k) {
    const auto& orb = c.orbits[k];
    for (std::size_t i = 0; i < orb.points.size(); ++i) {
      const Complex next = orb.points[(i + 1) % orb.points.size()];
      rows.push_back({orb.points[i], std::abs(quad(orb.points[i], orb.c) - next), static_cast<int>(k), orb.sum, true});
    }
  }

  if (samples > 0) {
    std::mt19937_64 rng(seed);
    json sweep = json::array();
    int max_orbits = 0;
    for (int k = 0; k < samples; ++k) {
      const Complex s = sample_box(rng, 2.0);
      const SumCensus sc = sum_census(s);
      max_orbits = std::max(max_orbits, sc.distinct_orbits());
      auto sv = census_violations(sc);
      sweep.push_back({{"s5", complex_text(s)},
                       {"distinct_orbits", sc.distinct_orbits()},
                       {"degenerate", sc.degenerate},
                       {"max_cycle_residual", sc.max_cycle_residual},
                       {"max_sum_error", sc.max_sum_error},
                       {"violations", sv}});
      for (auto& s_v : sv) violations.push_back("sample " + std::to_string(k) + ": " + s_v);
    }
    j["sweep"] = {{"samples", sweep}, {"max_distinct_orbits", max_orbits}};
  }
  j["violations"] = violations;
  j["status"] = violations.empty() ? "pass" : "fail";
  o.emit(j);
  write_csv(o.csv_path(), rows);
  return violations.empty() ? kPass : kInvariant;
}

int cmd_oracle_c(const std::string& c_text, int period, int samples, std::uint64_t seed, const Output& o) {
  const Complex c = parse_complex(c_text);
  json j;
  j["schema"] = kSchemaVersion;
  j["name"] = "oracle-c";
  j["inputs"] = {{"c", complex_text(c)}, {"period", period}, {"samples", samples}, {"seed", seed}};
  std::vector<std::string> violations;
  const int bound = generic_cycle_count(period);

  auto audit = [&](const std::vector<NumericOrbit>& orbits, Complex cc, const std::string& tag) {
    if (static_cast<int>(orbits.size()) > bound) violations.push_back(tag + "more cycles than 2^n allows");
    for (const auto& orb : orbits) {
      if (!orb.degenerate && cycle_residual(orb) >= 1e-9 * (1 + std::abs(cc)))
        violations.push_back(tag + "cycle residual above tolerance");
    }
  };

  const auto orbits = orbit_oracle(c, period);
  audit(orbits, c, "");
  json list = json::array();
  std::vector<CsvRow> rows;
  for (std::size_t k = 0; k < orbits.size(); ++k) {
    const auto& orb = orbits[k];
    json xs = json::array();
    for (std::size_t i = 0; i < orb.points.size(); ++i) {
      xs.push_back(complex_json(orb.points[i]));
      const Complex next = orb.points[(i + 1) % orb.points.size()];
      rows.push_back({orb.points[i], std::abs(quad(orb.points[i], orb.c) - next), static_cast<int>(k), orb.sum, true});
    }
    json e = {{"points", xs}, {"sum", complex_json(orb.sum)}, {"degenerate", orb.degenerate},
              {"cycle_residual", cycle_residual(orb)}};
    if (period >= 3 && period <= 5) {
      double worst = 0.0;
      const MultiPoly pn = period_curve(period).poly;
      for (auto [u, v] : uv_images(orb)) worst = std::max(worst, std::abs(eval_uv(pn, u, v)));
      e["max_abs_P"] = worst;
    }
    list.push_back(e);
  }
  j["actual"] = {{"orbit_count", orbits.size()}, {"generic_count", bound}, {"orbits", list}};

  if (samples > 0) {
    std::mt19937_64 rng(seed);
    json sweep = json::array();
    for (int k = 0; k < samples; ++k) {
      const Complex cc = sample_disc(rng, 2.0);
      const auto os = orbit_oracle(cc, period);
      audit(os, cc, "sample " + std::to_string(k) + ": ");
      sweep.push_back({{"c", complex_text(cc)}, {"orbit_count", os.size()}});
    }
    j["sweep"] = sweep;
  }
  j["violations"] = violations;
  j["status"] = violations.empty() ? "pass" : "fail";
  o.emit(j);
  write_csv(o.csv_path(), rows);
  return violations.empty() ? kPass : kInvariant;
}

// groebner

MonomialOrder parse_order_kind(const std::string& kind) {
  if (kind == "lex") return MonomialOrder::lex();
  if (kind == "grlex") return MonomialOrder::grlex();
  if (kind == "grevlex") return MonomialOrder::grevlex();
  throw Error(ErrorKind::parse, "unknown order kind '" + kind + "'");
}

int cmd_groebner(const std::string& in, const std::string& order, bool homogenize, const Output& o) {
  auto colon = order.find(':');
  if (colon == std::string::npos) throw Error(ErrorKind::parse, "--order must look like lex:u,v,S3");
  const MonomialOrder ord = parse_order_kind(order.substr(0, colon));
  std::vector<std::string> names;
  std::istringstream vs(order.substr(colon + 1));
  for (std::string v; std::getline(vs, v, ',');)
    if (!v.empty()) names.push_back(v);
  const VarSet ring(names);

  std::ifstream f(in);
  if (!f) throw Error(ErrorKind::parse, "cannot read " + in);
  std::vector<MultiPoly> gens;
  for (std::string line; std::getline(f, line);) {
    if (auto h = line.find('#'); h != std::string::npos) line.erase(h);
    if (line.find_first_not_of(" \t\r") == std::string::npos) continue;
    MultiPoly g = parse_poly(line, ring);
    if (!g.is_zero()) gens.push_back(std::move(g));
  }
  if (gens.empty()) throw Error(ErrorKind::parse, in + " has no nonzero generators");

  GroebnerOptions opts = GroebnerOptions::from_environment();
  opts.homogenize = homogenize;
  VerificationReport r;
  r.name = "groebner";
  const IdealBasis ideal(ring, gens);
  r.inputs["ring"] = names;
  r.inputs["order"] = ord.describe();
  r.inputs["generators"] = texts(gens);
  auto gb = timed(r, "groebner", [&] { return buchberger(ideal, ord, opts); });
  json basis = json::array();
  for (const auto& g : gb.basis) basis.push_back(format(g, ord));
  r.actual["basis"] = basis;
  r.actual["stats"] = {{"pairs_formed", gb.stats.pairs_formed},     {"skipped_coprime", gb.stats.skipped_coprime},
                       {"skipped_chain", gb.stats.skipped_chain},   {"reductions", gb.stats.reductions},
                       {"zero_reductions", gb.stats.zero_reductions}, {"homogenized", gb.homogenized}};
  timed(r, "certificate", [&] {
    r.check("S-polynomial certificate", is_groebner_basis(gb.basis, ord));
    r.check("basis is reduced", is_reduced_basis(gb.basis, ord));
    r.check("generators reduce to zero", all_reduce_to_zero(gens, gb.basis, ord));
  });
  o.emit(r.to_json());
  return r.status() == Status::fail ? kInvariant : kPass;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"orbitsum: exact verification of orbit sums of x^2 + c"};
  app.require_subcommand(1);
  Output out;
  std::string golden = ORBITSUM_GOLDEN_DIR;
  if (const char* env = std::getenv("ORBITSUM_GOLDEN_DIR")) golden = env;

  auto add_common = [&](CLI::App* sub) {
    sub->add_option("--out", out.out, "write JSON here instead of stdout");
    sub->add_option("--csv", out.csv, "CSV sidecar path (default: --out with .csv)");
    sub->add_option("--golden", golden, "directory with golden data");
  };

  int period = 0;
  std::string elim = "u";
  auto* verify = app.add_subcommand("verify", "run the period-n elimination pipeline");
  verify->add_option("period", period, "3, 4 or 5")->required()->check(CLI::IsMember({3, 4, 5}));
  verify->add_option("--eliminate", elim, "variable to eliminate")->check(CLI::IsMember({"u", "v"}));
  add_common(verify);

  std::string s5;
  auto* roots = app.add_subcommand("roots", "roots of C(v, S5) at a fixed sum");
  roots->add_option("--s5", s5, "sum value, e.g. 0 or 0.5-1.2i")->required();
  add_common(roots);

  std::string c_text;
  int oracle_period = 0, samples = 0;
  std::uint64_t seed = kDefaultSeed;
  auto* oracle = app.add_subcommand("oracle", "brute-force orbit checks");
  auto* s5_opt = oracle->add_option("--s5", s5, "lift all orbits with this period-5 sum");
  auto* c_opt = oracle->add_option("--c", c_text, "enumerate the cycles of x^2 + c");
  s5_opt->excludes(c_opt);
  c_opt->excludes(s5_opt);
  oracle->add_option("--period", oracle_period, "cycle length")->required()->check(CLI::Range(1, 6));
  oracle->add_option("--samples", samples, "extra random samples")->check(CLI::NonNegativeNumber);
  oracle->add_option("--seed", seed, "sampling seed");
  add_common(oracle);

  std::string in, order;
  bool homogenize = false;
  auto* groebner = app.add_subcommand("groebner", "reduced Groebner basis of generators in a file");
  groebner->add_option("--in", in, "one polynomial per line")->required();
  groebner->add_option("--order", order, "e.g. lex:u,v,S3")->required();
  groebner->add_flag("--homogenize", homogenize, "run Buchberger on the homogenized ideal");
  add_common(groebner);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? kPass : kUsage;
  }

  std::string name = app.get_subcommands().front()->get_name();
  try {
    if (*verify) return cmd_verify(period, elim, golden, out);
    if (*roots) return cmd_roots(s5, golden, out);
    if (*oracle) {
      if (s5_opt->count() == 0 && c_opt->count() == 0) {
        std::cerr << "oracle: one of --s5 or --c is required\n";
        return kUsage;
      }
      return s5_opt->count() ? cmd_oracle_s5(s5, oracle_period, samples, seed, out)
                             : cmd_oracle_c(c_text, oracle_period, samples, seed, out);
    }
    if (*groebner) return cmd_groebner(in, order, homogenize, out);
  } catch (const Error& e) {
    std::cerr << "orbitsum " << name << ": " << e.what() << "\n";
    try {
      out.emit(error_doc(name, e));
    } catch (...) {
    }
    return exit_code(e.kind());
  } catch (const std::exception& e) {
    std::cerr << "orbitsum " << name << ": " << e.what() << "\n";
    return kInvariant;
  }
  return kUsage;
}
