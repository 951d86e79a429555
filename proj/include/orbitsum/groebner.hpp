#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdlib>
#include <optional>
#include <string>
#include <vector>

#include "orbitsum/division.hpp"
#include "orbitsum/error.hpp"
#include "orbitsum/poly.hpp"
#include "orbitsum/sorted_poly.hpp"

namespace orbitsum {

/// Generators of an ideal; all share one ring and none is zero.
struct IdealBasis {
  VarSet ring;
  std::vector<MultiPoly> generators;

  IdealBasis(VarSet r, std::vector<MultiPoly> gens) : ring(std::move(r)), generators(std::move(gens)) {
    if (generators.empty()) throw Error(ErrorKind::dimension, "ideal basis needs at least one generator");
    for (const auto& g : generators) {
      if (!(g.ring() == ring)) throw Error(ErrorKind::dimension, "generator outside the ideal's ring");
      if (g.is_zero()) throw Error(ErrorKind::zero_divisor, "zero generator");
    }
  }
};

struct PairStats {
  std::size_t pairs_formed = 0;
  std::size_t skipped_coprime = 0;  // Buchberger's first criterion
  std::size_t skipped_chain = 0;    // chain criterion (Gebauer-Moeller)
  std::size_t reductions = 0;       // S-polynomials reduced
  std::size_t zero_reductions = 0;
  std::size_t reduction_steps = 0;  // individual top/tail reduction steps

  std::size_t skipped() const noexcept { return skipped_coprime + skipped_chain; }
};

struct GroebnerOptions {
  std::size_t max_pair_reductions = 200000;
  /// Run on the homogenized ideal (extra smallest variable, pairs taken
  /// degree by degree) and dehomogenize at the end. Only meaningful for lex
  /// and block orders; ignored for graded orders and homogeneous input.
  bool homogenize = false;

  /// Defaults, overridden by ORBITSUM_PAIR_BUDGET when set.
  static GroebnerOptions from_environment() {
    GroebnerOptions o;
    if (const char* env = std::getenv("ORBITSUM_PAIR_BUDGET")) {
      char* end = nullptr;
      unsigned long long v = std::strtoull(env, &end, 10);
      if (end == env || *end != '\0' || v == 0) {
        throw Error(ErrorKind::parse, "ORBITSUM_PAIR_BUDGET must be a positive integer");
      }
      o.max_pair_reductions = static_cast<std::size_t>(v);
    }
    return o;
  }
};

/// Reduced Groebner basis in canonical primitive form (integer coefficients
/// with gcd 1, positive leading coefficient), sorted by increasing leading
/// monomial.
struct GroebnerResult {
  VarSet ring;
  MonomialOrder order;
  std::vector<MultiPoly> basis;
  PairStats stats;
  bool homogenized = false;
};

namespace detail {

using IntPoly = SPoly<BigInt>;

/// Index of the preferred reducer for the term t: the one needing the
/// smallest multiplier on the reduced polynomial, then the shortest.
inline std::optional<std::size_t> find_reducer(const STerm<BigInt>& t, const std::vector<IntPoly>& polys,
                                               const std::vector<bool>& usable) {
  std::optional<std::size_t> best;
  std::size_t best_cost = 0;
  BigInt g;
  for (std::size_t i = 0; i < polys.size(); ++i) {
    if (!usable[i] || !polys[i].front().mono.divides(t.mono)) continue;
    const BigInt& lc = polys[i].front().coeff;
    std::size_t cost = 0;
    if (mpz_divisible_p(t.coeff.get_mpz_t(), lc.get_mpz_t()) == 0) {
      mpz_gcd(g.get_mpz_t(), t.coeff.get_mpz_t(), lc.get_mpz_t());
      cost = mpz_sizeinbase(lc.get_mpz_t(), 2) - mpz_sizeinbase(g.get_mpz_t(), 2) + 1;
    }
    if (!best || cost < best_cost || (cost == best_cost && polys[i].size() < polys[*best].size())) {
      best = i;
      best_cost = cost;
    }
  }
  return best;
}

/// Fraction-free reduction of p by polys. With full == false only the
/// leading term is reduced. The result is primitive up to sign.
inline IntPoly reduce_int(IntPoly p, const std::vector<IntPoly>& polys, const std::vector<bool>& usable,
                          const MonomialOrder& ord, bool full, PairStats* stats) {
  IntPoly buf;
  BigInt common, ca, cb;
  std::size_t i = 0;
  auto limb_size = [&](std::size_t k) { return k < p.size() ? mpz_size(p[k].coeff.get_mpz_t()) : 0; };
  std::size_t content_limit = 2 * std::max<std::size_t>(limb_size(0), 4);
  while (i < p.size()) {
    auto r = find_reducer(p[i], polys, usable);
    if (!r) {
      if (!full) break;
      ++i;
      continue;
    }
    const IntPoly& g = polys[*r];
    mpz_gcd(common.get_mpz_t(), p[i].coeff.get_mpz_t(), g.front().coeff.get_mpz_t());
    mpz_divexact(ca.get_mpz_t(), g.front().coeff.get_mpz_t(), common.get_mpz_t());
    mpz_divexact(cb.get_mpz_t(), p[i].coeff.get_mpz_t(), common.get_mpz_t());
    if (ca < 0) {
      ca = -ca;
      cb = -cb;
    }
    const bool scale = ca != 1;
    const Monomial m = p[i].mono / g.front().mono;

    // buf = ca*p - cb*m*g with the cancelled leading term left out.
    std::size_t n = 0;
    auto slot = [&]() -> STerm<BigInt>& {
      if (n == buf.size()) buf.emplace_back();
      return buf[n++];
    };
    auto put_p = [&](std::size_t k) {
      auto& s = slot();
      s.mono = p[k].mono;
      if (scale) {
        mpz_mul(s.coeff.get_mpz_t(), p[k].coeff.get_mpz_t(), ca.get_mpz_t());
      } else {
        mpz_swap(s.coeff.get_mpz_t(), p[k].coeff.get_mpz_t());
      }
    };
    for (std::size_t k = 0; k < i; ++k) put_p(k);
    std::size_t a = i + 1, b = 1;
    Monomial mb;
    if (b < g.size()) mb = g[b].mono * m;
    while (a < p.size() || b < g.size()) {
      int c;
      if (b >= g.size()) {
        c = 1;
      } else if (a >= p.size()) {
        c = -1;
      } else {
        auto o = ord.compare(p[a].mono, mb);
        c = o > 0 ? 1 : (o < 0 ? -1 : 0);
      }
      if (c > 0) {
        put_p(a++);
        continue;
      }
      if (c < 0) {
        auto& s = slot();
        s.mono = mb;
        mpz_mul(s.coeff.get_mpz_t(), g[b].coeff.get_mpz_t(), cb.get_mpz_t());
        mpz_neg(s.coeff.get_mpz_t(), s.coeff.get_mpz_t());
      } else {
        auto& s = slot();
        s.mono = mb;
        if (scale) {
          mpz_mul(s.coeff.get_mpz_t(), p[a].coeff.get_mpz_t(), ca.get_mpz_t());
        } else {
          mpz_swap(s.coeff.get_mpz_t(), p[a].coeff.get_mpz_t());
        }
        mpz_submul(s.coeff.get_mpz_t(), g[b].coeff.get_mpz_t(), cb.get_mpz_t());
        if (mpz_sgn(s.coeff.get_mpz_t()) == 0) --n;
        ++a;
      }
      if (++b < g.size()) mb = g[b].mono * m;
    }
    buf.resize(n);
    std::swap(p, buf);
    if (stats) ++stats->reduction_steps;

    if (limb_size(i) > content_limit) {
      make_primitive(p, false);
      content_limit = 2 * std::max<std::size_t>(limb_size(i), 4);
    }
  }
  make_primitive(p, false);
  return p;
}

inline unsigned max_degree(const IntPoly& p) {
  unsigned d = 0;
  for (const auto& t : p) d = std::max(d, t.mono.total_degree());
  return d;
}

inline bool is_homogeneous(const IntPoly& p) {
  for (const auto& t : p) {
    if (t.mono.total_degree() != p.front().mono.total_degree()) return false;
  }
  return true;
}

/// Order on the ring extended by one trailing variable h that compares the
/// original variables first under ord, then h.
inline MonomialOrder extend_order(const MonomialOrder& ord, std::size_t nvars) {
  if (ord.kind() == OrderKind::lex) return MonomialOrder::lex();
  auto blocks = ord.kind() == OrderKind::block ? ord.blocks()
                                               : std::vector<MonomialOrder::Block>{{nvars, ord.kind()}};
  blocks.push_back({1, OrderKind::lex});
  return MonomialOrder::block(std::move(blocks));
}

inline VarSet extend_ring(const VarSet& ring) {
  std::string h = "_h";
  while (ring.find(h)) h += '_';
  auto names = ring.names();
  names.push_back(h);
  return VarSet(std::move(names));
}

inline IntPoly homogenize(const IntPoly& p, const MonomialOrder& ext) {
  const unsigned d = max_degree(p);
  IntPoly out;
  out.reserve(p.size());
  for (const auto& t : p) {
    Monomial m(t.mono.size() + 1);
    for (std::size_t k = 0; k < t.mono.size(); ++k) m.set(k, t.mono[k]);
    m.set(t.mono.size(), d - t.mono.total_degree());
    out.push_back({m, t.coeff});
  }
  std::sort(out.begin(), out.end(), [&](const auto& x, const auto& y) { return ext.greater(x.mono, y.mono); });
  return out;
}

inline IntPoly dehomogenize(const IntPoly& p, const MonomialOrder& ord) {
  IntPoly out;
  out.reserve(p.size());
  for (const auto& t : p) {
    Monomial m(t.mono.size() - 1);
    for (std::size_t k = 0; k + 1 < t.mono.size(); ++k) m.set(k, t.mono[k]);
    out.push_back({m, t.coeff});
  }
  std::sort(out.begin(), out.end(), [&](const auto& x, const auto& y) { return ord.greater(x.mono, y.mono); });
  return out;
}

/// Drops elements whose leading monomial is a multiple of another's, then
/// reduces every tail. Output sorted by increasing leading monomial.
inline std::vector<IntPoly> reduce_basis(std::vector<IntPoly> polys, const MonomialOrder& ord, PairStats* stats) {
  std::vector<IntPoly> minimal;
  for (std::size_t g = 0; g < polys.size(); ++g) {
    bool redundant = false;
    for (std::size_t h = 0; h < polys.size() && !redundant; ++h) {
      if (h == g) continue;
      const Monomial& lg = polys[g].front().mono;
      const Monomial& lh = polys[h].front().mono;
      if (lh.divides(lg) && (!(lh == lg) || h < g)) redundant = true;
    }
    if (!redundant) minimal.push_back(polys[g]);
  }
  std::sort(minimal.begin(), minimal.end(),
            [&](const IntPoly& a, const IntPoly& b) { return ord.less(a.front().mono, b.front().mono); });
  // Smallest first: each element is reduced by already-reduced smaller ones.
  std::vector<IntPoly> reduced;
  for (auto& p : minimal) {
    std::vector<bool> usable(reduced.size(), true);
    p = reduce_int(std::move(p), reduced, usable, ord, true, stats);
    make_primitive(p);
    reduced.push_back(std::move(p));
  }
  return reduced;
}

}  // namespace detail

/// S(f, g) = (L / LT(f)) f - (L / LT(g)) g with L the lcm of the leading monomials.
inline MultiPoly s_polynomial(const MultiPoly& f, const MultiPoly& g, const MonomialOrder& ord) {
  MultiPoly::check_ring(f, g);
  if (f.is_zero() || g.is_zero()) throw Error(ErrorKind::undefined_leading_term, "S-polynomial of zero");
  auto lf = leading_term(f, ord), lg = leading_term(g, ord);
  Monomial l = lcm(lf.mono, lg.mono);
  return f.mul_term(l / lf.mono, 1 / lf.coeff) - g.mul_term(l / lg.mono, 1 / lg.coeff);
}

/// Fully reduced remainder of f modulo polys (which need not be a basis).
inline MultiPoly normal_form(const MultiPoly& f, const std::vector<MultiPoly>& polys, const MonomialOrder& ord) {
  return reduce(f, polys, ord);
}

namespace detail {

struct CriticalPair {
  std::size_t i, j;
  Monomial lcm;
};

/// Buchberger's algorithm on integer polynomials. Pairs are taken by
/// smallest lcm under the order; with by_degree the lcm's total degree is
/// compared first.
class Buchberger {
 public:
  Buchberger(std::vector<IntPoly> gens, const MonomialOrder& ord, std::size_t budget, bool by_degree)
      : ord_(ord), budget_(budget), by_degree_(by_degree) {
    for (auto& p : gens) {
      make_primitive(p);
      add_generator(std::move(p));
    }
  }

  std::vector<IntPoly> run() {
    while (!pairs_.empty()) {
      CriticalPair pair = select_pair();
      if (stats_.reductions >= budget_) {
        throw Error(ErrorKind::budget_exceeded,
                    "pair reduction budget of " + std::to_string(budget_) + " exhausted");
      }
      ++stats_.reductions;
      IntPoly s = spoly(polys_[pair.i], polys_[pair.j], pair.lcm);
      std::vector<bool> all(polys_.size(), true);
      s = reduce_int(std::move(s), polys_, all, ord_, false, &stats_);
      if (s.empty()) {
        ++stats_.zero_reductions;
        continue;
      }
      s = reduce_int(std::move(s), polys_, all, ord_, true, &stats_);
      make_primitive(s);
      add_generator(std::move(s));
    }
    std::vector<IntPoly> out;
    for (std::size_t g = 0; g < polys_.size(); ++g) {
      if (in_basis_[g]) out.push_back(std::move(polys_[g]));
    }
    return out;
  }

  const PairStats& stats() const noexcept { return stats_; }

 private:
  IntPoly spoly(const IntPoly& f, const IntPoly& g, const Monomial& l) const {
    BigInt common;
    mpz_gcd(common.get_mpz_t(), f.front().coeff.get_mpz_t(), g.front().coeff.get_mpz_t());
    BigInt cf = g.front().coeff / common, cg = f.front().coeff / common;
    IntPoly shifted;
    shifted.reserve(f.size());
    const Monomial mf = l / f.front().mono;
    for (const auto& t : f) shifted.push_back({t.mono * mf, t.coeff});
    IntPoly s = sub_scaled(shifted, cf, g, cg, l / g.front().mono, ord_);
    make_primitive(s, false);
    return s;
  }

  void add_generator(IntPoly h) {
    const std::size_t hi = polys_.size();
    const Monomial lh = h.front().mono;
    polys_.push_back(std::move(h));
    in_basis_.push_back(true);

    // Gebauer-Moeller update.
    std::vector<CriticalPair> fresh;
    for (std::size_t g = 0; g < hi; ++g) {
      if (in_basis_[g]) fresh.push_back({g, hi, lcm(polys_[g].front().mono, lh)});
    }
    stats_.pairs_formed += fresh.size();

    std::vector<bool> keep(fresh.size(), true);
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      const Monomial& la = polys_[fresh[a].i].front().mono;
      if (la.coprime(lh)) continue;
      for (std::size_t b = 0; b < fresh.size(); ++b) {
        if (a == b || !keep[b]) continue;
        const bool b_coprime = polys_[fresh[b].i].front().mono.coprime(lh);
        const bool equal = fresh[b].lcm == fresh[a].lcm;
        if (fresh[b].lcm.divides(fresh[a].lcm) && (!equal || b_coprime || b < a)) {
          keep[a] = false;
          ++stats_.skipped_chain;
          break;
        }
      }
    }
    std::vector<CriticalPair> kept_fresh;
    for (std::size_t a = 0; a < fresh.size(); ++a) {
      if (!keep[a]) continue;
      if (polys_[fresh[a].i].front().mono.coprime(lh)) {
        ++stats_.skipped_coprime;
        continue;
      }
      kept_fresh.push_back(fresh[a]);
    }

    std::vector<CriticalPair> old;
    old.reserve(pairs_.size());
    for (auto& p : pairs_) {
      bool drop = lh.divides(p.lcm) && !(lcm(polys_[p.i].front().mono, lh) == p.lcm) &&
                  !(lcm(polys_[p.j].front().mono, lh) == p.lcm);
      if (drop) {
        ++stats_.skipped_chain;
      } else {
        old.push_back(p);
      }
    }
    pairs_ = std::move(old);
    pairs_.insert(pairs_.end(), kept_fresh.begin(), kept_fresh.end());

    for (std::size_t g = 0; g < hi; ++g) {
      if (in_basis_[g] && lh.divides(polys_[g].front().mono)) in_basis_[g] = false;
    }
  }

  bool before(const CriticalPair& a, const CriticalPair& b) const {
    if (by_degree_ && a.lcm.total_degree() != b.lcm.total_degree()) {
      return a.lcm.total_degree() < b.lcm.total_degree();
    }
    auto c = ord_.compare(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    return std::pair(a.j, a.i) < std::pair(b.j, b.i);
  }

  CriticalPair select_pair() {
    std::size_t best = 0;
    for (std::size_t k = 1; k < pairs_.size(); ++k) {
      if (before(pairs_[k], pairs_[best])) best = k;
    }
    CriticalPair p = pairs_[best];
    pairs_.erase(pairs_.begin() + static_cast<std::ptrdiff_t>(best));
    return p;
  }

  MonomialOrder ord_;
  std::size_t budget_;
  bool by_degree_;
  std::vector<IntPoly> polys_;
  std::vector<bool> in_basis_;
  std::vector<CriticalPair> pairs_;
  PairStats stats_;
};

}  // namespace detail

/// Reduced Groebner basis of the ideal under ord. Throws budget_exceeded when
/// more than opts.max_pair_reductions S-polynomials would be reduced.
inline GroebnerResult buchberger(const IdealBasis& ideal, const MonomialOrder& ord,
                                 const GroebnerOptions& opts = {}) {
  using namespace detail;
  std::vector<IntPoly> gens;
  for (const auto& g : ideal.generators) gens.push_back(to_sorted_int(g, ord));
  ord.compare(gens.front().front().mono, gens.front().front().mono);  // validates the order's width

  const bool graded = ord.kind() == OrderKind::grlex || ord.kind() == OrderKind::grevlex;
  const bool homogeneous = std::all_of(gens.begin(), gens.end(), is_homogeneous);
  const bool lift = opts.homogenize && !graded && !homogeneous;
  if (lift && ideal.ring.size() >= kMaxVariables) {
    throw Error(ErrorKind::dimension, "no room for the homogenizing variable");
  }

  GroebnerResult out{ideal.ring, ord, {}, {}, lift};
  std::vector<IntPoly> polys;
  if (lift) {
    const MonomialOrder ext = extend_order(ord, ideal.ring.size());
    for (auto& g : gens) g = homogenize(g, ext);
    Buchberger engine(std::move(gens), ext, opts.max_pair_reductions, true);
    for (auto& p : engine.run()) polys.push_back(dehomogenize(p, ord));
    out.stats = engine.stats();
  } else {
    Buchberger engine(std::move(gens), ord, opts.max_pair_reductions, opts.homogenize);
    polys = engine.run();
    out.stats = engine.stats();
  }
  for (const auto& p : reduce_basis(std::move(polys), ord, &out.stats)) out.basis.push_back(from_sorted(out.ring, p));
  return out;
}

/// True when every polynomial in polys reduces to zero modulo basis.
inline bool all_reduce_to_zero(const std::vector<MultiPoly>& polys, const std::vector<MultiPoly>& basis,
                               const MonomialOrder& ord) {
  std::vector<detail::IntPoly> gb;
  for (const auto& g : basis) {
    if (g.is_zero()) throw Error(ErrorKind::zero_divisor, "zero polynomial in basis");
    gb.push_back(detail::to_sorted_int(g, ord));
  }
  std::vector<bool> usable(gb.size(), true);
  for (const auto& f : polys) {
    if (f.is_zero()) continue;
    auto r = detail::reduce_int(detail::to_sorted_int(f, ord), gb, usable, ord, true, nullptr);
    if (!r.empty()) return false;
  }
  return true;
}

/// Buchberger certificate: every pairwise S-polynomial reduces to zero.
/// Pairs with coprime leading monomials are checked too.
inline bool is_groebner_basis(const std::vector<MultiPoly>& basis, const MonomialOrder& ord) {
  std::vector<detail::IntPoly> gb;
  for (const auto& g : basis) {
    if (g.is_zero()) throw Error(ErrorKind::zero_divisor, "zero polynomial in basis");
    gb.push_back(detail::to_sorted_int(g, ord));
  }
  std::vector<bool> usable(gb.size(), true);
  for (std::size_t i = 0; i < gb.size(); ++i) {
    for (std::size_t j = i + 1; j < gb.size(); ++j) {
      const Monomial l = lcm(gb[i].front().mono, gb[j].front().mono);
      BigInt common;
      mpz_gcd(common.get_mpz_t(), gb[i].front().coeff.get_mpz_t(), gb[j].front().coeff.get_mpz_t());
      BigInt ci = gb[j].front().coeff / common, cj = gb[i].front().coeff / common;
      detail::IntPoly shifted;
      const Monomial mi = l / gb[i].front().mono;
      for (const auto& t : gb[i]) shifted.push_back({t.mono * mi, t.coeff});
      auto s = detail::sub_scaled(shifted, ci, gb[j], cj, l / gb[j].front().mono, ord);
      if (s.empty()) continue;
      if (!detail::reduce_int(std::move(s), gb, usable, ord, false, nullptr).empty()) return false;
    }
  }
  return true;
}

/// No term of any element is divisible by another element's leading
/// monomial, and every element is in canonical primitive form.
inline bool is_reduced_basis(const std::vector<MultiPoly>& basis, const MonomialOrder& ord) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (basis[i].is_zero() || !(primitive_part(basis[i], ord) == basis[i])) return false;
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (i == j) continue;
      Monomial lj = leading_monomial(basis[j], ord);
      for (const auto& t : basis[i].terms()) {
        if (lj.divides(t.mono)) return false;
      }
    }
  }
  return true;
}

/// Elements of a Groebner basis that only involve keep_vars. The dropped
/// variables must form a prefix of the ring that the order eliminates.
inline std::vector<MultiPoly> eliminate(const GroebnerResult& gb, const std::vector<std::string>& keep_vars) {
  const VarSet& ring = gb.ring;
  std::vector<bool> keep(ring.size(), false);
  for (const auto& v : keep_vars) keep[ring.index_of(v)] = true;
  std::size_t dropped = 0;
  while (dropped < ring.size() && !keep[dropped]) ++dropped;
  for (std::size_t i = dropped; i < ring.size(); ++i) {
    if (!keep[i]) {
      throw Error(ErrorKind::order, "kept variables must be a suffix of the ring's variable chain");
    }
  }
  if (!gb.order.eliminates_prefix(dropped)) {
    throw Error(ErrorKind::order, gb.order.describe() + " does not eliminate the first " + std::to_string(dropped) +
                                      " variables");
  }
  std::vector<MultiPoly> out;
  for (const auto& g : gb.basis) {
    auto used = support(g);
    bool inside = true;
    for (std::size_t i = 0; i < dropped; ++i) inside = inside && !used[i];
    if (inside) out.push_back(g);
  }
  return out;
}

}  // namespace orbitsum
