#pragma once

// Working representation for the reduction engines: a term vector kept
// strictly decreasing under an arbitrary monomial order. Coeff is either
// ExactScalar (rational division) or BigInt (fraction-free reduction).

#include <algorithm>
#include <vector>

#include "orbitsum/order.hpp"
#include "orbitsum/poly.hpp"
#include "orbitsum/scalar.hpp"

namespace orbitsum::detail {

template <class Coeff>
struct STerm {
  Monomial mono;
  Coeff coeff;
};

template <class Coeff>
using SPoly = std::vector<STerm<Coeff>>;

inline SPoly<ExactScalar> to_sorted(const MultiPoly& f, const MonomialOrder& ord) {
  SPoly<ExactScalar> out;
  out.reserve(f.size());
  for (const auto& t : f.sorted_terms(ord)) out.push_back({t.mono, t.coeff});
  return out;
}

/// Integer polynomial proportional to f (denominators cleared, content kept).
inline SPoly<BigInt> to_sorted_int(const MultiPoly& f, const MonomialOrder& ord) {
  BigInt den = 1;
  for (const auto& t : f.terms()) mpz_lcm(den.get_mpz_t(), den.get_mpz_t(), t.coeff.get_den_mpz_t());
  SPoly<BigInt> out;
  out.reserve(f.size());
  for (const auto& t : f.sorted_terms(ord)) {
    BigInt c = t.coeff.get_num() * (den / t.coeff.get_den());
    out.push_back({t.mono, std::move(c)});
  }
  return out;
}

template <class Coeff>
MultiPoly from_sorted(const VarSet& ring, const SPoly<Coeff>& p) {
  std::vector<Term> terms;
  terms.reserve(p.size());
  for (const auto& t : p) terms.push_back({t.mono, ExactScalar(t.coeff)});
  return MultiPoly::from_terms(ring, std::move(terms));
}

/// Returns ca*a - cb*m*b. Inputs sorted under ord; so is the output.
template <class Coeff>
SPoly<Coeff> sub_scaled(const SPoly<Coeff>& a, const Coeff& ca, const SPoly<Coeff>& b, const Coeff& cb,
                        const Monomial& m, const MonomialOrder& ord, std::size_t skip_a = 0, std::size_t skip_b = 0) {
  SPoly<Coeff> r;
  r.reserve(a.size() + b.size());
  const bool scale_a = ca != 1;
  std::size_t i = skip_a, j = skip_b;
  Monomial mb;
  bool have_mb = false;
  while (i < a.size() || j < b.size()) {
    if (j < b.size() && !have_mb) {
      mb = b[j].mono * m;
      have_mb = true;
    }
    int c;
    if (j >= b.size()) {
      c = 1;
    } else if (i >= a.size()) {
      c = -1;
    } else {
      auto o = ord.compare(a[i].mono, mb);
      c = o > 0 ? 1 : (o < 0 ? -1 : 0);
    }
    if (c > 0) {
      r.push_back({a[i].mono, scale_a ? Coeff(a[i].coeff * ca) : a[i].coeff});
      ++i;
    } else if (c < 0) {
      r.push_back({mb, Coeff(-(b[j].coeff * cb))});
      ++j;
      have_mb = false;
    } else {
      Coeff v = scale_a ? Coeff(a[i].coeff * ca - b[j].coeff * cb) : Coeff(a[i].coeff - b[j].coeff * cb);
      if (v != 0) r.push_back({a[i].mono, std::move(v)});
      ++i;
      ++j;
      have_mb = false;
    }
  }
  return r;
}

/// Divides out the integer content; with normalize_sign the leading
/// coefficient also becomes positive.
inline void make_primitive(SPoly<BigInt>& p, bool normalize_sign = true) {
  if (p.empty()) return;
  std::size_t smallest = 0;
  for (std::size_t k = 1; k < p.size(); ++k) {
    if (mpz_size(p[k].coeff.get_mpz_t()) < mpz_size(p[smallest].coeff.get_mpz_t())) smallest = k;
  }
  BigInt g = abs(p[smallest].coeff);
  for (const auto& t : p) {
    if (g == 1) break;
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), t.coeff.get_mpz_t());
  }
  if (normalize_sign && p.front().coeff < 0) g = -g;
  if (g == 1) return;
  for (auto& t : p) mpz_divexact(t.coeff.get_mpz_t(), t.coeff.get_mpz_t(), g.get_mpz_t());
}

inline std::size_t bit_size(const SPoly<BigInt>& p) {
  std::size_t bits = 0;
  for (const auto& t : p) bits = std::max(bits, mpz_sizeinbase(t.coeff.get_mpz_t(), 2));
  return bits;
}

}  // namespace orbitsum::detail
