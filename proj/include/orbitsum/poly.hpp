#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <limits>
#include <map>
#include <span>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "orbitsum/error.hpp"
#include "orbitsum/monomial.hpp"
#include "orbitsum/order.hpp"
#include "orbitsum/scalar.hpp"

namespace orbitsum {

struct Term {
  Monomial mono;
  ExactScalar coeff;
};

/// Sparse polynomial over Q. Terms are kept strictly decreasing under lex in
/// ring index order with no zero coefficients; the zero polynomial has no
/// terms. Other orders are applied on demand through sorted_terms().
class MultiPoly {
 public:
  explicit MultiPoly(VarSet ring) : ring_(std::move(ring)) {}

  static MultiPoly constant(VarSet ring, const ExactScalar& c) {
    MultiPoly p(std::move(ring));
    if (c != 0) p.terms_.push_back({Monomial(p.ring_.size()), c});
    return p;
  }

  static MultiPoly variable(VarSet ring, std::string_view name, unsigned power = 1) {
    MultiPoly p(std::move(ring));
    Monomial m(p.ring_.size());
    m.set(p.ring_.index_of(name), power);
    p.terms_.push_back({m, ExactScalar(1)});
    return p;
  }

  static MultiPoly monomial(VarSet ring, const Monomial& m, const ExactScalar& c) {
    if (m.size() != ring.size()) throw Error(ErrorKind::dimension, "monomial does not match the ring");
    MultiPoly p(std::move(ring));
    if (c != 0) p.terms_.push_back({m, c});
    return p;
  }

  /// Combines duplicate monomials, drops zeros and sorts.
  static MultiPoly from_terms(VarSet ring, std::vector<Term> terms) {
    MultiPoly p(std::move(ring));
    for (const auto& t : terms) {
      if (t.mono.size() != p.ring_.size()) throw Error(ErrorKind::dimension, "term does not match the ring");
    }
    std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) { return lex_greater(a.mono, b.mono); });
    for (auto& t : terms) {
      if (!p.terms_.empty() && p.terms_.back().mono == t.mono) {
        p.terms_.back().coeff += t.coeff;
        if (p.terms_.back().coeff == 0) p.terms_.pop_back();
      } else if (t.coeff != 0) {
        p.terms_.push_back(std::move(t));
      }
    }
    return p;
  }

  const VarSet& ring() const noexcept { return ring_; }
  const std::vector<Term>& terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_unit()); }

  ExactScalar coefficient(const Monomial& m) const {
    auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                               [](const Term& t, const Monomial& key) { return lex_greater(t.mono, key); });
    if (it != terms_.end() && it->mono == m) return it->coeff;
    return 0;
  }

  std::vector<Term> sorted_terms(const MonomialOrder& ord) const {
    std::vector<Term> out = terms_;
    if (ord.kind() != OrderKind::lex) {
      std::sort(out.begin(), out.end(), [&](const Term& a, const Term& b) { return ord.greater(a.mono, b.mono); });
    }
    return out;
  }

  MultiPoly operator-() const {
    MultiPoly r = *this;
    for (auto& t : r.terms_) t.coeff = -t.coeff;
    return r;
  }

  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) { return combine(a, b, false); }
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return combine(a, b, true); }

  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    check_ring(a, b);
    if (a.is_zero() || b.is_zero()) return MultiPoly(a.ring_);
    const MultiPoly& small = a.size() <= b.size() ? a : b;
    const MultiPoly& large = a.size() <= b.size() ? b : a;
    if (small.size() == 1) return large.mul_term(small.terms_[0].mono, small.terms_[0].coeff);
    std::unordered_map<Monomial, ExactScalar, MonomialHash> acc;
    acc.reserve(a.size() * b.size());
    for (const auto& s : small.terms_) {
      for (const auto& l : large.terms_) acc[s.mono * l.mono] += s.coeff * l.coeff;
    }
    std::vector<Term> terms;
    terms.reserve(acc.size());
    for (auto& [m, c] : acc) {
      if (c != 0) terms.push_back({m, std::move(c)});
    }
    std::sort(terms.begin(), terms.end(), [](const Term& x, const Term& y) { return lex_greater(x.mono, y.mono); });
    MultiPoly r(a.ring_);
    r.terms_ = std::move(terms);
    return r;
  }

  friend MultiPoly operator*(const MultiPoly& a, const ExactScalar& c) {
    if (c == 0) return MultiPoly(a.ring_);
    MultiPoly r = a;
    for (auto& t : r.terms_) t.coeff *= c;
    return r;
  }
  friend MultiPoly operator*(const ExactScalar& c, const MultiPoly& a) { return a * c; }

  MultiPoly& operator+=(const MultiPoly& b) { return *this = *this + b; }
  MultiPoly& operator-=(const MultiPoly& b) { return *this = *this - b; }
  MultiPoly& operator*=(const MultiPoly& b) { return *this = *this * b; }
  MultiPoly& operator*=(const ExactScalar& c) { return *this = *this * c; }

  /// c * m * this; order is preserved because orders are multiplicative.
  MultiPoly mul_term(const Monomial& m, const ExactScalar& c) const {
    MultiPoly r(ring_);
    if (c == 0) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) r.terms_.push_back({t.mono * m, t.coeff * c});
    return r;
  }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    if (!(a.ring_ == b.ring_) || a.terms_.size() != b.terms_.size()) return false;
    for (std::size_t i = 0; i < a.terms_.size(); ++i) {
      if (!(a.terms_[i].mono == b.terms_[i].mono) || a.terms_[i].coeff != b.terms_[i].coeff) return false;
    }
    return true;
  }

  static bool lex_greater(const Monomial& a, const Monomial& b) noexcept {
    for (std::size_t i = 0; i < a.size(); ++i) {
      if (a[i] != b[i]) return a[i] > b[i];
    }
    return false;
  }

  static void check_ring(const MultiPoly& a, const MultiPoly& b) {
    if (!(a.ring_ == b.ring_)) throw Error(ErrorKind::dimension, "polynomials live in different rings");
  }

 private:
  static MultiPoly combine(const MultiPoly& a, const MultiPoly& b, bool subtract) {
    check_ring(a, b);
    MultiPoly r(a.ring_);
    r.terms_.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.terms_.size() || j < b.terms_.size()) {
      if (j == b.terms_.size() || (i < a.terms_.size() && lex_greater(a.terms_[i].mono, b.terms_[j].mono))) {
        r.terms_.push_back(a.terms_[i++]);
      } else if (i == a.terms_.size() || lex_greater(b.terms_[j].mono, a.terms_[i].mono)) {
        r.terms_.push_back({b.terms_[j].mono, subtract ? ExactScalar(-b.terms_[j].coeff) : b.terms_[j].coeff});
        ++j;
      } else {
        ExactScalar c = subtract ? ExactScalar(a.terms_[i].coeff - b.terms_[j].coeff)
                                 : ExactScalar(a.terms_[i].coeff + b.terms_[j].coeff);
        if (c != 0) r.terms_.push_back({a.terms_[i].mono, std::move(c)});
        ++i;
        ++j;
      }
    }
    return r;
  }

  VarSet ring_;
  std::vector<Term> terms_;
};

inline MultiPoly pow(const MultiPoly& f, unsigned e) {
  MultiPoly result = MultiPoly::constant(f.ring(), 1);
  MultiPoly base = f;
  while (e) {
    if (e & 1u) result *= base;
    e >>= 1u;
    if (e) base *= base;
  }
  return result;
}

struct LeadingTerm {
  Monomial mono;
  ExactScalar coeff;
};

inline LeadingTerm leading_term(const MultiPoly& f, const MonomialOrder& ord) {
  if (f.is_zero()) throw Error(ErrorKind::undefined_leading_term, "zero polynomial has no leading term");
  const Term* best = &f.terms().front();
  if (ord.kind() != OrderKind::lex) {
    for (const auto& t : f.terms()) {
      if (ord.greater(t.mono, best->mono)) best = &t;
    }
  }
  return {best->mono, best->coeff};
}

inline Monomial leading_monomial(const MultiPoly& f, const MonomialOrder& ord) { return leading_term(f, ord).mono; }
inline ExactScalar leading_coeff(const MultiPoly& f, const MonomialOrder& ord) { return leading_term(f, ord).coeff; }

inline std::vector<unsigned> multidegree(const MultiPoly& f, const MonomialOrder& ord) {
  auto m = leading_monomial(f, ord);
  std::vector<unsigned> out(m.size());
  for (std::size_t i = 0; i < m.size(); ++i) out[i] = m[i];
  return out;
}

/// Degree of the zero polynomial in any variable.
inline constexpr int kNegInfDegree = std::numeric_limits<int>::min();

inline int degree_in(const MultiPoly& f, std::size_t var) {
  if (var >= f.ring().size()) throw Error(ErrorKind::unknown_variable, "variable index out of range");
  int d = kNegInfDegree;
  for (const auto& t : f.terms()) d = std::max(d, static_cast<int>(t.mono[var]));
  return d;
}

inline int degree_in(const MultiPoly& f, std::string_view var) { return degree_in(f, f.ring().index_of(var)); }

inline int total_degree(const MultiPoly& f) {
  int d = kNegInfDegree;
  for (const auto& t : f.terms()) d = std::max(d, static_cast<int>(t.mono.total_degree()));
  return d;
}

/// Coefficient of var^k, as a polynomial in the same ring that is free of var.
inline MultiPoly coefficient_of_power(const MultiPoly& f, std::size_t var, unsigned k) {
  std::vector<Term> out;
  for (const auto& t : f.terms()) {
    if (t.mono[var] == k) {
      Monomial m = t.mono;
      m.set(var, 0);
      out.push_back({m, t.coeff});
    }
  }
  return MultiPoly::from_terms(f.ring(), std::move(out));
}

inline MultiPoly coefficient_of_power(const MultiPoly& f, std::string_view var, unsigned k) {
  return coefficient_of_power(f, f.ring().index_of(var), k);
}

/// Indicator of the variables that occur in f.
inline std::vector<bool> support(const MultiPoly& f) {
  std::vector<bool> used(f.ring().size(), false);
  for (const auto& t : f.terms()) {
    for (std::size_t i = 0; i < used.size(); ++i) {
      if (t.mono[i]) used[i] = true;
    }
  }
  return used;
}

inline bool depends_on(const MultiPoly& f, std::string_view var) { return support(f)[f.ring().index_of(var)]; }

struct ContentPrimitive {
  ExactScalar content;
  MultiPoly primitive;
};

/// Splits f = content * primitive where primitive has coprime integer
/// coefficients and a positive leading coefficient under ord.
inline ContentPrimitive content_primitive(const MultiPoly& f, const MonomialOrder& ord = MonomialOrder::lex()) {
  if (f.is_zero()) throw Error(ErrorKind::undefined_leading_term, "content of the zero polynomial");
  BigInt num_gcd = 0, den_lcm = 1;
  for (const auto& t : f.terms()) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den_mpz_t());
  }
  ExactScalar content(num_gcd, den_lcm);
  content.canonicalize();
  if (leading_coeff(f, ord) < 0) content = -content;
  ExactScalar inv = 1 / content;
  return {content, f * inv};
}

inline MultiPoly primitive_part(const MultiPoly& f, const MonomialOrder& ord = MonomialOrder::lex()) {
  if (f.is_zero()) return f;
  return content_primitive(f, ord).primitive;
}

/// True when f = c * g for a nonzero rational c.
inline bool equal_up_to_scalar(const MultiPoly& f, const MultiPoly& g) {
  if (f.is_zero() || g.is_zero()) return f.is_zero() && g.is_zero();
  return primitive_part(f) == primitive_part(g);
}

/// Re-expresses f in another ring by variable name. Every variable that f
/// actually uses must exist in the target.
inline MultiPoly change_ring(const MultiPoly& f, const VarSet& target) {
  std::vector<std::size_t> map(f.ring().size(), target.size());
  auto used = support(f);
  for (std::size_t i = 0; i < f.ring().size(); ++i) {
    if (auto j = target.find(f.ring().name(i))) {
      map[i] = *j;
    } else if (used[i]) {
      throw Error(ErrorKind::unknown_variable, "'" + f.ring().name(i) + "' is missing from the target ring");
    }
  }
  std::vector<Term> out;
  out.reserve(f.size());
  for (const auto& t : f.terms()) {
    Monomial m(target.size());
    for (std::size_t i = 0; i < f.ring().size(); ++i) {
      if (t.mono[i]) m.set(map[i], t.mono[i]);
    }
    out.push_back({m, t.coeff});
  }
  return MultiPoly::from_terms(target, std::move(out));
}

/// Substitution map: each bound variable is replaced by a polynomial in the
/// same ring (constants included).
using Bindings = std::map<std::string, MultiPoly, std::less<>>;

inline MultiPoly substitute(const MultiPoly& f, const Bindings& bindings) {
  if (bindings.empty()) return f;
  const auto& ring = f.ring();
  std::vector<const MultiPoly*> value(ring.size(), nullptr);
  for (const auto& [name, p] : bindings) {
    std::size_t i = ring.index_of(name);
    if (!(p.ring() == ring)) throw Error(ErrorKind::dimension, "binding for " + name + " lives in another ring");
    value[i] = &p;
  }
  std::vector<std::vector<MultiPoly>> powers(ring.size());
  auto power_of = [&](std::size_t var, unsigned e) -> const MultiPoly& {
    auto& cache = powers[var];
    if (cache.empty()) cache.push_back(MultiPoly::constant(ring, 1));
    while (cache.size() <= e) cache.push_back(cache.back() * *value[var]);
    return cache[e];
  };
  MultiPoly result(ring);
  std::vector<Term> plain;
  for (const auto& t : f.terms()) {
    Monomial rest = t.mono;
    bool bound = false;
    for (std::size_t i = 0; i < ring.size(); ++i) {
      if (value[i] && t.mono[i]) {
        bound = true;
        rest.set(i, 0);
      }
    }
    if (!bound) {
      plain.push_back(t);
      continue;
    }
    MultiPoly part = MultiPoly::monomial(ring, rest, t.coeff);
    for (std::size_t i = 0; i < ring.size(); ++i) {
      if (value[i] && t.mono[i]) part *= power_of(i, t.mono[i]);
    }
    result += part;
  }
  return result + MultiPoly::from_terms(ring, std::move(plain));
}

inline MultiPoly substitute(const MultiPoly& f, std::string_view var, const ExactScalar& value) {
  Bindings b;
  b.emplace(std::string(var), MultiPoly::constant(f.ring(), value));
  return substitute(f, b);
}

/// Term-by-term evaluation; point is indexed like the ring.
inline std::complex<double> evaluate(const MultiPoly& f, std::span<const std::complex<double>> point) {
  if (point.size() != f.ring().size()) throw Error(ErrorKind::dimension, "evaluation point has wrong dimension");
  std::complex<double> sum = 0;
  for (const auto& t : f.terms()) {
    std::complex<double> v = t.coeff.get_d();
    for (std::size_t i = 0; i < point.size(); ++i) {
      for (unsigned e = 0; e < t.mono[i]; ++e) v *= point[i];
    }
    sum += v;
  }
  return sum;
}

inline ExactScalar evaluate(const MultiPoly& f, std::span<const ExactScalar> point) {
  if (point.size() != f.ring().size()) throw Error(ErrorKind::dimension, "evaluation point has wrong dimension");
  ExactScalar sum = 0;
  for (const auto& t : f.terms()) {
    ExactScalar v = t.coeff;
    for (std::size_t i = 0; i < point.size(); ++i) {
      for (unsigned e = 0; e < t.mono[i]; ++e) v *= point[i];
    }
    sum += v;
  }
  return sum;
}

/// Sum of |coefficient|, used to scale numeric residual tolerances.
inline double coefficient_norm1(const MultiPoly& f) {
  double s = 0;
  for (const auto& t : f.terms()) s += std::abs(t.coeff.get_d());
  return s;
}

}  // namespace orbitsum
