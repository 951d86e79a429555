#pragma once

#include <optional>
#include <vector>

#include "orbitsum/error.hpp"
#include "orbitsum/poly.hpp"
#include "orbitsum/sorted_poly.hpp"

namespace orbitsum {

struct DivisionResult {
  std::vector<MultiPoly> quotients;
  MultiPoly remainder;
};

/// Multivariate division: f = sum q_i d_i + r where no term of r is divisible
/// by any LT(d_i). The first divisor (in list order) whose leading term
/// divides the current leading term is used.
inline DivisionResult divide_multi(const MultiPoly& f, const std::vector<MultiPoly>& divisors,
                                   const MonomialOrder& ord) {
  const VarSet& ring = f.ring();
  std::vector<detail::SPoly<ExactScalar>> divs;
  divs.reserve(divisors.size());
  for (const auto& d : divisors) {
    MultiPoly::check_ring(f, d);
    if (d.is_zero()) throw Error(ErrorKind::zero_divisor, "zero polynomial in divisor list");
    divs.push_back(detail::to_sorted(d, ord));
  }
  std::vector<std::vector<Term>> quot(divisors.size());
  std::vector<Term> rem;
  auto p = detail::to_sorted(f, ord);
  const ExactScalar one = 1;
  std::size_t head = 0;  // p[0..head) have already moved to the remainder
  while (head < p.size()) {
    const auto& lt = p[head];
    bool divided = false;
    for (std::size_t i = 0; i < divs.size(); ++i) {
      const auto& d = divs[i];
      if (!d.front().mono.divides(lt.mono)) continue;
      Monomial m = lt.mono / d.front().mono;
      ExactScalar c = lt.coeff / d.front().coeff;
      quot[i].push_back({m, c});
      p = detail::sub_scaled(p, one, d, c, m, ord, head, 0);
      head = 0;
      divided = true;
      break;
    }
    if (!divided) {
      rem.push_back({lt.mono, lt.coeff});
      ++head;
    }
  }
  DivisionResult out{{}, MultiPoly::from_terms(ring, std::move(rem))};
  out.quotients.reserve(quot.size());
  for (auto& q : quot) out.quotients.push_back(MultiPoly::from_terms(ring, std::move(q)));
  return out;
}

/// Remainder of f on division by divisors.
inline MultiPoly reduce(const MultiPoly& f, const std::vector<MultiPoly>& divisors, const MonomialOrder& ord) {
  return divide_multi(f, divisors, ord).remainder;
}

/// f / g when g divides f exactly in Q[x], otherwise nullopt.
inline std::optional<MultiPoly> exact_quotient(const MultiPoly& f, const MultiPoly& g) {
  if (g.is_zero()) throw Error(ErrorKind::zero_divisor, "division by the zero polynomial");
  auto r = divide_multi(f, {g}, MonomialOrder::lex());
  if (!r.remainder.is_zero()) return std::nullopt;
  return std::move(r.quotients.front());
}

inline bool divides(const MultiPoly& g, const MultiPoly& f) { return exact_quotient(f, g).has_value(); }

}  // namespace orbitsum
