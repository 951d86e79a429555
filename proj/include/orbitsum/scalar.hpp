#pragma once

#include <gmpxx.h>

#include <complex>
#include <string>
#include <string_view>

#include "orbitsum/error.hpp"

namespace orbitsum {

// GMP keeps mpq_class canonical (lowest terms, positive denominator, 0 = 0/1)
// as long as every value is built through canonicalize() or arithmetic.
using ExactScalar = mpq_class;
using BigInt = mpz_class;

inline ExactScalar make_scalar(long num, long den = 1) {
  if (den == 0) throw Error(ErrorKind::zero_divisor, "scalar with zero denominator");
  ExactScalar q(num, den);
  q.canonicalize();
  return q;
}

/// Parses "n" or "p/q" with an optional leading sign.
inline ExactScalar parse_scalar(std::string_view text) {
  std::string s(text);
  if (s.empty()) throw Error(ErrorKind::parse, "empty scalar");
  ExactScalar q;
  if (q.set_str(s, 10) != 0) throw Error(ErrorKind::parse, "bad scalar '" + s + "'");
  if (q.get_den() == 0) throw Error(ErrorKind::zero_divisor, "scalar with zero denominator");
  q.canonicalize();
  return q;
}

inline std::string to_string(const ExactScalar& q) { return q.get_str(10); }

inline bool is_integer(const ExactScalar& q) { return q.get_den() == 1; }

inline int sign(const ExactScalar& q) { return sgn(q); }

inline double to_double(const ExactScalar& q) { return q.get_d(); }

inline std::complex<double> to_complex(const ExactScalar& q) { return {q.get_d(), 0.0}; }

}  // namespace orbitsum
