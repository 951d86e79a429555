#pragma once

#include <algorithm>
#include <array>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <initializer_list>
#include <limits>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "orbitsum/error.hpp"

namespace orbitsum {

/// Ordered list of distinct variable names. Index order defines the ambient
/// ring; lex-type orders treat index 0 as the largest variable.
class VarSet {
 public:
  VarSet(std::initializer_list<std::string> names) : VarSet(std::vector<std::string>(names)) {}

  explicit VarSet(std::vector<std::string> names);

  std::size_t size() const noexcept { return names_->size(); }
  const std::string& name(std::size_t i) const { return (*names_)[i]; }
  const std::vector<std::string>& names() const noexcept { return *names_; }

  std::optional<std::size_t> find(std::string_view name) const {
    for (std::size_t i = 0; i < names_->size(); ++i) {
      if ((*names_)[i] == name) return i;
    }
    return std::nullopt;
  }

  std::size_t index_of(std::string_view name) const {
    if (auto i = find(name)) return *i;
    throw Error(ErrorKind::unknown_variable, "'" + std::string(name) + "' is not a ring variable");
  }

  friend bool operator==(const VarSet& a, const VarSet& b) {
    return a.names_ == b.names_ || *a.names_ == *b.names_;
  }

 private:
  std::shared_ptr<const std::vector<std::string>> names_;
};

inline constexpr std::size_t kMaxVariables = 16;

inline VarSet::VarSet(std::vector<std::string> names) {
  if (names.empty()) throw Error(ErrorKind::dimension, "empty variable set");
  if (names.size() > kMaxVariables) {
    throw Error(ErrorKind::dimension, "at most " + std::to_string(kMaxVariables) + " variables");
  }
  for (std::size_t i = 0; i < names.size(); ++i) {
    if (names[i].empty()) throw Error(ErrorKind::parse, "empty variable name");
    for (std::size_t j = 0; j < i; ++j) {
      if (names[i] == names[j]) throw Error(ErrorKind::dimension, "duplicate variable " + names[i]);
    }
  }
  names_ = std::make_shared<const std::vector<std::string>>(std::move(names));
}

/// Exponent vector. Stored inline; the total degree is cached because the
/// graded orders and the pair-selection heuristics read it constantly.
class Monomial {
 public:
  using Exponent = std::uint16_t;

  Monomial() = default;

  explicit Monomial(std::size_t nvars) : size_(static_cast<std::uint8_t>(nvars)) {
    if (nvars > kMaxVariables) throw Error(ErrorKind::dimension, "too many variables");
  }

  Monomial(std::initializer_list<unsigned> exps) : Monomial(exps.size()) {
    std::size_t i = 0;
    for (unsigned e : exps) set(i++, e);
  }

  static Monomial from_span(std::span<const unsigned> exps) {
    Monomial m(exps.size());
    for (std::size_t i = 0; i < exps.size(); ++i) m.set(i, exps[i]);
    return m;
  }

  std::size_t size() const noexcept { return size_; }
  unsigned operator[](std::size_t i) const noexcept { return exp_[i]; }
  unsigned total_degree() const noexcept { return degree_; }
  bool is_unit() const noexcept { return degree_ == 0; }

  void set(std::size_t i, unsigned e) {
    if (e > std::numeric_limits<Exponent>::max()) throw Error(ErrorKind::dimension, "exponent overflow");
    degree_ = degree_ - exp_[i] + e;
    exp_[i] = static_cast<Exponent>(e);
  }

  bool divides(const Monomial& other) const noexcept {
    for (std::size_t i = 0; i < size_; ++i) {
      if (exp_[i] > other.exp_[i]) return false;
    }
    return true;
  }

  /// True when the two monomials share no variable.
  bool coprime(const Monomial& other) const noexcept {
    for (std::size_t i = 0; i < size_; ++i) {
      if (exp_[i] != 0 && other.exp_[i] != 0) return false;
    }
    return true;
  }

  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    check_same(a, b);
    Monomial r(a.size_);
    for (std::size_t i = 0; i < a.size_; ++i) r.set(i, unsigned(a.exp_[i]) + b.exp_[i]);
    return r;
  }

  /// a / b; requires b | a.
  friend Monomial operator/(const Monomial& a, const Monomial& b) {
    check_same(a, b);
    if (!b.divides(a)) throw Error(ErrorKind::zero_divisor, "monomial quotient is not exact");
    Monomial r(a.size_);
    for (std::size_t i = 0; i < a.size_; ++i) r.set(i, unsigned(a.exp_[i]) - b.exp_[i]);
    return r;
  }

  friend Monomial lcm(const Monomial& a, const Monomial& b) {
    check_same(a, b);
    Monomial r(a.size_);
    for (std::size_t i = 0; i < a.size_; ++i) r.set(i, std::max(a.exp_[i], b.exp_[i]));
    return r;
  }

  friend Monomial gcd(const Monomial& a, const Monomial& b) {
    check_same(a, b);
    Monomial r(a.size_);
    for (std::size_t i = 0; i < a.size_; ++i) r.set(i, std::min(a.exp_[i], b.exp_[i]));
    return r;
  }

  friend bool operator==(const Monomial& a, const Monomial& b) noexcept {
    return a.size_ == b.size_ && a.exp_ == b.exp_;
  }

  std::size_t hash() const noexcept {
    std::size_t h = size_;
    for (std::size_t i = 0; i < size_; ++i) h = h * 1000003u ^ exp_[i];
    return h;
  }

  static void check_same(const Monomial& a, const Monomial& b) {
    if (a.size_ != b.size_) {
      throw Error(ErrorKind::dimension, "monomials over different variable counts (" +
                                            std::to_string(a.size_) + " vs " + std::to_string(b.size_) + ")");
    }
  }

 private:
  std::array<Exponent, kMaxVariables> exp_{};
  std::uint8_t size_ = 0;
  std::uint32_t degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

}  // namespace orbitsum
