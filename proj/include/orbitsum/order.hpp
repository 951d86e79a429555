#pragma once

#include <compare>
#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "orbitsum/error.hpp"
#include "orbitsum/monomial.hpp"

namespace orbitsum {

enum class OrderKind { lex, grlex, grevlex, block };

/// A total, multiplicative order on monomials with the unit minimal.
/// Variables are ranked by ring index: index 0 is the largest under lex.
class MonomialOrder {
 public:
  struct Block {
    std::size_t count;
    OrderKind kind;  // lex, grlex or grevlex
  };

  static MonomialOrder lex() { return MonomialOrder(OrderKind::lex); }
  static MonomialOrder grlex() { return MonomialOrder(OrderKind::grlex); }
  static MonomialOrder grevlex() { return MonomialOrder(OrderKind::grevlex); }

  /// Product order: blocks cover consecutive ring variables, earlier blocks
  /// dominate later ones.
  static MonomialOrder block(std::vector<Block> blocks) {
    if (blocks.empty()) throw Error(ErrorKind::order, "block order needs at least one block");
    for (const auto& b : blocks) {
      if (b.count == 0) throw Error(ErrorKind::order, "empty block");
      if (b.kind == OrderKind::block) throw Error(ErrorKind::order, "nested block orders are not supported");
    }
    MonomialOrder o(OrderKind::block);
    o.blocks_ = std::move(blocks);
    return o;
  }

  OrderKind kind() const noexcept { return kind_; }
  const std::vector<Block>& blocks() const noexcept { return blocks_; }

  std::strong_ordering compare(const Monomial& a, const Monomial& b) const {
    Monomial::check_same(a, b);
    if (kind_ != OrderKind::block) return compare_range(kind_, a, b, 0, a.size());
    std::size_t start = 0;
    for (const auto& blk : blocks_) {
      if (start + blk.count > a.size()) throw Error(ErrorKind::dimension, "block order wider than the ring");
      auto c = compare_range(blk.kind, a, b, start, start + blk.count);
      if (c != 0) return c;
      start += blk.count;
    }
    if (start != a.size()) throw Error(ErrorKind::dimension, "block order does not cover the ring");
    return std::strong_ordering::equal;
  }

  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  /// True when every monomial involving one of the first k variables beats
  /// every monomial free of them, i.e. the order eliminates x_0..x_{k-1}.
  bool eliminates_prefix(std::size_t k) const {
    if (k == 0 || kind_ == OrderKind::lex) return true;
    if (kind_ != OrderKind::block) return false;
    std::size_t start = 0;
    for (const auto& blk : blocks_) {
      if (start == k) return true;
      if (start < k && blk.kind == OrderKind::lex && start + blk.count >= k) return true;
      start += blk.count;
    }
    return start == k;
  }

  std::string describe() const {
    if (kind_ != OrderKind::block) return kind_name(kind_);
    std::string s = "block(";
    for (std::size_t i = 0; i < blocks_.size(); ++i) {
      if (i) s += ",";
      s += std::to_string(blocks_[i].count) + ":" + kind_name(blocks_[i].kind);
    }
    return s + ")";
  }

  static const char* kind_name(OrderKind k) {
    switch (k) {
      case OrderKind::lex: return "lex";
      case OrderKind::grlex: return "grlex";
      case OrderKind::grevlex: return "grevlex";
      case OrderKind::block: return "block";
    }
    return "?";
  }

  static OrderKind parse_kind(std::string_view s) {
    if (s == "lex") return OrderKind::lex;
    if (s == "grlex" || s == "deglex") return OrderKind::grlex;
    if (s == "grevlex" || s == "degrevlex" || s == "dp") return OrderKind::grevlex;
    throw Error(ErrorKind::order, "unknown order kind '" + std::string(s) + "'");
  }

  friend bool operator==(const MonomialOrder& a, const MonomialOrder& b) {
    if (a.kind_ != b.kind_ || a.blocks_.size() != b.blocks_.size()) return false;
    for (std::size_t i = 0; i < a.blocks_.size(); ++i) {
      if (a.blocks_[i].count != b.blocks_[i].count || a.blocks_[i].kind != b.blocks_[i].kind) return false;
    }
    return true;
  }

 private:
  explicit MonomialOrder(OrderKind k) : kind_(k) {}

  static std::strong_ordering compare_range(OrderKind k, const Monomial& a, const Monomial& b,
                                            std::size_t lo, std::size_t hi) {
    if (k == OrderKind::lex) {
      for (std::size_t i = lo; i < hi; ++i) {
        if (a[i] != b[i]) return a[i] <=> b[i];
      }
      return std::strong_ordering::equal;
    }
    unsigned da = 0, db = 0;
    for (std::size_t i = lo; i < hi; ++i) {
      da += a[i];
      db += b[i];
    }
    if (da != db) return da <=> db;
    if (k == OrderKind::grlex) return compare_range(OrderKind::lex, a, b, lo, hi);
    // grevlex: the smaller exponent in the last differing variable wins
    for (std::size_t i = hi; i-- > lo;) {
      if (a[i] != b[i]) return b[i] <=> a[i];
    }
    return std::strong_ordering::equal;
  }

  OrderKind kind_;
  std::vector<Block> blocks_;
};

inline std::strong_ordering compare(const Monomial& a, const Monomial& b, const MonomialOrder& ord) {
  return ord.compare(a, b);
}

}  // namespace orbitsum
