#ifndef FROB_ORDER_HPP
#define FROB_ORDER_HPP

#include <cstdint>
#include <string>
#include <vector>

#include "frob/monomial.hpp"

namespace frob {

/// Total, multiplicative well-orders on monomials. The elimination order is
/// a block order: degree in the eliminated block dominates, so a Groebner
/// basis under it intersects the subring in the kept variables.
class MonomialOrder {
 public:
  enum class Kind { Lex, GrevLex, WGrevLex, Elim };

  static MonomialOrder lex(std::size_t nvars) {
    return MonomialOrder(Kind::Lex, nvars, {}, {});
  }
  static MonomialOrder grevlex(std::size_t nvars) {
    return MonomialOrder(Kind::GrevLex, nvars, {}, {});
  }
  /// `trust_cached_wdeg` may only be set when every compared monomial carries
  /// a wdeg computed from these same weights (true for a ring's default
  /// order); it replaces the degree loop with the cached value.
  static MonomialOrder wgrevlex(std::vector<std::int64_t> weights,
                                bool trust_cached_wdeg = false) {
    std::size_t n = weights.size();
    MonomialOrder o(Kind::WGrevLex, n, std::move(weights), {});
    o.wdeg_cached_ = trust_cached_wdeg;
    return o;
  }
  /// Eliminates the variables in `block`; ties broken by weighted grevlex on
  /// the complement using `weights` (full-length vector).
  static MonomialOrder elim(std::vector<bool> block,
                            std::vector<std::int64_t> weights) {
    std::size_t n = weights.size();
    return MonomialOrder(Kind::Elim, n, std::move(weights), std::move(block));
  }

  Kind kind() const { return kind_; }
  std::size_t nvars() const { return nvars_; }
  std::vector<bool> block() const {
    std::vector<bool> b(nvars_, false);
    for (std::size_t i = 0; i < nvars_; ++i) b[i] = block8_[i] != 0;
    return b;
  }

  /// <0 if a < b, 0 if equal, >0 if a > b.
  int compare(const Monomial& a, const Monomial& b) const {
    switch (kind_) {
      case Kind::Lex:
        for (std::size_t i = 0; i < nvars_; ++i)
          if (a.exp[i] != b.exp[i]) return a.exp[i] < b.exp[i] ? -1 : 1;
        return 0;
      case Kind::GrevLex:
        return cmp_grevlex(a, b, nvars_, nullptr, nullptr);
      case Kind::WGrevLex:
        if (wdeg_cached_) {
          if (a.wdeg != b.wdeg) return a.wdeg < b.wdeg ? -1 : 1;
          for (std::size_t i = nvars_; i-- > 0;)
            if (a.exp[i] != b.exp[i]) return a.exp[i] > b.exp[i] ? -1 : 1;
          return 0;
        }
        return cmp_grevlex(a, b, nvars_, weights_.data(), nullptr);
      case Kind::Elim: {
        int c = cmp_grevlex(a, b, nvars_, nullptr, block8_.data());
        if (c != 0) return c;
        return cmp_grevlex(a, b, nvars_, weights_.data(), keep8_.data());
      }
    }
    return 0;
  }

  bool less(const Monomial& a, const Monomial& b) const { return compare(a, b) < 0; }
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  std::string describe() const {
    switch (kind_) {
      case Kind::Lex: return "lex";
      case Kind::GrevLex: return "grevlex";
      case Kind::WGrevLex: return "weighted-grevlex";
      case Kind::Elim: return "elimination-block";
    }
    return "?";
  }

 private:
  MonomialOrder(Kind k, std::size_t n, std::vector<std::int64_t> w,
                std::vector<bool> b)
      : kind_(k), nvars_(n), weights_(std::move(w)) {
    block8_.assign(nvars_, 0);
    keep8_.assign(nvars_, 1);
    for (std::size_t i = 0; i < b.size(); ++i) {
      block8_[i] = b[i] ? 1 : 0;
      keep8_[i] = b[i] ? 0 : 1;
    }
  }

  // Graded by (weighted) degree over the masked variables; ties by reverse
  // lex: scanning from the last variable, the first difference makes the
  // monomial with the larger exponent the smaller one.
  static int cmp_grevlex(const Monomial& a, const Monomial& b, std::size_t n,
                         const std::int64_t* w, const std::uint8_t* mask) {
    std::int64_t da = 0, db = 0;
    for (std::size_t i = 0; i < n; ++i) {
      if (mask && !mask[i]) continue;
      std::int64_t wi = w ? w[i] : 1;
      da += static_cast<std::int64_t>(a.exp[i]) * wi;
      db += static_cast<std::int64_t>(b.exp[i]) * wi;
    }
    if (da != db) return da < db ? -1 : 1;
    for (std::size_t i = n; i-- > 0;) {
      if (mask && !mask[i]) continue;
      if (a.exp[i] != b.exp[i]) return a.exp[i] > b.exp[i] ? -1 : 1;
    }
    return 0;
  }

  Kind kind_;
  std::size_t nvars_;
  std::vector<std::int64_t> weights_;
  std::vector<std::uint8_t> block8_;
  std::vector<std::uint8_t> keep8_;
  bool wdeg_cached_ = false;
};

}  // namespace frob

#endif  // FROB_ORDER_HPP
