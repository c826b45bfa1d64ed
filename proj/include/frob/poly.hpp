#ifndef FROB_POLY_HPP
#define FROB_POLY_HPP

#include <algorithm>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "frob/ring.hpp"

namespace frob {

template <class K>
struct Term {
  Monomial mono;
  typename K::Value coeff;
};

struct DegreeInfo {
  std::int64_t degree;
  bool homogeneous;
};

/// Sparse polynomial. Terms are kept sorted in descending order under the
/// ring's default order, with no zero coefficients; values are immutable in
/// the sense that all operations return fresh polynomials.
template <class K>
class Poly {
 public:
  using Value = typename K::Value;

  explicit Poly(RingPtr<K> ring) : ring_(std::move(ring)) {}

  static Poly zero(RingPtr<K> ring) { return Poly(std::move(ring)); }

  static Poly constant(RingPtr<K> ring, Value c) {
    Poly p(std::move(ring));
    if (!p.field().is_zero(c)) p.terms_.push_back({mono_one(), std::move(c)});
    return p;
  }

  static Poly one(RingPtr<K> ring) {
    auto f = ring->field();
    return constant(std::move(ring), f.one());
  }

  static Poly variable(RingPtr<K> ring, std::size_t i, std::uint32_t k = 1) {
    Poly p(ring);
    if (i >= ring->nvars()) throw std::out_of_range("variable index");
    if (k == 0) return one(std::move(ring));
    p.terms_.push_back({mono_var(i, k, ring->weights()), ring->field().one()});
    return p;
  }

  /// Builds from an arbitrary term list: sorts, combines, drops zeros.
  static Poly from_terms(RingPtr<K> ring, std::vector<Term<K>> terms) {
    Poly p(std::move(ring));
    p.terms_ = std::move(terms);
    p.normalize();
    return p;
  }

  const RingPtr<K>& ring() const { return ring_; }
  const K& field() const { return ring_->field(); }
  const std::vector<Term<K>>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t term_count() const { return terms_.size(); }

  bool is_constant() const {
    return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one());
  }

  /// Largest term under the given order (defaults to the ring order, where
  /// the stored front term is already the answer).
  const Term<K>& leading_term(const MonomialOrder& order) const {
    if (terms_.empty()) throw std::domain_error("leading term of zero");
    const Term<K>* best = &terms_[0];
    for (const auto& t : terms_)
      if (order.greater(t.mono, best->mono)) best = &t;
    return *best;
  }
  const Term<K>& leading_term() const {
    if (terms_.empty()) throw std::domain_error("leading term of zero");
    return terms_[0];
  }

  DegreeInfo weighted_degree() const {
    if (terms_.empty()) throw std::domain_error("degree of zero polynomial");
    std::int64_t d = terms_[0].mono.wdeg;
    bool homog = true;
    for (const auto& t : terms_) {
      if (t.mono.wdeg > d) d = t.mono.wdeg;
      if (t.mono.wdeg != terms_[0].mono.wdeg) homog = false;
    }
    return {d, homog};
  }

  Poly operator-() const {
    Poly r(ring_);
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_)
      r.terms_.push_back({t.mono, field().neg(t.coeff)});
    return r;
  }

  Poly operator+(const Poly& o) const { return merged(o, false); }
  Poly operator-(const Poly& o) const { return merged(o, true); }

  Poly scaled(const Value& c) const {
    Poly r(ring_);
    if (field().is_zero(c)) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
      Value v = field().mul(t.coeff, c);
      if (!field().is_zero(v)) r.terms_.push_back({t.mono, std::move(v)});
    }
    return r;
  }

  /// Multiplication by a single term; preserves sortedness.
  Poly term_multiplied(const Monomial& m, const Value& c) const {
    Poly r(ring_);
    if (field().is_zero(c)) return r;
    r.terms_.reserve(terms_.size());
    for (const auto& t : terms_) {
      Value v = field().mul(t.coeff, c);
      if (!field().is_zero(v)) r.terms_.push_back({mono_mul(t.mono, m), std::move(v)});
    }
    return r;
  }

  Poly operator*(const Poly& o) const {
    check_ring(o);
    Poly r(ring_);
    if (is_zero() || o.is_zero()) return r;
    auto order = ring_->default_order();
    auto cmp = [&order](const Monomial& a, const Monomial& b) {
      return order.greater(a, b);
    };
    std::map<Monomial, Value, decltype(cmp)> acc(cmp);
    for (const auto& s : terms_)
      for (const auto& t : o.terms_) {
        Monomial m = mono_mul(s.mono, t.mono);
        Value v = field().mul(s.coeff, t.coeff);
        auto it = acc.find(m);
        if (it == acc.end()) {
          if (!field().is_zero(v)) acc.emplace(m, std::move(v));
        } else {
          it->second = field().add(it->second, v);
          if (field().is_zero(it->second)) acc.erase(it);
        }
      }
    r.terms_.reserve(acc.size());
    for (auto& [m, v] : acc) r.terms_.push_back({m, std::move(v)});
    return r;
  }

  /// Exact k-th power by binary exponentiation.
  Poly pow(std::uint64_t k) const {
    Poly result = one(ring_);
    Poly base = *this;
    while (k > 0) {
      if (k & 1) result = result * base;
      k >>= 1;
      if (k) base = base * base;
    }
    return result;
  }

  Poly monic(const MonomialOrder& order) const {
    if (is_zero()) return *this;
    return scaled(field().inv(leading_term(order).coeff));
  }

  /// Formal partial derivative; coefficient arithmetic in the field, so in
  /// characteristic p the derivative of x^p vanishes.
  Poly derivative(std::size_t var) const {
    std::vector<Term<K>> out;
    for (const auto& t : terms_) {
      std::uint32_t e = t.mono.exp[var];
      if (e == 0) continue;
      Value c = field().mul(t.coeff, field().from_int(static_cast<long long>(e)));
      if (field().is_zero(c)) continue;
      Monomial m = t.mono;
      m.exp[var] = e - 1;
      m.wdeg -= ring_->weights()[var];
      out.push_back({m, std::move(c)});
    }
    return from_terms(ring_, std::move(out));
  }

  bool operator==(const Poly& o) const {
    if (!ring_->same_signature(*o.ring_)) return false;
    if (terms_.size() != o.terms_.size()) return false;
    for (std::size_t i = 0; i < terms_.size(); ++i)
      if (terms_[i].mono != o.terms_[i].mono ||
          terms_[i].coeff != o.terms_[i].coeff)
        return false;
    return true;
  }
  bool operator!=(const Poly& o) const { return !(*this == o); }

  void check_ring(const Poly& o) const {
    if (!ring_->same_signature(*o.ring_))
      throw std::invalid_argument("polynomial ring mismatch");
  }

 private:
  void normalize() {
    auto order = ring_->default_order();
    std::sort(terms_.begin(), terms_.end(),
              [&order](const Term<K>& a, const Term<K>& b) {
                return order.greater(a.mono, b.mono);
              });
    std::vector<Term<K>> out;
    out.reserve(terms_.size());
    for (auto& t : terms_) {
      if (!out.empty() && out.back().mono == t.mono)
        out.back().coeff = field().add(out.back().coeff, t.coeff);
      else
        out.push_back(std::move(t));
      if (!out.empty() && field().is_zero(out.back().coeff)) out.pop_back();
    }
    terms_ = std::move(out);
  }

  Poly merged(const Poly& o, bool subtract) const {
    check_ring(o);
    auto order = ring_->default_order();
    Poly r(ring_);
    r.terms_.reserve(terms_.size() + o.terms_.size());
    std::size_t i = 0, j = 0;
    while (i < terms_.size() || j < o.terms_.size()) {
      int c;
      if (i >= terms_.size()) c = -1;
      else if (j >= o.terms_.size()) c = 1;
      else c = order.compare(terms_[i].mono, o.terms_[j].mono);
      if (c > 0) {
        r.terms_.push_back(terms_[i++]);
      } else if (c < 0) {
        const auto& t = o.terms_[j++];
        r.terms_.push_back({t.mono, subtract ? field().neg(t.coeff) : t.coeff});
      } else {
        Value v = subtract ? field().sub(terms_[i].coeff, o.terms_[j].coeff)
                           : field().add(terms_[i].coeff, o.terms_[j].coeff);
        if (!field().is_zero(v)) r.terms_.push_back({terms_[i].mono, std::move(v)});
        ++i, ++j;
      }
    }
    return r;
  }

  RingPtr<K> ring_;
  std::vector<Term<K>> terms_;
};

/// Maps a polynomial into another ring by variable name; every variable with
/// a nonzero exponent must exist in the target. Weighted degrees are
/// recomputed for the target signature.
template <class K>
Poly<K> map_poly(const Poly<K>& f, const RingPtr<K>& target) {
  std::vector<int> where(f.ring()->nvars(), -1);
  for (std::size_t i = 0; i < f.ring()->nvars(); ++i)
    where[i] = target->find_var(f.ring()->var_name(i));
  std::vector<Term<K>> out;
  for (const auto& t : f.terms()) {
    Monomial m;
    for (std::size_t i = 0; i < f.ring()->nvars(); ++i) {
      if (t.mono.exp[i] == 0) continue;
      if (where[i] < 0)
        throw std::invalid_argument("map_poly: variable " +
                                    f.ring()->var_name(i) +
                                    " missing in target ring");
      m.exp[static_cast<std::size_t>(where[i])] = t.mono.exp[i];
    }
    m.wdeg = weighted_degree_of(m, target->weights());
    out.push_back({m, t.coeff});
  }
  return Poly<K>::from_terms(target, std::move(out));
}

}  // namespace frob

#endif  // FROB_POLY_HPP
