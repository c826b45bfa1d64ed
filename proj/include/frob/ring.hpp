#ifndef FROB_RING_HPP
#define FROB_RING_HPP

#include <algorithm>
#include <cctype>
#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "frob/field.hpp"
#include "frob/monomial.hpp"
#include "frob/order.hpp"

namespace frob {

inline std::string lower(std::string_view s) {
  std::string r(s);
  std::transform(r.begin(), r.end(), r.begin(),
                 [](unsigned char c) { return std::tolower(c); });
  return r;
}

/// A polynomial ring signature: named variables with positive weights over a
/// coefficient field K (GF or QQ). Immutable after construction.
template <class K>
class Ring {
 public:
  Ring(K field, std::vector<std::string> vars, std::vector<std::int64_t> weights)
      : field_(std::move(field)), vars_(std::move(vars)),
        weights_(std::move(weights)) {
    if (vars_.empty() || vars_.size() > kMaxVars)
      throw std::invalid_argument("ring: 1.." + std::to_string(kMaxVars) +
                                  " variables supported");
    if (weights_.size() != vars_.size())
      throw std::invalid_argument("ring: one weight per variable required");
    for (auto w : weights_)
      if (w <= 0) throw std::invalid_argument("ring: weights must be positive");
    for (std::size_t i = 0; i < vars_.size(); ++i)
      for (std::size_t j = i + 1; j < vars_.size(); ++j)
        if (lower(vars_[i]) == lower(vars_[j]))
          throw std::invalid_argument("ring: duplicate variable " + vars_[j]);
  }

  const K& field() const { return field_; }
  std::size_t nvars() const { return vars_.size(); }
  const std::vector<std::string>& vars() const { return vars_; }
  const std::vector<std::int64_t>& weights() const { return weights_; }
  const std::string& var_name(std::size_t i) const { return vars_[i]; }

  /// Case-insensitive lookup; -1 when absent.
  int find_var(std::string_view name) const {
    std::string n = lower(name);
    for (std::size_t i = 0; i < vars_.size(); ++i)
      if (lower(vars_[i]) == n) return static_cast<int>(i);
    return -1;
  }

  /// Weighted grevlex on the signature weights, ties by reverse lex on the
  /// declared variable order.
  MonomialOrder default_order() const {
    // every monomial in this ring carries a wdeg computed from these weights
    return MonomialOrder::wgrevlex(weights_, true);
  }

  bool same_signature(const Ring& o) const {
    return field_ == o.field_ && vars_ == o.vars_ && weights_ == o.weights_;
  }

 private:
  K field_;
  std::vector<std::string> vars_;
  std::vector<std::int64_t> weights_;
};

template <class K>
using RingPtr = std::shared_ptr<const Ring<K>>;

template <class K>
RingPtr<K> make_ring(K field, std::vector<std::string> vars,
                     std::vector<std::int64_t> weights) {
  return std::make_shared<const Ring<K>>(std::move(field), std::move(vars),
                                         std::move(weights));
}

/// Same variables plus one fresh auxiliary variable (weight 1) appended.
template <class K>
RingPtr<K> extend_ring(const RingPtr<K>& r, const std::string& aux) {
  auto vars = r->vars();
  auto w = r->weights();
  vars.push_back(aux);
  w.push_back(1);
  return make_ring<K>(r->field(), std::move(vars), std::move(w));
}

}  // namespace frob

#endif  // FROB_RING_HPP
