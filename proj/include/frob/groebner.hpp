#ifndef FROB_GROEBNER_HPP
#define FROB_GROEBNER_HPP

#include <cstdint>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <utility>
#include <vector>

#include "frob/poly.hpp"

namespace frob {

template <class K>
struct Ideal {
  RingPtr<K> ring;
  std::vector<Poly<K>> gens;  // zero generators dropped

  static Ideal make(RingPtr<K> ring, std::vector<Poly<K>> gens) {
    Ideal I{std::move(ring), {}};
    for (auto& g : gens) {
      if (g.is_zero()) continue;
      g.check_ring(Poly<K>::zero(I.ring));
      I.gens.push_back(std::move(g));
    }
    return I;
  }

  static Ideal zero(RingPtr<K> ring) { return Ideal{std::move(ring), {}}; }
};

struct GBOptions {
  // Reduction-step budget per top-level call; exceeding it raises
  // BudgetExceeded rather than returning a truncated answer.
  std::uint64_t step_budget = 10'000'000;
};

struct GBStats {
  std::uint64_t reduction_steps = 0;
  std::uint64_t spairs_considered = 0;
  std::uint64_t basis_size = 0;
};

class BudgetExceeded : public std::runtime_error {
 public:
  explicit BudgetExceeded(std::uint64_t steps)
      : std::runtime_error("Groebner reduction budget exceeded after " +
                           std::to_string(steps) + " steps"),
        steps(steps) {}
  std::uint64_t steps;
};

template <class K>
struct GroebnerBasis {
  MonomialOrder order;
  std::vector<Poly<K>> basis;  // reduced: monic, sorted by leading monomial
  std::vector<Monomial> lms;   // leading monomials under `order`
  Ideal<K> source;
  GBStats stats;

  bool contains_one() const {
    return basis.size() == 1 && basis[0].is_constant() && !basis[0].is_zero();
  }
};

namespace detail {

template <class K>
struct Reducer {
  Poly<K> poly;
  Monomial lm;
  typename K::Value lc_inv;
};

template <class K>
Reducer<K> make_reducer(const Poly<K>& f, const MonomialOrder& order) {
  const auto& lt = f.leading_term(order);
  return Reducer<K>{f, lt.mono, f.field().inv(lt.coeff)};
}

/// Full normal form: no term of the result is divisible by any reducer's
/// leading monomial. Among applicable reducers the earliest in the list wins.
template <class K>
Poly<K> reduce_full(const Poly<K>& f, const std::vector<Reducer<K>>& reds,
                    const MonomialOrder& order, const GBOptions& opt,
                    GBStats& stats) {
  const auto& field = f.field();
  auto cmp = [&order](const Monomial& a, const Monomial& b) {
    return order.greater(a, b);
  };
  std::map<Monomial, typename K::Value, decltype(cmp)> work(cmp);
  for (const auto& t : f.terms()) work.emplace(t.mono, t.coeff);

  std::vector<Term<K>> remainder;
  while (!work.empty()) {
    auto it = work.begin();
    const Reducer<K>* red = nullptr;
    for (const auto& r : reds)
      if (mono_divides(r.lm, it->first)) {
        red = &r;
        break;
      }
    if (!red) {
      remainder.push_back({it->first, std::move(it->second)});
      work.erase(it);
      continue;
    }
    if (++stats.reduction_steps > opt.step_budget)
      throw BudgetExceeded(stats.reduction_steps);
    typename K::Value c = field.mul(it->second, red->lc_inv);
    Monomial u = mono_div(it->first, red->lm);
    work.erase(it);
    for (const auto& t : red->poly.terms()) {
      if (t.mono == red->lm) continue;
      Monomial m = mono_mul(t.mono, u);
      typename K::Value v = field.mul(t.coeff, c);
      auto jt = work.find(m);
      if (jt == work.end()) {
        work.emplace(m, field.neg(v));
      } else {
        jt->second = field.sub(jt->second, v);
        if (field.is_zero(jt->second)) work.erase(jt);
      }
    }
  }
  return Poly<K>::from_terms(f.ring(), std::move(remainder));
}

template <class K>
Poly<K> spoly(const Reducer<K>& f, const Reducer<K>& g, const Monomial& lcm) {
  const auto& field = f.poly.field();
  Poly<K> a = f.poly.term_multiplied(mono_div(lcm, f.lm), f.lc_inv);
  Poly<K> b = g.poly.term_multiplied(mono_div(lcm, g.lm), g.lc_inv);
  (void)field;
  return a - b;
}

}  // namespace detail

/// Buchberger's algorithm with the product and chain criteria and
/// normal-strategy pair selection. Returns the unique reduced basis, monic
/// and sorted ascending by leading monomial; deterministic for fixed input.
template <class K>
GroebnerBasis<K> buchberger(const Ideal<K>& I, const MonomialOrder& order,
                            const GBOptions& opt = {}) {
  using detail::Reducer;
  const auto& ring = I.ring;
  const auto& w = ring->weights();
  GBStats stats;

  std::vector<Reducer<K>> basis;
  struct PairKey {
    Monomial lcm;
    std::size_t i, j;
  };
  auto pair_less = [&order](const PairKey& a, const PairKey& b) {
    int c = order.compare(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  };
  std::set<PairKey, decltype(pair_less)> queue(pair_less);
  std::set<std::pair<std::size_t, std::size_t>> pending;

  auto add_poly = [&](const Poly<K>& g) {
    std::size_t j = basis.size();
    basis.push_back(detail::make_reducer(g, order));
    for (std::size_t i = 0; i < j; ++i) {
      Monomial l = mono_lcm(basis[i].lm, basis[j].lm, w);
      queue.insert({l, i, j});
      pending.insert({i, j});
    }
  };

  for (const auto& g : I.gens)
    if (!g.is_zero()) add_poly(g);

  while (!queue.empty()) {
    PairKey pk = *queue.begin();
    queue.erase(queue.begin());
    pending.erase({pk.i, pk.j});
    ++stats.spairs_considered;

    const auto& fi = basis[pk.i];
    const auto& fj = basis[pk.j];
    // product criterion
    if (mono_coprime(fi.lm, fj.lm)) continue;
    // chain criterion: some k with LM(k) | lcm(i,j) and both pairs (i,k),
    // (j,k) already treated
    bool skip = false;
    for (std::size_t k = 0; k < basis.size() && !skip; ++k) {
      if (k == pk.i || k == pk.j) continue;
      if (!mono_divides(basis[k].lm, pk.lcm)) continue;
      auto key = [](std::size_t a, std::size_t b) {
        return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
      };
      if (!pending.count(key(pk.i, k)) && !pending.count(key(pk.j, k)))
        skip = true;
    }
    if (skip) continue;

    Poly<K> s = detail::spoly(fi, fj, pk.lcm);
    Poly<K> r = detail::reduce_full(s, basis, order, opt, stats);
    if (!r.is_zero()) add_poly(r);
  }

  // minimize: drop elements whose leading monomial is divisible by another's
  std::vector<bool> keep(basis.size(), true);
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (!keep[i]) continue;
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (i == j || !keep[j]) continue;
      if (mono_divides(basis[j].lm, basis[i].lm) &&
          (basis[j].lm != basis[i].lm || j < i)) {
        keep[i] = false;
        break;
      }
    }
  }
  std::vector<Reducer<K>> minimal;
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (keep[i]) minimal.push_back(basis[i]);

  // tail-reduce each element against the others; leading monomials are
  // untouched, so one pass over current versions suffices
  for (std::size_t i = 0; i < minimal.size(); ++i) {
    std::vector<Reducer<K>> others;
    for (std::size_t j = 0; j < minimal.size(); ++j)
      if (j != i) others.push_back(minimal[j]);
    Poly<K> r = detail::reduce_full(minimal[i].poly, others, order, opt, stats);
    minimal[i] = detail::make_reducer(r.monic(order), order);
  }

  std::sort(minimal.begin(), minimal.end(),
            [&order](const Reducer<K>& a, const Reducer<K>& b) {
              return order.less(a.lm, b.lm);
            });

  GroebnerBasis<K> G{order, {}, {}, I, stats};
  for (auto& r : minimal) {
    G.basis.push_back(std::move(r.poly));
    G.lms.push_back(r.lm);
  }
  G.stats.basis_size = G.basis.size();
  return G;
}

/// Remainder of f modulo G: no term divisible by a basis leading monomial,
/// and f - normal_form(f, G) lies in the ideal.
template <class K>
Poly<K> normal_form(const Poly<K>& f, const GroebnerBasis<K>& G,
                    const GBOptions& opt = {}, GBStats* stats = nullptr) {
  f.check_ring(Poly<K>::zero(G.source.ring));
  std::vector<detail::Reducer<K>> reds;
  reds.reserve(G.basis.size());
  for (std::size_t i = 0; i < G.basis.size(); ++i)
    reds.push_back(detail::Reducer<K>{
        G.basis[i], G.lms[i], f.field().inv(G.basis[i].leading_term(G.order).coeff)});
  GBStats local;
  Poly<K> r = detail::reduce_full(f, reds, G.order, opt, local);
  if (stats) stats->reduction_steps += local.reduction_steps;
  return r;
}

template <class K>
bool gb_member(const Poly<K>& f, const GroebnerBasis<K>& G,
               const GBOptions& opt = {}, GBStats* stats = nullptr) {
  return normal_form(f, G, opt, stats).is_zero();
}

/// Membership via a fresh Groebner basis under the ring's default order.
template <class K>
bool ideal_member(const Poly<K>& f, const Ideal<K>& I, const GBOptions& opt = {},
                  GBStats* stats = nullptr) {
  auto G = buchberger(I, I.ring->default_order(), opt);
  if (stats) {
    stats->reduction_steps += G.stats.reduction_steps;
    stats->spairs_considered += G.stats.spairs_considered;
  }
  return gb_member(f, G, opt, stats);
}

template <class K>
Ideal<K> ideal_sum(const Ideal<K>& I, const Ideal<K>& J) {
  auto gens = I.gens;
  gens.insert(gens.end(), J.gens.begin(), J.gens.end());
  return Ideal<K>::make(I.ring, std::move(gens));
}

/// Exact division by a single polynomial: returns the quotient when f lies
/// in (g), nullopt otherwise. Leading-term division under the default order.
template <class K>
std::optional<Poly<K>> divide_exact(const Poly<K>& f, const Poly<K>& g) {
  if (g.is_zero()) throw std::invalid_argument("division by zero polynomial");
  auto order = f.ring()->default_order();
  const auto& field = f.field();
  const auto& gl = g.leading_term();
  auto gl_inv = field.inv(gl.coeff);
  Poly<K> rem = f;
  std::vector<Term<K>> quot;
  while (!rem.is_zero()) {
    const auto& lt = rem.leading_term();
    if (!mono_divides(gl.mono, lt.mono)) return std::nullopt;
    Monomial u = mono_div(lt.mono, gl.mono);
    typename K::Value c = field.mul(lt.coeff, gl_inv);
    quot.push_back({u, c});
    rem = rem - g.term_multiplied(u, c);
  }
  (void)order;
  return Poly<K>::from_terms(f.ring(), std::move(quot));
}

namespace detail {

inline std::string fresh_var_name(const std::vector<std::string>& vars,
                                  const std::string& stem) {
  auto taken = [&](const std::string& n) {
    for (const auto& v : vars)
      if (lower(v) == lower(n)) return true;
    return false;
  };
  if (!taken(stem)) return stem;
  for (int i = 1;; ++i) {
    std::string n = stem + std::to_string(i);
    if (!taken(n)) return n;
  }
}

}  // namespace detail

/// I cap J via a single auxiliary variable u: eliminate u from u*I + (1-u)*J.
template <class K>
Ideal<K> intersect(const Ideal<K>& I, const Ideal<K>& J,
                   const GBOptions& opt = {}, GBStats* stats = nullptr) {
  const auto& ring = I.ring;
  std::string aux = detail::fresh_var_name(ring->vars(), "_u");
  auto ext = extend_ring(ring, aux);
  std::size_t ui = ext->nvars() - 1;
  Poly<K> u = Poly<K>::variable(ext, ui);
  Poly<K> one_minus_u = Poly<K>::one(ext) - u;

  std::vector<Poly<K>> gens;
  for (const auto& g : I.gens) gens.push_back(u * map_poly(g, ext));
  for (const auto& h : J.gens) gens.push_back(one_minus_u * map_poly(h, ext));

  std::vector<bool> block(ext->nvars(), false);
  block[ui] = true;
  auto order = MonomialOrder::elim(block, ext->weights());
  auto G = buchberger(Ideal<K>::make(ext, std::move(gens)), order, opt);
  if (stats) {
    stats->reduction_steps += G.stats.reduction_steps;
    stats->spairs_considered += G.stats.spairs_considered;
  }

  std::vector<Poly<K>> out;
  for (const auto& g : G.basis) {
    bool has_u = false;
    for (const auto& t : g.terms())
      if (t.mono.exp[ui] != 0) {
        has_u = true;
        break;
      }
    if (!has_u) out.push_back(map_poly(g, ring));
  }
  return Ideal<K>::make(ring, std::move(out));
}

/// (I : f) = {g : g*f in I}, via (I cap (f)) / f. Every returned generator
/// is spot-checked by a membership test.
template <class K>
Ideal<K> colon_ideal(const Ideal<K>& I, const Poly<K>& f,
                     const GBOptions& opt = {}, GBStats* stats = nullptr) {
  if (f.is_zero()) throw std::invalid_argument("colon by zero polynomial");
  if (I.gens.empty()) return Ideal<K>::zero(I.ring);
  auto cap = intersect(I, Ideal<K>::make(I.ring, {f}), opt, stats);
  std::vector<Poly<K>> out;
  for (const auto& g : cap.gens) {
    auto q = divide_exact(g, f);
    if (!q)
      throw std::logic_error("colon_ideal: intersection element not divisible");
    if (!q->is_zero()) out.push_back(std::move(*q));
  }
  auto result = Ideal<K>::make(I.ring, std::move(out));
  auto G = buchberger(I, I.ring->default_order(), opt);
  if (stats) {
    stats->reduction_steps += G.stats.reduction_steps;
    stats->spairs_considered += G.stats.spairs_considered;
  }
  for (const auto& g : result.gens)
    if (!gb_member(g * f, G, opt, stats))
      throw std::logic_error("colon_ideal: spot-check g*f in I failed");
  return result;
}

namespace detail {

/// Basis element of a submodule of R^r carrying the cofactor of the tracked
/// generator. Leading term taken term-over-position: greatest monomial under
/// the order, ties to the lowest slot.
template <class K>
struct ModElem {
  std::vector<Poly<K>> comp;
  Poly<K> cof;
  std::size_t slot = 0;
  Monomial lm;
  typename K::Value lc_inv;
};

template <class K>
struct ModRemainder {
  std::vector<Poly<K>> comp;
  Poly<K> cof;
  bool comp_zero() const {
    for (const auto& c : comp)
      if (!c.is_zero()) return false;
    return true;
  }
};

struct MonoHash {
  std::size_t operator()(const Monomial& m) const {
    std::uint64_t h = 1469598103934665603ull;
    for (auto v : m.exp) {
      h ^= v;
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};
struct MonoEq {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return a.exp == b.exp;
  }
};

/// Geobucket accumulator: entries live in buckets of geometrically growing
/// capacity, each sorted ascending by priority; additions merge one bucket,
/// not the whole working set, so tail fill-in during long reductions costs
/// amortized log per term instead of a tree insertion.
template <class Key, class V, class Greater, class Eq, class F>
class Geobucket {
 public:
  Geobucket(Greater gt, Eq eq, const F& field) : gt_(gt), eq_(eq), field_(field) {}

  /// chunk sorted descending (greatest priority first), keys distinct.
  void add_desc(std::vector<std::pair<Key, V>> chunk) {
    if (chunk.empty()) return;
    std::reverse(chunk.begin(), chunk.end());
    std::size_t i = 0, cap = kBase;
    while (cap < chunk.size()) {
      ++i;
      cap *= kFactor;
    }
    for (;;) {
      if (buckets_.size() <= i) buckets_.resize(i + 1);
      if (buckets_[i].empty()) {
        buckets_[i] = std::move(chunk);
        return;
      }
      chunk = merge(std::move(buckets_[i]), std::move(chunk));
      buckets_[i].clear();
      if (chunk.size() <= cap) {
        buckets_[i] = std::move(chunk);
        return;
      }
      ++i;
      cap *= kFactor;
    }
  }

  /// Greatest surviving entry, combining equal keys across buckets.
  std::optional<std::pair<Key, V>> pop_max() {
    for (;;) {
      int best = -1;
      for (std::size_t i = 0; i < buckets_.size(); ++i) {
        if (buckets_[i].empty()) continue;
        if (best < 0 || gt_(buckets_[i].back().first,
                            buckets_[static_cast<std::size_t>(best)].back().first))
          best = static_cast<int>(i);
      }
      if (best < 0) return std::nullopt;
      auto top = std::move(buckets_[static_cast<std::size_t>(best)].back());
      buckets_[static_cast<std::size_t>(best)].pop_back();
      for (auto& b : buckets_) {
        if (b.empty() || !eq_(b.back().first, top.first)) continue;
        top.second = field_.add(top.second, b.back().second);
        b.pop_back();
      }
      if (!field_.is_zero(top.second)) return top;
    }
  }

 private:
  static constexpr std::size_t kBase = 16;
  static constexpr std::size_t kFactor = 4;

  std::vector<std::pair<Key, V>> merge(std::vector<std::pair<Key, V>> a,
                                       std::vector<std::pair<Key, V>> b) {
    std::vector<std::pair<Key, V>> out;
    out.reserve(a.size() + b.size());
    std::size_t i = 0, j = 0;
    while (i < a.size() && j < b.size()) {
      if (eq_(a[i].first, b[j].first)) {
        V v = field_.add(a[i].second, b[j].second);
        if (!field_.is_zero(v)) out.push_back({std::move(a[i].first), std::move(v)});
        ++i;
        ++j;
      } else if (gt_(a[i].first, b[j].first)) {
        out.push_back(std::move(b[j++]));
      } else {
        out.push_back(std::move(a[i++]));
      }
    }
    while (i < a.size()) out.push_back(std::move(a[i++]));
    while (j < b.size()) out.push_back(std::move(b[j++]));
    return out;
  }

  Greater gt_;
  Eq eq_;
  const F& field_;
  std::vector<std::vector<std::pair<Key, V>>> buckets_;
};

/// Full normal form of a module vector against same-slot leading terms; the
/// cofactor records the accumulated multiple of the tracked generator.
/// `order` must be the ring's term order for the stored polynomials, so that
/// monomial multiples of their term lists stay sorted.
template <class K>
ModRemainder<K> mod_reduce(const std::vector<Poly<K>>& comp, const Poly<K>& cof,
                           const std::vector<ModElem<K>>& basis,
                           const MonomialOrder& order, const GBOptions& opt,
                           GBStats& stats) {
  RingPtr<K> ring = cof.ring();
  const auto& field = cof.field();
  std::size_t r = comp.size();
  std::vector<std::vector<const ModElem<K>*>> by_slot(r);
  for (const auto& b : basis) by_slot[b.slot].push_back(&b);
  struct Key {
    Monomial mono;
    std::size_t slot;
  };
  auto gt = [&order](const Key& a, const Key& b) {
    int c = order.compare(a.mono, b.mono);
    if (c != 0) return c > 0;
    return a.slot < b.slot;
  };
  auto eq = [](const Key& a, const Key& b) {
    return a.slot == b.slot && a.mono.exp == b.mono.exp;
  };
  Geobucket<Key, typename K::Value, decltype(gt), decltype(eq), K> work(gt, eq,
                                                                        field);
  for (std::size_t s = 0; s < r; ++s) {
    std::vector<std::pair<Key, typename K::Value>> chunk;
    chunk.reserve(comp[s].term_count());
    for (const auto& t : comp[s].terms()) chunk.push_back({{t.mono, s}, t.coeff});
    work.add_desc(std::move(chunk));
  }

  std::unordered_map<Monomial, typename K::Value, MonoHash, MonoEq> cof_acc;
  for (const auto& t : cof.terms()) cof_acc.emplace(t.mono, t.coeff);

  std::vector<std::vector<Term<K>>> rem(r);
  while (auto top = work.pop_max()) {
    const auto& [key, coeff] = *top;
    const ModElem<K>* red = nullptr;
    for (const auto* b : by_slot[key.slot])
      if (mono_divides(b->lm, key.mono)) {
        red = b;
        break;
      }
    if (!red) {
      rem[key.slot].push_back({key.mono, coeff});
      continue;
    }
    if (++stats.reduction_steps > opt.step_budget)
      throw BudgetExceeded(stats.reduction_steps);
    typename K::Value c = field.mul(coeff, red->lc_inv);
    Monomial u = mono_div(key.mono, red->lm);
    for (std::size_t s = 0; s < r; ++s) {
      const auto& terms = red->comp[s].terms();
      if (terms.empty()) continue;
      std::vector<std::pair<Key, typename K::Value>> chunk;
      chunk.reserve(terms.size());
      for (const auto& t : terms) {
        if (s == red->slot && t.mono == red->lm) continue;
        chunk.push_back({{mono_mul(t.mono, u), s},
                         field.neg(field.mul(t.coeff, c))});
      }
      work.add_desc(std::move(chunk));
    }
    for (const auto& t : red->cof.terms()) {
      Monomial m = mono_mul(t.mono, u);
      auto v = field.mul(t.coeff, c);
      auto jt = cof_acc.find(m);
      if (jt == cof_acc.end()) {
        cof_acc.emplace(m, field.neg(v));
      } else {
        jt->second = field.sub(jt->second, v);
        if (field.is_zero(jt->second)) cof_acc.erase(jt);
      }
    }
  }
  std::vector<Term<K>> cof_terms;
  cof_terms.reserve(cof_acc.size());
  for (auto& [m, v] : cof_acc) cof_terms.push_back({m, std::move(v)});
  ModRemainder<K> out{{}, Poly<K>::from_terms(ring, std::move(cof_terms))};
  for (std::size_t s = 0; s < r; ++s)
    out.comp.push_back(Poly<K>::from_terms(ring, std::move(rem[s])));
  return out;
}

}  // namespace detail

/// (I : J) without auxiliary variables: Buchberger over the submodule of R^r
/// generated by the tuple of J's generators (cofactor tracked) and slot-wise
/// copies of I's generators. A syzygy whose components cancel leaves exactly
/// a cofactor u with u*J inside I, so the zero-reduction cofactors, together
/// with I, generate the colon. Every cofactor is spot-checked.
template <class K>
Ideal<K> colon_ideal(const Ideal<K>& I, const Ideal<K>& J,
                     const GBOptions& opt = {}, GBStats* stats = nullptr) {
  if (J.gens.empty()) {
    // (I : (0)) is the unit ideal
    return Ideal<K>::make(I.ring, {Poly<K>::one(I.ring)});
  }
  if (I.gens.empty()) return Ideal<K>::zero(I.ring);
  const auto& ring = I.ring;
  const auto& field = I.gens[0].field();
  const auto& w = ring->weights();
  auto order = ring->default_order();
  std::size_t r = J.gens.size();
  GBStats local;

  std::vector<detail::ModElem<K>> basis;
  struct PairKey {
    Monomial lcm;
    std::size_t i, j;
  };
  auto pair_less = [&order](const PairKey& a, const PairKey& b) {
    int c = order.compare(a.lcm, b.lcm);
    if (c != 0) return c < 0;
    if (a.i != b.i) return a.i < b.i;
    return a.j < b.j;
  };
  std::set<PairKey, decltype(pair_less)> queue(pair_less);
  std::set<std::pair<std::size_t, std::size_t>> pending;

  auto add_vec = [&](std::vector<Poly<K>> comp, Poly<K> cof) {
    detail::ModElem<K> e{std::move(comp), std::move(cof), 0, {}, field.one()};
    bool found = false;
    for (std::size_t s = 0; s < r; ++s) {
      if (e.comp[s].is_zero()) continue;
      const auto& lt = e.comp[s].leading_term(order);
      if (!found || order.greater(lt.mono, e.lm)) {
        found = true;
        e.slot = s;
        e.lm = lt.mono;
        e.lc_inv = field.inv(lt.coeff);
      }
    }
    std::size_t j = basis.size();
    basis.push_back(std::move(e));
    for (std::size_t i = 0; i < j; ++i) {
      if (basis[i].slot != basis[j].slot) continue;
      queue.insert({mono_lcm(basis[i].lm, basis[j].lm, w), i, j});
      pending.insert({i, j});
    }
  };

  add_vec(J.gens, Poly<K>::one(ring));
  for (const auto& g : I.gens)
    for (std::size_t s = 0; s < r; ++s) {
      std::vector<Poly<K>> comp(r, Poly<K>::zero(ring));
      comp[s] = g;
      add_vec(std::move(comp), Poly<K>::zero(ring));
    }

  std::vector<Poly<K>> cofs;
  while (!queue.empty()) {
    PairKey pk = *queue.begin();
    queue.erase(queue.begin());
    pending.erase({pk.i, pk.j});
    ++local.spairs_considered;

    const auto& fi = basis[pk.i];
    const auto& fj = basis[pk.j];
    // chain criterion; the coprimality shortcut is not sound for modules
    bool skip = false;
    for (std::size_t k = 0; k < basis.size() && !skip; ++k) {
      if (k == pk.i || k == pk.j || basis[k].slot != fi.slot) continue;
      if (!mono_divides(basis[k].lm, pk.lcm)) continue;
      auto key = [](std::size_t a, std::size_t b) {
        return a < b ? std::make_pair(a, b) : std::make_pair(b, a);
      };
      if (!pending.count(key(pk.i, k)) && !pending.count(key(pk.j, k)))
        skip = true;
    }
    if (skip) continue;

    Monomial ui = mono_div(pk.lcm, fi.lm);
    Monomial uj = mono_div(pk.lcm, fj.lm);
    std::vector<Poly<K>> comp;
    comp.reserve(r);
    for (std::size_t s = 0; s < r; ++s)
      comp.push_back(fi.comp[s].term_multiplied(ui, fi.lc_inv) -
                     fj.comp[s].term_multiplied(uj, fj.lc_inv));
    Poly<K> cof = fi.cof.term_multiplied(ui, fi.lc_inv) -
                  fj.cof.term_multiplied(uj, fj.lc_inv);
    auto rem = detail::mod_reduce(comp, std::move(cof), basis, order, opt, local);
    if (rem.comp_zero()) {
      if (!rem.cof.is_zero()) cofs.push_back(std::move(rem.cof));
    } else {
      add_vec(std::move(rem.comp), std::move(rem.cof));
    }
  }

  std::vector<Poly<K>> gens = I.gens;
  gens.insert(gens.end(), cofs.begin(), cofs.end());
  auto result = Ideal<K>::make(ring, std::move(gens));

  auto G = buchberger(I, order, opt);
  local.reduction_steps += G.stats.reduction_steps;
  local.spairs_considered += G.stats.spairs_considered;
  for (const auto& c : cofs)
    for (const auto& h : J.gens)
      if (!gb_member(c * h, G, opt, &local))
        throw std::logic_error("colon_ideal: spot-check u*J in I failed");
  if (stats) {
    stats->reduction_steps += local.reduction_steps;
    stats->spairs_considered += local.spairs_considered;
  }
  return result;
}

/// Generators of I cap K[kept variables], via a block elimination order.
template <class K>
Ideal<K> eliminate(const Ideal<K>& I, const std::vector<bool>& keep,
                   const GBOptions& opt = {}, GBStats* stats = nullptr) {
  const auto& ring = I.ring;
  std::vector<bool> block(ring->nvars());
  for (std::size_t i = 0; i < ring->nvars(); ++i) block[i] = !keep[i];
  auto order = MonomialOrder::elim(block, ring->weights());
  auto G = buchberger(I, order, opt);
  if (stats) {
    stats->reduction_steps += G.stats.reduction_steps;
    stats->spairs_considered += G.stats.spairs_considered;
  }
  std::vector<Poly<K>> out;
  for (const auto& g : G.basis) {
    bool ok = true;
    for (const auto& t : g.terms())
      for (std::size_t i = 0; i < ring->nvars() && ok; ++i)
        if (block[i] && t.mono.exp[i] != 0) ok = false;
    if (ok) out.push_back(g);
  }
  return Ideal<K>::make(ring, std::move(out));
}

/// Radical membership by the auxiliary-variable trick: f vanishes on V(I)
/// iff 1 lies in I + (1 - z*f).
template <class K>
bool radical_member(const Poly<K>& f, const Ideal<K>& I,
                    const GBOptions& opt = {}, GBStats* stats = nullptr) {
  if (f.is_zero()) return true;
  const auto& ring = I.ring;
  std::string aux = detail::fresh_var_name(ring->vars(), "_z");
  auto ext = extend_ring(ring, aux);
  std::size_t zi = ext->nvars() - 1;
  std::vector<Poly<K>> gens;
  for (const auto& g : I.gens) gens.push_back(map_poly(g, ext));
  gens.push_back(Poly<K>::one(ext) -
                 Poly<K>::variable(ext, zi) * map_poly(f, ext));
  auto G = buchberger(Ideal<K>::make(ext, std::move(gens)),
                      ext->default_order(), opt);
  if (stats) {
    stats->reduction_steps += G.stats.reduction_steps;
    stats->spairs_considered += G.stats.spairs_considered;
  }
  return G.contains_one();
}

/// Dimension of the quotient ring: the largest set S of variables such that
/// no leading monomial of the basis is supported inside S.
template <class K>
int krull_dimension(const Ideal<K>& I, const GBOptions& opt = {},
                    GBStats* stats = nullptr) {
  auto G = buchberger(I, I.ring->default_order(), opt);
  if (stats) {
    stats->reduction_steps += G.stats.reduction_steps;
    stats->spairs_considered += G.stats.spairs_considered;
  }
  if (G.contains_one())
    throw std::domain_error("krull_dimension: unit ideal (zero ring)");
  std::size_t n = I.ring->nvars();
  int best = 0;
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    bool independent = true;
    for (const auto& lm : G.lms) {
      bool inside = true;
      for (std::size_t i = 0; i < n && inside; ++i)
        if (lm.exp[i] != 0 && !(mask & (1u << i))) inside = false;
      if (inside) {
        independent = false;
        break;
      }
    }
    if (independent) {
      int sz = __builtin_popcount(mask);
      if (sz > best) best = sz;
    }
  }
  return best;
}

/// Counts standard monomials (outside the leading-term ideal) by weighted
/// degree, for degrees 0..up_to. Generators must be homogeneous.
template <class K>
std::vector<std::int64_t> hilbert_function(const Ideal<K>& I, std::int64_t up_to,
                                           const GBOptions& opt = {},
                                           GBStats* stats = nullptr) {
  for (const auto& g : I.gens)
    if (!g.weighted_degree().homogeneous)
      throw std::invalid_argument("hilbert_function: non-homogeneous generator");
  auto G = buchberger(I, I.ring->default_order(), opt);
  if (stats) {
    stats->reduction_steps += G.stats.reduction_steps;
    stats->spairs_considered += G.stats.spairs_considered;
  }
  std::size_t n = I.ring->nvars();
  const auto& w = I.ring->weights();
  std::vector<std::int64_t> counts(static_cast<std::size_t>(up_to) + 1, 0);

  Monomial current;
  auto standard = [&](const Monomial& m) {
    for (const auto& lm : G.lms)
      if (mono_divides(lm, m)) return false;
    return true;
  };
  // depth-first over exponent vectors with bounded weighted degree
  auto rec = [&](auto&& self, std::size_t var, std::int64_t deg) -> void {
    if (var == n) {
      if (standard(current)) ++counts[static_cast<std::size_t>(deg)];
      return;
    }
    for (std::uint32_t e = 0;; ++e) {
      std::int64_t d = deg + static_cast<std::int64_t>(e) * w[var];
      if (d > up_to) break;
      current.exp[var] = e;
      self(self, var + 1, d);
    }
    current.exp[var] = 0;
  };
  rec(rec, 0, 0);
  return counts;
}

/// Every generator of J lies in I.
template <class K>
bool ideal_contains(const Ideal<K>& I, const Ideal<K>& J,
                    const GBOptions& opt = {}, GBStats* stats = nullptr) {
  auto G = buchberger(I, I.ring->default_order(), opt);
  if (stats) {
    stats->reduction_steps += G.stats.reduction_steps;
    stats->spairs_considered += G.stats.spairs_considered;
  }
  for (const auto& g : J.gens)
    if (!gb_member(g, G, opt, stats)) return false;
  return true;
}

template <class K>
bool ideal_equal(const Ideal<K>& I, const Ideal<K>& J, const GBOptions& opt = {},
                 GBStats* stats = nullptr) {
  return ideal_contains(I, J, opt, stats) && ideal_contains(J, I, opt, stats);
}

}  // namespace frob

#endif  // FROB_GROEBNER_HPP
