#ifndef FROB_FSING_HPP
#define FROB_FSING_HPP

#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "frob/groebner.hpp"

namespace frob {

/// Is q a power p^e of the characteristic? Returns e, or -1.
inline int char_power_exponent(std::uint64_t q, std::int64_t p) {
  if (p <= 0 || q == 0) return -1;
  int e = 0;
  std::uint64_t v = 1;
  while (v < q) {
    v *= static_cast<std::uint64_t>(p);
    ++e;
  }
  return v == q ? e : -1;
}

/// Ideal generated by the q-th powers of the generators; q must be a power
/// of the field characteristic (the bracket ideal is then independent of the
/// chosen generators).
inline Ideal<GF> frobenius_power(const Ideal<GF>& I, std::uint64_t q) {
  std::int64_t p = I.ring->field().characteristic();
  if (char_power_exponent(q, p) < 0)
    throw std::invalid_argument("frobenius_power: q = " + std::to_string(q) +
                                " is not a power of the characteristic " +
                                std::to_string(p));
  std::vector<Poly<GF>> gens;
  for (const auto& g : I.gens) gens.push_back(g.pow(q));
  return Ideal<GF>::make(I.ring, std::move(gens));
}

/// In characteristic p, g -> g^q maps a reduced Groebner basis of I to a
/// reduced Groebner basis of I^[q] (freshman's dream termwise, and leading
/// terms are raised to the q-th power).
inline GroebnerBasis<GF> frobenius_bracket_gb(const GroebnerBasis<GF>& G,
                                              std::uint64_t q) {
  std::int64_t p = G.source.ring->field().characteristic();
  int e = char_power_exponent(q, p);
  if (e < 0) throw std::invalid_argument("frobenius_bracket_gb: invalid q");
  (void)e;
  GroebnerBasis<GF> H{G.order, {}, {}, Ideal<GF>::zero(G.source.ring), G.stats};
  for (std::size_t i = 0; i < G.basis.size(); ++i) {
    std::vector<Term<GF>> terms;
    for (const auto& t : G.basis[i].terms()) {
      // (c*u)^q = c^q * u^q and c^q = c by Fermat
      terms.push_back({mono_pow(t.mono, q), t.coeff});
    }
    H.basis.push_back(Poly<GF>::from_terms(G.source.ring, std::move(terms)));
    H.lms.push_back(mono_pow(G.lms[i], q));
  }
  H.source = Ideal<GF>::make(G.source.ring, H.basis);
  return H;
}

struct FrobeniusWitness {
  enum class Kind { FrobeniusClosure, TightClosure, NoneUpTo, Failed };
  Kind kind;
  int e = -1;      // witnessing exponent for closure kinds
  int e_max = -1;  // search bound for NoneUpTo
  std::vector<std::pair<std::uint64_t, bool>> checks;  // (q, containment held)
  std::string note;

  bool found() const {
    return kind == Kind::FrobeniusClosure || kind == Kind::TightClosure;
  }
};

/// Smallest e <= e_max with x^{p^e} in I^[p^e] + I0 (membership in the
/// quotient by I0; bracket powers taken of I's generators only). A NoneUpTo
/// result is explicitly not a disproof.
inline FrobeniusWitness frobenius_closure_member(const Poly<GF>& x,
                                                 const Ideal<GF>& I,
                                                 const Ideal<GF>& I0, int e_max,
                                                 const GBOptions& opt = {},
                                                 GBStats* stats = nullptr) {
  if (e_max < 0) throw std::invalid_argument("e_max must be nonnegative");
  std::int64_t p = I.ring->field().characteristic();
  FrobeniusWitness w{FrobeniusWitness::Kind::NoneUpTo, -1, e_max, {}, ""};
  std::uint64_t q = 1;
  for (int e = 0; e <= e_max; ++e) {
    auto target = ideal_sum(frobenius_power(I, q), I0);
    bool in = ideal_member(x.pow(q), target, opt, stats);
    w.checks.push_back({q, in});
    if (in) {
      w.kind = FrobeniusWitness::Kind::FrobeniusClosure;
      w.e = e;
      return w;
    }
    q *= static_cast<std::uint64_t>(p);
  }
  w.note = "no witness up to e_max; not a proof of non-membership";
  return w;
}

/// Verifies c*x^q in I^[q] + I0 for each q in the list. All-pass certifies
/// exactly the checked exponents, nothing more.
inline FrobeniusWitness tight_closure_witness_check(
    const Poly<GF>& x, const Ideal<GF>& I, const Ideal<GF>& I0,
    const Poly<GF>& c, const std::vector<std::uint64_t>& exponents,
    const GBOptions& opt = {}, GBStats* stats = nullptr) {
  std::int64_t p = I.ring->field().characteristic();
  if (c.is_zero() || (!I0.gens.empty() && ideal_member(c, I0, opt, stats)))
    throw std::invalid_argument(
        "tight closure multiplier c vanishes in the quotient ring");
  FrobeniusWitness w{FrobeniusWitness::Kind::TightClosure, -1, -1, {}, ""};
  w.note =
      "c in R-degrees checked against c not in I0 only; c avoiding all minimal "
      "primes is taken from the ambient ring being a domain";
  for (auto q : exponents) {
    if (char_power_exponent(q, p) < 0)
      throw std::invalid_argument("tight closure: q = " + std::to_string(q) +
                                  " is not a power of the characteristic");
    auto target = ideal_sum(frobenius_power(I, q), I0);
    bool in = ideal_member(c * x.pow(q), target, opt, stats);
    w.checks.push_back({q, in});
    if (!in) w.kind = FrobeniusWitness::Kind::Failed;
  }
  return w;
}

struct PurityVerdict {
  std::int64_t p;
  bool f_pure;
  // F-pure: a colon-ideal generator with a monomial outside m^[p].
  // Not F-pure: all listed colon generators lie in m^[p].
  std::vector<Poly<GF>> colon_generators;
  int certificate_index = -1;
};

/// Does some term of f have every exponent below q? Membership outside the
/// monomial ideal m^[q] is decided termwise, never by Groebner bases.
inline bool has_term_outside_bracket_m(const Poly<GF>& f, std::uint64_t q) {
  std::size_t n = f.ring()->nvars();
  for (const auto& t : f.terms()) {
    bool all_small = true;
    for (std::size_t i = 0; i < n && all_small; ++i)
      if (t.mono.exp[i] >= q) all_small = false;
    if (all_small) return true;
  }
  return false;
}

/// Fedder-type F-purity test at the irrelevant maximal ideal: R = P/I0 is
/// F-pure iff (I0^[p] : I0) is not contained in m^[p]. Run at e = 1, which
/// is exact for F-purity.
inline PurityVerdict fedder_fpurity(const Ideal<GF>& I0, const GBOptions& opt = {},
                                    GBStats* stats = nullptr) {
  std::int64_t p = I0.ring->field().characteristic();
  if (I0.gens.empty()) {
    // (0 : 0) is the unit ideal, and 1 lies outside m^[p]
    PurityVerdict v{p, true, {Poly<GF>::one(I0.ring)}, 0};
    return v;
  }
  auto G = buchberger(I0, I0.ring->default_order(), opt);
  if (stats) {
    stats->reduction_steps += G.stats.reduction_steps;
    stats->spairs_considered += G.stats.spairs_considered;
  }
  if (G.contains_one())
    throw std::domain_error("fedder_fpurity: unit ideal");
  // generators of I0^[p] taken from the reduced basis; the bracket ideal is
  // generator-independent and this seeds the colon computation with a basis
  auto bracket = Ideal<GF>::make(I0.ring, frobenius_bracket_gb(G, static_cast<std::uint64_t>(p)).basis);
  auto colon = colon_ideal(bracket, I0, opt, stats);
  PurityVerdict v{p, false, colon.gens, -1};
  for (std::size_t i = 0; i < colon.gens.size(); ++i)
    if (has_term_outside_bracket_m(colon.gens[i], static_cast<std::uint64_t>(p))) {
      v.f_pure = true;
      v.certificate_index = static_cast<int>(i);
      break;
    }
  return v;
}

/// True iff the hypersurface V(f) is regular away from V(c), i.e. c lies in
/// the radical of (f) + Jacobian(f).
inline bool validate_localization(const Poly<GF>& f, const Poly<GF>& c,
                                  const GBOptions& opt = {},
                                  GBStats* stats = nullptr) {
  std::vector<Poly<GF>> gens{f};
  for (std::size_t i = 0; i < f.ring()->nvars(); ++i) {
    auto d = f.derivative(i);
    if (!d.is_zero()) gens.push_back(std::move(d));
  }
  return radical_member(c, Ideal<GF>::make(f.ring(), std::move(gens)), opt, stats);
}

/// Strong F-regularity search for the hypersurface P/(f) (f irreducible,
/// asserted by the caller): a witness is the smallest e <= e_max such that
/// c*f^{p^e - 1} has a monomial outside m^[p^e].
inline FrobeniusWitness glassbrenner_hypersurface(const Poly<GF>& f,
                                                  const Poly<GF>& c, int e_max,
                                                  const GBOptions& opt = {},
                                                  GBStats* stats = nullptr) {
  if (c.is_zero()) throw std::invalid_argument("glassbrenner: c must be nonzero");
  if (!validate_localization(f, c, opt, stats))
    throw std::invalid_argument(
        "glassbrenner: V(f) is not regular away from V(c)");
  std::int64_t p = f.ring()->field().characteristic();
  FrobeniusWitness w{FrobeniusWitness::Kind::NoneUpTo, -1, e_max, {}, ""};
  std::uint64_t q = 1;
  for (int e = 1; e <= e_max; ++e) {
    q *= static_cast<std::uint64_t>(p);
    Poly<GF> g = c * f.pow(q - 1);
    bool ok = has_term_outside_bracket_m(g, q);
    w.checks.push_back({q, ok});
    if (ok) {
      w.kind = FrobeniusWitness::Kind::FrobeniusClosure;  // witness exponent
      w.e = e;
      w.note = "strong F-regularity witness: c*f^(q-1) outside m^[q]";
      return w;
    }
  }
  w.note = "inconclusive: no splitting witness up to e_max";
  return w;
}

namespace detail {

/// Determinant of a small dense matrix of polynomials by Laplace expansion.
template <class K>
Poly<K> poly_det(const std::vector<std::vector<Poly<K>>>& m) {
  std::size_t n = m.size();
  if (n == 1) return m[0][0];
  Poly<K> acc = Poly<K>::zero(m[0][0].ring());
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<Poly<K>>> sub;
    for (std::size_t r = 1; r < n; ++r) {
      std::vector<Poly<K>> row;
      for (std::size_t c = 0; c < n; ++c)
        if (c != j) row.push_back(m[r][c]);
      sub.push_back(std::move(row));
    }
    Poly<K> term = m[0][j] * poly_det(sub);
    acc = (j % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

inline void subsets_of_size(std::size_t n, std::size_t k,
                            std::vector<std::vector<std::size_t>>& out) {
  std::vector<std::size_t> cur;
  auto rec = [&](auto&& self, std::size_t start) -> void {
    if (cur.size() == k) {
      out.push_back(cur);
      return;
    }
    for (std::size_t i = start; i < n; ++i) {
      cur.push_back(i);
      self(self, i + 1);
      cur.pop_back();
    }
  };
  rec(rec, 0);
}

}  // namespace detail

/// Jacobian criterion ideal: I plus the size-`height` minors of the Jacobian
/// matrix of its generators.
template <class K>
Ideal<K> singular_locus_ideal(const Ideal<K>& I, int height) {
  std::size_t s = I.gens.size();
  std::size_t n = I.ring->nvars();
  if (height <= 0 || static_cast<std::size_t>(height) > s ||
      static_cast<std::size_t>(height) > n)
    throw std::invalid_argument("singular_locus_ideal: height out of range");
  std::vector<std::vector<Poly<K>>> jac(s);
  for (std::size_t i = 0; i < s; ++i)
    for (std::size_t j = 0; j < n; ++j) jac[i].push_back(I.gens[i].derivative(j));

  std::vector<std::vector<std::size_t>> row_sets, col_sets;
  detail::subsets_of_size(s, static_cast<std::size_t>(height), row_sets);
  detail::subsets_of_size(n, static_cast<std::size_t>(height), col_sets);

  std::vector<Poly<K>> gens = I.gens;
  for (const auto& rs : row_sets)
    for (const auto& cs : col_sets) {
      std::vector<std::vector<Poly<K>>> sub;
      for (auto r : rs) {
        std::vector<Poly<K>> row;
        for (auto c : cs) row.push_back(jac[r][c]);
        sub.push_back(std::move(row));
      }
      auto d = detail::poly_det(sub);
      if (!d.is_zero()) gens.push_back(std::move(d));
    }
  return Ideal<K>::make(I.ring, std::move(gens));
}

/// Radical equality via mutual radical membership of generators.
template <class K>
bool radical_equal(const Ideal<K>& I, const Ideal<K>& J, const GBOptions& opt = {},
                   GBStats* stats = nullptr) {
  for (const auto& g : I.gens)
    if (!radical_member(g, J, opt, stats)) return false;
  for (const auto& g : J.gens)
    if (!radical_member(g, I, opt, stats)) return false;
  return true;
}

}  // namespace frob

#endif  // FROB_FSING_HPP
