#ifndef FROB_MONOMIAL_HPP
#define FROB_MONOMIAL_HPP

#include <array>
#include <cstdint>
#include <stdexcept>
#include <vector>

namespace frob {

inline constexpr std::size_t kMaxVars = 8;

/// Exponents beyond this are rejected; family instances need at most ~10^2.
inline constexpr std::uint32_t kMaxExponent = 1'000'000;

/// Exponent vector with cached weighted degree. The cache is maintained by
/// the operations below, which all receive the ambient weights.
struct Monomial {
  std::array<std::uint32_t, kMaxVars> exp{};
  std::int64_t wdeg = 0;

  bool operator==(const Monomial& o) const { return exp == o.exp; }
  bool operator!=(const Monomial& o) const { return exp != o.exp; }

  bool is_one() const {
    for (auto e : exp)
      if (e != 0) return false;
    return true;
  }
};

inline std::int64_t weighted_degree_of(const Monomial& m,
                                       const std::vector<std::int64_t>& w) {
  std::int64_t d = 0;
  for (std::size_t i = 0; i < w.size(); ++i)
    d += static_cast<std::int64_t>(m.exp[i]) * w[i];
  return d;
}

inline Monomial mono_one() { return Monomial{}; }

inline Monomial mono_var(std::size_t i, std::uint32_t k,
                         const std::vector<std::int64_t>& w) {
  if (k > kMaxExponent) throw std::overflow_error("monomial exponent too large");
  Monomial m;
  m.exp[i] = k;
  m.wdeg = static_cast<std::int64_t>(k) * w[i];
  return m;
}

inline Monomial mono_mul(const Monomial& a, const Monomial& b) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    std::uint64_t e = std::uint64_t{a.exp[i]} + b.exp[i];
    if (e > kMaxExponent) throw std::overflow_error("monomial exponent too large");
    r.exp[i] = static_cast<std::uint32_t>(e);
  }
  r.wdeg = a.wdeg + b.wdeg;
  return r;
}

/// Does a divide b?
inline bool mono_divides(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (a.exp[i] > b.exp[i]) return false;
  return true;
}

/// b / a; caller guarantees divisibility.
inline Monomial mono_div(const Monomial& b, const Monomial& a) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) r.exp[i] = b.exp[i] - a.exp[i];
  r.wdeg = b.wdeg - a.wdeg;
  return r;
}

inline Monomial mono_lcm(const Monomial& a, const Monomial& b,
                         const std::vector<std::int64_t>& w) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i)
    r.exp[i] = a.exp[i] > b.exp[i] ? a.exp[i] : b.exp[i];
  r.wdeg = weighted_degree_of(r, w);
  return r;
}

inline bool mono_coprime(const Monomial& a, const Monomial& b) {
  for (std::size_t i = 0; i < kMaxVars; ++i)
    if (a.exp[i] != 0 && b.exp[i] != 0) return false;
  return true;
}

inline Monomial mono_pow(const Monomial& a, std::uint64_t k) {
  Monomial r;
  for (std::size_t i = 0; i < kMaxVars; ++i) {
    std::uint64_t e = a.exp[i] * k;
    if (e > kMaxExponent) throw std::overflow_error("monomial exponent too large");
    r.exp[i] = static_cast<std::uint32_t>(e);
  }
  r.wdeg = a.wdeg * static_cast<std::int64_t>(k);
  return r;
}

}  // namespace frob

#endif  // FROB_MONOMIAL_HPP
