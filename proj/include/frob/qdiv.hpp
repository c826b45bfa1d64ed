#ifndef FROB_QDIV_HPP
#define FROB_QDIV_HPP

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace frob {

/// Formal Q-linear combination of points of the projective line. Labels are
/// arbitrary identifiers (the family uses VX, VY, VXY); coefficients exact
/// rationals kept in lowest terms by GMP canonicalization.
class QDivisor {
 public:
  using Entry = std::pair<std::string, mpq_class>;

  QDivisor() = default;

  static QDivisor make(std::vector<Entry> entries) {
    QDivisor d;
    std::sort(entries.begin(), entries.end(),
              [](const Entry& a, const Entry& b) { return a.first < b.first; });
    for (auto& e : entries) {
      if (!d.support_.empty() && d.support_.back().first == e.first)
        throw std::invalid_argument("duplicate divisor point " + e.first);
      e.second.canonicalize();
      if (e.second != 0) d.support_.push_back(std::move(e));
    }
    return d;
  }

  const std::vector<Entry>& support() const { return support_; }

  mpq_class coefficient(const std::string& label) const {
    for (const auto& [l, c] : support_)
      if (l == label) return c;
    return mpq_class(0);
  }

  mpq_class degree() const {
    mpq_class d = 0;
    for (const auto& [l, c] : support_) d += c;
    return d;
  }

  bool is_integral() const {
    for (const auto& [l, c] : support_)
      if (c.get_den() != 1) return false;
    return true;
  }

  QDivisor scaled(const mpq_class& s) const {
    std::vector<Entry> out;
    for (const auto& [l, c] : support_) out.push_back({l, c * s});
    return make(std::move(out));
  }

  QDivisor operator+(const QDivisor& o) const {
    std::vector<Entry> out = support_;
    for (const auto& e : o.support_) {
      bool found = false;
      for (auto& f : out)
        if (f.first == e.first) {
          f.second += e.second;
          found = true;
          break;
        }
      if (!found) out.push_back(e);
    }
    return make(std::move(out));
  }

  QDivisor operator-() const { return scaled(mpq_class(-1)); }
  QDivisor operator-(const QDivisor& o) const { return *this + (-o); }

  bool operator==(const QDivisor& o) const { return support_ == o.support_; }
  bool operator!=(const QDivisor& o) const { return !(*this == o); }

 private:
  std::vector<Entry> support_;
};

/// Pointwise floor (greatest integer <= coefficient).
inline QDivisor floor_divisor(const QDivisor& d) {
  std::vector<QDivisor::Entry> out;
  for (const auto& [l, c] : d.support()) {
    mpz_class f;
    mpz_fdiv_q(f.get_mpz_t(), c.get_num().get_mpz_t(), c.get_den().get_mpz_t());
    out.push_back({l, mpq_class(f)});
  }
  return QDivisor::make(std::move(out));
}

/// The denominator-determined fractional part: coefficient p_i/q_i in lowest
/// terms contributes (q_i - 1)/q_i, regardless of the integer part.
inline QDivisor fractional_part_paper(const QDivisor& d) {
  std::vector<QDivisor::Entry> out;
  for (const auto& [l, c] : d.support()) {
    mpz_class q = c.get_den();
    out.push_back({l, mpq_class(q - 1, q)});
  }
  return QDivisor::make(std::move(out));
}

struct DivisorClassData {
  std::int64_t floor_degree;
  std::int64_t h0;
  std::int64_t h1;
};

/// On P^1 the cohomology of O(D) is determined by deg of the floor:
/// h0 = max(0, deg+1), h1 = max(0, -deg-1).
inline DivisorClassData divisor_class_data(const QDivisor& d) {
  mpq_class deg = floor_divisor(d).degree();
  std::int64_t n = mpz_class(deg.get_num()).get_si();  // floor is integral
  return {n, std::max<std::int64_t>(0, n + 1), std::max<std::int64_t>(0, -n - 1)};
}

inline std::int64_t h0(const QDivisor& d) { return divisor_class_data(d).h0; }
inline std::int64_t h1(const QDivisor& d) { return divisor_class_data(d).h1; }

/// Section dimensions h0(iE) for i = 0..up_to; E must be ample (deg > 0).
inline std::vector<std::int64_t> section_dims(const QDivisor& e,
                                              std::int64_t up_to) {
  if (e.degree() <= 0)
    throw std::invalid_argument("section_dims: divisor is not ample");
  std::vector<std::int64_t> out;
  for (std::int64_t i = 0; i <= up_to; ++i)
    out.push_back(h0(e.scaled(mpq_class(i))));
  return out;
}

/// Verifies -[-nE] = [nE + E'] pointwise for every integer n in [lo, hi].
inline bool floor_identity_check(const QDivisor& e, std::int64_t lo,
                                 std::int64_t hi) {
  QDivisor frac = fractional_part_paper(e);
  for (std::int64_t n = lo; n <= hi; ++n) {
    QDivisor ne = e.scaled(mpq_class(n));
    QDivisor lhs = -floor_divisor(-ne);
    QDivisor rhs = floor_divisor(ne + frac);
    if (lhs != rhs) return false;
  }
  return true;
}

struct FpurityHeuristic {
  mpq_class degree;     // deg p(K + E'), exact
  std::int64_t h1_value;  // h1 of the floor of p(K + E')
};

/// Degree bookkeeping for the Frobenius action on the socle: K is -2 times a
/// fresh base point (K is integral, so the choice affects no computed
/// number). Reports numbers only; issues no purity verdict.
inline FpurityHeuristic fpurity_degree_heuristic(const QDivisor& e,
                                                 std::int64_t p) {
  QDivisor frac = fractional_part_paper(e);
  std::string base = "_O";
  while (frac.coefficient(base) != 0) base += "_";
  QDivisor canonical = QDivisor::make({{base, mpq_class(-2)}});
  QDivisor d = (canonical + frac).scaled(mpq_class(p));
  return {d.degree(), h1(d)};
}

/// Parses the `coeff@label` comma-separated divisor format, e.g.
/// "1/2@VX, 1/2@VY, 1/4@VXY".
inline QDivisor parse_divisor(const std::string& text) {
  std::vector<QDivisor::Entry> entries;
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos])))
      ++pos;
  };
  skip_ws();
  if (pos == text.size()) return QDivisor::make({});
  for (;;) {
    skip_ws();
    std::size_t at = text.find('@', pos);
    if (at == std::string::npos)
      throw std::invalid_argument("divisor entry missing '@': " + text);
    std::string coeff = text.substr(pos, at - pos);
    while (!coeff.empty() && std::isspace(static_cast<unsigned char>(coeff.back())))
      coeff.pop_back();
    std::size_t end = text.find(',', at);
    std::string label = text.substr(
        at + 1, end == std::string::npos ? std::string::npos : end - at - 1);
    // trim label
    while (!label.empty() && std::isspace(static_cast<unsigned char>(label.front())))
      label.erase(label.begin());
    while (!label.empty() && std::isspace(static_cast<unsigned char>(label.back())))
      label.pop_back();
    if (label.empty()) throw std::invalid_argument("empty divisor point label");
    mpq_class c;
    if (c.set_str(coeff, 10) != 0)
      throw std::invalid_argument("bad rational coefficient '" + coeff + "'");
    c.canonicalize();
    entries.push_back({label, c});
    if (end == std::string::npos) break;
    pos = end + 1;
  }
  return QDivisor::make(std::move(entries));
}

inline std::string render_divisor(const QDivisor& d) {
  std::string out;
  for (const auto& [l, c] : d.support()) {
    if (!out.empty()) out += ", ";
    out += c.get_str() + "@" + l;
  }
  return out.empty() ? "0" : out;
}

}  // namespace frob

#endif  // FROB_QDIV_HPP
