#ifndef FROB_LINEAR_ORACLE_HPP
#define FROB_LINEAR_ORACLE_HPP

#include <cstdint>
#include <map>
#include <stdexcept>
#include <vector>

#include "frob/groebner.hpp"

namespace frob {

enum class OracleAnswer { True, False, Inconclusive };

namespace detail {

/// All monomials of exact weighted degree d.
inline std::vector<Monomial> monomials_of_degree(
    std::size_t nvars, const std::vector<std::int64_t>& w, std::int64_t d) {
  std::vector<Monomial> out;
  Monomial cur;
  auto rec = [&](auto&& self, std::size_t var, std::int64_t left) -> void {
    if (var == nvars) {
      if (left == 0) {
        cur.wdeg = d - left;
        out.push_back(cur);
      }
      return;
    }
    for (std::uint32_t e = 0;; ++e) {
      std::int64_t used = static_cast<std::int64_t>(e) * w[var];
      if (used > left) break;
      cur.exp[var] = e;
      self(self, var + 1, left - used);
    }
    cur.exp[var] = 0;
  };
  rec(rec, 0, d);
  for (auto& m : out) m.wdeg = d;
  return out;
}

}  // namespace detail

/// Independent membership oracle for homogeneous inputs: f lies in I iff the
/// exact linear system "f = sum of homogeneous cofactors times generators"
/// (cofactor degrees forced by homogeneity) is solvable. Exhaustive within
/// the degree cap; no Groebner machinery involved.
template <class K>
OracleAnswer ideal_member_linear_oracle(const Poly<K>& f, const Ideal<K>& I,
                                        std::int64_t degree_cap) {
  if (f.is_zero()) return OracleAnswer::True;
  auto di = f.weighted_degree();
  if (!di.homogeneous)
    throw std::invalid_argument("linear oracle requires homogeneous f");
  for (const auto& g : I.gens)
    if (!g.weighted_degree().homogeneous)
      throw std::invalid_argument("linear oracle requires homogeneous generators");
  std::int64_t d = di.degree;
  if (d > degree_cap) return OracleAnswer::Inconclusive;

  const auto& ring = f.ring();
  const auto& field = f.field();
  const auto& w = ring->weights();
  std::size_t n = ring->nvars();

  // row index: monomials of weighted degree d
  auto rows = detail::monomials_of_degree(n, w, d);
  std::map<std::array<std::uint32_t, kMaxVars>, std::size_t> row_of;
  for (std::size_t r = 0; r < rows.size(); ++r) row_of[rows[r].exp] = r;

  // columns: (generator, cofactor monomial of the forced degree)
  std::vector<std::vector<typename K::Value>> cols;
  for (const auto& g : I.gens) {
    std::int64_t dg = g.weighted_degree().degree;
    if (dg > d) continue;
    for (const auto& mu : detail::monomials_of_degree(n, w, d - dg)) {
      std::vector<typename K::Value> col(rows.size(), field.zero());
      for (const auto& t : g.terms()) {
        Monomial m = mono_mul(t.mono, mu);
        col[row_of.at(m.exp)] = field.add(col[row_of.at(m.exp)], t.coeff);
      }
      cols.push_back(std::move(col));
    }
  }

  std::vector<typename K::Value> rhs(rows.size(), field.zero());
  for (const auto& t : f.terms()) rhs[row_of.at(t.mono.exp)] = t.coeff;

  // Gaussian elimination on the augmented system, exact arithmetic
  std::size_t nrows = rows.size(), ncols = cols.size();
  std::vector<std::vector<typename K::Value>> a(nrows);
  for (std::size_t r = 0; r < nrows; ++r) {
    a[r].reserve(ncols + 1);
    for (std::size_t c = 0; c < ncols; ++c) a[r].push_back(cols[c][r]);
    a[r].push_back(rhs[r]);
  }
  std::size_t rank_row = 0;
  for (std::size_t c = 0; c < ncols && rank_row < nrows; ++c) {
    std::size_t piv = nrows;
    for (std::size_t r = rank_row; r < nrows; ++r)
      if (!field.is_zero(a[r][c])) {
        piv = r;
        break;
      }
    if (piv == nrows) continue;
    std::swap(a[rank_row], a[piv]);
    auto inv = field.inv(a[rank_row][c]);
    for (std::size_t cc = c; cc <= ncols; ++cc)
      a[rank_row][cc] = field.mul(a[rank_row][cc], inv);
    for (std::size_t r = 0; r < nrows; ++r) {
      if (r == rank_row || field.is_zero(a[r][c])) continue;
      auto factor = a[r][c];
      for (std::size_t cc = c; cc <= ncols; ++cc)
        a[r][cc] = field.sub(a[r][cc], field.mul(factor, a[rank_row][cc]));
    }
    ++rank_row;
  }
  for (std::size_t r = 0; r < nrows; ++r) {
    bool all_zero = true;
    for (std::size_t c = 0; c < ncols; ++c)
      if (!field.is_zero(a[r][c])) {
        all_zero = false;
        break;
      }
    if (all_zero && !field.is_zero(a[r][ncols])) return OracleAnswer::False;
  }
  return OracleAnswer::True;
}

}  // namespace frob

#endif  // FROB_LINEAR_ORACLE_HPP
