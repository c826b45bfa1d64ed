#ifndef FROB_CLAIMS_HPP
#define FROB_CLAIMS_HPP

#include <string>
#include <vector>

namespace frob {

struct ClaimInfo {
  std::string id;
  std::string statement;
  std::string parameters;
};

/// The stable claim identifiers the CLI accepts, with the statement each one
/// checks and the parameters it consumes.
inline const std::vector<ClaimInfo>& claim_catalog() {
  static const std::vector<ClaimInfo> catalog{
      {"lemma-4.2",
       "(b^n t^(m-1))^(2mk+1) lies in (a^(2mk+1), d^(2mk+1)) modulo the minor "
       "ideal I_{m,n}, by Groebner membership over F_p",
       "--p --m --n --k"},
      {"lemma-4.2-replay",
       "characteristic-free replay of the reduction chain behind lemma-4.2 "
       "over the rationals: every step an exact identity or inequality",
       "--m --n --k"},
      {"prop-4.3-quotient-fregular",
       "the t=0 quotient S is F-regular: Veronese presentation from the "
       "hypersurface A^2 = XY(X^n - Y) plus a splitting witness",
       "--p --n [--e-max]"},
      {"prop-4.4-not-fpure",
       "R_{m,n} over F_p is not F-pure (Fedder colon criterion, with an "
       "explicit e=1 Frobenius-closure witness when p = 2mk+1)",
       "--p --m --n"},
      {"prop-4.4-not-fregular",
       "b^n t^(m-1) is outside (a, d)R yet a fixed multiplier works for every "
       "q in the window, so the tight-closure witness pattern holds",
       "--p --m --n [--q-window]"},
      {"rem-4.1-hsop",
       "dim R_{m,n} = 3 and the images of t, c, d form a homogeneous system "
       "of parameters",
       "--m --n [--p]"},
      {"rem-4.1-nzd", "(I_{m,n} : t) = I_{m,n}, so t is a nonzerodivisor",
       "--m --n [--p]"},
      {"sec6-singular-locus",
       "the Jacobian-criterion ideal of I_{m,n} has radical (a, b, c(c+t^m), "
       "d), plus the hypersurface identities used with it",
       "--p --m --n"},
      {"thm-1.1-bundle",
       "the headline package: structure facts, F-regular quotient S, failure "
       "of F-regularity for R, and failure of F-purity when gcd(p, m) = 1",
       "--p --m --n"},
      {"sec5-sweep",
       "per-prime sweep of the not-F-pure and quotient-F-regular checks",
       "--m --n --primes"},
      {"prop-4.3-hilbert-crosscheck",
       "section dimensions of E = (1/2)V_X + (1/2)V_Y + (1/2n)V_XY agree with "
       "the weighted Hilbert function of S degree by degree",
       "--n [--up-to]"},
  };
  return catalog;
}

inline bool claim_exists(const std::string& id) {
  for (const auto& c : claim_catalog())
    if (c.id == id) return true;
  return false;
}

}  // namespace frob

#endif  // FROB_CLAIMS_HPP
