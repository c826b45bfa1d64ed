#include "catch2/catch_amalgamated.hpp"

#include "frob/fsing.hpp"
#include "frob/parse.hpp"

using namespace frob;

namespace {

Ideal<GF> ideal_of(const RingPtr<GF>& R, std::initializer_list<const char*> ss) {
  std::vector<Poly<GF>> gens;
  for (auto s : ss) gens.push_back(parse_polynomial<GF>(s, R));
  return Ideal<GF>::make(R, std::move(gens));
}

}  // namespace

TEST_CASE("characteristic power detection") {
  REQUIRE(char_power_exponent(1, 5) == 0);
  REQUIRE(char_power_exponent(5, 5) == 1);
  REQUIRE(char_power_exponent(125, 5) == 3);
  REQUIRE(char_power_exponent(6, 5) == -1);
  REQUIRE(char_power_exponent(10, 5) == -1);
  REQUIRE(char_power_exponent(0, 5) == -1);
  REQUIRE(char_power_exponent(289, 17) == 2);
}

TEST_CASE("bracket powers") {
  auto R = make_ring<GF>(GF(5), {"x", "y"}, {1, 1});
  auto I = ideal_of(R, {"x + y", "x*y - 1"});
  auto Iq = frobenius_power(I, 5);
  REQUIRE(Iq.gens[0] == parse_polynomial<GF>("x^5 + y^5", R));
  REQUIRE(Iq.gens[1] == parse_polynomial<GF>("x^5*y^5 - 1", R));
  REQUIRE_THROWS_AS(frobenius_power(I, 10), std::invalid_argument);
  REQUIRE_THROWS_AS(frobenius_power(I, 4), std::invalid_argument);

  // raising a reduced basis termwise gives the reduced basis of I^[q]
  auto G = buchberger(ideal_of(R, {"x^2", "x*y + y^2"}), R->default_order());
  auto H = frobenius_bracket_gb(G, 25);
  auto direct = buchberger(frobenius_power(Ideal<GF>::make(R, G.basis), 25),
                           R->default_order());
  REQUIRE(H.basis.size() == direct.basis.size());
  for (std::size_t i = 0; i < H.basis.size(); ++i)
    REQUIRE(H.basis[i] == direct.basis[i]);
}

TEST_CASE("frobenius closure witness search") {
  // in F_2[x,z]/(z^2 - x^3): z is not in (x), but z^2 = x^3 lies in (x^2),
  // so z lies in the Frobenius closure with witness e = 1
  auto R = make_ring<GF>(GF(2), {"x", "z"}, {2, 3});
  auto I = ideal_of(R, {"x"});
  auto I0 = ideal_of(R, {"z^2 - x^3"});
  auto z = parse_polynomial<GF>("z", R);
  auto w = frobenius_closure_member(z, I, I0, 3);
  REQUIRE(w.kind == FrobeniusWitness::Kind::FrobeniusClosure);
  REQUIRE(w.e == 1);
  REQUIRE(w.checks.size() == 2);
  REQUIRE(w.checks[0] == std::pair<std::uint64_t, bool>{1, false});
  REQUIRE(w.checks[1] == std::pair<std::uint64_t, bool>{2, true});
  REQUIRE(w.found());

  // independent variable never enters: bounded search reports NoneUpTo
  auto S = make_ring<GF>(GF(2), {"x", "y"}, {1, 1});
  auto none = frobenius_closure_member(parse_polynomial<GF>("y", S),
                                       ideal_of(S, {"x"}),
                                       Ideal<GF>::zero(S), 2);
  REQUIRE(none.kind == FrobeniusWitness::Kind::NoneUpTo);
  REQUIRE_FALSE(none.found());
  REQUIRE(none.e_max == 2);
  REQUIRE(!none.note.empty());
  REQUIRE_THROWS_AS(
      frobenius_closure_member(z, I, I0, -1), std::invalid_argument);
}

TEST_CASE("tight closure witness on the cubic cone") {
  // R = F_7[x,y,z]/(x^3+y^3+z^3): z^2 lies outside (x,y) but c*z^(2q) with
  // c = z^3 lands in (x^q, y^q) + (f) for every q, since z^3 = -(x^3+y^3)
  auto R = make_ring<GF>(GF(7), {"x", "y", "z"}, {1, 1, 1});
  auto I = ideal_of(R, {"x", "y"});
  auto I0 = ideal_of(R, {"x^3 + y^3 + z^3"});
  auto z2 = parse_polynomial<GF>("z^2", R);
  auto c = parse_polynomial<GF>("z^3", R);
  REQUIRE_FALSE(ideal_member(z2, ideal_sum(I, I0)));
  auto w = tight_closure_witness_check(z2, I, I0, c, {1, 7, 49});
  REQUIRE(w.kind == FrobeniusWitness::Kind::TightClosure);
  for (const auto& [q, ok] : w.checks) REQUIRE(ok);

  // a failing exponent flips the verdict
  auto bad = tight_closure_witness_check(parse_polynomial<GF>("z", R), I, I0,
                                         Poly<GF>::one(R), {7});
  REQUIRE(bad.kind == FrobeniusWitness::Kind::Failed);

  REQUIRE_THROWS_AS(
      tight_closure_witness_check(z2, I, I0, Poly<GF>::zero(R), {7}),
      std::invalid_argument);
  // c vanishing in the quotient is rejected
  REQUIRE_THROWS_AS(tight_closure_witness_check(
                        z2, I, I0, parse_polynomial<GF>("x^3 + y^3 + z^3", R),
                        {7}),
                    std::invalid_argument);
  REQUIRE_THROWS_AS(tight_closure_witness_check(z2, I, I0, c, {6}),
                    std::invalid_argument);
}

TEST_CASE("terms outside the bracket maximal ideal") {
  auto R = make_ring<GF>(GF(5), {"x", "y"}, {1, 1});
  REQUIRE(has_term_outside_bracket_m(parse_polynomial<GF>("x^4*y^4", R), 5));
  REQUIRE_FALSE(has_term_outside_bracket_m(parse_polynomial<GF>("x^5", R), 5));
  REQUIRE(has_term_outside_bracket_m(
      parse_polynomial<GF>("x^9*y + x^2*y^3", R), 5));
  REQUIRE_FALSE(has_term_outside_bracket_m(Poly<GF>::zero(R), 5));
  REQUIRE(has_term_outside_bracket_m(Poly<GF>::one(R), 5));
}

TEST_CASE("fedder criterion on frozen hypersurfaces") {
  // zero ideal: the ambient polynomial ring is F-pure in any characteristic
  for (std::int64_t p : {3, 5, 17}) {
    auto R = make_ring<GF>(GF(p), {"x", "y", "z"}, {1, 1, 1});
    auto v = fedder_fpurity(Ideal<GF>::zero(R));
    REQUIRE(v.f_pure);
    REQUIRE(v.certificate_index >= 0);
  }
  // cubic cone x^3+y^3+z^3: F-pure iff p = 1 mod 3 (here the multinomial
  // coefficient of x^(p-1)y^(p-1)z^(p-1) in f^(p-1) is nonzero)
  {
    auto R = make_ring<GF>(GF(7), {"x", "y", "z"}, {1, 1, 1});
    auto v = fedder_fpurity(ideal_of(R, {"x^3 + y^3 + z^3"}));
    REQUIRE(v.f_pure);
    REQUIRE(v.certificate_index >= 0);
    REQUIRE(has_term_outside_bracket_m(
        v.colon_generators[static_cast<std::size_t>(v.certificate_index)], 7));
  }
  {
    auto R = make_ring<GF>(GF(5), {"x", "y", "z"}, {1, 1, 1});
    auto v = fedder_fpurity(ideal_of(R, {"x^3 + y^3 + z^3"}));
    REQUIRE_FALSE(v.f_pure);
    for (const auto& g : v.colon_generators)
      REQUIRE_FALSE(has_term_outside_bracket_m(g, 5));
  }
  {
    auto R = make_ring<GF>(GF(5), {"x"}, {1});
    REQUIRE_THROWS_AS(fedder_fpurity(ideal_of(R, {"3"})), std::domain_error);
  }
}

TEST_CASE("localization validity for hypersurfaces") {
  auto R = make_ring<GF>(GF(5), {"x", "y"}, {2, 3});
  auto cusp = parse_polynomial<GF>("x^3 - y^2", R);
  // the cusp is regular away from the origin, hence away from V(x)
  REQUIRE(validate_localization(cusp, parse_polynomial<GF>("x", R)));
  REQUIRE(validate_localization(cusp, parse_polynomial<GF>("y", R)));
  // but not away from V(1): the curve has a genuine singular point
  REQUIRE_FALSE(validate_localization(cusp, Poly<GF>::one(R)));

  auto S = make_ring<GF>(GF(5), {"x", "y", "z"}, {1, 1, 1});
  // x^2*y is singular along the plane x = 0, which V(z) does not contain
  REQUIRE_FALSE(validate_localization(parse_polynomial<GF>("x^2*y", S),
                                      parse_polynomial<GF>("z", S)));
}

TEST_CASE("glassbrenner witness for the quadric cone") {
  auto R = make_ring<GF>(GF(5), {"x", "y", "z"}, {1, 1, 1});
  auto f = parse_polynomial<GF>("x^2 + y^2 + z^2", R);
  auto c = parse_polynomial<GF>("x", R);
  auto w = glassbrenner_hypersurface(f, c, 3);
  REQUIRE(w.found());
  // x*f^4 contains x*y^4*z^4 with coefficient 6, outside m^[5]
  REQUIRE(w.e == 1);

  REQUIRE_THROWS_AS(glassbrenner_hypersurface(f, Poly<GF>::zero(R), 3),
                    std::invalid_argument);
  // invalid localization is a precondition failure, not a verdict
  REQUIRE_THROWS_AS(
      glassbrenner_hypersurface(parse_polynomial<GF>("x^2*y", R),
                                parse_polynomial<GF>("z", R), 3),
      std::invalid_argument);
}

TEST_CASE("singular locus of the cuspidal cubic") {
  auto R = make_ring<GF>(GF(5), {"x", "y"}, {2, 3});
  auto I = ideal_of(R, {"x^3 - y^2"});
  auto sing = singular_locus_ideal(I, 1);
  // Jacobian ideal (x^3 - y^2, 3x^2, -2y) cuts out exactly the origin
  REQUIRE(radical_equal(sing, ideal_of(R, {"x", "y"})));
  REQUIRE_THROWS_AS(singular_locus_ideal(I, 2), std::invalid_argument);
  REQUIRE_THROWS_AS(singular_locus_ideal(I, 0), std::invalid_argument);
}

TEST_CASE("radical equality") {
  auto R = make_ring<GF>(GF(5), {"x", "y"}, {1, 1});
  REQUIRE(radical_equal(ideal_of(R, {"x^2"}), ideal_of(R, {"x"})));
  REQUIRE(radical_equal(ideal_of(R, {"x^2*y", "x*y^3"}),
                        ideal_of(R, {"x*y"})));
  REQUIRE_FALSE(radical_equal(ideal_of(R, {"x"}), ideal_of(R, {"y"})));
}
