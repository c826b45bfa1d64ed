#include "catch2/catch_amalgamated.hpp"

#include "frob/family.hpp"

using namespace frob;

TEST_CASE("family hypotheses in exact arithmetic") {
  REQUIRE(family_hypothesis_ok(4, 3));   // 4 - 4/3 = 8/3 > 2
  REQUIRE(family_hypothesis_ok(5, 2));   // 5/2 > 2
  REQUIRE_FALSE(family_hypothesis_ok(3, 3));  // 8/3 with m=3? 3 - 1 = 2, not > 2
  REQUIRE_FALSE(family_hypothesis_ok(2, 5));
  REQUIRE_FALSE(family_hypothesis_ok(0, 3));
  REQUIRE_FALSE(family_hypothesis_ok(4, 0));

  REQUIRE(lemma_k_ok(4, 3, 2));        // 2 * 2/3 >= 1
  REQUIRE_FALSE(lemma_k_ok(4, 3, 1));  // 2/3 < 1
  REQUIRE(lemma_k_ok(5, 2, 2));        // 2 * 1/2 = 1
  REQUIRE_FALSE(lemma_k_ok(5, 2, 1));
  REQUIRE(lemma_k_ok(6, 2, 1));        // 6 - 3 - 2 = 1
  REQUIRE_FALSE(lemma_k_ok(4, 3, 0));
}

TEST_CASE("the defining ideal is homogeneous for the family weights") {
  auto I = matrix_ideal<GF>(4, 3, GF(5));
  REQUIRE(I.ring->weights() == std::vector<std::int64_t>{4, 8, 8, 24, 2});
  REQUIRE(I.gens.size() == 3);
  std::vector<std::int64_t> degs;
  for (const auto& g : I.gens) {
    auto di = g.weighted_degree();
    REQUIRE(di.homogeneous);
    degs.push_back(di.degree);
  }
  // minors of a matrix with row degrees (8, 16) and column degrees 0, ...
  REQUIRE(degs == std::vector<std::int64_t>{16, 32, 32});

  auto J = quotient_S_ideal<GF>(3, GF(5));
  REQUIRE(J.ring->weights() == std::vector<std::int64_t>{1, 2, 2, 6});
  for (const auto& g : J.gens) REQUIRE(g.weighted_degree().homogeneous);

  // setting t = 0 in the generators of I gives the generators of J up to
  // the weight rescaling
  auto R = I.ring;
  auto S = J.ring;
  for (std::size_t i = 0; i < 3; ++i) {
    std::vector<Term<GF>> kept;
    std::size_t ti = static_cast<std::size_t>(R->find_var("t"));
    for (const auto& t : I.gens[i].terms())
      if (t.mono.exp[ti] == 0) kept.push_back(t);
    auto spec = Poly<GF>::from_terms(R, std::move(kept));
    REQUIRE(map_poly(spec, extend_ring(S, "t")) ==
            map_poly(J.gens[i], extend_ring(S, "t")));
  }
}

TEST_CASE("key lemma membership") {
  auto r = verify_key_lemma({17, 4, 3, 2});
  REQUIRE(r.verdict == Verdict::Verified);
  REQUIRE(r.claim == "lemma-4.2");
  REQUIRE(r.witnesses["member"] == true);
  REQUIRE(r.witnesses["exponent"] == 17);

  REQUIRE(verify_key_lemma({5, 4, 3, 2}).verdict == Verdict::Verified);

  // hypothesis violations are invalid instances, not refutations
  REQUIRE(verify_key_lemma({5, 3, 3, 2}).verdict == Verdict::InvalidInstance);
  REQUIRE(verify_key_lemma({5, 4, 3, 1}).verdict == Verdict::InvalidInstance);
  REQUIRE(verify_key_lemma({5, 4, 3, std::nullopt}).verdict ==
          Verdict::InvalidInstance);
  REQUIRE(verify_key_lemma({0, 4, 3, 2}).verdict == Verdict::InvalidInstance);
}

TEST_CASE("characteristic-free replay of the lemma") {
  auto r = replay_key_lemma_proof(4, 3, 2);
  REQUIRE(r.verdict == Verdict::Verified);
  REQUIRE(r.witnesses["binomial_identity"] == true);
  // one block per i = 1..mk+1
  REQUIRE(r.witnesses["per_i"].size() == 9);

  auto r2 = replay_key_lemma_proof(5, 2, 2);
  REQUIRE(r2.verdict == Verdict::Verified);
  REQUIRE(r2.witnesses["per_i"].size() == 11);

  REQUIRE(replay_key_lemma_proof(3, 3, 1).verdict == Verdict::InvalidInstance);
  REQUIRE(replay_key_lemma_proof(4, 3, 1).verdict == Verdict::InvalidInstance);
}

TEST_CASE("failure of F-purity for the fibers") {
  for (std::int64_t p : {3, 5}) {
    auto r = verify_not_fpure({p, 4, 3, std::nullopt});
    REQUIRE(r.verdict == Verdict::Verified);
    REQUIRE(r.witnesses["fedder"]["f_pure"] == false);
  }
  // p = 2 and p | m are outside the criterion's reach
  REQUIRE(verify_not_fpure({2, 4, 3, std::nullopt}).verdict ==
          Verdict::InvalidInstance);
  REQUIRE(verify_not_fpure({3, 3, 9, std::nullopt}).verdict ==
          Verdict::InvalidInstance);
}

TEST_CASE("failure of F-regularity at p = 5") {
  auto r = verify_not_fregular({5, 4, 3, std::nullopt});
  REQUIRE(r.verdict == Verdict::Verified);
  REQUIRE(r.witnesses["outside_ideal"] == true);
  for (const auto& c : r.witnesses["q_window"]) REQUIRE(c["holds"] == true);
  // the report must flag the finite window explicitly
  REQUIRE(!r.witnesses["note"].get<std::string>().empty());
}

TEST_CASE("structure facts: parameters and nonzerodivisor") {
  auto r = verify_hsop_and_nzd({5, 4, 3, std::nullopt});
  REQUIRE(r.verdict == Verdict::Verified);
  REQUIRE(r.witnesses["dimension"] == 3);
  REQUIRE(r.witnesses["dimension_mod_t_c_d"] == 0);
  REQUIRE(r.witnesses["colon_by_t_equals_ideal"] == true);

  // same facts over the rationals
  auto rq = verify_hsop({0, 4, 3, std::nullopt});
  REQUIRE(rq.verdict == Verdict::Verified);
  REQUIRE(rq.witnesses["dimension"] == 3);
  REQUIRE(verify_nzd({0, 4, 3, std::nullopt}).verdict == Verdict::Verified);
}

TEST_CASE("veronese presentation and F-regular quotient") {
  REQUIRE(veronese_presentation_check(2, 5));
  REQUIRE(veronese_presentation_check(2, 7));

  auto r = verify_quotient_fregular(2, 5);
  REQUIRE(r.verdict == Verdict::Verified);
  REQUIRE(r.witnesses["splitting_witness"]["found"] == true);
  REQUIRE(r.witnesses["splitting_witness"]["e"].get<int>() <= 3);
  REQUIRE(r.witnesses["veronese_presentation"]["equals_minor_ideal"] == true);

  REQUIRE(verify_quotient_fregular(3, 5).verdict == Verdict::Verified);
  REQUIRE(verify_quotient_fregular(2, 2).verdict == Verdict::InvalidInstance);
}

TEST_CASE("singular locus of the family member") {
  auto r = verify_singular_locus({5, 4, 3, std::nullopt});
  REQUIRE(r.verdict == Verdict::Verified);
  REQUIRE(r.witnesses["radical_equal"] == true);
  // gcd(p, 2m) = 1 is required for the Jacobian criterion
  REQUIRE(verify_singular_locus({2, 4, 3, std::nullopt}).verdict ==
          Verdict::InvalidInstance);
}

TEST_CASE("prime sweep isolates per-prime outcomes") {
  auto reports = prime_sweep(4, 3, {2, 3, 5});
  REQUIRE(reports.size() == 3);
  REQUIRE(reports[0].verdict == Verdict::InvalidInstance);
  REQUIRE(reports[1].verdict == Verdict::Verified);
  REQUIRE(reports[2].verdict == Verdict::Verified);
}

TEST_CASE("headline bundle at a small instance") {
  auto r = verify_main_theorem({5, 4, 3, std::nullopt});
  REQUIRE(r.verdict == Verdict::Verified);
  REQUIRE(r.witnesses["parts"].size() == 5);
  REQUIRE(verify_main_theorem({5, 3, 3, std::nullopt}).verdict ==
          Verdict::InvalidInstance);
}

TEST_CASE("hilbert function agrees with section dimensions") {
  for (std::int64_t n : {2, 3}) {
    auto r = hilbert_crosscheck(n, 20);
    REQUIRE(r.verdict == Verdict::Verified);
    REQUIRE(r.witnesses["equal"] == true);
  }
  REQUIRE(hilbert_crosscheck(0, 5).verdict == Verdict::InvalidInstance);
}

TEST_CASE("ambient divisor data") {
  auto e = family_divisor(3);
  REQUIRE(e.coefficient("VXY") == mpq_class(1, 6));
  REQUIRE(e.degree() == mpq_class(7, 6));
  REQUIRE(hypersurface_H<GF>(3, GF(5)).weighted_degree().degree == 14);
  REQUIRE(hypersurface_H<GF>(3, GF(5)).weighted_degree().homogeneous);
}
