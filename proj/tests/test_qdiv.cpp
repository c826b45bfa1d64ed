#include <random>

#include "catch2/catch_amalgamated.hpp"

#include "frob/qdiv.hpp"

using namespace frob;

namespace {

QDivisor family_E(std::int64_t n) {
  return QDivisor::make({{"VX", mpq_class(1, 2)},
                         {"VY", mpq_class(1, 2)},
                         {"VXY", mpq_class(1, 2 * n)}});
}

std::mt19937 rng(987654);

QDivisor random_divisor(int points) {
  std::vector<QDivisor::Entry> entries;
  for (int i = 0; i < points; ++i) {
    std::int64_t num = static_cast<std::int64_t>(rng() % 41) - 20;
    std::int64_t den = 1 + static_cast<std::int64_t>(rng() % 12);
    entries.push_back({"P" + std::to_string(i), mpq_class(num, den)});
  }
  return QDivisor::make(std::move(entries));
}

}  // namespace

TEST_CASE("divisor construction and arithmetic") {
  auto d = QDivisor::make({{"B", mpq_class(2, 4)}, {"A", mpq_class(1)}});
  // canonicalized and sorted by label
  REQUIRE(d.support().size() == 2);
  REQUIRE(d.support()[0].first == "A");
  REQUIRE(d.coefficient("B") == mpq_class(1, 2));
  REQUIRE(d.coefficient("missing") == 0);
  REQUIRE(d.degree() == mpq_class(3, 2));
  REQUIRE_FALSE(d.is_integral());

  // zero coefficients are dropped, duplicates rejected
  auto z = QDivisor::make({{"A", mpq_class(0)}});
  REQUIRE(z.support().empty());
  REQUIRE_THROWS_AS(QDivisor::make({{"A", mpq_class(1)}, {"A", mpq_class(2)}}),
                    std::invalid_argument);

  REQUIRE(d + (-d) == QDivisor::make({}));
  REQUIRE(d - d == QDivisor{});
  REQUIRE(d.scaled(mpq_class(2)).coefficient("B") == 1);
  REQUIRE(d.scaled(mpq_class(2)).is_integral());
}

TEST_CASE("floors and the denominator fractional part") {
  auto d = QDivisor::make({{"A", mpq_class(3, 2)},
                           {"B", mpq_class(-3, 2)},
                           {"C", mpq_class(5)},
                           {"D", mpq_class(-7, 3)}});
  auto f = floor_divisor(d);
  REQUIRE(f.coefficient("A") == 1);
  REQUIRE(f.coefficient("B") == -2);  // floor, not truncation
  REQUIRE(f.coefficient("C") == 5);
  REQUIRE(f.coefficient("D") == -3);
  REQUIRE(f.is_integral());

  auto fr = fractional_part_paper(d);
  REQUIRE(fr.coefficient("A") == mpq_class(1, 2));
  REQUIRE(fr.coefficient("B") == mpq_class(1, 2));
  REQUIRE(fr.coefficient("C") == 0);  // integral point contributes nothing
  REQUIRE(fr.coefficient("D") == mpq_class(2, 3));
}

TEST_CASE("riemann-roch on the projective line") {
  // chi(O(D)) = deg floor(D) + 1, and one of h0, h1 always vanishes
  for (int trial = 0; trial < 200; ++trial) {
    auto d = random_divisor(1 + static_cast<int>(rng() % 4));
    auto data = divisor_class_data(d);
    REQUIRE(data.h0 - data.h1 == data.floor_degree + 1);
    REQUIRE((data.h0 == 0 || data.h1 == 0));
    REQUIRE(data.h0 == h0(d));
    REQUIRE(data.h1 == h1(d));
  }
  // spot values
  REQUIRE(h0(QDivisor::make({{"A", mpq_class(3)}})) == 4);
  REQUIRE(h0(QDivisor::make({{"A", mpq_class(-1)}})) == 0);
  REQUIRE(h1(QDivisor::make({{"A", mpq_class(-1)}})) == 0);
  REQUIRE(h1(QDivisor::make({{"A", mpq_class(-3)}})) == 2);
}

TEST_CASE("serre duality for integral divisors") {
  // h1(D) = h0(K - D) with K a canonical divisor of degree -2
  auto K = QDivisor::make({{"pt", mpq_class(-2)}});
  for (std::int64_t n = -10; n <= 10; ++n) {
    auto d = QDivisor::make({{"A", mpq_class(n)}});
    REQUIRE(h1(d) == h0(K - d));
  }
}

TEST_CASE("floor identity for the rounding convention") {
  // -floor(-nE) = floor(nE + E') for all integers n, where E' carries the
  // (q-1)/q fractional parts
  for (std::int64_t n : {2, 3, 5}) {
    REQUIRE(floor_identity_check(family_E(n), -50, 50));
  }
  for (int trial = 0; trial < 50; ++trial)
    REQUIRE(floor_identity_check(random_divisor(3), -50, 50));
}

TEST_CASE("section dimensions of the family divisor") {
  auto dims = section_dims(family_E(2), 8);
  REQUIRE(dims == std::vector<std::int64_t>{1, 1, 3, 3, 6, 6, 8, 8, 11});
  auto dims3 = section_dims(family_E(3), 6);
  // coefficients (1/2, 1/2, 1/6): floors at i = 0..6
  REQUIRE(dims3 == std::vector<std::int64_t>{1, 1, 3, 3, 5, 5, 8});
  REQUIRE_THROWS_AS(
      section_dims(QDivisor::make({{"A", mpq_class(-1, 2)}}), 4),
      std::invalid_argument);
  REQUIRE_THROWS_AS(section_dims(QDivisor{}, 4), std::invalid_argument);
}

TEST_CASE("purity degree bookkeeping") {
  auto h = fpurity_degree_heuristic(family_E(2), 5);
  // E' = 1/2 + 1/2 + 3/4, K + E' = -1/4, scaled by p = 5
  REQUIRE(h.degree == mpq_class(-5, 4));
  REQUIRE(h.h1_value == 2);
  auto h3 = fpurity_degree_heuristic(family_E(3), 5);
  // E' = 1/2 + 1/2 + 5/6, K + E' = -1/6
  REQUIRE(h3.degree == mpq_class(-5, 6));
}

TEST_CASE("divisor parsing and rendering") {
  auto d = parse_divisor("1/2@VX, 1/2@VY, 1/4@VXY");
  REQUIRE(d == family_E(2));
  REQUIRE(parse_divisor(render_divisor(d)) == d);
  REQUIRE(parse_divisor("") == QDivisor{});
  REQUIRE(parse_divisor(" -3/2@A ").coefficient("A") == mpq_class(-3, 2));
  REQUIRE(render_divisor(QDivisor{}) == "0");
  REQUIRE_THROWS_AS(parse_divisor("1/2"), std::invalid_argument);
  REQUIRE_THROWS_AS(parse_divisor("x@A"), std::invalid_argument);
  REQUIRE_THROWS_AS(parse_divisor("1/2@"), std::invalid_argument);
}
