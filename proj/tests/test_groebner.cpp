#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"

using namespace cartk;

namespace {
RingHandle ring_xy(unsigned p) { return make_ring(p, {"x", "y"}, 0); }

Ideal parse_ideal(const RingHandle& ring, const std::vector<std::string>& gens) {
  std::vector<Polynomial> ps;
  for (const auto& s : gens) ps.push_back(parse_polynomial(s, ring));
  return Ideal(ring, std::move(ps));
}
}  // namespace

TEST_CASE("reduce_basis on the documented examples") {
  auto R = ring_xy(5);
  CHECK(reduce_basis(parse_ideal(R, {"x^2", "x"})).serialize() == "x\n");

  ReducedGB lin = reduce_basis(parse_ideal(R, {"x + y", "x - y"}));
  REQUIRE(lin.elements().size() == 2);
  CHECK(lin.elements()[0] == parse_polynomial("y", R));
  CHECK(lin.elements()[1] == parse_polynomial("x", R));

  auto Rxt = make_ring(3, {"x", "t"}, 0);
  ReducedGB gb = reduce_basis(parse_ideal(Rxt, {"t^3", "x^3*t^2"}));
  REQUIRE(gb.elements().size() == 2);
  CHECK(gb.elements()[0] == parse_polynomial("t^3", Rxt));
  CHECK(gb.elements()[1] == parse_polynomial("x^3*t^2", Rxt));
}

TEST_CASE("normal form on the documented examples") {
  auto Rxt = make_ring(3, {"x", "t"}, 0);
  ReducedGB gb = reduce_basis(parse_ideal(Rxt, {"t^3", "x^3*t^2"}));
  CHECK(normal_form(parse_polynomial("x^3", Rxt), gb) ==
        parse_polynomial("x^3", Rxt));
  CHECK(normal_form(parse_polynomial("x^3*t^2", Rxt), gb).is_zero());

  auto R = ring_xy(5);
  ReducedGB cube = reduce_basis(parse_ideal(R, {"x^3"}));
  CHECK(normal_form(parse_polynomial("x^7", R), cube).is_zero());
}

TEST_CASE("ideal operations on the documented examples") {
  auto R = ring_xy(5);
  Ideal lhs = parse_ideal(R, {"x^2", "x*y"});
  Ideal rhs = ideal_product(parse_ideal(R, {"x"}), parse_ideal(R, {"x", "y"}));
  CHECK(ideal_equal(lhs, rhs));

  CHECK_FALSE(ideal_member(parse_polynomial("x^7", R), parse_ideal(R, {"x^9"})));
  CHECK(ideal_equal(ideal_sum(parse_ideal(R, {"x"}), parse_ideal(R, {"y"})),
                    parse_ideal(R, {"x", "y"})));
}

TEST_CASE("idempotence of reduction") {
  std::mt19937 rng(2001);
  auto R = ring_xy(3);
  for (int i = 0; i < 20; ++i) {
    std::vector<Polynomial> gens = {oracles::random_poly(rng, R),
                                    oracles::random_poly(rng, R),
                                    oracles::random_poly(rng, R)};
    ReducedGB once = reduce_basis(Ideal(R, gens));
    ReducedGB twice = reduce_basis(Ideal(R, once.elements()));
    CHECK(once == twice);
  }
}

TEST_CASE("membership holds for explicit combinations") {
  std::mt19937 rng(555);
  auto R = ring_xy(5);
  for (int i = 0; i < 20; ++i) {
    Polynomial g1 = oracles::random_poly(rng, R);
    Polynomial g2 = oracles::random_poly(rng, R);
    Ideal ideal(R, {g1, g2});
    if (ideal.is_zero()) continue;
    Polynomial combo =
        oracles::random_poly(rng, R) * g1 + oracles::random_poly(rng, R) * g2;
    CHECK(ideal_member(combo, ideal));
  }
}

TEST_CASE("membership agrees with the linear-algebra oracle") {
  std::mt19937 rng(31337);
  auto R = ring_xy(3);
  for (int i = 0; i < 15; ++i) {
    Polynomial g1 = oracles::random_poly(rng, R, 3, 2);
    Polynomial g2 = oracles::random_poly(rng, R, 3, 2);
    Ideal ideal(R, {g1, g2});
    if (ideal.is_zero()) continue;
    for (int j = 0; j < 6; ++j) {
      Polynomial probe = oracles::random_poly(rng, R, 4, 3);
      bool via_gb = ideal_member(probe, ideal);
      long bound = static_cast<long>(probe.degree().get_si()) + 6;
      bool via_linear = oracles::member_linear(probe, ideal, bound);
      CHECK(via_gb == via_linear);
    }
  }
}

TEST_CASE("pair budget raises a typed error") {
  auto R = ring_xy(5);
  Budgets tiny;
  tiny.pair_budget = 0;
  Ideal ideal = parse_ideal(R, {"x^2 + y", "x*y + 1"});
  CHECK_THROWS_AS(reduce_basis(ideal, tiny), budget_exceeded);
}

TEST_CASE("monomial colon and intersection") {
  auto R = ring_xy(5);
  ReducedGB G = reduce_basis(parse_ideal(R, {"x^3", "x*y^2"}));
  Monomial m(2);
  m.e[0] = 2;  // x^2
  CHECK(ideal_equal(monomial_colon(G, m), parse_ideal(R, {"x", "y^2"})));

  ReducedGB A = reduce_basis(parse_ideal(R, {"x^2"}));
  ReducedGB B = reduce_basis(parse_ideal(R, {"x", "y"}));
  CHECK(ideal_equal(monomial_intersection(A, B), parse_ideal(R, {"x^2"})));
  CHECK_THROWS_AS(monomial_colon(reduce_basis(parse_ideal(R, {"x + y"})), m),
                  unsupported_structure);
}
