#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "oracles.hpp"

using namespace cartk;

namespace {
RingHandle ring_xy(unsigned p) { return make_ring(p, {"x", "y"}, 0); }
RingHandle ring_x(unsigned p) { return make_ring(p, {"x"}, 0); }
}  // namespace

TEST_CASE("ring validation") {
  CHECK_THROWS_AS(make_ring(2, {"x"}), invalid_argument);
  CHECK_THROWS_AS(make_ring(9, {"x"}), invalid_argument);
  CHECK_THROWS_AS(make_ring(101, {"x"}), invalid_argument);
  CHECK_THROWS_AS(make_ring(5, {"x", "x"}), invalid_argument);
  CHECK_THROWS_AS(make_ring(5, {""}), invalid_argument);
  CHECK_THROWS_AS(make_ring(5, {"x"}, 3), invalid_argument);
  CHECK(make_ring(97, {"x", "y"})->characteristic() == 97);
}

TEST_CASE("parser on the documented examples") {
  auto R = ring_xy(5);
  Polynomial f = parse_polynomial("x^2*y + 3", R);
  CHECK(f.term_count() == 2);
  CHECK(to_string(f) == "x^2*y + 3");

  CHECK(parse_polynomial("x - x", R).is_zero());

  auto R3 = ring_xy(3);
  Polynomial g = parse_polynomial("(x+y)^3", R3);
  CHECK(g == parse_polynomial("x^3 + y^3", R3));
}

TEST_CASE("parser errors carry positions") {
  auto R = ring_xy(5);
  CHECK_THROWS_AS(parse_polynomial("x + z", R), parse_error);
  CHECK_THROWS_AS(parse_polynomial("x + ", R), parse_error);
  CHECK_THROWS_AS(parse_polynomial("x^", R), parse_error);
  CHECK_THROWS_AS(parse_polynomial("(x", R), parse_error);
  CHECK_THROWS_AS(parse_polynomial("x^99999999999999999999", R), parse_error);
  try {
    parse_polynomial("x * w", R);
    CHECK(false);
  } catch (const parse_error& e) {
    CHECK(e.position == 4);
  }
}

TEST_CASE("arithmetic on the documented examples") {
  auto R3 = ring_x(3);
  Polynomial x = Polynomial::variable(R3, 0);
  Polynomial one = Polynomial::constant(R3, 1);
  CHECK((x + one) * (x - one) == parse_polynomial("x^2 + 2", R3));
  CHECK(x.pow(0) == one);

  auto Rxy = ring_xy(3);
  Polynomial xy = Polynomial::variable(Rxy, 0) + Polynomial::variable(Rxy, 1);
  CHECK(xy.pow(9) == parse_polynomial("x^9 + y^9", Rxy));
}

TEST_CASE("ring mismatch is rejected") {
  auto a = ring_x(3);
  auto b = ring_x(5);
  CHECK_THROWS_AS(Polynomial::variable(a, 0) + Polynomial::variable(b, 0),
                  ring_mismatch);
}

TEST_CASE("ring laws on random samples") {
  std::mt19937 rng(20240101);
  for (unsigned p : {3u, 5u}) {
    auto R = ring_xy(p);
    for (int i = 0; i < 40; ++i) {
      Polynomial f = oracles::random_poly(rng, R);
      Polynomial g = oracles::random_poly(rng, R);
      Polynomial h = oracles::random_poly(rng, R);
      CHECK(f + g == g + f);
      CHECK(f * g == g * f);
      CHECK((f + g) + h == f + (g + h));
      CHECK((f * g) * h == f * (g * h));
      CHECK(f * (g + h) == f * g + f * h);
    }
  }
}

TEST_CASE("Frobenius is additive") {
  std::mt19937 rng(7);
  for (unsigned p : {3u, 5u}) {
    auto R = ring_xy(p);
    for (int i = 0; i < 12; ++i) {
      Polynomial f = oracles::random_poly(rng, R);
      Polynomial g = oracles::random_poly(rng, R);
      for (unsigned e = 1; e <= 3; ++e) {
        Integer pe;
        mpz_ui_pow_ui(pe.get_mpz_t(), p, e);
        CHECK((f + g).pow(pe) == f.pow(pe) + g.pow(pe));
      }
    }
  }
}

TEST_CASE("parse of serialize is the identity") {
  std::mt19937 rng(99);
  auto R = ring_xy(7);
  for (int i = 0; i < 60; ++i) {
    Polynomial f = oracles::random_poly(rng, R, 6, 5);
    CHECK(parse_polynomial(to_string(f), R) == f);
  }
  CHECK(parse_polynomial("0", R).is_zero());
}

TEST_CASE("char-p power matches repeated multiplication") {
  std::mt19937 rng(4242);
  auto R = ring_xy(3);
  for (int i = 0; i < 10; ++i) {
    Polynomial f = oracles::random_poly(rng, R, 3, 2);
    Polynomial slow = Polynomial::constant(R, 1);
    for (int k = 0; k < 11; ++k) slow = slow * f;
    CHECK(f.pow(11) == slow);
  }
}

TEST_CASE("arithmetic dispatcher") {
  auto R = ring_xy(5);
  Polynomial x = Polynomial::variable(R, 0);
  Polynomial y = Polynomial::variable(R, 1);
  CHECK(poly_arith(ArithOp::add, x, &y, nullptr) == x + y);
  CHECK(poly_arith(ArithOp::sub, x, &y, nullptr) == x - y);
  CHECK(poly_arith(ArithOp::mul, x, &y, nullptr) == x * y);
  Integer nine(9);
  CHECK(poly_arith(ArithOp::pow, x + y, nullptr, &nine) == (x + y).pow(9));
  CHECK_THROWS_AS(poly_arith(ArithOp::add, x, nullptr, nullptr), invalid_argument);
  Polynomial other = Polynomial::variable(ring_xy(7), 0);
  CHECK_THROWS_AS(poly_arith(ArithOp::add, x, &other, nullptr), ring_mismatch);
}

TEST_CASE("filtration valuation and exact division") {
  auto R = ring_xy(5);
  Polynomial f = parse_polynomial("x^3*y + 2*x^2", R);
  CHECK(f.filtration_valuation() == 2);
  CHECK(f.divide_by_filtration_power(2) == parse_polynomial("x*y + 2", R));
  CHECK_THROWS_AS(f.divide_by_filtration_power(3), invalid_argument);
}
