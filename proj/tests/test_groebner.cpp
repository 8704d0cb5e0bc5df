#include <doctest.h>

#include <random>

#include "frobalg/budget.hpp"
#include "frobalg/groebner.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace frobalg;
using frobalg::testing::I;
using frobalg::testing::P;

namespace {

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  Monomial l = f.lead_monomial().lcm(g.lead_monomial());
  const auto& F = f.ring()->field();
  return f.mul_term(F.inv(f.lead_coeff()), l / f.lead_monomial()) -
         g.mul_term(F.inv(g.lead_coeff()), l / g.lead_monomial());
}

bool satisfies_buchberger_criterion(const std::vector<Polynomial>& basis) {
  for (std::size_t i = 0; i < basis.size(); ++i)
    for (std::size_t j = i + 1; j < basis.size(); ++j)
      if (!remainder(s_polynomial(basis[i], basis[j]), basis).is_zero()) return false;
  return true;
}

bool is_reduced(const std::vector<Polynomial>& basis) {
  for (std::size_t i = 0; i < basis.size(); ++i) {
    if (basis[i].lead_coeff() != 1) return false;
    for (std::size_t j = 0; j < basis.size(); ++j) {
      if (i == j) continue;
      for (const auto& t : basis[i].terms())
        if (basis[j].lead_monomial().divides(t.mono)) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("groebner_basis examples") {
  Ring r = parse_ring("F_2[x,y]");
  auto b = groebner_basis(I(r, "(x)"), MonomialOrder::grevlex());
  REQUIRE(b.size() == 1);
  CHECK(b[0] == P(r, "x"));

  CHECK(groebner_basis(I(r, "(0)"), MonomialOrder::grevlex()).empty());

  // eliminant of x equals the Sylvester resultant, computed independently
  auto lex = groebner_basis(I(r, "(x^2+y, x*y+1)"), MonomialOrder::lex());
  std::vector<std::vector<Polynomial>> sylvester = {
      {P(r, "1"), P(r, "0"), P(r, "y")},
      {P(r, "y"), P(r, "1"), P(r, "0")},
      {P(r, "0"), P(r, "y"), P(r, "1")}};
  Polynomial res = frobalg::testing::determinant(sylvester);
  CHECK(res == P(r, "y^3 + 1"));
  bool found = false;
  for (const auto& g : lex)
    if (g.in(r.free()) == res) found = true;
  CHECK(found);
  CHECK(satisfies_buchberger_criterion(lex));
}

TEST_CASE("normal_form examples") {
  Ring r = parse_ring("F_2[x,y]");
  CHECK(normal_form(P(r, "x^2"), I(r, "(x)")).is_zero());
  CHECK(normal_form(P(r, "x + 1"), I(r, "(x)")) == P(r, "1"));
  Ring q = parse_ring("F_2[x,y,z]/(x^2 + y*z^2)");
  // x^2 = y z^2 lies in (z)^[2] in the quotient
  CHECK(normal_form(P(q, "x^2"), I(q, "(z^2)")).is_zero());
  CHECK(I(q, "(z^2)").contains(P(q, "x^2")));
  CHECK_FALSE(I(q, "(z)").contains(P(q, "x")));
}

TEST_CASE("ideal_equal examples") {
  Ring r = parse_ring("F_2[x,y]");
  CHECK(ideal_equal(I(r, "(x, y)"), I(r, "(y, x+y)")));
  CHECK_FALSE(ideal_equal(I(r, "(x)"), I(r, "(x^2)")));
  CHECK(ideal_equal(I(r, "((x+y)^2, x^2)"), I(r, "(x^2, y^2)")));
}

TEST_CASE("colon_ideal examples") {
  Ring r = parse_ring("F_2[x,y,z]");
  CHECK(ideal_equal(colon_ideal(I(r, "(x^4 + y^2*z^4)"), I(r, "(x^2 + y*z^2)")), I(r, "(x^2 + y*z^2)")));
  CHECK(ideal_equal(colon_ideal(I(r, "(x*y, x*z)"), I(r, "(x)")), I(r, "(y, z)")));
  Ideal a = I(r, "(x^2*y, y^3 + z, x*z)");
  CHECK(ideal_equal(colon_ideal(a, Ideal::unit(r)), a));
  CHECK(colon_ideal(a, Ideal::zero(r)).is_unit());
  CHECK(colon_ideal(I(r, "(x)"), I(r, "(x)")).is_unit());
  CHECK(colon_ideal(Ideal::zero(r), I(r, "(x)")).is_zero());
}

TEST_CASE("colon in a quotient ring") {
  Ring q = parse_ring("F_2[x,y]/(x*y)");
  // in R = S/(xy): (0 : x) = (y)
  CHECK(ideal_equal(colon_ideal(Ideal::zero(q), I(q, "(x)")), I(q, "(y)")));
}

TEST_CASE("eliminate examples") {
  Ring r2 = parse_ring("F_2[x,y]");
  CHECK(eliminate(I(r2, "(x - y^2)"), 1).is_zero());
  Ring r3 = parse_ring("F_3[x,y]");
  CHECK(ideal_equal(eliminate(I(r3, "(x - y, x + y)"), 1), I(r3, "(y)")));
  CHECK(ideal_equal(eliminate(I(r2, "(x)"), 0), I(r2, "(x)")));
}

TEST_CASE("radical_membership examples") {
  Ring r = parse_ring("F_2[x,y]");
  CHECK(radical_membership(P(r, "x"), I(r, "(x^8)")));
  CHECK_FALSE(radical_membership(P(r, "y"), I(r, "(x^8)")));
  CHECK(radical_membership(P(r, "x+y"), I(r, "(x^2, y^4)")));
  CHECK((P(r, "x+y").pow(4) == P(r, "x^4 + y^4")));
}

TEST_CASE("exact_divide and intersect") {
  Ring r = parse_ring("F_3[x,y]");
  Polynomial f = P(r, "x^2 - y^2");
  CHECK(exact_divide(f, P(r, "x - y")) == P(r, "x + y"));
  CHECK_THROWS_AS(exact_divide(f, P(r, "x")), std::domain_error);
  CHECK(ideal_equal(intersect(I(r, "(x)"), I(r, "(y)")), I(r, "(x*y)")));
  CHECK(ideal_equal(intersect(I(r, "(x^2, y)"), I(r, "(x, y^2)")), I(r, "(x^2, x*y, y^2)")));
}

TEST_CASE("budget exceeded is a distinguished failure") {
  Ring r = parse_ring("F_7[x,y,z]");
  Ideal hard = I(r, "(x^3*y + y^2*z^2 + 3*z, x*y^3 + x^2*z^2 + y, x^2*y^2 + x*z^3 + 2*x*y + z^2)");
  BudgetScope scope(Budget{50, Budget::unlimited().max_degree});
  CHECK_THROWS_AS(hard.basis(), BudgetExceeded);
}

TEST_CASE("property: Buchberger criterion and reducedness on random ideals") {
  std::mt19937_64 rng(5);
  for (std::uint32_t p : {2u, 3u, 5u}) {
    Ring r = parse_ring("F_" + std::to_string(p) + "[x,y,z]");
    for (int trial = 0; trial < 25; ++trial) {
      std::vector<Polynomial> gens;
      for (int k = 0; k < 3; ++k) gens.push_back(frobalg::testing::random_poly(rng, r, 3, 3));
      Ideal ideal(r, gens);
      for (auto ord : {MonomialOrder::grevlex(), MonomialOrder::lex(), MonomialOrder::elimination(1)}) {
        auto b = groebner_basis(ideal, ord);
        CHECK(satisfies_buchberger_criterion(b));
        CHECK(is_reduced(b));
        for (const auto& g : gens) CHECK(remainder(g.in(b.empty() ? g.ring() : b[0].ring()), b).is_zero());
        // deterministic
        CHECK(groebner_basis(ideal, ord) == b);
      }
    }
  }
}

TEST_CASE("property: membership agrees with brute-force cofactor search") {
  std::mt19937_64 rng(99);
  for (std::uint32_t p : {2u, 3u}) {
    Ring r = parse_ring("F_" + std::to_string(p) + "[x,y,z]");
    for (int trial = 0; trial < 20; ++trial) {
      // homogeneous instance: exact two-sided agreement
      std::vector<Polynomial> gens;
      std::uniform_int_distribution<int> deg(1, 3);
      for (int k = 0; k < 3; ++k) {
        int d = deg(rng);
        std::vector<Term> terms;
        for (int t = 0; t < 2; ++t)
          terms.push_back({1, frobalg::testing::random_monomial_of_degree(rng, 3, d)});
        gens.emplace_back(r.free(), terms);
      }
      Ideal ideal(r, gens);
      int fd = deg(rng) + 1;
      std::vector<Term> terms;
      for (int t = 0; t < 3; ++t)
        terms.push_back({1, frobalg::testing::random_monomial_of_degree(rng, 3, fd)});
      Polynomial f(r.free(), terms);
      CHECK(ideal.contains(f) == frobalg::testing::brute_force_member_homogeneous(f, gens));
      // constructed member of an inhomogeneous ideal
      std::vector<Polynomial> mixed;
      for (int k = 0; k < 2; ++k) mixed.push_back(frobalg::testing::random_poly(rng, r, 3, 3));
      Polynomial member = mixed[0] * frobalg::testing::random_poly(rng, r, 2, 3) +
                          mixed[1] * frobalg::testing::random_poly(rng, r, 2, 3);
      CHECK(Ideal(r, mixed).contains(member));
      CHECK(frobalg::testing::brute_force_member(member, mixed, 2));
      Polynomial other = frobalg::testing::random_poly(rng, r, 3, 3);
      if (frobalg::testing::brute_force_member(other, mixed, 3)) CHECK(Ideal(r, mixed).contains(other));
    }
  }
}

TEST_CASE("property: colon and elimination soundness, radical spot check") {
  std::mt19937_64 rng(17);
  Ring r = parse_ring("F_3[x,y,z]");
  for (int trial = 0; trial < 15; ++trial) {
    std::vector<Polynomial> ag, bg;
    for (int k = 0; k < 2; ++k) ag.push_back(frobalg::testing::random_poly(rng, r, 3, 3));
    bg.push_back(frobalg::testing::random_poly(rng, r, 2, 2));
    Ideal a(r, ag), b(r, bg);
    Ideal c = colon_ideal(a, b);
    for (const auto& g : c.generators())
      for (const auto& j : b.generators()) CHECK(a.contains(g * j));
    CHECK(c.contains(a));

    Ideal e = eliminate(a, 1);
    for (const auto& g : e.generators()) {
      CHECK_FALSE(g.involves_variable(0));
      CHECK(a.contains(g));
    }

    Polynomial f = frobalg::testing::random_poly(rng, r, 2, 2);
    bool some_power = false;
    Polynomial pw = f;
    for (int k = 1; k <= 8 && !some_power; ++k, pw = pw * f) some_power = a.contains(pw);
    if (some_power) CHECK(radical_membership(f, a));
  }
}
