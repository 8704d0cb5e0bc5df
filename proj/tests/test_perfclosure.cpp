#include <doctest.h>

#include <random>

#include "frobalg/perfclosure.hpp"
#include "oracles.hpp"
#include "support.hpp"

using namespace frobalg;
using frobalg::testing::I;
using frobalg::testing::P;

namespace {

// J_e for a monomial root ideal of a free ring by exponent arithmetic:
// x^b has b / p^e >= a / p^k for a generator (k, x^a) iff
// b >= ceil(a p^e / p^k).
Ideal monomial_gamma_oracle(const PerfectClosureIdeal& j, std::uint64_t e) {
  const Ring& r = j.ring();
  const std::uint64_t p = r.characteristic();
  std::vector<Polynomial> gens;
  for (const auto& g : j.generators()) {
    Monomial m(r.nvars());
    for (std::size_t v = 0; v < r.nvars(); ++v) {
      std::uint64_t num = g.body.lead_monomial()[v], den = 1;
      for (std::uint64_t k = 0; k < e; ++k) num *= p;
      for (std::uint64_t k = 0; k < g.level; ++k) den *= p;
      m.set(v, static_cast<Exponent>((num + den - 1) / den));
    }
    gens.push_back(Polynomial::monomial(r.free(), m));
  }
  return Ideal(r, gens);
}

}  // namespace

TEST_CASE("root elements") {
  Ring r1 = parse_ring("F_2[x]");
  CHECK(root_equal({1, P(r1, "x^2")}, {0, P(r1, "x")}, r1));
  CHECK_FALSE(root_equal({1, P(r1, "x")}, {0, P(r1, "x")}, r1));
  Ring q = parse_ring("F_2[x,y,z]/(x^2 + y*z^2)");
  CHECK(root_equal({1, P(q, "y*z^2")}, {0, P(q, "x")}, q));
  CHECK_FALSE(root_equal({1, P(q, "y*z^2")}, {0, P(q, "z")}, q));

  auto c = canonical_root({3, P(r1, "x^4 + 1")}, r1);
  CHECK(c.level == 1);
  CHECK(c.body == P(r1, "x + 1"));
  CHECK(canonical_root({2, P(r1, "1")}, r1).level == 0);

  auto parsed = parse_root("root(2, x^3 + x)", r1);
  CHECK(parsed.level == 2);
  CHECK(parsed.body == P(r1, "x^3 + x"));
  CHECK(parse_root("x^2", r1).level == 0);
  auto ideal = parse_root_ideal("(root(1, x), y)", parse_ring("F_2[x,y]"));
  CHECK(ideal.generators().size() == 2);
  CHECK(ideal.max_level() == 1);
  CHECK(ideal.str() == "(root(1, x), y)");
  CHECK_THROWS_AS(parse_root("root(x, 1)", r1), ParseError);
  CHECK_THROWS_AS(parse_root("root(1, z)", r1), ParseError);
}

TEST_CASE("extended_ideal_membership examples") {
  Ring q = parse_ring("F_3[x,y,z]/(x^3 - y*z^3)");
  CHECK(extended_ideal_membership(P(q, "x"), I(q, "(z)"), 3) == Verdict::kTrue);
  CHECK(extended_ideal_membership(P(q, "y"), I(q, "(z)"), 3) == Verdict::kFalse);
  Ring r1 = parse_ring("F_2[x]");
  for (std::uint64_t e = 0; e <= 4; ++e)
    CHECK(extended_ideal_membership(P(r1, "x"), I(r1, "(x^2)"), e) != Verdict::kTrue);
  CHECK(extended_ideal_membership(P(r1, "x"), I(r1, "(x^2)"), 4) == Verdict::kFalse);
  CHECK(extended_ideal_membership(P(r1, "x^3"), I(r1, "(x^2)"), 0) == Verdict::kTrue);
  // Without two levels the chain cannot be called stable.
  CHECK(extended_ideal_membership(P(r1, "x"), I(r1, "(x^2)"), 0) == Verdict::kUnresolved);
}

TEST_CASE("root_membership") {
  Ring r = parse_ring("F_2[x,y]");
  auto j = parse_root_ideal("(root(2, x), y)", r);
  CHECK(root_membership({1, P(r, "x")}, j, 6) == Verdict::kTrue);
  CHECK(root_membership({3, P(r, "x")}, j, 6) == Verdict::kFalse);
  CHECK(root_membership({1, P(r, "y")}, j, 6) == Verdict::kFalse);
  CHECK(root_membership({0, P(r, "y^3 + x")}, j, 6) == Verdict::kTrue);
  Ring q = parse_ring("F_2[x,y,z]/(x^2 + y*z^2)");
  CHECK(root_membership({0, P(q, "x")}, PerfectClosureIdeal::extension(I(q, "(z)")), 3) == Verdict::kTrue);
}

TEST_CASE("gamma_fseq examples") {
  Ring r = parse_ring("F_2[x,y]");
  auto a = gamma_fseq(parse_root_ideal("(x, y)", r), 3, 6);
  REQUIRE(a.sequence.size() == 4);
  CHECK(a.stabilized);
  CHECK(a.verify.ok);
  for (std::size_t e = 0; e <= 3; ++e) CHECK(ideal_equal(a.sequence[e], frobenius_power(I(r, "(x, y)"), e)));

  auto b = gamma_fseq(PerfectClosureIdeal(r, {{6, P(r, "x")}, {0, P(r, "y")}}), 3, 6);
  CHECK(b.verify.ok);
  CHECK(b.sequence[1].contains(I(r, "(x, y^2)")));
  for (std::size_t e = 0; e <= 3; ++e)
    CHECK(ideal_equal(b.sequence[e], Ideal(r, {r.var(0), frobenius_map(r.var(1), e)})));

  Ring r1 = parse_ring("F_2[x]");
  auto c = gamma_fseq(parse_root_ideal("(x)", r1), 4, 6);
  CHECK(c.verify.ok);
  for (std::size_t e = 0; e <= 4; ++e) CHECK(ideal_equal(c.sequence[e], frobenius_power(I(r1, "(x)"), e)));
}

TEST_CASE("gamma round trip on f-sequence prefixes") {
  Ring r = parse_ring("F_2[x,y]");
  std::vector<FSequence> seqs{FSequence::frobenius_powers(I(r, "(x, y)"), 5)};
  std::vector<Ideal> prefix;
  for (std::size_t e = 0; e <= 5; ++e) prefix.emplace_back(r, std::vector<Polynomial>{r.var(0), frobenius_map(r.var(1), e)});
  seqs.push_back(FSequence::custom(r, prefix));
  for (const auto& seq : seqs) {
    auto g = gamma_fseq(PerfectClosureIdeal::extension(seq), seq.size() - 1, 6);
    REQUIRE(g.sequence.size() == seq.size());
    for (std::size_t e = 0; e < seq.size(); ++e) CHECK(ideal_equal(g.sequence[e], seq[e]));
  }
}

TEST_CASE("gamma in a quotient ring sees the Frobenius closure") {
  Ring q = parse_ring("F_3[x,y,z]/(x^3 - y*z^3)");
  auto g = gamma_fseq(PerfectClosureIdeal::extension(I(q, "(z)")), 1, 4);
  CHECK(g.verify.ok);
  CHECK(g.sequence[0].contains(P(q, "x")));
  CHECK(ideal_equal(g.sequence[0], frobenius_closure(I(q, "(z)"), 4).closure));
}

TEST_CASE("prime_extension_check") {
  Ring r = parse_ring("F_2[x,y]");
  for (const char* p : {"(x)", "(x, y)", "()", "(y)", "(x + y)"}) {
    auto rep = prime_extension_check(I(r, p), 3);
    CHECK(rep.levels.size() == 4);
    CHECK_MESSAGE(rep.pass(), p);
  }
  CHECK_THROWS_AS(prime_extension_check(I(r, "(x*y)"), 1), std::invalid_argument);
  CHECK_THROWS_AS(prime_extension_check(I(r, "(x + 1)"), 1), std::invalid_argument);
}

TEST_CASE("zero_closure_cyclic") {
  Ring q = parse_ring("F_3[x,y,z]/(x^3 - y*z^3)");
  // e = 0 is R/(z) itself, whose zero closure holds x.
  CHECK(zero_closure_cyclic(I(q, "(z)"), 0, 3).ideal.contains(P(q, "x")));
  // In R/(z^3): (x z^2)^3 = y z^9, while x^3 = y z^3 is never in (z^9), (z^27), ...
  auto one = zero_closure_cyclic(I(q, "(z)"), 1, 3);
  CHECK(one.ideal.contains(P(q, "x*z^2")));
  CHECK(one.ideal.contains(P(q, "x^3")));
  CHECK_FALSE(one.ideal.contains(P(q, "x")));

  Ring s = parse_ring("F_2[x,y,z]");
  auto free_case = zero_closure_cyclic(I(s, "(x*y, x*z^2)"), 2, 3);
  CHECK(ideal_equal(free_case.ideal, frobenius_power(I(s, "(x*y, x*z^2)"), 2)));
  CHECK(free_case.stabilized_at == 0u);
  Ring reduced = parse_ring("F_2[x,y]/(x*y)");
  CHECK(zero_closure_cyclic(Ideal::zero(reduced), 1, 3).ideal.is_zero());
}

TEST_CASE("root obstruction in F_2[x]") {
  auto levels = root_obstruction_check(2, 4);
  REQUIRE(levels.size() == 5);
  for (const auto& l : levels) {
    CHECK(l.violations == 0);
    CHECK(l.checked == (std::size_t{1} << (std::size_t{1} << l.level)) - 1);
  }
  // Degree accounting: the product's least root degree is (2 a + 1) / 2^{e+1} < 1.
  for (std::uint64_t e = 0; e <= 4; ++e)
    for (std::uint64_t a = 0; a < (1u << e); ++a) CHECK(2 * a + 1 < (2u << e));
  for (const auto& l : root_obstruction_check(3, 2)) CHECK(l.violations == 0);
}

TEST_CASE("property: gamma matches exponent arithmetic on monomial root ideals") {
  std::mt19937_64 rng(3);
  for (const char* ring : {"F_2[x,y]", "F_3[x,y]", "F_2[x,y,z]"}) {
    Ring r = parse_ring(ring);
    for (int trial = 0; trial < 10; ++trial) {
      std::vector<RootElement> gens;
      std::uniform_int_distribution<std::uint64_t> level(0, 3);
      std::uniform_int_distribution<int> count(1, 3);
      for (int k = count(rng); k > 0; --k)
        gens.push_back({level(rng), Polynomial::monomial(r.free(), frobalg::testing::random_monomial(rng, r.nvars(), 5))});
      PerfectClosureIdeal j(r, gens);
      auto g = gamma_fseq(j, 3, 6);
      CHECK(g.stabilized);
      CHECK(g.verify.ok);
      for (std::uint64_t e = 0; e <= 3; ++e) CHECK(ideal_equal(g.sequence[e], monomial_gamma_oracle(j, e)));
    }
  }
}

TEST_CASE("property: root_equal is an equivalence stable under raising levels") {
  std::mt19937_64 rng(8);
  Ring r = parse_ring("F_2[x,y]");
  std::vector<RootElement> pool;
  for (int k = 0; k < 12; ++k) {
    Polynomial f = frobalg::testing::random_poly(rng, r, 3, 3);
    std::uint64_t e = rng() % 3;
    pool.push_back({e, f});
    pool.push_back({e + 1, frobenius_map(f, 1)});
  }
  for (const auto& a : pool) {
    CHECK(root_equal(a, a, r));
    CHECK(root_equal(a, {a.level + 1, frobenius_map(a.body, 1)}, r));
    for (const auto& b : pool) {
      CHECK(root_equal(a, b, r) == root_equal(b, a, r));
      CHECK(root_equal(a, b, r) == root_equal({a.level + 1, frobenius_map(a.body, 1)}, b, r));
      for (const auto& c : pool)
        if (root_equal(a, b, r) && root_equal(b, c, r)) CHECK(root_equal(a, c, r));
    }
  }
}

TEST_CASE("property: extended membership agrees with the closure and with I in S") {
  std::mt19937_64 rng(12);
  Ring s = parse_ring("F_3[x,y]");
  Ring q = parse_ring("F_2[x,y,z]/(x^2 + y*z^2)");
  for (int trial = 0; trial < 25; ++trial) {
    Ideal i = frobalg::testing::random_monomial_ideal(rng, s, 3, 2);
    Polynomial f = frobalg::testing::random_poly(rng, s, 3, 3);
    CHECK(extended_ideal_membership(f, i, 2) == (i.contains(f) ? Verdict::kTrue : Verdict::kFalse));

    Ideal iq = frobalg::testing::random_monomial_ideal(rng, q, 2, 2);
    Polynomial g = frobalg::testing::random_poly(rng, q, 2, 2);
    auto closure = frobenius_closure(iq, 2);
    Verdict v = extended_ideal_membership(g, iq, 2);
    CHECK((v == Verdict::kTrue) == closure.closure.contains(g));
    // Gamma of the extension starts at the closure: I^F = I R^∞ ∩ R.
    if (trial < 6) CHECK(ideal_equal(gamma_fseq(PerfectClosureIdeal::extension(iq), 0, 2).sequence[0], closure.closure));
  }
}

TEST_CASE("property: extension to truncations preserves prime containment") {
  Ring r = parse_ring("F_2[x,y,z]");
  std::vector<Ideal> primes;
  for (std::uint32_t mask = 0; mask < 8; ++mask) {
    std::vector<Polynomial> g;
    for (std::size_t v = 0; v < 3; ++v)
      if (mask & (1u << v)) g.push_back(r.var(v));
    primes.emplace_back(r, g);
  }
  for (const auto& a : primes)
    for (const auto& b : primes)
      for (std::uint64_t e = 0; e <= 2; ++e)
        CHECK(b.contains(a) == frobenius_power(b, e).contains(frobenius_power(a, e)));
}
