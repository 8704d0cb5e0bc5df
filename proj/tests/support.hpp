#pragma once

// Shared helpers for the test suites: short constructors and seeded random
// generators for polynomials and ideals.

#include <random>
#include <string_view>
#include <vector>

#include "frobalg/groebner.hpp"
#include "frobalg/parser.hpp"

namespace frobalg::testing {

inline Polynomial P(const Ring& r, std::string_view text) { return parse_poly(text, r); }

inline Ideal I(const Ring& r, std::string_view text) { return Ideal(r, parse_generators(text, r)); }

inline Monomial random_monomial(std::mt19937_64& rng, std::size_t nvars, int max_degree) {
  Monomial m(nvars);
  std::uniform_int_distribution<int> deg(0, max_degree);
  int budget = deg(rng);
  std::uniform_int_distribution<std::size_t> var(0, nvars - 1);
  for (int k = 0; k < budget; ++k) {
    std::size_t v = var(rng);
    m.set(v, m[v] + 1);
  }
  return m;
}

inline Monomial random_monomial_of_degree(std::mt19937_64& rng, std::size_t nvars, int degree) {
  Monomial m(nvars);
  std::uniform_int_distribution<std::size_t> var(0, nvars - 1);
  for (int k = 0; k < degree; ++k) {
    std::size_t v = var(rng);
    m.set(v, m[v] + 1);
  }
  return m;
}

inline Polynomial random_poly(std::mt19937_64& rng, const Ring& ring, int max_degree, int max_terms) {
  std::uniform_int_distribution<int> nterms(0, max_terms);
  std::uniform_int_distribution<std::uint32_t> coeff(1, ring.characteristic() - 1 > 0 ? ring.characteristic() - 1 : 1);
  std::vector<Term> terms;
  int k = nterms(rng);
  for (int i = 0; i < k; ++i) terms.push_back({coeff(rng), random_monomial(rng, ring.nvars(), max_degree)});
  return Polynomial(ring.free(), std::move(terms));
}

// Monomial ideal with 1..max_gens generators, each of total degree in [1, max_degree].
inline Ideal random_monomial_ideal(std::mt19937_64& rng, const Ring& ring, int max_degree, int max_gens) {
  std::uniform_int_distribution<int> ngens(1, max_gens);
  std::uniform_int_distribution<int> degree(1, max_degree);
  std::vector<Polynomial> gens;
  int k = ngens(rng);
  for (int i = 0; i < k; ++i)
    gens.push_back(Polynomial::monomial(ring.free(), random_monomial_of_degree(rng, ring.nvars(), degree(rng))));
  return Ideal(ring, std::move(gens));
}

}  // namespace frobalg::testing
