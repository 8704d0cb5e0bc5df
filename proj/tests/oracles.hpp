#pragma once

// Independent brute-force oracles. Nothing here calls the Groebner engine.

#include <map>
#include <optional>
#include <vector>

#include "frobalg/polynomial.hpp"

namespace frobalg::testing {

inline std::vector<Monomial> monomials_of_degree(std::size_t nvars, int degree) {
  std::vector<Monomial> out;
  std::vector<Exponent> e(nvars, 0);
  auto rec = [&](auto&& self, std::size_t i, int left) -> void {
    if (i + 1 == nvars) {
      e[i] = left;
      out.emplace_back(std::span<const Exponent>(e));
      return;
    }
    for (int k = left; k >= 0; --k) {
      e[i] = k;
      self(self, i + 1, left - k);
    }
  };
  if (nvars == 0) {
    if (degree == 0) out.emplace_back(std::size_t{0});
    return out;
  }
  rec(rec, 0, degree);
  return out;
}

inline std::vector<Monomial> monomials_up_to(std::size_t nvars, int degree) {
  std::vector<Monomial> out;
  for (int d = 0; d <= degree; ++d)
    for (auto& m : monomials_of_degree(nvars, d)) out.push_back(m);
  return out;
}

// Gaussian elimination over F_p: is target in the column span of `columns`?
// Vectors are sparse maps from a row key to a coefficient.
template <class Key>
bool in_span(const PrimeField& F, const std::vector<std::map<Key, Coeff>>& columns,
             std::map<Key, Coeff> target) {
  // Echelon rows keyed by their smallest key, normalized to 1 there.
  std::map<Key, std::map<Key, Coeff>> pivots;
  auto reduce = [&](std::map<Key, Coeff>& v) {
    auto it = v.begin();
    while (it != v.end()) {
      auto piv = pivots.find(it->first);
      if (piv == pivots.end()) {
        ++it;
        continue;
      }
      Key k = it->first;
      Coeff factor = it->second;
      for (const auto& [rk, rc] : piv->second) {
        Coeff x = F.sub(v[rk], F.mul(factor, rc));
        if (x == 0) v.erase(rk); else v[rk] = x;
      }
      it = v.lower_bound(k);
    }
  };
  for (auto col : columns) {
    reduce(col);
    if (col.empty()) continue;
    Coeff inv = F.inv(col.begin()->second);
    for (auto& [k, c] : col) c = F.mul(c, inv);
    Key lead = col.begin()->first;
    pivots.emplace(lead, std::move(col));
  }
  reduce(target);
  return target.empty();
}

struct MonoKey {
  std::vector<Exponent> e;
  bool operator<(const MonoKey& o) const { return e < o.e; }
};

inline MonoKey key_of(const Monomial& m) {
  return {std::vector<Exponent>(m.exponents().begin(), m.exponents().end())};
}

inline std::map<MonoKey, Coeff> as_vector(const Polynomial& f) {
  std::map<MonoKey, Coeff> v;
  for (const auto& t : f.terms()) v[key_of(t.mono)] = t.coeff;
  return v;
}

// f ∈ (gens) witnessed by cofactors of total degree ≤ cofactor_degree.
inline bool brute_force_member(const Polynomial& f, const std::vector<Polynomial>& gens,
                               int cofactor_degree) {
  const auto& ring = f.ring();
  std::vector<std::map<MonoKey, Coeff>> columns;
  for (const auto& g : gens)
    for (const auto& m : monomials_up_to(ring->nvars(), cofactor_degree))
      columns.push_back(as_vector(g.mul_term(1, m)));
  return in_span(ring->field(), columns, as_vector(f));
}

// For homogeneous generators and homogeneous f the cofactors can be taken
// homogeneous of degree deg f - deg g, so this decision is exact.
inline bool brute_force_member_homogeneous(const Polynomial& f, const std::vector<Polynomial>& gens) {
  if (f.is_zero()) return true;
  const auto& ring = f.ring();
  std::vector<std::map<MonoKey, Coeff>> columns;
  for (const auto& g : gens) {
    if (g.is_zero()) continue;
    std::int64_t d = f.total_degree() - g.total_degree();
    if (d < 0) continue;
    for (const auto& m : monomials_of_degree(ring->nvars(), static_cast<int>(d)))
      columns.push_back(as_vector(g.mul_term(1, m)));
  }
  return in_span(ring->field(), columns, as_vector(f));
}

// Determinant by cofactor expansion (small matrices only).
inline Polynomial determinant(const std::vector<std::vector<Polynomial>>& m) {
  const std::size_t n = m.size();
  if (n == 1) return m[0][0];
  Polynomial acc(m[0][0].ring());
  for (std::size_t j = 0; j < n; ++j) {
    std::vector<std::vector<Polynomial>> minor;
    for (std::size_t i = 1; i < n; ++i) {
      std::vector<Polynomial> row;
      for (std::size_t k = 0; k < n; ++k)
        if (k != j) row.push_back(m[i][k]);
      minor.push_back(std::move(row));
    }
    Polynomial term = m[0][j] * determinant(minor);
    acc = (j % 2 == 0) ? acc + term : acc - term;
  }
  return acc;
}

// Membership of a monomial in a monomial ideal: divisibility by a generator.
inline bool monomial_member(const Monomial& m, const std::vector<Polynomial>& monomial_gens) {
  for (const auto& g : monomial_gens)
    if (g.lead_monomial().divides(m)) return true;
  return false;
}

// Two monomial ideals agree iff each generator set divides into the other.
inline bool monomial_ideals_equal(const std::vector<Polynomial>& a, const std::vector<Polynomial>& b) {
  for (const auto& g : a)
    if (!monomial_member(g.lead_monomial(), b)) return false;
  for (const auto& g : b)
    if (!monomial_member(g.lead_monomial(), a)) return false;
  return true;
}

}  // namespace frobalg::testing
