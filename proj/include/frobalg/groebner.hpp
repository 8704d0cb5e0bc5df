#pragma once

#include <memory>
#include <string>
#include <vector>

#include "frobalg/ring.hpp"

namespace frobalg {

// An ideal of R = S/I, stored by generators in S. Its Groebner basis is the
// reduced basis of the lift (generators together with the quotient ideal)
// under the ring's order, computed once and shared between copies.
class Ideal {
 public:
  Ideal(Ring ring, std::vector<Polynomial> generators);

  static Ideal zero(const Ring& ring) { return Ideal(ring, {}); }
  static Ideal unit(const Ring& ring) { return Ideal(ring, {ring.one()}); }
  static Ideal variables(const Ring& ring) { return Ideal(ring, ring.variables()); }

  const Ring& ring() const { return ring_; }
  const std::vector<Polynomial>& generators() const { return generators_; }

  const std::vector<Polynomial>& basis() const;

  bool is_unit() const;
  // Zero as an ideal of R, i.e. contained in the quotient ideal.
  bool is_zero() const;
  bool is_monomial() const;
  bool contains(const Polynomial& f) const;
  bool contains(const Ideal& other) const;

  // Generators together with the quotient ideal, as an ideal of S.
  Ideal lifted() const;
  // Same generators, viewed in another ring with the same variables.
  Ideal in(const Ring& ring) const { return Ideal(ring, generators_); }

  Ideal operator+(const Ideal& other) const;
  Ideal operator*(const Ideal& other) const;

  std::string str() const;

 private:
  struct Cache;

  Ring ring_;
  std::vector<Polynomial> generators_;
  std::shared_ptr<Cache> cache_;
};

// Reduced Groebner basis of the lifted ideal under `order`, sorted by
// increasing leading monomial. Polynomials are returned in a ring carrying
// that order.
std::vector<Polynomial> groebner_basis(const Ideal& ideal, const MonomialOrder& order);

// Full remainder of f after division by `divisors` (leading terms under the
// divisors' ring order). With a Groebner basis this is the normal form.
Polynomial remainder(const Polynomial& f, const std::vector<Polynomial>& divisors);

Polynomial normal_form(const Polynomial& f, const Ideal& ideal);

bool ideal_equal(const Ideal& a, const Ideal& b);

// (a : b) = { r : r b ⊆ a } in R. (a : 0) is the unit ideal.
Ideal colon_ideal(const Ideal& a, const Ideal& b);

// a ∩ b in R.
Ideal intersect(const Ideal& a, const Ideal& b);

// Lift of the ideal intersected with F_p[v_{k+1}, ..., v_n]; returned as an
// ideal of the ambient free ring.
Ideal eliminate(const Ideal& ideal, std::size_t k);

// f ∈ √ideal, decided by 1 ∈ ideal + (1 - t f) in S[t].
bool radical_membership(const Polynomial& f, const Ideal& ideal);

// f / g when g divides f exactly; throws std::domain_error otherwise.
Polynomial exact_divide(const Polynomial& f, const Polynomial& g);

// Free ring with `extra` fresh variables placed before (front) or after the
// existing ones. Fresh names cannot collide with parsed identifiers.
PolyRingPtr extend_ring(const PolyRingPtr& base, std::size_t extra, const std::string& stem,
                        bool front, MonomialOrder order);

}  // namespace frobalg
