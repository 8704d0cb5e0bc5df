#pragma once

#include <memory>
#include <string>
#include <vector>

#include "frobalg/field.hpp"
#include "frobalg/monomial.hpp"

namespace frobalg {

// The ambient free polynomial ring F_p[v1..vn] together with the monomial
// order that fixes the canonical term order of its polynomials.
class PolyRing {
 public:
  PolyRing(std::uint32_t p, std::vector<std::string> names,
           MonomialOrder order = MonomialOrder::grevlex());

  const PrimeField& field() const { return field_; }
  std::uint32_t characteristic() const { return field_.characteristic(); }
  std::size_t nvars() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  const MonomialOrder& order() const { return order_; }

  // -1 when absent.
  int index_of(const std::string& name) const;

  // Same characteristic and variable names (orders may differ).
  bool same_variables(const PolyRing& other) const {
    return field_ == other.field_ && names_ == other.names_;
  }

  friend bool operator==(const PolyRing& a, const PolyRing& b) {
    return a.same_variables(b) && a.order_ == b.order_;
  }

 private:
  PrimeField field_;
  std::vector<std::string> names_;
  MonomialOrder order_;
};

using PolyRingPtr = std::shared_ptr<const PolyRing>;

PolyRingPtr make_poly_ring(std::uint32_t p, std::vector<std::string> names,
                           MonomialOrder order = MonomialOrder::grevlex());
// Same variables, different order.
PolyRingPtr with_order(const PolyRingPtr& ring, MonomialOrder order);

struct Term {
  Coeff coeff;
  Monomial mono;
  friend bool operator==(const Term&, const Term&) = default;
};

// Sparse polynomial in canonical form: nonzero coefficients, monomials
// strictly decreasing under the ring's order.
class Polynomial {
 public:
  explicit Polynomial(PolyRingPtr ring);
  Polynomial(PolyRingPtr ring, std::vector<Term> terms);  // canonicalizes

  static Polynomial constant(PolyRingPtr ring, std::int64_t c);
  static Polynomial variable(PolyRingPtr ring, std::size_t i);
  static Polynomial monomial(PolyRingPtr ring, const Monomial& m, Coeff c = 1);

  const PolyRingPtr& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  std::size_t size() const { return terms_.size(); }
  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const { return terms_.empty() || (terms_.size() == 1 && terms_[0].mono.is_one()); }
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_homogeneous() const;
  // -1 for the zero polynomial.
  std::int64_t total_degree() const;

  const Term& lead() const { return terms_.front(); }
  const Monomial& lead_monomial() const { return terms_.front().mono; }
  Coeff lead_coeff() const { return terms_.front().coeff; }

  Polynomial operator+(const Polynomial& o) const;
  Polynomial operator-(const Polynomial& o) const;
  Polynomial operator-() const;
  Polynomial operator*(const Polynomial& o) const;
  Polynomial scaled(Coeff c) const;
  Polynomial mul_term(Coeff c, const Monomial& m) const;
  Polynomial pow(std::uint64_t k) const;
  Polynomial monic() const;

  // Re-expressed in a ring with the same variables (possibly another order).
  Polynomial in(const PolyRingPtr& other) const;
  // Variables mapped by index: variable i becomes variable index_map[i] of target.
  Polynomial remap(const PolyRingPtr& target, const std::vector<std::size_t>& index_map) const;
  // Substitute polynomials for variables (values.size() == nvars).
  Polynomial substitute(const std::vector<Polynomial>& values) const;

  bool involves_variable(std::size_t i) const;

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.terms_ == b.terms_;
  }

  std::string str() const;

 private:
  void canonicalize();

  PolyRingPtr ring_;
  std::vector<Term> terms_;
};

std::string to_string(const Monomial& m, const PolyRing& ring);

}  // namespace frobalg
