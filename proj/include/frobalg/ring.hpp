#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "frobalg/polynomial.hpp"

namespace frobalg {

// R = S / I where S is a free polynomial ring over F_p and I is given by
// generators (possibly none). Polynomials always live in S; everything that
// refers to R works with lifts.
class Ring {
 public:
  explicit Ring(PolyRingPtr free, std::vector<Polynomial> quotient = {});

  const PolyRingPtr& free() const { return free_; }
  const std::vector<Polynomial>& quotient() const { return quotient_; }
  bool has_quotient() const { return !quotient_.empty(); }
  std::uint32_t characteristic() const { return free_->characteristic(); }
  std::size_t nvars() const { return free_->nvars(); }

  Polynomial zero() const { return Polynomial(free_); }
  Polynomial one() const { return Polynomial::constant(free_, 1); }
  Polynomial var(std::size_t i) const { return Polynomial::variable(free_, i); }
  std::vector<Polynomial> variables() const;

  // The free ring S viewed as a ring without quotient.
  Ring ambient() const { return Ring(free_); }

  std::string str() const;

 private:
  PolyRingPtr free_;
  std::vector<Polynomial> quotient_;
};

// q = p^e, checked against the exponent range.
std::uint64_t frobenius_q(std::uint32_t p, std::uint64_t e);

// f^(p^e): exponents scaled by p^e, coefficients fixed (a^p = a in F_p).
Polynomial frobenius_map(const Polynomial& f, std::uint64_t e);

// g with g^(p^e) = f, or nothing when some exponent is not divisible by p^e.
// Only defined for rings without a quotient.
std::optional<Polynomial> pth_root(const Polynomial& f, std::uint64_t e, const Ring& ring);

}  // namespace frobalg
