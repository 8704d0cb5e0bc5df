#pragma once

// Buchberger engine shared by ideals (rank 1) and submodules of free modules.

#include <cstdint>
#include <vector>

#include "frobalg/field.hpp"
#include "frobalg/monomial.hpp"
#include "frobalg/polynomial.hpp"

namespace frobalg::detail {

struct ModTerm {
  Coeff coeff;
  Monomial mono;
  std::uint32_t pos;
};

// Terms sorted strictly decreasing under a ModuleOrder.
using ModVec = std::vector<ModTerm>;

struct ModuleOrder {
  MonomialOrder mono;
  // Position over term; a smaller position index is the larger one.
  bool position_first = true;

  int compare(const Monomial& ma, std::uint32_t pa, const Monomial& mb, std::uint32_t pb) const {
    if (position_first) {
      if (pa != pb) return pa < pb ? 1 : -1;
      return mono.compare(ma, mb);
    }
    if (int c = mono.compare(ma, mb); c != 0) return c;
    if (pa != pb) return pa < pb ? 1 : -1;
    return 0;
  }
  int compare(const ModTerm& a, const ModTerm& b) const {
    return compare(a.mono, a.pos, b.mono, b.pos);
  }
};

class GbEngine {
 public:
  GbEngine(const PrimeField& field, ModuleOrder order) : field_(field), order_(order) {}

  // Reduced Groebner basis, sorted increasingly by leading term.
  std::vector<ModVec> basis(std::vector<ModVec> gens) const;

  // Full normal form modulo `basis` (must be monic leading coefficients).
  ModVec reduce(ModVec f, const std::vector<ModVec>& basis) const;

  void normalize(ModVec& v) const;
  ModVec monic(ModVec v) const;
  // f + c * m * g
  ModVec add_multiple(const ModVec& f, Coeff c, const Monomial& m, const ModVec& g) const;

  const ModuleOrder& order() const { return order_; }
  const PrimeField& field() const { return field_; }

 private:
  PrimeField field_;
  ModuleOrder order_;
};

ModVec from_polynomial(const Polynomial& f, std::uint32_t pos);
Polynomial to_polynomial(const ModVec& v, const PolyRingPtr& ring);
std::int64_t max_degree(const ModVec& v);

}  // namespace frobalg::detail
