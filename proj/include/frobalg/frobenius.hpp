#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "frobalg/groebner.hpp"

namespace frobalg {

enum class Verdict { kFalse, kTrue, kUnresolved };

std::string to_string(Verdict v);

// J^[q], q = p^e: generated by the q-th powers of the generators.
Ideal frobenius_power(const Ideal& j, std::uint64_t e);

// { r ∈ S : r^(p^e) ∈ J + I } for J an ideal of R = S/I, returned in R.
Ideal frobenius_preimage(const Ideal& j, std::uint64_t e);

// The same computation through elimination only (no monomial shortcut).
Ideal frobenius_preimage_by_elimination(const Ideal& j, std::uint64_t e);

struct FrobeniusClosure {
  Ideal closure;
  // First e from which C_e, ..., C_{e_max} all agree; absent when
  // C_{e_max - 1} != C_{e_max}. Agreement is taken as stabilization without
  // proof.
  std::optional<std::uint64_t> stabilized_at;
  std::vector<Ideal> chain;
};

// C_e = frobenius_preimage(J^[p^e], e) for e = 0, 1, ... up to e_max.
FrobeniusClosure frobenius_closure(const Ideal& j, std::uint64_t e_max);

// kFalse as soon as some C_e leaves J; kTrue when C_1..C_{e_max} all equal J.
Verdict is_frobenius_closed(const Ideal& j, std::uint64_t e_max);

struct FPurityReport {
  bool is_f_pure = false;
  std::optional<Polynomial> witness;
  std::uint64_t q = 0;
  // Generators of (I^[q] : I) in S.
  std::vector<Polynomial> colon;
};

// Fedder's criterion at q = p for R = S/I and the maximal ideal m of S.
FPurityReport fedder_f_pure(const Ring& ring, const Ideal& m);
FPurityReport fedder_f_pure(const Ring& ring);

class FSequence {
 public:
  enum class Rule { kCustom, kFrobeniusPowers, kConstant };

  static FSequence custom(Ring ring, std::vector<Ideal> prefix);
  // J_e = I^[p^e], e = 0..last
  static FSequence frobenius_powers(const Ideal& base, std::size_t last);
  // J_e = P, e = 0..last
  static FSequence constant(const Ideal& p, std::size_t last);

  const Ring& ring() const { return ring_; }
  const std::vector<Ideal>& prefix() const { return prefix_; }
  const Ideal& operator[](std::size_t e) const { return prefix_.at(e); }
  std::size_t size() const { return prefix_.size(); }
  Rule rule() const { return rule_; }
  std::string rule_name() const;

  // Prefix recomputed up to J_last from the closed-form rule.
  FSequence extended(std::size_t last) const;

 private:
  FSequence(Ring ring, std::vector<Ideal> prefix, Rule rule, std::optional<Ideal> base);

  Ring ring_;
  std::vector<Ideal> prefix_;
  Rule rule_;
  std::optional<Ideal> base_;
};

struct FSequenceCheck {
  bool ok = true;
  std::optional<std::size_t> first_failure;
};

// frobenius_preimage(J_{e+1}, 1) = J_e for every consecutive pair.
FSequenceCheck fseq_verify(const FSequence& seq);

struct RadicalStabilization {
  // f^{-k}(J_0) once two consecutive terms agree within e_max steps.
  std::optional<Ideal> stable;
  std::size_t steps = 0;
  // The stable ideal and every J_e have the same radical.
  bool radical_agrees = false;
};

RadicalStabilization fseq_radical_stabilize(const FSequence& seq, std::uint64_t e_max);

}  // namespace frobalg
