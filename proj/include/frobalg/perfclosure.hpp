#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "frobalg/frobenius.hpp"

namespace frobalg {

// body^(1/p^level), an element of R^{1/p^level} inside the perfect closure.
struct RootElement {
  std::uint64_t level = 0;
  Polynomial body;

  std::string str() const;
};

// Over a free ring, p-th roots are taken out of the body until none is left
// or the level reaches 0. Bodies over quotient rings are kept as given.
RootElement canonical_root(const RootElement& r, const Ring& ring);

// (e, r) and (e', r') agree when r^(p^(L-e)) = r'^(p^(L-e')) in R, L = max(e, e').
bool root_equal(const RootElement& a, const RootElement& b, const Ring& ring);

// Ideal of R^∞ generated by finitely many root elements.
class PerfectClosureIdeal {
 public:
  PerfectClosureIdeal(Ring ring, std::vector<RootElement> generators);

  // Extension of an ideal of R: its generators at level 0.
  static PerfectClosureIdeal extension(const Ideal& i);
  // Extension of an f-sequence prefix: (e, g) for every generator g of J_e.
  static PerfectClosureIdeal extension(const FSequence& seq);

  const Ring& ring() const { return ring_; }
  const std::vector<RootElement>& generators() const { return generators_; }
  std::uint64_t max_level() const;

  // Image of the truncation J R^{1/p^L} under R^{1/p^L} ≅ R, x^{1/p^L} ↦ x:
  // (g^(p^(L-e))) over the generators (e, g). Requires L >= max_level().
  Ideal truncation(std::uint64_t level) const;

  std::string str() const;

 private:
  Ring ring_;
  std::vector<RootElement> generators_;
};

// "root(e, f)" or a plain polynomial (level 0).
RootElement parse_root(std::string_view text, const Ring& ring);
// "(a1, a2, ...)" with every entry as in parse_root.
PerfectClosureIdeal parse_root_ideal(std::string_view text, const Ring& ring);

// r ∈ I R^∞ ∩ R = I^F, decided along the Frobenius closure chain of I up to
// e_max. kFalse needs the chain to have stabilized.
Verdict extended_ideal_membership(const Polynomial& r, const Ideal& i, std::uint64_t e_max);

// Root element in J, tested at truncation levels up to lift_cap. Over a free
// ring the first usable level decides, R^{1/p^L} being free over R^{1/p^e}.
Verdict root_membership(const RootElement& r, const PerfectClosureIdeal& j, std::uint64_t lift_cap);

struct GammaResult {
  FSequence sequence;
  // Truncation level at which J_e was taken; absent when no two
  // consecutive levels agreed before lift_cap.
  std::vector<std::optional<std::uint64_t>> level_reached;
  bool stabilized = true;
  FSequenceCheck verify;
};

// J_e = { r : r^{1/p^e} ∈ J } for e = 0..last, where each J_e is the
// contraction frobenius_preimage(truncation(L), L - e) taken at the first L
// with two consecutive truncations agreeing.
GammaResult gamma_fseq(const PerfectClosureIdeal& j, std::size_t last, std::uint64_t lift_cap);

struct PrimeLevelCheck {
  std::uint64_t level = 0;
  // √(P R^{1/q}) corresponds to P again, and it contracts to P.
  bool radical_ok = false;
  bool contraction_ok = false;
  // P ⊆ Q ⟺ √(P R^{1/q}) ⊆ √(Q R^{1/q}) over the sampled primes Q.
  bool order_ok = false;
  // Rational points of V(P R^{1/q}) map onto those of V(P).
  bool points_ok = false;
  bool pass() const { return radical_ok && contraction_ok && order_ok && points_ok; }
};

struct PrimeExtensionReport {
  std::vector<PrimeLevelCheck> levels;
  std::size_t sampled_primes = 0;
  std::size_t sampled_points = 0;
  bool pass() const;
};

// Finite evidence that P ↦ P^∞ is order preserving and P^∞ ∩ R = P. P must
// be generated by variables or by linear forms without constant term.
PrimeExtensionReport prime_extension_check(const Ideal& p, std::uint64_t q_levels);

struct ZeroClosure {
  Ideal ideal;
  std::optional<std::uint64_t> stabilized_at;
};

// 0^F of F^e(R/I) = R/I^[q], as the lift frobenius_closure(I^[q], e_max).
ZeroClosure zero_closure_cyclic(const Ideal& i, std::uint64_t e, std::uint64_t e_max);

struct ObstructionLevel {
  std::uint64_t level = 0;
  std::size_t checked = 0;
  std::size_t violations = 0;
};

// In F_p[x]: for nonzero r ∈ R^{1/p^e} with every term of root degree < 1,
// so r ∉ (x)R^∞, also x^{1/p^{e+1}} r ∉ (x)R^∞. Membership is decided at
// level e + 1. Every such r is tried when there are at most max_elements of
// them, otherwise the monomial and binomial ones.
std::vector<ObstructionLevel> root_obstruction_check(std::uint32_t p, std::uint64_t e_max,
                                                     std::size_t max_elements = 1u << 16);

}  // namespace frobalg
