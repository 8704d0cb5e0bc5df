#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "frobalg/frobenius.hpp"

namespace frobalg {

enum class PrimeKind { kAss, kWeaklyAss, kStrongKrull, kKrull };
enum class Side { kR, kRInfinityViaPhi };

std::string to_string(PrimeKind k);
std::string to_string(Side s);

// A prime of R. With side kRInfinityViaPhi the record stands for the prime
// P^∞ of R^∞ lying over the stored contraction P.
struct PrimeIdealRecord {
  Ideal ideal;
  PrimeKind kind = PrimeKind::kAss;
  Side side = Side::kR;
  // Monomial b with (I : b) = P, when known.
  std::optional<Polynomial> witness;
  std::size_t first_seen = 0;

  std::string str() const;
};

// Ass(S/I) for a monomial ideal: variable primes P with a standard monomial
// b, exponents bounded by the largest generator exponent, such that
// (I : b) = P. Sorted by the set of variables.
std::vector<PrimeIdealRecord> ass_monomial(const Ideal& i);

// Minimal primes of a monomial ideal from the minimal variable sets meeting
// every generator's support.
std::vector<Ideal> minimal_primes_monomial(const Ideal& i);

// The maximal ideal at `point` is associated to S/J: translate the point to
// the origin and test for depth zero.
bool maximal_in_ass(const Ideal& j, const std::vector<Coeff>& point);

// ⋃_e Ass(R/J_e) for monomial J_e, each prime tagged with the first e it
// appears at, followed by the R^∞-side weakly associated and strong Krull
// records that the correspondence attaches to the same contractions.
std::vector<PrimeIdealRecord> union_ass_fseq(const FSequence& seq);

// First e with the maximal ideal at `point` in Ass(R/J_e), for sequences
// that are not monomial.
std::optional<std::size_t> first_maximal_in_ass(const FSequence& seq, const std::vector<Coeff>& point);

}  // namespace frobalg
