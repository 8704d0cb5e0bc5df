#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "frobalg/module.hpp"

namespace frobalg {

// Relation matrix with every entry raised to the p^e-th power; the ring and
// its quotient are kept. For R/J this is R/J^[q].
ModulePresentation frobenius_functor(const ModulePresentation& m, std::uint64_t e);

// d_i: K_i -> K_{i-1} of the Koszul complex on x, bases indexed by the
// increasing subsets of {0..n-1} in lexicographic order.
Matrix koszul_differential(const std::vector<Polynomial>& x, std::size_t i, const PolyRingPtr& ring);

// H_i(x; M) != 0.
bool koszul_homology_nonzero(const std::vector<Polynomial>& x, const ModulePresentation& m, std::size_t i);

struct KoszulProfile {
  std::vector<Polynomial> sequence;
  // Indices i with H_i(x; M) != 0, increasing.
  std::vector<std::size_t> nonzero_homology;
  // n - max(nonzero_homology); absent for the zero module.
  std::optional<std::size_t> kgrade;
};

KoszulProfile kgrade(const std::vector<Polynomial>& x, const ModulePresentation& m);

enum class OracleStatus { kAgrees, kDisagrees, kNoOracle };

std::string to_string(OracleStatus s);

struct DepthReport {
  // Koszul depth at (x_1, ..., x_n); absent for the zero module.
  std::optional<std::size_t> depth;
  // Projective dimension over S when the presentation is graded.
  std::optional<std::size_t> pd;
  OracleStatus oracle = OracleStatus::kNoOracle;
};

DepthReport depth_at_origin(const ModulePresentation& m, bool cross_check = true);

// f is a nonzerodivisor on M and M != fM.
bool is_regular_element(const Polynomial& f, const ModulePresentation& m);

// M / fM
ModulePresentation quotient_by(const ModulePresentation& m, const Polynomial& f);

struct RegularSearch {
  std::size_t length = 0;
  std::vector<Polynomial> witness;
  // Every linear form was a candidate (p^n <= 512).
  bool linear_exhaustive = false;
  // "exhaustive" when every candidate pool tried at the last step was
  // enumerated completely, "budget" otherwise.
  std::string annotation;
  std::uint64_t seed = 0;
};

// Greedy regular sequence in (x_1..x_n): linear forms first, then forms of
// degree 2 and 3; pools larger than 512 elements are sampled `trials` times.
RegularSearch classical_depth_search(const ModulePresentation& m, std::size_t trials, std::uint64_t seed);

struct SdepthReport {
  std::vector<std::optional<std::size_t>> per_e_depth;
  std::vector<OracleStatus> oracle;
  std::optional<std::size_t> stabilized_value;
  std::size_t window = 0;
  bool ring_f_pure = false;
  bool non_increasing = true;
  // Level at which the budget ran out; the report covers the levels before.
  std::optional<std::uint64_t> truncated_at;
};

SdepthReport sdepth(const ModulePresentation& m, std::uint64_t e_max, std::size_t window);

// For each e in [e_lo, e_hi]: x is a regular sequence on F^e(M).
std::vector<bool> regular_sequence_check(const std::vector<Polynomial>& x, const ModulePresentation& m,
                                         std::uint64_t e_lo, std::uint64_t e_hi);

// Greedy sequence regular on F^e(M) for every e <= e_max; candidates as in
// classical_depth_search.
RegularSearch cdepth_lower_bound(const ModulePresentation& m, std::uint64_t e_max, std::size_t trials,
                                 std::uint64_t seed);

struct TruncationProfile {
  std::vector<KoszulProfile> levels;
  // The last `window` levels share one nonzero-homology pattern.
  bool eventually_constant = false;
  std::optional<std::size_t> stable_kgrade;
};

TruncationProfile kdepth_truncation_profile(const ModulePresentation& m, std::uint64_t e_max,
                                            std::size_t window);

}  // namespace frobalg
