#include "frobalg/depth.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <stdexcept>

#include "frobalg/budget.hpp"
#include "frobalg/frobenius.hpp"

namespace frobalg {

ModulePresentation frobenius_functor(const ModulePresentation& m, std::uint64_t e) {
  return ModulePresentation(m.ring(), m.relations().map([e](const Polynomial& a) { return frobenius_map(a, e); }));
}

namespace {

// Increasing k-subsets of {0..n-1} as bitmasks, lexicographic.
std::vector<std::uint32_t> subsets(std::size_t n, std::size_t k) {
  std::vector<std::uint32_t> out;
  if (k > n) return out;
  std::vector<std::size_t> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = i;
  while (true) {
    std::uint32_t mask = 0;
    for (auto i : idx) mask |= 1u << i;
    out.push_back(mask);
    std::size_t pos = k;
    while (pos > 0 && idx[pos - 1] == n - k + pos - 1) --pos;
    if (pos == 0) break;
    ++idx[pos - 1];
    for (std::size_t j = pos; j < k; ++j) idx[j] = idx[j - 1] + 1;
  }
  return out;
}

std::size_t binomial(std::size_t n, std::size_t k) { return k > n ? 0 : subsets(n, k).size(); }

Matrix block_diagonal(const Matrix& n, std::size_t copies) {
  Matrix out(n.ring(), n.rows() * copies, n.cols() * copies);
  for (std::size_t c = 0; c < copies; ++c)
    for (std::size_t i = 0; i < n.rows(); ++i)
      for (std::size_t j = 0; j < n.cols(); ++j)
        if (!n.at(i, j).is_zero()) out.set(c * n.rows() + i, c * n.cols() + j, n.at(i, j));
  return out;
}

Matrix scalar_matrix(const Polynomial& f, std::size_t r) {
  Matrix out(f.ring(), r, r);
  for (std::size_t i = 0; i < r; ++i) out.set(i, i, f);
  return out;
}

// v ↦ (x_1 v, ..., x_n v) has a kernel beyond N: some nonzero element of M
// is killed by every x_i.
bool has_socle(const std::vector<Polynomial>& x, const ModulePresentation& m) {
  const Matrix n = m.lifted_relations();
  const std::size_t r = m.rank();
  if (r == 0) return false;
  Matrix stacked(n.ring(), x.size() * r, r);
  for (std::size_t k = 0; k < x.size(); ++k)
    for (std::size_t i = 0; i < r; ++i) stacked.set(k * r + i, i, x[k]);
  Matrix killed = kernel(stacked, block_diagonal(n, x.size()));
  return !column_span_contains(n, killed);
}

}  // namespace

Matrix koszul_differential(const std::vector<Polynomial>& x, std::size_t i, const PolyRingPtr& ring) {
  const std::size_t n = x.size();
  if (i == 0) return Matrix(ring, 0, 1);
  auto rows = subsets(n, i - 1);
  auto cols = subsets(n, i);
  std::map<std::uint32_t, std::size_t> row_index;
  for (std::size_t k = 0; k < rows.size(); ++k) row_index[rows[k]] = k;
  Matrix d(ring, rows.size(), cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    std::size_t t = 0;
    for (std::size_t v = 0; v < n; ++v) {
      if (!(cols[j] & (1u << v))) continue;
      Polynomial entry = x[v].in(ring);
      d.set(row_index.at(cols[j] & ~(1u << v)), j, t % 2 == 0 ? entry : -entry);
      ++t;
    }
  }
  return d;
}

bool koszul_homology_nonzero(const std::vector<Polynomial>& x, const ModulePresentation& m, std::size_t i) {
  const std::size_t n = x.size();
  if (i > n) return false;
  const PolyRingPtr& ring = m.ring().free();
  const Matrix rel = m.lifted_relations();
  const std::size_t r = m.rank();
  const std::size_t ci = binomial(n, i);
  Matrix cycles = i == 0 ? Matrix::identity(ring, r)
                         : kernel(koszul_differential(x, i, ring).kron_identity(r),
                                  block_diagonal(rel, binomial(n, i - 1)));
  Matrix boundaries = i < n ? koszul_differential(x, i + 1, ring).kron_identity(r) : Matrix(ring, ci * r, 0);
  return !column_span_contains(boundaries.hconcat(block_diagonal(rel, ci)), cycles);
}

KoszulProfile kgrade(const std::vector<Polynomial>& x, const ModulePresentation& m) {
  KoszulProfile profile;
  profile.sequence = x;
  for (std::size_t i = 0; i <= x.size(); ++i)
    if (koszul_homology_nonzero(x, m, i)) profile.nonzero_homology.push_back(i);
  if (!profile.nonzero_homology.empty()) profile.kgrade = x.size() - profile.nonzero_homology.back();
  return profile;
}

std::string to_string(OracleStatus s) {
  switch (s) {
    case OracleStatus::kAgrees:
      return "agrees";
    case OracleStatus::kDisagrees:
      return "disagrees";
    case OracleStatus::kNoOracle:
      return "no-oracle";
  }
  return "?";
}

DepthReport depth_at_origin(const ModulePresentation& m, bool cross_check) {
  DepthReport report;
  const auto vars = m.ring().variables();
  const std::size_t n = vars.size();
  for (std::size_t i = n + 1; i-- > 0;) {
    if (koszul_homology_nonzero(vars, m, i)) {
      report.depth = n - i;
      break;
    }
  }
  if (!cross_check || !m.is_graded()) return report;
  Resolution res = free_resolution(m, n + 1);
  report.pd = res.pd;
  if (res.zero_module)
    report.oracle = report.depth ? OracleStatus::kDisagrees : OracleStatus::kAgrees;
  else if (res.pd && report.depth)
    report.oracle = *report.depth + *res.pd == n ? OracleStatus::kAgrees : OracleStatus::kDisagrees;
  else if (res.pd)
    report.oracle = OracleStatus::kDisagrees;
  return report;
}

bool is_regular_element(const Polynomial& f, const ModulePresentation& m) {
  const Matrix n = m.lifted_relations();
  const std::size_t r = m.rank();
  if (r == 0) return false;
  Matrix mult = scalar_matrix(f.in(n.ring()), r);
  if (column_span_contains(n.hconcat(mult), Matrix::identity(n.ring(), r))) return false;  // M = fM
  return column_span_contains(n, kernel(mult, n));
}

ModulePresentation quotient_by(const ModulePresentation& m, const Polynomial& f) {
  return ModulePresentation(m.ring(), m.relations().hconcat(scalar_matrix(f.in(m.ring().free()), m.rank())));
}

namespace {

struct Pool {
  std::vector<Polynomial> forms;
  bool exhaustive = false;
};

constexpr std::uint64_t kEnumerationLimit = 512;

// Nonzero forms of degree d up to scalars (leading coefficient 1), or a
// random sample when there are more than the enumeration limit.
Pool forms_of_degree(const Ring& ring, int d, std::size_t trials, std::mt19937_64& rng) {
  const PolyRingPtr& s = ring.free();
  const std::uint64_t p = ring.characteristic();
  std::vector<Monomial> monos;
  {
    // degree-d monomials, in decreasing order
    std::vector<Monomial> stack{Monomial(ring.nvars())};
    for (int k = 0; k < d; ++k) {
      std::vector<Monomial> next;
      for (const auto& m : stack)
        for (std::size_t v = 0; v < ring.nvars(); ++v) next.push_back(m * Monomial::variable(ring.nvars(), v));
      std::sort(next.begin(), next.end(),
                [&](const Monomial& a, const Monomial& b) { return s->order().compare(a, b) > 0; });
      next.erase(std::unique(next.begin(), next.end()), next.end());
      stack = std::move(next);
    }
    monos = std::move(stack);
  }
  const std::size_t c = monos.size();
  std::uint64_t total = 1;
  bool small = true;
  for (std::size_t k = 0; k < c && small; ++k) {
    total *= p;
    small = total <= kEnumerationLimit;
  }
  Pool pool;
  if (small) {
    pool.exhaustive = true;
    std::vector<std::vector<Coeff>> vectors;
    for (std::uint64_t code = 1; code < total; ++code) {
      std::vector<Coeff> v(c);
      std::uint64_t rest = code;
      for (std::size_t k = 0; k < c; ++k) {
        v[k] = static_cast<Coeff>(rest % p);
        rest /= p;
      }
      auto first = std::find_if(v.begin(), v.end(), [](Coeff a) { return a != 0; });
      if (*first == 1) vectors.push_back(std::move(v));
    }
    // fewest terms first, then lexicographic in the coefficient vectors
    std::stable_sort(vectors.begin(), vectors.end(), [](const auto& a, const auto& b) {
      auto support = [](const std::vector<Coeff>& v) { return std::count_if(v.begin(), v.end(), [](Coeff x) { return x != 0; }); };
      return support(a) < support(b);
    });
    for (const auto& v : vectors) {
      std::vector<Term> terms;
      for (std::size_t k = 0; k < c; ++k)
        if (v[k] != 0) terms.push_back({v[k], monos[k]});
      pool.forms.emplace_back(s, std::move(terms));
    }
  } else {
    std::uniform_int_distribution<Coeff> coeff(0, static_cast<Coeff>(p - 1));
    while (pool.forms.size() < trials) {
      std::vector<Term> terms;
      for (const auto& mono : monos) terms.push_back({coeff(rng), mono});
      Polynomial f(s, std::move(terms));
      if (!f.is_zero()) pool.forms.push_back(f.monic());
    }
  }
  return pool;
}

std::vector<Pool> candidate_pools(const Ring& ring, std::size_t trials, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  std::vector<Pool> pools;
  for (int d = 1; d <= 3; ++d) pools.push_back(forms_of_degree(ring, d, trials, rng));
  return pools;
}

// Greedy search for a sequence regular on every module in `levels`.
RegularSearch greedy_regular_sequence(std::vector<ModulePresentation> levels, std::size_t trials,
                                      std::uint64_t seed) {
  RegularSearch result;
  result.seed = seed;
  const Ring& ring = levels.front().ring();
  const auto vars = ring.variables();
  const auto pools = candidate_pools(ring, trials, seed);
  result.linear_exhaustive = pools.front().exhaustive;
  result.annotation = result.linear_exhaustive ? "exhaustive" : "budget";
  while (result.length < ring.nvars()) {
    // Depth zero somewhere: nothing in the maximal ideal is regular there.
    if (std::any_of(levels.begin(), levels.end(),
                    [&](const ModulePresentation& m) { return m.rank() == 0 || has_socle(vars, m); }))
      break;
    std::optional<Polynomial> found;
    for (const auto& pool : pools) {
      for (const auto& f : pool.forms) {
        if (std::all_of(levels.begin(), levels.end(),
                        [&](const ModulePresentation& m) { return is_regular_element(f, m); })) {
          found = f;
          break;
        }
      }
      if (found) break;
    }
    if (!found) break;
    for (auto& m : levels) m = quotient_by(m, *found);
    result.witness.push_back(*found);
    ++result.length;
  }
  return result;
}

}  // namespace

RegularSearch classical_depth_search(const ModulePresentation& m, std::size_t trials, std::uint64_t seed) {
  return greedy_regular_sequence({m}, trials, seed);
}

SdepthReport sdepth(const ModulePresentation& m, std::uint64_t e_max, std::size_t window) {
  if (window == 0) throw std::invalid_argument("sdepth window must be positive");
  SdepthReport report;
  report.window = window;
  report.ring_f_pure = !m.ring().has_quotient() || fedder_f_pure(m.ring()).is_f_pure;
  for (std::uint64_t e = 0; e <= e_max; ++e) {
    try {
      DepthReport d = depth_at_origin(frobenius_functor(m, e));
      report.per_e_depth.push_back(d.depth);
      report.oracle.push_back(d.oracle);
    } catch (const BudgetExceeded&) {
      report.truncated_at = e;
      break;
    }
  }
  const auto& v = report.per_e_depth;
  for (std::size_t k = 1; k < v.size(); ++k)
    if (v[k] && (!v[k - 1] || *v[k] > *v[k - 1])) report.non_increasing = false;
  if (v.size() >= window && v.back()) {
    bool equal = true;
    for (std::size_t k = v.size() - window; k < v.size(); ++k) equal = equal && v[k] == v.back();
    if (equal) report.stabilized_value = v.back();
  }
  return report;
}

std::vector<bool> regular_sequence_check(const std::vector<Polynomial>& x, const ModulePresentation& m,
                                         std::uint64_t e_lo, std::uint64_t e_hi) {
  std::vector<bool> out;
  for (std::uint64_t e = e_lo; e <= e_hi; ++e) {
    ModulePresentation level = frobenius_functor(m, e);
    bool ok = true;
    for (const auto& f : x) {
      if (!is_regular_element(f, level)) {
        ok = false;
        break;
      }
      level = quotient_by(level, f);
    }
    out.push_back(ok);
  }
  return out;
}

RegularSearch cdepth_lower_bound(const ModulePresentation& m, std::uint64_t e_max, std::size_t trials,
                                 std::uint64_t seed) {
  std::vector<ModulePresentation> levels;
  for (std::uint64_t e = 0; e <= e_max; ++e) levels.push_back(frobenius_functor(m, e));
  return greedy_regular_sequence(std::move(levels), trials, seed);
}

TruncationProfile kdepth_truncation_profile(const ModulePresentation& m, std::uint64_t e_max,
                                            std::size_t window) {
  if (window == 0) throw std::invalid_argument("window must be positive");
  TruncationProfile out;
  const auto vars = m.ring().variables();
  for (std::uint64_t e = 0; e <= e_max; ++e) out.levels.push_back(kgrade(vars, frobenius_functor(m, e)));
  if (out.levels.size() >= window) {
    const auto& last = out.levels.back().nonzero_homology;
    out.eventually_constant = true;
    for (std::size_t k = out.levels.size() - window; k < out.levels.size(); ++k)
      out.eventually_constant = out.eventually_constant && out.levels[k].nonzero_homology == last;
    if (out.eventually_constant) out.stable_kgrade = out.levels.back().kgrade;
  }
  return out;
}

}  // namespace frobalg
