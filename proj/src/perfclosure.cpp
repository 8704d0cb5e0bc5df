#include "frobalg/perfclosure.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <stdexcept>

#include "frobalg/parser.hpp"

namespace frobalg {

std::string RootElement::str() const {
  if (level == 0) return body.str();
  return "root(" + std::to_string(level) + ", " + body.str() + ")";
}

RootElement canonical_root(const RootElement& r, const Ring& ring) {
  RootElement out = r;
  if (ring.has_quotient()) return out;
  while (out.level > 0 && !out.body.is_constant()) {
    auto root = pth_root(out.body, 1, ring);
    if (!root) break;
    out.body = *root;
    --out.level;
  }
  // Constants are their own roots in F_p.
  if (out.body.is_constant()) out.level = 0;
  return out;
}

bool root_equal(const RootElement& a, const RootElement& b, const Ring& ring) {
  const std::uint64_t top = std::max(a.level, b.level);
  Polynomial diff = frobenius_map(a.body, top - a.level) - frobenius_map(b.body, top - b.level);
  return diff.is_zero() || Ideal::zero(ring).contains(diff);
}

PerfectClosureIdeal::PerfectClosureIdeal(Ring ring, std::vector<RootElement> generators)
    : ring_(std::move(ring)) {
  for (auto& g : generators) generators_.push_back(canonical_root(g, ring_));
}

PerfectClosureIdeal PerfectClosureIdeal::extension(const Ideal& i) {
  std::vector<RootElement> gens;
  for (const auto& g : i.generators()) gens.push_back({0, g});
  return PerfectClosureIdeal(i.ring(), std::move(gens));
}

PerfectClosureIdeal PerfectClosureIdeal::extension(const FSequence& seq) {
  std::vector<RootElement> gens;
  for (std::size_t e = 0; e < seq.size(); ++e)
    for (const auto& g : seq[e].generators()) {
      RootElement r = canonical_root({e, g}, seq.ring());
      bool dup = std::any_of(gens.begin(), gens.end(), [&](const RootElement& old) {
        return old.level == r.level && old.body == r.body;
      });
      if (!dup) gens.push_back(std::move(r));
    }
  return PerfectClosureIdeal(seq.ring(), std::move(gens));
}

std::uint64_t PerfectClosureIdeal::max_level() const {
  std::uint64_t top = 0;
  for (const auto& g : generators_) top = std::max(top, g.level);
  return top;
}

Ideal PerfectClosureIdeal::truncation(std::uint64_t level) const {
  if (level < max_level()) throw std::invalid_argument("truncation below the generators' level");
  std::vector<Polynomial> gens;
  for (const auto& g : generators_) gens.push_back(frobenius_map(g.body, level - g.level));
  return Ideal(ring_, std::move(gens));
}

std::string PerfectClosureIdeal::str() const {
  std::string s = "(";
  for (std::size_t k = 0; k < generators_.size(); ++k) s += (k ? ", " : "") + generators_[k].str();
  return s + ")";
}

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

// Pieces of s separated by commas outside parentheses.
std::vector<std::string_view> split_top(std::string_view s) {
  std::vector<std::string_view> out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t k = 0; k < s.size(); ++k) {
    if (s[k] == '(') ++depth;
    if (s[k] == ')' && --depth < 0) throw ParseError("unbalanced ')'", k);
    if (s[k] == ',' && depth == 0) {
      out.push_back(trim(s.substr(start, k - start)));
      start = k + 1;
    }
  }
  if (depth != 0) throw ParseError("unbalanced '('", s.size());
  out.push_back(trim(s.substr(start)));
  return out;
}

bool wrapped(std::string_view s) {
  if (s.size() < 2 || s.front() != '(' || s.back() != ')') return false;
  int depth = 0;
  for (std::size_t k = 0; k + 1 < s.size(); ++k) {
    if (s[k] == '(') ++depth;
    if (s[k] == ')') --depth;
    if (depth == 0) return false;
  }
  return true;
}

}  // namespace

RootElement parse_root(std::string_view text, const Ring& ring) {
  std::string_view s = trim(text);
  if (s.rfind("root", 0) == 0 && wrapped(trim(s.substr(4)))) {
    std::string_view inner = trim(s.substr(4));
    auto parts = split_top(inner.substr(1, inner.size() - 2));
    if (parts.size() != 2) throw ParseError("root(e, f) takes two arguments", 0);
    std::uint64_t level = 0;
    if (parts[0].empty()) throw ParseError("missing root level", 0);
    for (char c : parts[0]) {
      if (!std::isdigit(static_cast<unsigned char>(c))) throw ParseError("root level must be a natural number", 0);
      level = level * 10 + static_cast<std::uint64_t>(c - '0');
      if (level > 64) throw ParseError("root level too large", 0);
    }
    return {level, parse_poly(parts[1], ring)};
  }
  return {0, parse_poly(s, ring)};
}

PerfectClosureIdeal parse_root_ideal(std::string_view text, const Ring& ring) {
  std::string_view s = trim(text);
  if (wrapped(s)) s = trim(s.substr(1, s.size() - 2));
  std::vector<RootElement> gens;
  if (!s.empty())
    for (auto part : split_top(s)) gens.push_back(parse_root(part, ring));
  return PerfectClosureIdeal(ring, std::move(gens));
}

Verdict extended_ideal_membership(const Polynomial& r, const Ideal& i, std::uint64_t e_max) {
  if (i.contains(r)) return Verdict::kTrue;
  FrobeniusClosure c = frobenius_closure(i, e_max);
  // r^q ∈ I^[q] exactly when r ∈ C_e.
  for (const auto& level : c.chain)
    if (level.contains(r)) return Verdict::kTrue;
  return c.stabilized_at ? Verdict::kFalse : Verdict::kUnresolved;
}

Verdict root_membership(const RootElement& r, const PerfectClosureIdeal& j, std::uint64_t lift_cap) {
  const std::uint64_t start = std::max(r.level, j.max_level());
  for (std::uint64_t level = start; level <= std::max(start, lift_cap); ++level) {
    if (j.truncation(level).contains(frobenius_map(r.body, level - r.level))) return Verdict::kTrue;
    if (!j.ring().has_quotient()) return Verdict::kFalse;
  }
  return Verdict::kUnresolved;
}

GammaResult gamma_fseq(const PerfectClosureIdeal& j, std::size_t last, std::uint64_t lift_cap) {
  std::vector<Ideal> prefix;
  GammaResult out{FSequence::custom(j.ring(), {}), {}, true, {}};
  for (std::uint64_t e = 0; e <= last; ++e) {
    const std::uint64_t start = std::max<std::uint64_t>(e, j.max_level());
    Ideal current = frobenius_preimage(j.truncation(start), start - e);
    std::optional<std::uint64_t> reached;
    for (std::uint64_t level = start + 1; level <= start + std::max<std::uint64_t>(lift_cap, 1); ++level) {
      Ideal next = frobenius_preimage(j.truncation(level), level - e);
      if (ideal_equal(current, next)) {
        reached = level - 1;
        break;
      }
      current = std::move(next);
    }
    if (!reached) out.stabilized = false;
    out.level_reached.push_back(reached);
    prefix.push_back(std::move(current));
  }
  out.sequence = FSequence::custom(j.ring(), std::move(prefix));
  if (out.sequence.size() >= 2) out.verify = fseq_verify(out.sequence);
  return out;
}

bool PrimeExtensionReport::pass() const {
  return std::all_of(levels.begin(), levels.end(), [](const PrimeLevelCheck& c) { return c.pass(); });
}

namespace {

bool certifiable_prime(const Ideal& p) {
  if (p.ring().has_quotient()) return false;
  return std::all_of(p.generators().begin(), p.generators().end(), [](const Polynomial& g) {
    if (g.is_zero()) return true;
    return std::all_of(g.terms().begin(), g.terms().end(), [](const Term& t) { return t.mono.degree() == 1; });
  });
}

bool radical_contains(const Ideal& outer, const Ideal& inner) {
  return std::all_of(inner.generators().begin(), inner.generators().end(),
                     [&](const Polynomial& g) { return radical_membership(g, outer); });
}

std::set<std::vector<Coeff>> rational_points(const Ideal& i, std::uint64_t e) {
  const Ring& ring = i.ring();
  const auto& field = ring.free()->field();
  const std::size_t n = ring.nvars();
  std::set<std::vector<Coeff>> out;
  std::vector<Coeff> a(n, 0);
  while (true) {
    std::vector<Polynomial> values;
    for (auto c : a) values.push_back(Polynomial::constant(ring.free(), c));
    bool on = std::all_of(i.generators().begin(), i.generators().end(),
                          [&](const Polynomial& g) { return g.substitute(values).is_zero(); });
    if (on) {
      std::vector<Coeff> image = a;
      for (auto& c : image) c = field.pow(c, frobenius_q(ring.characteristic(), e));
      out.insert(image);
    }
    std::size_t v = 0;
    while (v < n && a[v] + 1 == ring.characteristic()) a[v++] = 0;
    if (v == n) break;
    ++a[v];
  }
  return out;
}

}  // namespace

PrimeExtensionReport prime_extension_check(const Ideal& p, std::uint64_t q_levels) {
  if (!certifiable_prime(p))
    throw std::invalid_argument("prime_extension_check: need a prime of S generated by variables or linear forms");
  const Ring& ring = p.ring();
  const std::size_t n = ring.nvars();
  if (n > 12) throw std::invalid_argument("prime_extension_check: too many variables to sample");

  std::vector<Ideal> sample;
  for (std::uint32_t mask = 0; mask < (1u << n) && sample.size() < 64; ++mask) {
    std::vector<Polynomial> gens;
    for (std::size_t v = 0; v < n; ++v)
      if (mask & (1u << v)) gens.push_back(ring.var(v));
    sample.emplace_back(ring, std::move(gens));
  }
  sample.push_back(p);

  double points = 1;
  for (std::size_t v = 0; v < n; ++v) points *= ring.characteristic();
  const bool sample_points = points <= 4096;

  PrimeExtensionReport report;
  report.sampled_primes = sample.size();
  report.sampled_points = sample_points ? static_cast<std::size_t>(points) : 0;
  for (std::uint64_t e = 0; e <= q_levels; ++e) {
    // Under R^{1/q} ≅ R the subring R becomes R^q, and P R^{1/q} becomes P^[q].
    PrimeLevelCheck check;
    check.level = e;
    Ideal pq = frobenius_power(p, e);
    check.radical_ok = radical_contains(pq, p) && p.contains(pq);
    check.contraction_ok = ideal_equal(frobenius_preimage(p, e), p);
    check.order_ok = std::all_of(sample.begin(), sample.end(), [&](const Ideal& q) {
      return q.contains(p) == radical_contains(frobenius_power(q, e), pq);
    });
    check.points_ok = !sample_points || rational_points(pq, e) == rational_points(p, 0);
    report.levels.push_back(check);
  }
  return report;
}

ZeroClosure zero_closure_cyclic(const Ideal& i, std::uint64_t e, std::uint64_t e_max) {
  FrobeniusClosure c = frobenius_closure(frobenius_power(i, e), e_max);
  return {c.closure, c.stabilized_at};
}

std::vector<ObstructionLevel> root_obstruction_check(std::uint32_t p, std::uint64_t e_max,
                                                     std::size_t max_elements) {
  // Work in the copy F_p[t] of R^{1/p^{e+1}}, t = x^{1/p^{e+1}}: then x = t^{p^{e+1}}
  // and x^{a/p^e} = t^{p a}.
  Ring ring(make_poly_ring(p, {"t"}));
  std::vector<ObstructionLevel> out;
  for (std::uint64_t e = 0; e <= e_max; ++e) {
    const std::uint64_t q = frobenius_q(p, e);
    Ideal x_next(ring, {ring.var(0).pow(q * p)});
    Ideal x_here(ring, {ring.var(0).pow(q)});
    ObstructionLevel level{e, 0, 0};
    auto test = [&](const std::vector<Coeff>& coeffs) {
      Polynomial at_e(ring.free());  // r in the copy of R^{1/q}
      for (std::uint64_t a = 0; a < q; ++a)
        if (coeffs[a] != 0) at_e = at_e + Polynomial::constant(ring.free(), coeffs[a]) * ring.var(0).pow(a);
      if (at_e.is_zero()) return;
      ++level.checked;
      // r ∉ (x) at its own level, and t r ∉ (x) one level up.
      bool outside = !x_here.contains(at_e);
      bool product_outside = !x_next.contains(ring.var(0) * frobenius_map(at_e, 1));
      if (!outside || !product_outside) ++level.violations;
    };
    double total = 1;
    for (std::uint64_t a = 0; a < q && total <= 1e18; ++a) total *= p;
    std::vector<Coeff> coeffs(q, 0);
    if (total - 1 <= static_cast<double>(max_elements)) {
      while (true) {
        test(coeffs);
        std::size_t k = 0;
        while (k < q && coeffs[k] + 1 == p) coeffs[k++] = 0;
        if (k == q) break;
        ++coeffs[k];
      }
    } else {
      for (std::uint64_t a = 0; a < q; ++a)
        for (std::uint64_t b = a; b < q; ++b)
          for (Coeff c = 1; c < p; ++c) {
            std::fill(coeffs.begin(), coeffs.end(), 0);
            coeffs[a] = 1;
            if (b != a) coeffs[b] = c;
            else if (c != 1) break;
            test(coeffs);
          }
    }
    out.push_back(level);
  }
  return out;
}

}  // namespace frobalg
