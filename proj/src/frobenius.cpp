#include "frobalg/frobenius.hpp"

#include <algorithm>
#include <stdexcept>

namespace frobalg {

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::kFalse:
      return "false";
    case Verdict::kTrue:
      return "true";
    case Verdict::kUnresolved:
      return "unresolved";
  }
  return "?";
}

Ideal frobenius_power(const Ideal& j, std::uint64_t e) {
  std::vector<Polynomial> gens;
  gens.reserve(j.generators().size());
  for (const auto& g : j.generators()) gens.push_back(frobenius_map(g, e));
  return Ideal(j.ring(), std::move(gens));
}

namespace {

// Minimal monomial generators, sorted by the ring order.
std::vector<Polynomial> minimal_monomials(std::vector<Monomial> monos, const PolyRingPtr& ring) {
  std::sort(monos.begin(), monos.end(),
            [&](const Monomial& a, const Monomial& b) { return ring->order().compare(a, b) < 0; });
  monos.erase(std::unique(monos.begin(), monos.end()), monos.end());
  std::vector<Polynomial> out;
  std::vector<Monomial> kept;
  for (const auto& m : monos) {
    bool redundant = std::any_of(kept.begin(), kept.end(), [&](const Monomial& k) { return k.divides(m); });
    if (redundant) continue;
    kept.push_back(m);
    out.push_back(Polynomial::monomial(ring, m));
  }
  return out;
}

}  // namespace

Ideal frobenius_preimage(const Ideal& j, std::uint64_t e) {
  if (e == 0) return j;
  Ideal lifted = j.lifted();
  if (!lifted.is_monomial()) return frobenius_preimage_by_elimination(j, e);
  const std::uint64_t q = frobenius_q(j.ring().characteristic(), e);
  const std::size_t n = j.ring().nvars();
  // m^q is divisible by g iff m is divisible by ceil(g / q).
  std::vector<Monomial> roots;
  for (const auto& g : lifted.generators()) {
    Monomial r(n);
    for (std::size_t i = 0; i < n; ++i)
      r.set(i, static_cast<Exponent>((static_cast<std::uint64_t>(g.lead_monomial()[i]) + q - 1) / q));
    roots.push_back(r);
  }
  return Ideal(j.ring(), minimal_monomials(std::move(roots), j.ring().free()));
}

Ideal frobenius_preimage_by_elimination(const Ideal& j, std::uint64_t e) {
  if (e == 0) return j;
  const Ring& ring = j.ring();
  const std::size_t n = ring.nvars();
  // Variables x_1..x_n, y_1..y_n; y_i stands for x_i^q.
  PolyRingPtr ext = extend_ring(ring.free(), n, "y", false, MonomialOrder::elimination(n));
  std::vector<std::size_t> to_x(n), to_y(2 * n);
  for (std::size_t i = 0; i < n; ++i) {
    to_x[i] = i;
    to_y[i] = i;
    to_y[n + i] = i;
  }
  std::vector<Polynomial> gens;
  Ideal lifted = j.lifted();
  for (const auto& g : lifted.generators()) gens.push_back(g.remap(ext, to_x));
  for (std::size_t i = 0; i < n; ++i)
    gens.push_back(Polynomial::variable(ext, n + i) -
                   frobenius_map(Polynomial::variable(ext, i), e));
  Ideal contracted = eliminate(Ideal(Ring(ext), std::move(gens)), n);
  std::vector<Polynomial> out;
  for (const auto& g : contracted.generators()) out.push_back(g.remap(ring.free(), to_y));
  return Ideal(ring, std::move(out));
}

FrobeniusClosure frobenius_closure(const Ideal& j, std::uint64_t e_max) {
  FrobeniusClosure result{j, std::nullopt, {j}};
  for (std::uint64_t e = 1; e <= e_max; ++e)
    result.chain.push_back(frobenius_preimage(frobenius_power(j, e), e));
  // Start of the constant tail; needs at least two equal terms.
  std::uint64_t start = e_max;
  while (start > 0 && ideal_equal(result.chain[start - 1], result.chain[e_max])) --start;
  if (start < e_max) result.stabilized_at = start;
  result.closure = result.chain.back();
  return result;
}

Verdict is_frobenius_closed(const Ideal& j, std::uint64_t e_max) {
  if (e_max == 0) return Verdict::kUnresolved;
  for (std::uint64_t e = 1; e <= e_max; ++e) {
    // C_e always contains j, so anything else is an element of j^F outside j.
    if (!j.contains(frobenius_preimage(frobenius_power(j, e), e))) return Verdict::kFalse;
  }
  return Verdict::kTrue;
}

FPurityReport fedder_f_pure(const Ring& ring, const Ideal& m) {
  const Ring s = ring.ambient();
  Ideal i(s, ring.quotient());
  Ideal mm(s, m.generators());
  FPurityReport report;
  report.q = ring.characteristic();
  Ideal colon = colon_ideal(frobenius_power(i, 1), i);
  Ideal m_q = frobenius_power(mm, 1);
  report.colon = colon.basis();
  for (const auto& g : report.colon) {
    Polynomial in_s = g.in(s.free());
    if (!m_q.contains(in_s)) {
      report.is_f_pure = true;
      report.witness = in_s;
      break;
    }
  }
  return report;
}

FPurityReport fedder_f_pure(const Ring& ring) { return fedder_f_pure(ring, Ideal::variables(ring.ambient())); }

FSequence::FSequence(Ring ring, std::vector<Ideal> prefix, Rule rule, std::optional<Ideal> base)
    : ring_(std::move(ring)), prefix_(std::move(prefix)), rule_(rule), base_(std::move(base)) {}

FSequence FSequence::custom(Ring ring, std::vector<Ideal> prefix) {
  return FSequence(std::move(ring), std::move(prefix), Rule::kCustom, std::nullopt);
}

FSequence FSequence::frobenius_powers(const Ideal& base, std::size_t last) {
  std::vector<Ideal> prefix;
  for (std::size_t e = 0; e <= last; ++e) prefix.push_back(frobenius_power(base, e));
  return FSequence(base.ring(), std::move(prefix), Rule::kFrobeniusPowers, base);
}

FSequence FSequence::constant(const Ideal& p, std::size_t last) {
  return FSequence(p.ring(), std::vector<Ideal>(last + 1, p), Rule::kConstant, p);
}

std::string FSequence::rule_name() const {
  switch (rule_) {
    case Rule::kCustom:
      return "custom-list";
    case Rule::kFrobeniusPowers:
      return "frobenius-powers-of(" + base_->str() + ")";
    case Rule::kConstant:
      return "constant(" + base_->str() + ")";
  }
  return "?";
}

FSequence FSequence::extended(std::size_t last) const {
  switch (rule_) {
    case Rule::kFrobeniusPowers:
      return frobenius_powers(*base_, last);
    case Rule::kConstant:
      return constant(*base_, last);
    case Rule::kCustom:
      if (last < prefix_.size())
        return custom(ring_, std::vector<Ideal>(prefix_.begin(), prefix_.begin() + last + 1));
      throw std::logic_error("a custom f-sequence cannot be extended past its prefix");
  }
  return *this;
}

FSequenceCheck fseq_verify(const FSequence& seq) {
  if (seq.size() < 2) throw std::invalid_argument("fseq_verify needs at least two terms");
  for (std::size_t e = 0; e + 1 < seq.size(); ++e) {
    if (!ideal_equal(frobenius_preimage(seq[e + 1], 1), seq[e])) return {false, e};
  }
  return {};
}

RadicalStabilization fseq_radical_stabilize(const FSequence& seq, std::uint64_t e_max) {
  RadicalStabilization result;
  Ideal current = seq[0];
  for (std::uint64_t k = 0; k < e_max; ++k) {
    Ideal next = frobenius_preimage(current, 1);
    if (ideal_equal(next, current)) {
      result.stable = current;
      result.steps = k;
      break;
    }
    current = next;
  }
  if (!result.stable) return result;
  result.radical_agrees = true;
  for (const auto& j : seq.prefix()) {
    for (const auto& g : result.stable->generators())
      result.radical_agrees = result.radical_agrees && radical_membership(g, j);
    for (const auto& g : j.generators())
      result.radical_agrees = result.radical_agrees && radical_membership(g, *result.stable);
  }
  return result;
}

}  // namespace frobalg
