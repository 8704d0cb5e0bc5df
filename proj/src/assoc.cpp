#include "frobalg/assoc.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <stdexcept>

#include "frobalg/depth.hpp"

namespace frobalg {

std::string to_string(PrimeKind k) {
  switch (k) {
    case PrimeKind::kAss:
      return "Ass";
    case PrimeKind::kWeaklyAss:
      return "wAss";
    case PrimeKind::kStrongKrull:
      return "sK";
    case PrimeKind::kKrull:
      return "K";
  }
  return "?";
}

std::string to_string(Side s) { return s == Side::kR ? "R" : "R-infinity-via-phi"; }

std::string PrimeIdealRecord::str() const {
  std::string s = ideal.str() + " [" + to_string(kind) + ", " + to_string(side) +
                  ", first_seen " + std::to_string(first_seen);
  if (witness) s += ", witness " + witness->str();
  return s + "]";
}

namespace {

std::vector<Monomial> monomial_generators(const Ideal& i, const char* caller) {
  Ideal lifted = i.lifted();
  if (!lifted.is_monomial()) throw std::invalid_argument(std::string(caller) + ": non-monomial generator");
  std::vector<Monomial> out;
  for (const auto& g : lifted.generators()) out.push_back(g.lead_monomial());
  return out;
}

Ideal variable_prime(const Ring& ring, std::uint32_t mask) {
  std::vector<Polynomial> gens;
  for (std::size_t v = 0; v < ring.nvars(); ++v)
    if (mask & (1u << v)) gens.push_back(ring.var(v));
  return Ideal(ring, std::move(gens));
}

std::vector<std::size_t> indices(std::uint32_t mask) {
  std::vector<std::size_t> out;
  for (std::size_t v = 0; mask != 0; ++v, mask >>= 1)
    if (mask & 1u) out.push_back(v);
  return out;
}

// Fewer variables first, then by variable indices.
bool mask_less(std::uint32_t a, std::uint32_t b) {
  const int pa = std::popcount(a), pb = std::popcount(b);
  if (pa != pb) return pa < pb;
  return indices(a) < indices(b);
}

bool divisible_by_any(const Monomial& m, const std::vector<Monomial>& gens) {
  return std::any_of(gens.begin(), gens.end(), [&](const Monomial& g) { return g.divides(m); });
}

// When (I : b) is generated by variables, their mask.
std::optional<std::uint32_t> colon_prime(const std::vector<Monomial>& gens, const Monomial& b) {
  std::vector<Monomial> colon;
  colon.reserve(gens.size());
  std::uint32_t mask = 0;
  for (const auto& g : gens) {
    Monomial c = g / g.gcd(b);
    if (c.degree() == 1) mask |= c.support();
    colon.push_back(c);
  }
  for (const auto& c : colon)
    if ((c.support() & mask) == 0) return std::nullopt;
  return mask;
}

}  // namespace

std::vector<PrimeIdealRecord> ass_monomial(const Ideal& i) {
  const Ring& ring = i.ring();
  const std::size_t n = ring.nvars();
  const auto gens = monomial_generators(i, "ass_monomial");
  if (gens.empty()) return {{Ideal::zero(ring), PrimeKind::kAss, Side::kR, ring.one(), 0}};
  if (divisible_by_any(Monomial(n), gens)) return {};  // unit ideal, zero module

  std::vector<Exponent> bound(n, 0);
  for (const auto& g : gens)
    for (std::size_t v = 0; v < n; ++v) bound[v] = std::max(bound[v], g[v]);

  // Witness of least degree for every prime, over the box 0 <= b_v <= bound_v.
  std::map<std::uint32_t, Monomial> found;
  Monomial b(n);
  while (true) {
    if (!divisible_by_any(b, gens)) {
      if (auto mask = colon_prime(gens, b)) {
        auto it = found.find(*mask);
        if (it == found.end() || b.degree() < it->second.degree()) found.insert_or_assign(*mask, b);
      }
    }
    std::size_t v = 0;
    while (v < n && b[v] == bound[v]) b.set(v++, 0);
    if (v == n) break;
    b.set(v, b[v] + 1);
  }

  std::vector<std::uint32_t> masks;
  for (const auto& [mask, _] : found) masks.push_back(mask);
  std::sort(masks.begin(), masks.end(), mask_less);
  std::vector<PrimeIdealRecord> out;
  for (auto mask : masks)
    out.push_back({variable_prime(ring, mask), PrimeKind::kAss, Side::kR,
                   Polynomial::monomial(ring.free(), found.at(mask)), 0});
  return out;
}

std::vector<Ideal> minimal_primes_monomial(const Ideal& i) {
  const Ring& ring = i.ring();
  const std::size_t n = ring.nvars();
  const auto gens = monomial_generators(i, "minimal_primes_monomial");
  if (gens.empty()) return {Ideal::zero(ring)};
  if (divisible_by_any(Monomial(n), gens)) return {};
  auto covers = [&](std::uint32_t mask) {
    return std::all_of(gens.begin(), gens.end(), [&](const Monomial& g) { return (g.support() & mask) != 0; });
  };
  std::vector<std::uint32_t> minimal;
  for (std::uint32_t mask = 1; mask < (1u << n); ++mask) {
    if (!covers(mask)) continue;
    bool is_min = true;
    for (std::uint32_t rest = mask; rest != 0 && is_min; rest &= rest - 1)
      is_min = !covers(mask & ~(rest & -rest));
    if (is_min) minimal.push_back(mask);
  }
  std::sort(minimal.begin(), minimal.end(), mask_less);
  std::vector<Ideal> out;
  for (auto mask : minimal) out.push_back(variable_prime(ring, mask));
  return out;
}

bool maximal_in_ass(const Ideal& j, const std::vector<Coeff>& point) {
  const Ring& ring = j.ring();
  const std::size_t n = ring.nvars();
  if (point.size() != n) throw std::invalid_argument("maximal_in_ass: point has the wrong dimension");
  std::vector<Polynomial> at_point, shift;
  for (std::size_t v = 0; v < n; ++v) {
    at_point.push_back(Polynomial::constant(ring.free(), point[v]));
    shift.push_back(ring.var(v) + Polynomial::constant(ring.free(), point[v]));
  }
  Ideal lifted = j.lifted();
  std::vector<Polynomial> moved;
  for (const auto& g : lifted.generators()) {
    if (!g.substitute(at_point).is_zero()) throw std::invalid_argument("maximal_in_ass: point not on V(J)");
    moved.push_back(g.substitute(shift));
  }
  auto m = ModulePresentation::cyclic(Ideal(ring.ambient(), std::move(moved)));
  return depth_at_origin(m, false).depth == 0u;
}

std::vector<PrimeIdealRecord> union_ass_fseq(const FSequence& seq) {
  std::vector<PrimeIdealRecord> r_side;
  for (std::size_t e = 0; e < seq.size(); ++e) {
    for (auto& rec : ass_monomial(seq[e])) {
      bool seen = std::any_of(r_side.begin(), r_side.end(),
                              [&](const PrimeIdealRecord& old) { return ideal_equal(old.ideal, rec.ideal); });
      if (seen) continue;
      rec.first_seen = e;
      r_side.push_back(std::move(rec));
    }
  }
  std::vector<PrimeIdealRecord> out = r_side;
  for (PrimeKind kind : {PrimeKind::kWeaklyAss, PrimeKind::kStrongKrull})
    for (const auto& rec : r_side)
      out.push_back({rec.ideal, kind, Side::kRInfinityViaPhi, std::nullopt, rec.first_seen});
  return out;
}

std::optional<std::size_t> first_maximal_in_ass(const FSequence& seq, const std::vector<Coeff>& point) {
  for (std::size_t e = 0; e < seq.size(); ++e)
    if (maximal_in_ass(seq[e], point)) return e;
  return std::nullopt;
}

}  // namespace frobalg
