#include "frobalg/groebner.hpp"

#include <algorithm>
#include <mutex>
#include <optional>
#include <stdexcept>

#include "frobalg/parser.hpp"
#include "gb_engine.hpp"

namespace frobalg {

struct Ideal::Cache {
  std::mutex mutex;
  std::optional<std::vector<Polynomial>> basis;
};

Ideal::Ideal(Ring ring, std::vector<Polynomial> generators)
    : ring_(std::move(ring)), generators_(std::move(generators)), cache_(std::make_shared<Cache>()) {
  for (auto& g : generators_) {
    if (!g.ring()->same_variables(*ring_.free()))
      throw std::invalid_argument("ideal generator from a different ring");
    if (!(*g.ring() == *ring_.free())) g = g.in(ring_.free());
  }
  std::erase_if(generators_, [](const Polynomial& g) { return g.is_zero(); });
}

namespace {

std::vector<Polynomial> lift_generators(const Ideal& ideal) {
  std::vector<Polynomial> gens = ideal.generators();
  for (const auto& q : ideal.ring().quotient()) gens.push_back(q);
  return gens;
}

std::vector<Polynomial> compute_basis(const std::vector<Polynomial>& gens, const PolyRingPtr& ring) {
  detail::GbEngine engine(ring->field(), {ring->order(), true});
  std::vector<detail::ModVec> vs;
  vs.reserve(gens.size());
  for (const auto& g : gens) {
    detail::ModVec v = detail::from_polynomial(g.in(ring), 0);
    vs.push_back(std::move(v));
  }
  std::vector<Polynomial> out;
  for (const auto& b : engine.basis(std::move(vs))) out.push_back(detail::to_polynomial(b, ring));
  return out;
}

}  // namespace

const std::vector<Polynomial>& Ideal::basis() const {
  {
    std::lock_guard lock(cache_->mutex);
    if (cache_->basis) return *cache_->basis;
  }
  auto computed = compute_basis(lift_generators(*this), ring_.free());
  std::lock_guard lock(cache_->mutex);
  if (!cache_->basis) cache_->basis = std::move(computed);
  return *cache_->basis;
}

bool Ideal::is_unit() const {
  const auto& b = basis();
  return b.size() == 1 && b.front().is_constant();
}

bool Ideal::is_zero() const {
  if (generators_.empty()) return true;
  Ideal q(ring_.ambient(), ring_.quotient());
  return std::all_of(generators_.begin(), generators_.end(),
                     [&](const Polynomial& g) { return q.contains(g); });
}

bool Ideal::is_monomial() const {
  return std::all_of(generators_.begin(), generators_.end(),
                     [](const Polynomial& g) { return g.is_monomial(); }) &&
         std::all_of(ring_.quotient().begin(), ring_.quotient().end(),
                     [](const Polynomial& g) { return g.is_monomial(); });
}

bool Ideal::contains(const Polynomial& f) const { return normal_form(f, *this).is_zero(); }

bool Ideal::contains(const Ideal& other) const {
  return std::all_of(other.generators_.begin(), other.generators_.end(),
                     [&](const Polynomial& g) { return contains(g); });
}

Ideal Ideal::lifted() const { return Ideal(ring_.ambient(), lift_generators(*this)); }

Ideal Ideal::operator+(const Ideal& other) const {
  std::vector<Polynomial> gens = generators_;
  gens.insert(gens.end(), other.generators_.begin(), other.generators_.end());
  return Ideal(ring_, std::move(gens));
}

Ideal Ideal::operator*(const Ideal& other) const {
  std::vector<Polynomial> gens;
  for (const auto& a : generators_)
    for (const auto& b : other.generators_) gens.push_back(a * b);
  return Ideal(ring_, std::move(gens));
}

std::string Ideal::str() const { return format_generators(generators_); }

std::vector<Polynomial> groebner_basis(const Ideal& ideal, const MonomialOrder& order) {
  if (order == ideal.ring().free()->order()) return ideal.basis();
  PolyRingPtr ring = with_order(ideal.ring().free(), order);
  return compute_basis(lift_generators(ideal), ring);
}

Polynomial remainder(const Polynomial& f, const std::vector<Polynomial>& divisors) {
  if (divisors.empty()) return f;
  const PolyRingPtr& ring = divisors.front().ring();
  detail::GbEngine engine(ring->field(), {ring->order(), true});
  std::vector<detail::ModVec> basis;
  for (const auto& d : divisors)
    if (!d.is_zero()) basis.push_back(engine.monic(detail::from_polynomial(d.in(ring), 0)));
  auto r = engine.reduce(detail::from_polynomial(f.in(ring), 0), basis);
  return detail::to_polynomial(r, f.ring());
}

Polynomial normal_form(const Polynomial& f, const Ideal& ideal) {
  return remainder(f, ideal.basis()).in(ideal.ring().free());
}

bool ideal_equal(const Ideal& a, const Ideal& b) {
  if (!a.ring().free()->same_variables(*b.ring().free()))
    throw std::invalid_argument("ideal_equal: ideals of different rings");
  return a.basis() == b.basis();
}

PolyRingPtr extend_ring(const PolyRingPtr& base, std::size_t extra, const std::string& stem,
                        bool front, MonomialOrder order) {
  std::vector<std::string> fresh;
  for (std::size_t i = 0; i < extra; ++i) fresh.push_back("$" + stem + std::to_string(i));
  std::vector<std::string> names;
  if (front) {
    names = fresh;
    names.insert(names.end(), base->names().begin(), base->names().end());
  } else {
    names = base->names();
    names.insert(names.end(), fresh.begin(), fresh.end());
  }
  return make_poly_ring(base->characteristic(), std::move(names), order);
}

namespace {

// Embeds polynomials of `base` into a ring extended by `extra` front variables.
std::vector<std::size_t> shift_map(std::size_t n, std::size_t shift) {
  std::vector<std::size_t> m(n);
  for (std::size_t i = 0; i < n; ++i) m[i] = i + shift;
  return m;
}

// a ∩ b for ideals of S given by generators.
std::vector<Polynomial> intersect_free(const PolyRingPtr& free, const std::vector<Polynomial>& a,
                                       const std::vector<Polynomial>& b) {
  const std::size_t n = free->nvars();
  PolyRingPtr ext = extend_ring(free, 1, "t", true, MonomialOrder::elimination(1));
  auto map = shift_map(n, 1);
  Polynomial t = Polynomial::variable(ext, 0);
  Polynomial one_minus_t = Polynomial::constant(ext, 1) - t;
  std::vector<Polynomial> gens;
  for (const auto& f : a) gens.push_back(t * f.remap(ext, map));
  for (const auto& g : b) gens.push_back(one_minus_t * g.remap(ext, map));
  Ideal big(Ring(ext), std::move(gens));
  std::vector<Polynomial> out;
  std::vector<std::size_t> back(n + 1, 0);
  for (std::size_t i = 0; i < n; ++i) back[i + 1] = i;
  for (const auto& g : big.basis())
    if (!g.involves_variable(0)) out.push_back(g.remap(free, back));
  return out;
}

}  // namespace

Ideal intersect(const Ideal& a, const Ideal& b) {
  const Ring& ring = a.ring();
  auto la = a.lifted().generators();
  auto lb = b.lifted().generators();
  if (la.empty() || lb.empty()) return Ideal(ring, ring.quotient());
  return Ideal(ring, intersect_free(ring.free(), la, lb));
}

Polynomial exact_divide(const Polynomial& f, const Polynomial& g) {
  if (g.is_zero()) throw std::domain_error("division by zero polynomial");
  const auto& F = f.ring()->field();
  Polynomial quotient(f.ring());
  Polynomial rest = f;
  const Coeff inv = F.inv(g.lead_coeff());
  while (!rest.is_zero()) {
    if (!g.lead_monomial().divides(rest.lead_monomial()))
      throw std::domain_error("polynomial does not divide exactly");
    Monomial m = rest.lead_monomial() / g.lead_monomial();
    Coeff c = F.mul(rest.lead_coeff(), inv);
    quotient = quotient + Polynomial::monomial(f.ring(), m, c);
    rest = rest - g.mul_term(c, m);
  }
  return quotient;
}

Ideal colon_ideal(const Ideal& a, const Ideal& b) {
  const Ring& ring = a.ring();
  auto la = a.lifted().generators();
  std::optional<std::vector<Polynomial>> acc;
  Ideal quotient_ideal(ring.ambient(), ring.quotient());
  for (const auto& g : b.generators()) {
    if (quotient_ideal.contains(g)) continue;  // zero in R: colon is everything
    std::vector<Polynomial> part;
    if (la.empty()) {
      part = {};
    } else {
      for (const auto& h : intersect_free(ring.free(), la, {g})) part.push_back(exact_divide(h, g));
    }
    if (!acc) {
      acc = std::move(part);
    } else {
      acc = acc->empty() || part.empty() ? std::vector<Polynomial>{}
                                          : intersect_free(ring.free(), *acc, part);
    }
  }
  if (!acc) return Ideal::unit(ring);
  return Ideal(ring, std::move(*acc));
}

Ideal eliminate(const Ideal& ideal, std::size_t k) {
  const Ring& ring = ideal.ring();
  if (k > ring.nvars()) throw std::invalid_argument("eliminate: block larger than ring");
  std::vector<Polynomial> out;
  if (k == 0) {
    out = ideal.lifted().generators();
  } else {
    for (const auto& g : groebner_basis(ideal, MonomialOrder::elimination(k))) {
      bool free_of_block = true;
      for (std::size_t i = 0; i < k; ++i) free_of_block = free_of_block && !g.involves_variable(i);
      if (free_of_block) out.push_back(g.in(ring.free()));
    }
  }
  return Ideal(ring.ambient(), std::move(out));
}

bool radical_membership(const Polynomial& f, const Ideal& ideal) {
  const Ring& ring = ideal.ring();
  const std::size_t n = ring.nvars();
  PolyRingPtr ext = extend_ring(ring.free(), 1, "t", false, MonomialOrder::grevlex());
  std::vector<std::size_t> same(n);
  for (std::size_t i = 0; i < n; ++i) same[i] = i;
  std::vector<Polynomial> gens;
  Ideal lifted = ideal.lifted();
  for (const auto& g : lifted.generators()) gens.push_back(g.remap(ext, same));
  Polynomial t = Polynomial::variable(ext, n);
  gens.push_back(Polynomial::constant(ext, 1) - t * f.remap(ext, same));
  return Ideal(Ring(ext), std::move(gens)).is_unit();
}

}  // namespace frobalg
