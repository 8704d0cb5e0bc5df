#include "frobalg/polynomial.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_set>

namespace frobalg {

PolyRing::PolyRing(std::uint32_t p, std::vector<std::string> names, MonomialOrder order)
    : field_(p), names_(std::move(names)), order_(order) {
  if (names_.size() > kMaxVars)
    throw std::invalid_argument("at most " + std::to_string(kMaxVars) + " variables supported");
  std::unordered_set<std::string> seen;
  for (const auto& n : names_)
    if (!seen.insert(n).second) throw std::invalid_argument("duplicate variable '" + n + "'");
}

int PolyRing::index_of(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  return it == names_.end() ? -1 : static_cast<int>(it - names_.begin());
}

PolyRingPtr make_poly_ring(std::uint32_t p, std::vector<std::string> names, MonomialOrder order) {
  return std::make_shared<const PolyRing>(p, std::move(names), order);
}

PolyRingPtr with_order(const PolyRingPtr& ring, MonomialOrder order) {
  if (ring->order() == order) return ring;
  return make_poly_ring(ring->characteristic(), ring->names(), order);
}

namespace {

// Merge two canonical term lists: a + c*b.
std::vector<Term> merge_add(const PolyRing& ring, const std::vector<Term>& a,
                            const std::vector<Term>& b, Coeff c) {
  const auto& F = ring.field();
  const auto& ord = ring.order();
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0, j = 0;
  while (i < a.size() && j < b.size()) {
    int cmp = ord.compare(a[i].mono, b[j].mono);
    if (cmp > 0) {
      out.push_back(a[i++]);
    } else if (cmp < 0) {
      out.push_back({F.mul(c, b[j].coeff), b[j].mono});
      ++j;
    } else {
      Coeff s = F.add(a[i].coeff, F.mul(c, b[j].coeff));
      if (s != 0) out.push_back({s, a[i].mono});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) out.push_back({F.mul(c, b[j].coeff), b[j].mono});
  return out;
}

}  // namespace

Polynomial::Polynomial(PolyRingPtr ring) : ring_(std::move(ring)) {
  if (!ring_) throw std::invalid_argument("polynomial without a ring");
}

Polynomial::Polynomial(PolyRingPtr ring, std::vector<Term> terms)
    : ring_(std::move(ring)), terms_(std::move(terms)) {
  if (!ring_) throw std::invalid_argument("polynomial without a ring");
  canonicalize();
}

void Polynomial::canonicalize() {
  const auto& F = ring_->field();
  const auto& ord = ring_->order();
  for (auto& t : terms_) {
    if (t.mono.nvars() != ring_->nvars())
      throw std::invalid_argument("monomial arity does not match ring");
    t.coeff = t.coeff % F.characteristic();
  }
  std::sort(terms_.begin(), terms_.end(),
            [&](const Term& a, const Term& b) { return ord.greater(a.mono, b.mono); });
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    if (!out.empty() && out.back().mono == t.mono) {
      out.back().coeff = F.add(out.back().coeff, t.coeff);
    } else {
      out.push_back(t);
    }
  }
  std::erase_if(out, [](const Term& t) { return t.coeff == 0; });
  terms_ = std::move(out);
}

Polynomial Polynomial::constant(PolyRingPtr ring, std::int64_t c) {
  Coeff v = ring->field().reduce(c);
  Polynomial r(ring);
  if (v != 0) r.terms_.push_back({v, Monomial(ring->nvars())});
  return r;
}

Polynomial Polynomial::variable(PolyRingPtr ring, std::size_t i) {
  Polynomial r(ring);
  r.terms_.push_back({1, Monomial::variable(ring->nvars(), i)});
  return r;
}

Polynomial Polynomial::monomial(PolyRingPtr ring, const Monomial& m, Coeff c) {
  Polynomial r(ring);
  c %= ring->characteristic();
  if (c != 0) r.terms_.push_back({c, m});
  return r;
}

bool Polynomial::is_homogeneous() const {
  for (const auto& t : terms_)
    if (t.mono.degree() != terms_.front().mono.degree()) return false;
  return true;
}

std::int64_t Polynomial::total_degree() const {
  std::int64_t d = -1;
  for (const auto& t : terms_) d = std::max(d, t.mono.degree());
  return d;
}

Polynomial Polynomial::operator+(const Polynomial& o) const {
  Polynomial r(ring_);
  r.terms_ = merge_add(*ring_, terms_, o.terms_, 1);
  return r;
}

Polynomial Polynomial::operator-(const Polynomial& o) const {
  Polynomial r(ring_);
  r.terms_ = merge_add(*ring_, terms_, o.terms_, ring_->field().neg(1));
  return r;
}

Polynomial Polynomial::operator-() const { return scaled(ring_->field().neg(1)); }

Polynomial Polynomial::scaled(Coeff c) const {
  Polynomial r(ring_);
  c %= ring_->characteristic();
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({ring_->field().mul(c, t.coeff), t.mono});
  return r;
}

Polynomial Polynomial::mul_term(Coeff c, const Monomial& m) const {
  Polynomial r(ring_);
  c %= ring_->characteristic();
  if (c == 0) return r;
  r.terms_.reserve(terms_.size());
  for (const auto& t : terms_) r.terms_.push_back({ring_->field().mul(c, t.coeff), t.mono * m});
  return r;
}

Polynomial Polynomial::operator*(const Polynomial& o) const {
  const Polynomial& small = size() <= o.size() ? *this : o;
  const Polynomial& big = size() <= o.size() ? o : *this;
  Polynomial r(ring_);
  for (const auto& t : small.terms_) r.terms_ = merge_add(*ring_, r.terms_, big.mul_term(1, t.mono).terms_, t.coeff);
  return r;
}

Polynomial Polynomial::pow(std::uint64_t k) const {
  Polynomial result = constant(ring_, 1);
  Polynomial base = *this;
  while (k > 0) {
    if (k & 1) result = result * base;
    k >>= 1;
    if (k > 0) base = base * base;
  }
  return result;
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  return scaled(ring_->field().inv(lead_coeff()));
}

Polynomial Polynomial::in(const PolyRingPtr& other) const {
  if (!ring_->same_variables(*other))
    throw std::invalid_argument("cannot move polynomial between rings with different variables");
  return Polynomial(other, terms_);
}

Polynomial Polynomial::remap(const PolyRingPtr& target,
                             const std::vector<std::size_t>& index_map) const {
  if (index_map.size() != ring_->nvars()) throw std::invalid_argument("remap: index map size");
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Monomial m(target->nvars());
    for (std::size_t i = 0; i < ring_->nvars(); ++i)
      if (t.mono[i] != 0) m.set(index_map[i], m[index_map[i]] + t.mono[i]);
    out.push_back({t.coeff, m});
  }
  return Polynomial(target, std::move(out));
}

Polynomial Polynomial::substitute(const std::vector<Polynomial>& values) const {
  if (values.size() != ring_->nvars()) throw std::invalid_argument("substitute: arity");
  const PolyRingPtr& target = values.empty() ? ring_ : values.front().ring();
  Polynomial result(target);
  for (const auto& t : terms_) {
    Polynomial term = constant(target, t.coeff);
    for (std::size_t i = 0; i < values.size(); ++i)
      if (t.mono[i] != 0) term = term * values[i].pow(static_cast<std::uint64_t>(t.mono[i]));
    result = result + term;
  }
  return result;
}

bool Polynomial::involves_variable(std::size_t i) const {
  return std::any_of(terms_.begin(), terms_.end(), [&](const Term& t) { return t.mono[i] != 0; });
}

std::string to_string(const Monomial& m, const PolyRing& ring) {
  std::ostringstream os;
  bool first = true;
  for (std::size_t i = 0; i < m.nvars(); ++i) {
    if (m[i] == 0) continue;
    if (!first) os << '*';
    first = false;
    os << ring.names()[i];
    if (m[i] != 1) os << '^' << m[i];
  }
  if (first) os << '1';
  return os.str();
}

std::string Polynomial::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream os;
  for (std::size_t k = 0; k < terms_.size(); ++k) {
    const auto& t = terms_[k];
    if (k > 0) os << " + ";
    if (t.mono.is_one()) {
      os << t.coeff;
    } else {
      if (t.coeff != 1) os << t.coeff << '*';
      os << to_string(t.mono, *ring_);
    }
  }
  return os.str();
}

}  // namespace frobalg
