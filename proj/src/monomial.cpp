#include "frobalg/monomial.hpp"

#include <algorithm>
#include <limits>

namespace frobalg {

namespace {

Exponent checked_exponent(std::int64_t v) {
  if (v < 0) throw std::invalid_argument("negative exponent");
  if (v > std::numeric_limits<Exponent>::max())
    throw ExponentOverflow("exponent " + std::to_string(v) + " overflows");
  return static_cast<Exponent>(v);
}

// grevlex restricted to variables [lo, hi)
int grevlex_range(const Monomial& a, const Monomial& b, std::size_t lo, std::size_t hi) {
  std::int64_t da = 0, db = 0;
  for (std::size_t i = lo; i < hi; ++i) {
    da += a[i];
    db += b[i];
  }
  if (da != db) return da < db ? -1 : 1;
  for (std::size_t i = hi; i-- > lo;) {
    if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
  }
  return 0;
}

}  // namespace

Monomial::Monomial(std::size_t nvars) : nvars_(static_cast<std::uint8_t>(nvars)) {
  if (nvars > kMaxVars)
    throw std::invalid_argument("at most " + std::to_string(kMaxVars) + " variables supported");
}

Monomial::Monomial(std::span<const Exponent> exps) : Monomial(exps.size()) {
  for (std::size_t i = 0; i < exps.size(); ++i) exps_[i] = checked_exponent(exps[i]);
  recompute();
}

void Monomial::set(std::size_t i, Exponent e) {
  exps_[i] = checked_exponent(e);
  recompute();
}

Monomial Monomial::variable(std::size_t nvars, std::size_t i, Exponent e) {
  Monomial m(nvars);
  m.set(i, e);
  return m;
}

void Monomial::recompute() {
  degree_ = 0;
  support_ = 0;
  for (std::size_t i = 0; i < nvars_; ++i) {
    degree_ += exps_[i];
    if (exps_[i] != 0) support_ |= (1u << i);
  }
}

Monomial Monomial::operator*(const Monomial& other) const {
  Monomial r(nvars_);
  for (std::size_t i = 0; i < nvars_; ++i)
    r.exps_[i] = checked_exponent(static_cast<std::int64_t>(exps_[i]) + other.exps_[i]);
  r.support_ = support_ | other.support_;
  r.degree_ = degree_ + other.degree_;
  return r;
}

Monomial Monomial::operator/(const Monomial& divisor) const {
  Monomial r(nvars_);
  for (std::size_t i = 0; i < nvars_; ++i) r.exps_[i] = exps_[i] - divisor.exps_[i];
  r.recompute();
  return r;
}

Monomial Monomial::lcm(const Monomial& other) const {
  Monomial r(nvars_);
  for (std::size_t i = 0; i < nvars_; ++i) r.exps_[i] = std::max(exps_[i], other.exps_[i]);
  r.recompute();
  return r;
}

Monomial Monomial::gcd(const Monomial& other) const {
  Monomial r(nvars_);
  for (std::size_t i = 0; i < nvars_; ++i) r.exps_[i] = std::min(exps_[i], other.exps_[i]);
  r.recompute();
  return r;
}

Monomial Monomial::scaled(std::int64_t k) const {
  if (k < 0) throw std::invalid_argument("negative scale");
  Monomial r(nvars_);
  for (std::size_t i = 0; i < nvars_; ++i) {
    if (exps_[i] != 0 && k > std::numeric_limits<Exponent>::max() / exps_[i])
      throw ExponentOverflow("exponent overflow while raising to a Frobenius power");
    r.exps_[i] = static_cast<Exponent>(exps_[i] * k);
  }
  r.recompute();
  return r;
}

std::size_t MonomialHash::operator()(const Monomial& m) const {
  std::size_t h = m.nvars();
  for (Exponent e : m.exponents()) h = h * 1000003u ^ static_cast<std::size_t>(e);
  return h;
}

int MonomialOrder::compare(const Monomial& a, const Monomial& b) const {
  const std::size_t n = a.nvars();
  switch (kind) {
    case Kind::kLex:
      for (std::size_t i = 0; i < n; ++i)
        if (a[i] != b[i]) return a[i] > b[i] ? 1 : -1;
      return 0;
    case Kind::kGRevLex:
      if (a.degree() != b.degree()) return a.degree() < b.degree() ? -1 : 1;
      for (std::size_t i = n; i-- > 0;)
        if (a[i] != b[i]) return a[i] > b[i] ? -1 : 1;
      return 0;
    case Kind::kBlock: {
      const std::size_t k = std::min(block, n);
      if (int c = grevlex_range(a, b, 0, k); c != 0) return c;
      return grevlex_range(a, b, k, n);
    }
  }
  return 0;
}

std::string MonomialOrder::name() const {
  switch (kind) {
    case Kind::kLex:
      return "lex";
    case Kind::kGRevLex:
      return "grevlex";
    case Kind::kBlock:
      return "block(" + std::to_string(block) + ")";
  }
  return "?";
}

}  // namespace frobalg
