#include "frobalg/ring.hpp"

#include <limits>
#include <sstream>
#include <stdexcept>

#include "frobalg/parser.hpp"

namespace frobalg {

Ring::Ring(PolyRingPtr free, std::vector<Polynomial> quotient)
    : free_(std::move(free)), quotient_(std::move(quotient)) {
  for (const auto& g : quotient_)
    if (!g.ring()->same_variables(*free_))
      throw std::invalid_argument("quotient generator from a different ring");
  std::erase_if(quotient_, [](const Polynomial& g) { return g.is_zero(); });
}

std::vector<Polynomial> Ring::variables() const {
  std::vector<Polynomial> v;
  for (std::size_t i = 0; i < nvars(); ++i) v.push_back(var(i));
  return v;
}

std::string Ring::str() const {
  std::ostringstream os;
  os << "F_" << characteristic() << '[';
  for (std::size_t i = 0; i < nvars(); ++i) os << (i ? "," : "") << free_->names()[i];
  os << ']';
  if (has_quotient()) os << '/' << format_generators(quotient_);
  return os.str();
}

std::uint64_t frobenius_q(std::uint32_t p, std::uint64_t e) {
  std::uint64_t q = 1;
  for (std::uint64_t i = 0; i < e; ++i) {
    if (q > static_cast<std::uint64_t>(std::numeric_limits<Exponent>::max()) / p)
      throw ExponentOverflow("p^e = " + std::to_string(p) + "^" + std::to_string(e) +
                             " exceeds the exponent range");
    q *= p;
  }
  return q;
}

Polynomial frobenius_map(const Polynomial& f, std::uint64_t e) {
  const std::uint64_t q = frobenius_q(f.ring()->characteristic(), e);
  std::vector<Term> terms;
  terms.reserve(f.size());
  // a^q = a for a in F_p
  for (const auto& t : f.terms()) terms.push_back({t.coeff, t.mono.scaled(static_cast<std::int64_t>(q))});
  return Polynomial(f.ring(), std::move(terms));
}

std::optional<Polynomial> pth_root(const Polynomial& f, std::uint64_t e, const Ring& ring) {
  if (ring.has_quotient())
    throw std::invalid_argument("p-th roots are only canonical in a free polynomial ring");
  const std::uint64_t q = frobenius_q(ring.characteristic(), e);
  std::vector<Term> terms;
  terms.reserve(f.size());
  for (const auto& t : f.terms()) {
    Monomial m(t.mono.nvars());
    for (std::size_t i = 0; i < m.nvars(); ++i) {
      if (static_cast<std::uint64_t>(t.mono[i]) % q != 0) return std::nullopt;
      m.set(i, static_cast<Exponent>(static_cast<std::uint64_t>(t.mono[i]) / q));
    }
    terms.push_back({t.coeff, m});
  }
  return Polynomial(f.ring(), std::move(terms));
}

}  // namespace frobalg
