#pragma once

#include <array>
#include <cstddef>
#include <cstdint>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace frobalg {

// Upper bound on variables in any ring, including the auxiliary variables
// that elimination-based operations adjoin.
inline constexpr std::size_t kMaxVars = 16;

using Exponent = std::int32_t;

class ExponentOverflow : public std::overflow_error {
 public:
  using std::overflow_error::overflow_error;
};

// Dense exponent vector with a cached total degree. All arithmetic is checked.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars);
  explicit Monomial(std::span<const Exponent> exps);

  std::size_t nvars() const { return nvars_; }
  Exponent operator[](std::size_t i) const { return exps_[i]; }
  std::int64_t degree() const { return degree_; }
  bool is_one() const { return degree_ == 0; }
  std::span<const Exponent> exponents() const { return {exps_.data(), nvars_}; }
  // Bit i set iff variable i occurs; cheap divisibility pre-check.
  std::uint32_t support() const { return support_; }

  void set(std::size_t i, Exponent e);

  static Monomial variable(std::size_t nvars, std::size_t i, Exponent e = 1);

  bool divides(const Monomial& other) const {
    if ((support_ & ~other.support_) != 0) return false;
    for (std::size_t i = 0; i < nvars_; ++i)
      if (exps_[i] > other.exps_[i]) return false;
    return true;
  }
  bool coprime(const Monomial& other) const { return (support_ & other.support_) == 0; }

  Monomial operator*(const Monomial& other) const;
  // Requires divides(); the caller checks.
  Monomial operator/(const Monomial& divisor) const;
  Monomial lcm(const Monomial& other) const;
  Monomial gcd(const Monomial& other) const;
  // Every exponent multiplied by k.
  Monomial scaled(std::int64_t k) const;

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.nvars_ == b.nvars_ && a.exps_ == b.exps_;
  }

 private:
  void recompute();

  std::array<Exponent, kMaxVars> exps_{};
  std::uint8_t nvars_ = 0;
  std::uint32_t support_ = 0;
  std::int64_t degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const;
};

// Total orders on monomials compatible with multiplication.
// kBlock eliminates the first `block` variables: grevlex on that block,
// ties broken by grevlex on the remaining variables.
struct MonomialOrder {
  enum class Kind { kLex, kGRevLex, kBlock };

  Kind kind = Kind::kGRevLex;
  std::size_t block = 0;

  static MonomialOrder lex() { return {Kind::kLex, 0}; }
  static MonomialOrder grevlex() { return {Kind::kGRevLex, 0}; }
  static MonomialOrder elimination(std::size_t k) { return {Kind::kBlock, k}; }

  // Negative, zero, positive like strcmp.
  int compare(const Monomial& a, const Monomial& b) const;
  bool greater(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }

  std::string name() const;

  friend bool operator==(const MonomialOrder&, const MonomialOrder&) = default;
};

}  // namespace frobalg
