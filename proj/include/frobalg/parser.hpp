#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "frobalg/ring.hpp"

namespace frobalg {

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& what, std::size_t position)
      : std::runtime_error(what + " at position " + std::to_string(position)),
        position_(position) {}
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// "F_<p>[v1,...,vn]" optionally followed by "/(g1,...,gk)".
Ring parse_ring(std::string_view text);

// Integer literals, variables, + - * ^ and parentheses.
Polynomial parse_poly(std::string_view text, const Ring& ring);

// "(g1, g2, ...)"; the outer parentheses may be omitted. "()" is the zero ideal.
std::vector<Polynomial> parse_generators(std::string_view text, const Ring& ring);

// "[[a, b], [c, d]]", one bracketed list per row.
std::vector<std::vector<Polynomial>> parse_matrix(std::string_view text, const Ring& ring);

std::string format_generators(const std::vector<Polynomial>& gens);

}  // namespace frobalg
