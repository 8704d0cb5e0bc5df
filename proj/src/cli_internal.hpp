#pragma once

// Pieces of the command layer shared with the verification suites.

#include <string>

#include "frobalg/assoc.hpp"
#include "frobalg/cli.hpp"

namespace frobalg::cli {

Json to_json(const Ideal& i);
Json to_json(const std::vector<Polynomial>& polys);
Json to_json(const PrimeIdealRecord& r);
Json inputs_of(const CommandRequest& r);

// "powers:(...)", "constant:(...)", "list:(...); (...)" or a template in q.
FSequence parse_fseq(const std::string& text, const Ring& ring, std::size_t last);

}  // namespace frobalg::cli
