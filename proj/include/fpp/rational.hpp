#pragma once

#include <gmpxx.h>

#include <string>
#include <vector>

namespace fpp {

// All arithmetic in the library is exact rational; boundary cases
// (a pairing equal to 1) must be decided exactly.
using Rat = mpq_class;
using RatVec = std::vector<Rat>;

// Parses "p/q" or "p" (optional sign). Throws ParseError on anything else.
Rat parse_rat(const std::string& s);

// Canonical form: "p" when the denominator is 1, otherwise "p/q".
std::string rat_str(const Rat& q);

std::string ratvec_str(const RatVec& v);

inline bool is_integer(const Rat& q) { return q.get_den() == 1; }

}  // namespace fpp
