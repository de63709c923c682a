#include "fpp/rational.hpp"

#include <cctype>

#include "fpp/errors.hpp"

namespace fpp {

Rat parse_rat(const std::string& s) {
  std::string t;
  for (char c : s)
    if (!std::isspace(static_cast<unsigned char>(c))) t += c;
  if (t.empty()) throw ParseError("empty rational literal");
  bool ok = true;
  bool seen_digit = false;
  bool seen_slash = false;
  for (size_t i = 0; i < t.size() && ok; ++i) {
    char c = t[i];
    if (std::isdigit(static_cast<unsigned char>(c))) {
      seen_digit = true;
    } else if (c == '-' || c == '+') {
      // Sign allowed at the front of numerator or denominator.
      ok = (i == 0) || (t[i - 1] == '/');
    } else if (c == '/') {
      ok = !seen_slash && seen_digit && i + 1 < t.size();
      seen_slash = true;
    } else {
      ok = false;
    }
  }
  if (!ok || !seen_digit) throw ParseError("bad rational literal: '" + s + "'");
  mpq_class q;
  if (q.set_str(t, 10) != 0) throw ParseError("bad rational literal: '" + s + "'");
  if (q.get_den() == 0) throw ParseError("zero denominator in '" + s + "'");
  q.canonicalize();
  return q;
}

std::string rat_str(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string ratvec_str(const RatVec& v) {
  std::string out = "(";
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += rat_str(v[i]);
  }
  out += ")";
  return out;
}

}  // namespace fpp
