#include "fpp/gln.hpp"

#include <algorithm>
#include <map>

#include "fpp/errors.hpp"

namespace fpp {

void TaggedExponent::validate() const {
  std::map<std::string, std::pair<int, bool>> seen;
  for (const TaggedItem& it : items) {
    if (it.tag.degree < 1) throw InvalidParam("tag degree must be positive");
    auto [pos, fresh] =
        seen.emplace(it.tag.name, std::make_pair(it.tag.degree, it.tag.unitary));
    if (!fresh && (pos->second.first != it.tag.degree ||
                   pos->second.second != it.tag.unitary))
      throw InvalidParam("tag '" + it.tag.name + "' used with inconsistent data");
  }
}

int TaggedExponent::total_degree() const {
  int n = 0;
  for (const TaggedItem& it : items) n += it.tag.degree;
  return n;
}

bool irreducible_induction(const TaggedExponent& e) {
  e.validate();
  for (size_t i = 0; i < e.items.size(); ++i)
    for (size_t j = i + 1; j < e.items.size(); ++j) {
      if (e.items[i].tag.name != e.items[j].tag.name) continue;
      Rat diff = e.items[i].c - e.items[j].c;
      if (diff == 1 || diff == -1) return false;
    }
  return true;
}

bool hermitian_test(const TaggedExponent& e) {
  e.validate();
  std::map<std::pair<std::string, Rat>, long> counts;
  for (const TaggedItem& it : e.items) counts[{it.tag.name, it.c}] += 1;
  for (const auto& [key, n] : counts) {
    auto mirror = counts.find({key.first, -key.second});
    if (mirror == counts.end() || mirror->second != n) return false;
  }
  return true;
}

RatVec sorted_values(const TaggedExponent& e) {
  e.validate();
  RatVec vals;
  for (const TaggedItem& it : e.items)
    for (int k = 0; k < it.tag.degree; ++k) vals.push_back(it.c);
  std::sort(vals.begin(), vals.end(), [](const Rat& x, const Rat& y) { return x > y; });
  return vals;
}

ExponentVector langlands_exponent(const TaggedExponent& e) {
  RatVec vals = sorted_values(e);
  if (vals.size() < 2)
    throw InvalidParam("langlands_exponent needs total degree >= 2");
  ExponentVector coords(vals.size() - 1);
  for (size_t i = 0; i + 1 < vals.size(); ++i) coords[i] = vals[i] - vals[i + 1];
  return coords;
}

std::optional<Rat> max_simple_pairing(const RatVec& sorted_vals) {
  if (sorted_vals.size() < 2) return std::nullopt;
  Rat best = sorted_vals[0] - sorted_vals[1];
  for (size_t i = 1; i + 1 < sorted_vals.size(); ++i)
    best = std::max(best, sorted_vals[i] - sorted_vals[i + 1]);
  return best;
}

std::optional<Rat> max_simple_pairing(const TaggedExponent& e) {
  return max_simple_pairing(sorted_values(e));
}

UnramReport unramify(const TaggedExponent& e) {
  e.validate();
  UnramReport rep;
  std::vector<std::string> order;
  std::map<std::string, UnramFactor> by_tag;
  for (const TaggedItem& it : e.items) {
    auto [pos, fresh] = by_tag.emplace(it.tag.name, UnramFactor{it.tag, 0, {}, {}, false});
    if (fresh) order.push_back(it.tag.name);
    pos->second.multiplicity += 1;
    pos->second.exponents.push_back(it.c);
  }
  rep.fpp_pass = true;
  for (size_t k = 0; k < order.size(); ++k) {
    UnramFactor f = by_tag[order[k]];
    std::sort(f.exponents.begin(), f.exponents.end(),
              [](const Rat& x, const Rat& y) { return x > y; });
    f.max_pairing = max_simple_pairing(f.exponents);
    f.fpp_pass = !f.max_pairing || *f.max_pairing <= 1;
    rep.fpp_pass = rep.fpp_pass && f.fpp_pass;
    if (k) rep.reduced_label += " x ";
    rep.reduced_label += "GL_" + std::to_string(f.multiplicity);
    rep.factors.push_back(std::move(f));
  }
  return rep;
}

int SpehBlock::degree() const { return (alpha > 0 ? 2 : 1) * ell * m; }

RatVec SpehBlock::exponents() const {
  RatVec vals;
  // The ell x m grid ladder: (ell-1)/2 + (m-1)/2 - i - j.
  Rat top = Rat(ell - 1, 2) + Rat(m - 1, 2);
  for (int i = 0; i < ell; ++i)
    for (int j = 0; j < m; ++j) {
      Rat v = top - i - j;
      if (alpha > 0) {
        vals.push_back(v + alpha);
        vals.push_back(v - alpha);
      } else {
        vals.push_back(v);
      }
    }
  std::sort(vals.begin(), vals.end(), [](const Rat& x, const Rat& y) { return x > y; });
  return vals;
}

std::string SpehBlock::describe() const {
  std::string s = "u(" + std::to_string(ell) + "," + std::to_string(m) + ")";
  if (alpha > 0) s += "{+-" + rat_str(alpha) + "}";
  return s;
}

int UnitaryPoint::total() const {
  int n = 0;
  for (const SpehBlock& b : blocks) n += b.degree();
  return n;
}

RatVec UnitaryPoint::values() const {
  RatVec vals;
  for (const SpehBlock& b : blocks) {
    RatVec bv = b.exponents();
    vals.insert(vals.end(), bv.begin(), bv.end());
  }
  std::sort(vals.begin(), vals.end(), [](const Rat& x, const Rat& y) { return x > y; });
  return vals;
}

TaggedExponent UnitaryPoint::exponent(const ScTag& tag) const {
  TaggedExponent e;
  for (const Rat& v : values()) e.items.push_back({tag, v});
  return e;
}

std::string UnitaryPoint::describe() const {
  std::string s;
  for (size_t k = 0; k < blocks.size(); ++k) {
    if (k) s += " (x) ";
    s += blocks[k].describe();
  }
  return s.empty() ? "(empty)" : s;
}

std::vector<UnitaryPoint> tadic_enumerate(int n, const std::vector<Rat>& grid,
                                          int n_cap) {
  if (n < 1) throw InvalidParam("tadic_enumerate needs n >= 1");
  if (n > n_cap)
    throw CapExceeded("tadic_enumerate capped at n = " + std::to_string(n_cap));
  for (const Rat& a : grid)
    if (a < 0 || a >= Rat(1, 2))
      throw BadGrid("grid value " + rat_str(a) + " outside [0, 1/2)");

  std::vector<SpehBlock> menu;
  for (int ell = 1; ell <= n; ++ell)
    for (int m = 1; ell * m <= n; ++m) {
      menu.push_back({ell, m, Rat(0)});
      if (2 * ell * m <= n)
        for (const Rat& a : grid)
          if (a > 0) menu.push_back({ell, m, a});
    }

  std::vector<UnitaryPoint> out;
  std::vector<SpehBlock> current;
  // Multisets: item indices non-increasing along the recursion.
  auto rec = [&](auto&& self, int remaining, size_t max_item) -> void {
    if (remaining == 0) {
      out.push_back({current});
      return;
    }
    for (size_t k = 0; k < max_item; ++k) {
      if (menu[k].degree() > remaining) continue;
      current.push_back(menu[k]);
      self(self, remaining - menu[k].degree(), k + 1);
      current.pop_back();
    }
  };
  rec(rec, n, menu.size());
  return out;
}

namespace {

ScanEntry evaluate_point(const UnitaryPoint& p) {
  ScanEntry e;
  e.point = p;
  e.values = p.values();
  e.max_pairing = max_simple_pairing(e.values);
  e.pass = !e.max_pairing || *e.max_pairing <= 1;
  e.saturating = e.max_pairing && *e.max_pairing == 1;
  return e;
}

ScanReport finalize(int n, std::vector<ScanEntry> entries) {
  ScanReport rep;
  rep.n = n;
  rep.entries = std::move(entries);
  for (const ScanEntry& e : rep.entries) {
    if (!e.pass) ++rep.violations;
    if (e.saturating) ++rep.saturating;
  }
  return rep;
}

}  // namespace

ScanReport fpp_scan_serial(int n, const std::vector<Rat>& grid, int n_cap) {
  std::vector<UnitaryPoint> points = tadic_enumerate(n, grid, n_cap);
  std::vector<ScanEntry> entries(points.size());
  for (size_t k = 0; k < points.size(); ++k) entries[k] = evaluate_point(points[k]);
  return finalize(n, std::move(entries));
}

ScanReport fpp_scan(int n, const std::vector<Rat>& grid, int n_cap) {
  std::vector<UnitaryPoint> points = tadic_enumerate(n, grid, n_cap);
  std::vector<ScanEntry> entries(points.size());
  const long count = static_cast<long>(points.size());
#pragma omp parallel for schedule(dynamic, 8)
  for (long k = 0; k < count; ++k) entries[k] = evaluate_point(points[k]);
  return finalize(n, std::move(entries));
}

Example41Report example_4_1(const Rat& b, int d) {
  if (b < 0) throw InvalidParam("example_4_1 needs b >= 0");
  if (d < 1) throw InvalidParam("example_4_1 needs d >= 1");
  ScTag rho{"rho", d, true};
  ScTag tau{"tau", d, true};
  TaggedExponent e{{{rho, Rat(0)}, {tau, b}, {tau, -b}}};

  Example41Report rep;
  rep.b = b;
  rep.d = d;
  rep.hermitian = hermitian_test(e);
  rep.irreducible = irreducible_induction(e);
  rep.ambient_max = *max_simple_pairing(e);
  rep.ambient_fpp_pass = rep.ambient_max <= 1;
  rep.unram = unramify(e);
  rep.reduced_fpp_pass = rep.unram.fpp_pass;
  rep.non_unitary_flag = !rep.reduced_fpp_pass;
  if (rep.non_unitary_flag)
    rep.family_note =
        "the family b' |-> Ind(rho (x) tau|.|^{b'} (x) tau|.|^{-b'}) over "
        "b' in (1/2, oo) is irreducible, Hermitian, and unbounded";
  return rep;
}

}  // namespace fpp
