#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fpp/rootdata.hpp"

namespace fpp {

// Opaque supercuspidal marker: distinct names denote non-isomorphic
// supercuspidals of GL_degree. No Weil-group data sits behind it; only
// name equality, degree, and exponents ever enter a computation.
struct ScTag {
  std::string name;
  int degree = 1;
  bool unitary = true;

  bool operator==(const ScTag&) const = default;
};

// One induced factor sigma |det|^c.
struct TaggedItem {
  ScTag tag;
  Rat c;
};

// Multiset of tagged exponents; total degree is the ambient GL_n.
struct TaggedExponent {
  std::vector<TaggedItem> items;

  void validate() const;  // equal names carry equal degrees and flags
  int total_degree() const;
};

// Induction is reducible exactly when two equal tags sit at exponent
// distance 1; cross-tag inductions are always irreducible.
bool irreducible_induction(const TaggedExponent& e);

// Invariance of the multiset under c -> -c, tagwise.
bool hermitian_test(const TaggedExponent& e);

// Exponent values with multiplicity degree(tag), weakly decreasing.
RatVec sorted_values(const TaggedExponent& e);

// Fundamental-weight coordinates (consecutive differences of the sorted
// values) on the type-A datum of GL_n; needs total degree >= 2.
ExponentVector langlands_exponent(const TaggedExponent& e);

// Largest simple-coroot pairing, i.e. the largest consecutive difference;
// nullopt when the total degree is 1 (no simple coroots).
std::optional<Rat> max_simple_pairing(const TaggedExponent& e);
std::optional<Rat> max_simple_pairing(const RatVec& sorted_vals);

struct UnramFactor {
  ScTag tag;
  int multiplicity = 0;  // the factor is GL_multiplicity
  RatVec exponents;      // weakly decreasing
  std::optional<Rat> max_pairing;
  bool fpp_pass = false;
};

struct UnramReport {
  std::vector<UnramFactor> factors;  // in order of first appearance
  std::string reduced_label;
  bool fpp_pass = false;  // every factor passes
};

// Groups the items by tag; each tag of multiplicity m contributes a GL_m
// factor carrying that tag's exponent multiset, on which the FPP test is
// rerun.
UnramReport unramify(const TaggedExponent& e);

// Unitary building block: the ladder u(delta_ell, m), twisted by
// |det|^{+-alpha} when alpha > 0 (a complementary pair of total degree
// 2*ell*m). alpha = 0 is the plain block of degree ell*m.
struct SpehBlock {
  int ell = 1;  // discrete-series segment length
  int m = 1;    // Speh length
  Rat alpha;    // in [0, 1/2)

  int degree() const;
  RatVec exponents() const;  // sorted weakly decreasing
  std::string describe() const;
};

struct UnitaryPoint {
  std::vector<SpehBlock> blocks;

  int total() const;
  RatVec values() const;  // merged block exponents, weakly decreasing
  TaggedExponent exponent(const ScTag& tag) const;
  std::string describe() const;
};

inline constexpr int kDefaultGlnCap = 6;

// Enumerates, over a single unramified tag, all multisets of Speh blocks
// and grid-twisted complementary pairs of total degree n.
std::vector<UnitaryPoint> tadic_enumerate(int n, const std::vector<Rat>& grid,
                                          int n_cap = kDefaultGlnCap);

struct ScanEntry {
  UnitaryPoint point;
  RatVec values;
  std::optional<Rat> max_pairing;
  bool pass = false;
  bool saturating = false;  // max pairing exactly 1
};

struct ScanReport {
  int n = 0;
  std::vector<ScanEntry> entries;
  long violations = 0;
  long saturating = 0;
};

// Runs the FPP test on every enumerated unitary point. The OpenMP scan and
// the serial reference produce identical reports.
ScanReport fpp_scan(int n, const std::vector<Rat>& grid,
                    int n_cap = kDefaultGlnCap);
ScanReport fpp_scan_serial(int n, const std::vector<Rat>& grid,
                           int n_cap = kDefaultGlnCap);

// End-to-end walk through the three-factor family pi_b on GL_{3d}
// (rho at 0, tau at +-b): Hermitian by symmetry, irreducible away from
// 2b = 1, ambient bound b <= 1, unramified factors GL_1 x GL_2 with the
// sharper bound b <= 1/2, and the unbounded-family flag above it.
struct Example41Report {
  Rat b;
  int d = 1;
  bool hermitian = false;
  bool irreducible = false;
  Rat ambient_max;
  bool ambient_fpp_pass = false;
  UnramReport unram;
  bool reduced_fpp_pass = false;
  bool non_unitary_flag = false;
  std::string family_note;
};

Example41Report example_4_1(const Rat& b, int d);

}  // namespace fpp
