#pragma once

#include <optional>
#include <vector>

#include "fpp/rootdata.hpp"

namespace fpp {

// A Weyl group element. The word lists simple reflections in application
// order (word[0] acts first); words are non-canonical, so equality is by
// the cached matrix of the action on fundamental-weight coordinates.
struct WeylElement {
  std::vector<int> word;                   // 0-based generator indices
  std::vector<std::vector<long>> matrix;   // action on weight coordinates

  static WeylElement identity(const RootDatum& d);
  static WeylElement from_word(const RootDatum& d, const std::vector<int>& word);

  ExponentVector apply(const ExponentVector& v) const;
  std::vector<long> apply_int(const std::vector<long>& v) const;

  // Maps the set {roots of m, both signs} to itself.
  bool stabilizes_levi(const RootDatum& d, const LeviSubset& m) const;

  bool operator==(const WeylElement& o) const { return matrix == o.matrix; }
};

// s_i(v) = v - <v, alpha_i^vee> alpha_i; involution.
ExponentVector reflect(const RootDatum& d, int i, const ExponentVector& v);

// Unique dominant element of the Weyl orbit plus a witness word mapping the
// input to it. Idempotent on dominant input.
std::pair<ExponentVector, WeylElement> make_dominant(const RootDatum& d,
                                                     const ExponentVector& v);

bool is_dominant(const ExponentVector& v);

inline constexpr size_t kDefaultOrbitCap = 1000000;

// Full W-orbit by closure under simple reflections.
std::vector<ExponentVector> weyl_orbit(const RootDatum& d, const ExponentVector& v,
                                       size_t cap = kDefaultOrbitCap);

// All Weyl group elements in a canonical order (breadth-first by word
// length, generators in index order); practical for rank <= 6.
std::vector<WeylElement> enumerate_weyl(const RootDatum& d,
                                        size_t cap = kDefaultOrbitCap);

inline constexpr int kDefaultWitnessRankCap = 6;

// Exhaustive search for w with w(R(M)) = R(M) as a set and w(v) = -v.
// Only the exponent conditions are certified; whether the tempered datum is
// w-fixed is not visible at this level. The OpenMP scan and the serial
// reference return the same element (least index in enumeration order).
std::optional<WeylElement> hermitian_witness(const RootDatum& d, const LeviSubset& m,
                                             const ExponentVector& v,
                                             int rank_cap = kDefaultWitnessRankCap);
std::optional<WeylElement> hermitian_witness_serial(
    const RootDatum& d, const LeviSubset& m, const ExponentVector& v,
    int rank_cap = kDefaultWitnessRankCap);

// All witnesses, in enumeration order.
std::vector<WeylElement> hermitian_witnesses(const RootDatum& d, const LeviSubset& m,
                                             const ExponentVector& v,
                                             int rank_cap = kDefaultWitnessRankCap);

}  // namespace fpp
