#pragma once

#include <cstdint>

#include "fpp/lparam.hpp"
#include "fpp/vogan.hpp"

namespace fpp {

// Hand-rolled splitmix64: the seeded property runs must reproduce across
// platforms, which the standard distributions do not guarantee.
struct Rng {
  uint64_t state;

  explicit Rng(uint64_t seed) : state(seed) {}
  uint64_t next();
  long uniform(long lo, long hi);  // inclusive bounds
  bool coin();
  Rat positive_rational(long num_hi, long den_hi);
};

// Deterministic per-index seed for parallel property scans.
uint64_t index_seed(uint64_t seed, long index);

// Dominant vector with occasional zero coordinates and small denominators.
ExponentVector random_dominant(const RootDatum& d, Rng& rng);

// Standard-triple data with a genuine sl2 weight: h is a sum of strongly
// orthogonal positive roots of the Levi, dominantized within the Levi.
// Arbitrary integer vectors would not satisfy the shifted-weight
// inequality; sums of strongly orthogonal roots always do.
ExponentParam random_exponent_param(const RootDatum& d, Rng& rng);

// Multisegment of total size n supported in [0, span].
Multisegment random_multisegment(Rng& rng, long n, long span = 3);

// Exponent multiset of size n mixing a few integer-translation classes.
RatVec random_exponent_values(Rng& rng, int n);

}  // namespace fpp
