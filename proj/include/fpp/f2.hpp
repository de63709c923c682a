#pragma once

#include <cstdint>
#include <vector>

#include "fpp/vogan.hpp"

namespace fpp {

// Brute-force orbit count of the product of GL(d_i, F_2) acting on the sum
// of Hom spaces over the field with two elements. Counts points that are
// the lexicographic minimum of their orbit; independent of the
// multisegment enumeration it cross-checks.
//
// The OpenMP kernel and the serial reference return identical counts.
long orbit_count_f2(const GradedDims& g);
long orbit_count_f2_serial(const GradedDims& g);

// Guards: the packed point must fit one machine word and the group must be
// enumerable at desk scale.
inline constexpr long kMaxF2PointBits = 48;
inline constexpr unsigned long long kMaxF2GroupSize = 2000000ULL;

}  // namespace fpp
