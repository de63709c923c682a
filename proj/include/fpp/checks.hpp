#pragma once

#include <cstdint>

#include "fpp/lparam.hpp"

namespace fpp {

enum class ExecMode { Serial, OpenMP };

struct PropertyStats {
  long trials = 0;
  long failures = 0;
};

// Over seeded random standard-triple data: the Levi of the triple is
// contained in M_{<=1} of its infinitesimal-character exponent, and the
// shifted pairing <nu_lambda - h/2, gamma^vee> exceeds 1 on the nilradical
// of M_{<=1} (h transported by the dominantizing word).
PropertyStats scan_factor_through(const RootDatum& d, long trials, uint64_t seed,
                                  ExecMode mode = ExecMode::OpenMP);

// Over seeded random dominant vectors: every nilradical weight of M_{<=1}
// is strictly greater than 1.
PropertyStats scan_nilradical_gt1(const RootDatum& d, long trials, uint64_t seed,
                                  ExecMode mode = ExecMode::OpenMP);

}  // namespace fpp
