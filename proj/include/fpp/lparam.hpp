#pragma once

#include <optional>
#include <string>
#include <vector>

#include "fpp/rootdata.hpp"
#include "fpp/weyl.hpp"

namespace fpp {

// Combinatorial standard triple at exponent level: the Levi subset, the
// exponent nu (zero on the Levi, strictly positive outside), and the sl2
// weight h of the tempered part (integer coordinates, nonnegative on the
// Levi). The tempered datum itself is an opaque tag; everything computed
// here factors through (levi, nu, h).
struct ExponentParam {
  LeviSubset levi;
  ExponentVector nu;
  ExponentVector h;
  std::string tempered_tag;

  void validate(const RootDatum& d) const;  // throws InvalidParam
};

// Infinitesimal-character exponent: the dominant vector nu_lambda and the
// Levi on which it vanishes.
struct InfCharData {
  LeviSubset m_lambda;
  ExponentVector nu_lambda;

  void validate(const RootDatum& d) const;
};

// Builds InfCharData from a dominant vector; m_lambda is its zero set.
InfCharData make_infchar(const RootDatum& d, ExponentVector nu_lambda);

// nu_lambda = make_dominant(nu + h/2). The tempered part has bounded
// hyperbolic part, so the infinitesimal character's exponent is nu plus the
// half sl2 weight.
InfCharData infchar_exponent(const RootDatum& d, const ExponentParam& p);

struct FppResult {
  bool in_fpp = false;
  LeviSubset violated;  // simple coroots with pairing > 1
};

// Exact test of <nu_lambda, alpha^vee> <= 1 over the simple coroots;
// pairing exactly 1 is inside.
FppResult fpp_check(const RootDatum& d, const InfCharData& ic);

// m_lambda together with the simple roots pairing <= 1 with nu_lambda.
LeviSubset levi_leq1(const RootDatum& d, const InfCharData& ic);

// Multiset {<v, gamma^vee> : gamma in the nilradical of m}, in root order.
std::vector<Rat> nilradical_weights(const RootDatum& d, const LeviSubset& m,
                                    const ExponentVector& v);

// <nu_lambda - h/2, gamma^vee> > 1 for every nilradical root gamma of
// m_leq1. The caller is responsible for h matching ic (transported by the
// dominantizing word); this just evaluates.
bool claim_inequality(const RootDatum& d, const LeviSubset& m_leq1,
                      const InfCharData& ic, const ExponentVector& h);

// The unbounded deformation s -> nu_s supported on the violation set:
// <nu_s, beta^vee> = s for beta in S, 0 otherwise.
struct DeformationFamily {
  int rank = 0;
  LeviSubset support;

  ExponentVector at(const Rat& s) const;
  ExponentVector indicator() const { return at(Rat(1)); }
  std::string description() const;
};

DeformationFamily deformation_family(const RootDatum& d, const InfCharData& ic);

extern const char* const kAssumptionLlc;
extern const char* const kAssumptionTemperedFixed;

// Non-unitarity certificate: violation set, M_{<=1}, Hermitian witness, and
// the unbounded family, together with the assumptions it is conditional on.
struct Certificate {
  ExponentParam param;
  InfCharData infchar;
  LeviSubset violated;
  LeviSubset m_leq1;
  WeylElement witness;
  DeformationFamily family;
  std::vector<std::string> assumptions;

  void validate(const RootDatum& d) const;  // machine-check on emission
};

// none if the parameter is inside the FPP, or if no Weyl element negates nu
// while stabilizing the Levi (the exponent data cannot certify
// Hermitian-ness). Among valid witnesses, one negating the indicator vector
// of the violation set is preferred, so the family deforms coherently.
std::optional<Certificate> non_unitarity_certificate(
    const RootDatum& d, const ExponentParam& p,
    int rank_cap = kDefaultWitnessRankCap);

}  // namespace fpp
