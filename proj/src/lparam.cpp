#include "fpp/lparam.hpp"

#include <algorithm>

#include "fpp/errors.hpp"

namespace fpp {

const char* const kAssumptionLlc = "LLC satisfying LC and KL exists";
const char* const kAssumptionTemperedFixed =
    "pi_t^w ~= pi_t holds for the tempered datum";

void ExponentParam::validate(const RootDatum& d) const {
  const int n = d.rank();
  LeviSubset m = normalize_subset(levi, n);
  if (static_cast<int>(nu.size()) != n || static_cast<int>(h.size()) != n)
    throw InvalidParam("nu/h length does not match rank");
  for (int i = 0; i < n; ++i) {
    if (subset_contains(m, i)) {
      if (nu[i] != 0)
        throw InvalidParam("nu must vanish on the Levi (index " +
                           std::to_string(i + 1) + ")");
      if (h[i] < 0)
        throw InvalidParam("h must be dominant within the Levi (index " +
                           std::to_string(i + 1) + ")");
    } else if (nu[i] <= 0) {
      throw InvalidParam("nu must be strictly positive outside the Levi (index " +
                         std::to_string(i + 1) + ")");
    }
    if (!is_integer(h[i]))
      throw InvalidParam("h must have integer coordinates (index " +
                         std::to_string(i + 1) + ")");
  }
}

void InfCharData::validate(const RootDatum& d) const {
  const int n = d.rank();
  if (static_cast<int>(nu_lambda.size()) != n)
    throw InvalidParam("nu_lambda length does not match rank");
  LeviSubset m = normalize_subset(m_lambda, n);
  for (int i = 0; i < n; ++i) {
    if (nu_lambda[i] < 0) throw NotDominant("nu_lambda is not dominant");
    if ((nu_lambda[i] == 0) != subset_contains(m, i))
      throw InvalidParam("m_lambda must be exactly the zero set of nu_lambda");
  }
}

InfCharData make_infchar(const RootDatum& d, ExponentVector nu_lambda) {
  if (static_cast<int>(nu_lambda.size()) != d.rank())
    throw InvalidParam("nu_lambda length does not match rank");
  if (!is_dominant(nu_lambda)) throw NotDominant("nu_lambda is not dominant");
  LeviSubset m;
  for (int i = 0; i < d.rank(); ++i)
    if (nu_lambda[i] == 0) m.push_back(i);
  return InfCharData{std::move(m), std::move(nu_lambda)};
}

InfCharData infchar_exponent(const RootDatum& d, const ExponentParam& p) {
  p.validate(d);
  ExponentVector mu(d.rank());
  for (int i = 0; i < d.rank(); ++i) mu[i] = p.nu[i] + p.h[i] / 2;
  auto [dom, w] = make_dominant(d, mu);
  (void)w;
  return make_infchar(d, std::move(dom));
}

FppResult fpp_check(const RootDatum& d, const InfCharData& ic) {
  ic.validate(d);
  FppResult res;
  res.in_fpp = true;
  for (int i = 0; i < d.rank(); ++i)
    if (ic.nu_lambda[i] > 1) {
      res.in_fpp = false;
      res.violated.push_back(i);
    }
  return res;
}

LeviSubset levi_leq1(const RootDatum& d, const InfCharData& ic) {
  ic.validate(d);
  LeviSubset out;
  for (int i = 0; i < d.rank(); ++i)
    if (ic.nu_lambda[i] <= 1) out.push_back(i);
  return out;
}

std::vector<Rat> nilradical_weights(const RootDatum& d, const LeviSubset& m,
                                    const ExponentVector& v) {
  if (static_cast<int>(v.size()) != d.rank())
    throw InvalidParam("vector length does not match rank");
  std::vector<Rat> out;
  for (const Root& r : d.levi_split(m).nilradical) out.push_back(r.pairing(v));
  return out;
}

bool claim_inequality(const RootDatum& d, const LeviSubset& m_leq1,
                      const InfCharData& ic, const ExponentVector& h) {
  if (static_cast<int>(h.size()) != d.rank())
    throw InvalidParam("h length does not match rank");
  ExponentVector shifted(d.rank());
  for (int i = 0; i < d.rank(); ++i) shifted[i] = ic.nu_lambda[i] - h[i] / 2;
  for (const Rat& w : nilradical_weights(d, m_leq1, shifted))
    if (w <= 1) return false;
  return true;
}

ExponentVector DeformationFamily::at(const Rat& s) const {
  ExponentVector v(rank, Rat(0));
  for (int i : support) v[i] = s;
  return v;
}

std::string DeformationFamily::description() const {
  std::string idx;
  for (size_t k = 0; k < support.size(); ++k) {
    if (k) idx += ",";
    idx += std::to_string(support[k] + 1);
  }
  return "nu_s pairs to s with the simple coroots {" + idx + "} and to 0 elsewhere";
}

DeformationFamily deformation_family(const RootDatum& d, const InfCharData& ic) {
  FppResult res = fpp_check(d, ic);
  if (res.in_fpp)
    throw EmptyViolationSet("no simple coroot pairs above 1; nothing to deform");
  return DeformationFamily{d.rank(), res.violated};
}

void Certificate::validate(const RootDatum& d) const {
  param.validate(d);
  InfCharData ic = infchar_exponent(d, param);
  if (ic.nu_lambda != infchar.nu_lambda || normalize_subset(ic.m_lambda, d.rank()) !=
                                               normalize_subset(infchar.m_lambda, d.rank()))
    throw InvalidParam("certificate infinitesimal character mismatch");
  FppResult res = fpp_check(d, ic);
  if (res.in_fpp || res.violated != violated || violated.empty())
    throw InvalidParam("certificate violation set mismatch");
  if (levi_leq1(d, ic) != m_leq1)
    throw InvalidParam("certificate M_{<=1} mismatch");
  ExponentVector neg(param.nu.size());
  for (size_t i = 0; i < param.nu.size(); ++i) neg[i] = -param.nu[i];
  if (witness.apply(param.nu) != neg)
    throw InvalidParam("certificate witness does not negate nu");
  if (!witness.stabilizes_levi(d, param.levi))
    throw InvalidParam("certificate witness does not stabilize the Levi");
  if (family.support != violated || family.rank != d.rank())
    throw InvalidParam("certificate family support mismatch");
  if (assumptions.empty()) throw InvalidParam("certificate assumption list empty");
}

std::optional<Certificate> non_unitarity_certificate(const RootDatum& d,
                                                     const ExponentParam& p,
                                                     int rank_cap) {
  p.validate(d);
  InfCharData ic = infchar_exponent(d, p);
  FppResult res = fpp_check(d, ic);
  if (res.in_fpp) return std::nullopt;

  std::vector<WeylElement> witnesses =
      hermitian_witnesses(d, p.levi, p.nu, rank_cap);
  if (witnesses.empty()) return std::nullopt;

  DeformationFamily family{d.rank(), res.violated};

  // Prefer a witness that also negates the family direction, so that
  // w(nu_s) = -nu_s holds along the whole deformation.
  ExponentVector chi = family.indicator();
  ExponentVector neg_chi(chi.size());
  for (size_t i = 0; i < chi.size(); ++i) neg_chi[i] = -chi[i];
  const WeylElement* chosen = &witnesses.front();
  for (const WeylElement& w : witnesses)
    if (w.apply(chi) == neg_chi) {
      chosen = &w;
      break;
    }

  Certificate cert{p,
                   ic,
                   res.violated,
                   levi_leq1(d, ic),
                   *chosen,
                   family,
                   {kAssumptionLlc, kAssumptionTemperedFixed}};
  cert.validate(d);
  return cert;
}

}  // namespace fpp
