#pragma once

#include <map>
#include <string>
#include <vector>

#include "fpp/rational.hpp"

namespace fpp {

// Weights are stored in fundamental-weight coordinates: coords[i] is the
// pairing of the vector with the i-th simple coroot. In this basis the
// simple root alpha_j is the j-th column of the Cartan matrix.
using ExponentVector = RatVec;

// Standard Levi subsets are sorted 0-based lists of simple-root indices.
// JSON and reports use 1-based indices.
using LeviSubset = std::vector<int>;

LeviSubset normalize_subset(LeviSubset s, int rank);
bool subset_contains(const LeviSubset& s, int i);
bool subset_includes(const LeviSubset& big, const LeviSubset& small);

// A positive root together with its coroot, both expanded over the simple
// basis. pairing(v) evaluates <v, gamma^vee> for v in fundamental-weight
// coordinates.
struct Root {
  std::vector<long> root_coeffs;    // gamma = sum_j root_coeffs[j] alpha_j
  std::vector<long> coroot_coeffs;  // gamma^vee = sum_j coroot_coeffs[j] alpha_j^vee
  std::vector<long> weight;         // fundamental-weight coordinates of gamma

  long height() const;
  long coroot_height() const;
  Rat pairing(const ExponentVector& v) const;
  bool supported_in(const LeviSubset& s) const;

  bool operator==(const Root& o) const { return root_coeffs == o.root_coeffs; }
};

class RootDatum {
public:
  // Validates the Cartan matrix (finite type, via the symmetrized form) and
  // the diagram automorphism, then enumerates the positive roots eagerly.
  static RootDatum build(std::vector<std::vector<long>> cartan,
                         std::vector<int> gamma /*0-based*/, std::string label);

  int rank() const { return rank_; }
  const std::string& label() const { return label_; }
  const std::vector<std::vector<long>>& cartan() const { return cartan_; }
  const std::vector<int>& gamma_perm() const { return gamma_; }

  const std::vector<Root>& positive_roots() const { return positive_; }

  // Half-sum of positive roots; every fundamental-weight coordinate is 1.
  ExponentVector rho() const;

  struct LeviSplit {
    std::vector<Root> levi;
    std::vector<Root> nilradical;
  };
  // Partitions the positive roots by support on the subset.
  LeviSplit levi_split(const LeviSubset& m) const;

  bool gamma_stable(const LeviSubset& m) const;
  int gamma_image(int i) const { return gamma_[i]; }

  // Looks up a root by fundamental-weight coordinates: +1 positive,
  // -1 negative, 0 not a root.
  int root_sign(const std::vector<long>& weight_coords) const;

private:
  RootDatum() = default;

  int rank_ = 0;
  std::vector<std::vector<long>> cartan_;
  std::vector<int> gamma_;
  std::string label_;
  std::vector<Root> positive_;
  std::map<std::vector<long>, int> root_index_;
};

// Built-in registry: A1..A5, B2, B3, C2, C3, D4, G2, F4, all with trivial
// diagram action.
const RootDatum& named_root_datum(const std::string& name);
std::vector<std::string> named_root_datum_list();

// Type A datum of the given rank (GL_{rank+1} bookkeeping), any rank >= 1.
RootDatum type_a_datum(int rank);

}  // namespace fpp
