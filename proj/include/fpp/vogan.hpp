#pragma once

#include <map>
#include <string>
#include <vector>

#include "fpp/rational.hpp"

namespace fpp {

// Graded dimension vector of a type-A Vogan variety: grade i (the power of
// the eigenvalue of the Frobenius action) carries a space of dimension
// dims[i]. The variety is the sum of Hom spaces between consecutive grades;
// the group is the product of the GL(dims[i]).
struct GradedDims {
  std::map<long, long> dims;

  void validate() const;  // all dims >= 1
  long total() const;
  long dim_at(long i) const;
  // Maximal runs of consecutive grades; maps between runs are zero.
  std::vector<std::vector<long>> runs() const;

  bool operator==(const GradedDims& o) const { return dims == o.dims; }
};

// Multiset of integer segments [a, b], a <= b, classifying the orbits.
struct Multisegment {
  std::vector<std::pair<long, long>> segs;  // kept sorted

  void normalize();
  void validate() const;
  GradedDims support() const;

  bool operator==(const Multisegment& o) const { return segs == o.segs; }
  bool operator<(const Multisegment& o) const { return segs < o.segs; }
};

// Complete orbit invariant: r(i,j) = rank of the composite map from grade i
// to grade j; r(i,i) = dims[i].
struct RankMatrix {
  std::map<std::pair<long, long>, long> r;

  long at(long i, long j) const;
  bool operator==(const RankMatrix& o) const { return r == o.r; }
};

inline constexpr long kDefaultOrbitTotalCap = 12;

// All multisegments supported on g, pairwise distinct.
std::vector<Multisegment> enumerate_orbits(const GradedDims& g,
                                           long cap = kDefaultOrbitTotalCap);

// r(i,j) = #{segments [a,b] : a <= i, j <= b}.
RankMatrix rank_invariants(const Multisegment& m);

// Dense rational matrix, rows x cols.
struct QMat {
  long rows = 0, cols = 0;
  RatVec a;

  static QMat zero(long r, long c);
  Rat& at(long i, long j) { return a[i * cols + j]; }
  const Rat& at(long i, long j) const { return a[i * cols + j]; }
  long rank() const;
};

QMat qmat_mul(const QMat& x, const QMat& y);

// The maps of a point of the variety: matrices[i] sends grade i to grade
// i+1 (rows = dims[i+1], cols = dims[i]); one entry per consecutive pair.
using GradedMaps = std::map<long, QMat>;

// Block matrices of the canonical orbit representative: per segment a
// Jordan string with ones, blocks in segment order.
GradedMaps canonical_matrices(const Multisegment& m);

// Computes all composite ranks of the maps and inverts the correspondence
// with multisegments by inclusion-exclusion.
Multisegment multisegment_from_matrices(const GradedDims& g, const GradedMaps& x);

// Rank of the commutator map from the product of gl(dims[i]) into the
// variety at the canonical representative.
long orbit_dimension(const Multisegment& m);

// Orbit of m1 lies in the closure of the orbit of m2 (entrywise comparison
// of rank invariants). Requires equal support.
bool closure_leq(const Multisegment& m1, const Multisegment& m2);

// Dominant (weakly decreasing) exponent vector: segment [a,b] contributes
// a, a+1, ..., b, all shifted by the given global offset.
RatVec infchar_of_multisegment(const Multisegment& m, const Rat& shift = Rat(0));

// Splits a multiset of rational exponents into integer-translation classes:
// one GradedDims per class, with the class offset in [0,1).
struct GradedClass {
  Rat shift;
  GradedDims dims;
};
std::vector<GradedClass> graded_from_values(const RatVec& values);

}  // namespace fpp
