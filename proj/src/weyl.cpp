#include "fpp/weyl.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "fpp/errors.hpp"

namespace fpp {

namespace {

std::vector<std::vector<long>> identity_matrix(int n) {
  std::vector<std::vector<long>> m(n, std::vector<long>(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

// Matrix of s_i on weight coordinates: (s_i v)_k = v_k - v_i a_{ki}.
std::vector<std::vector<long>> simple_matrix(const RootDatum& d, int i) {
  const int n = d.rank();
  auto m = identity_matrix(n);
  for (int k = 0; k < n; ++k) m[k][i] -= d.cartan()[k][i];
  return m;
}

std::vector<std::vector<long>> mat_mul(const std::vector<std::vector<long>>& a,
                                       const std::vector<std::vector<long>>& b) {
  const int n = static_cast<int>(a.size());
  std::vector<std::vector<long>> c(n, std::vector<long>(n, 0));
  for (int i = 0; i < n; ++i)
    for (int k = 0; k < n; ++k) {
      long aik = a[i][k];
      if (aik == 0) continue;
      for (int j = 0; j < n; ++j) c[i][j] += aik * b[k][j];
    }
  return c;
}

void check_index(const RootDatum& d, int i) {
  if (i < 0 || i >= d.rank())
    throw IndexOutOfRange("reflection index " + std::to_string(i + 1) +
                          " out of range for rank " + std::to_string(d.rank()));
}

}  // namespace

WeylElement WeylElement::identity(const RootDatum& d) {
  return WeylElement{{}, identity_matrix(d.rank())};
}

WeylElement WeylElement::from_word(const RootDatum& d, const std::vector<int>& word) {
  WeylElement w = identity(d);
  for (int i : word) {
    check_index(d, i);
    w.matrix = mat_mul(simple_matrix(d, i), w.matrix);
    w.word.push_back(i);
  }
  return w;
}

ExponentVector WeylElement::apply(const ExponentVector& v) const {
  const int n = static_cast<int>(matrix.size());
  ExponentVector out(n, Rat(0));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (matrix[i][j] != 0) out[i] += Rat(matrix[i][j]) * v[j];
  return out;
}

std::vector<long> WeylElement::apply_int(const std::vector<long>& v) const {
  const int n = static_cast<int>(matrix.size());
  std::vector<long> out(n, 0);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) out[i] += matrix[i][j] * v[j];
  return out;
}

bool WeylElement::stabilizes_levi(const RootDatum& d, const LeviSubset& m) const {
  std::set<std::vector<long>> levi_wts;
  for (const Root& r : d.levi_split(m).levi) levi_wts.insert(r.weight);
  for (const auto& wt : levi_wts) {
    std::vector<long> img = apply_int(wt);
    if (levi_wts.count(img)) continue;
    for (auto& c : img) c = -c;
    if (!levi_wts.count(img)) return false;
  }
  return true;
}

ExponentVector reflect(const RootDatum& d, int i, const ExponentVector& v) {
  check_index(d, i);
  ExponentVector out = v;
  const Rat vi = v[i];
  if (vi == 0) return out;
  for (int k = 0; k < d.rank(); ++k) out[k] -= vi * Rat(d.cartan()[k][i]);
  return out;
}

bool is_dominant(const ExponentVector& v) {
  for (const Rat& c : v)
    if (c < 0) return false;
  return true;
}

std::pair<ExponentVector, WeylElement> make_dominant(const RootDatum& d,
                                                     const ExponentVector& v) {
  ExponentVector cur = v;
  std::vector<int> word;
  for (;;) {
    int neg = -1;
    for (int i = 0; i < d.rank(); ++i)
      if (cur[i] < 0) {
        neg = i;
        break;
      }
    if (neg < 0) break;
    cur = reflect(d, neg, cur);
    word.push_back(neg);
  }
  return {cur, WeylElement::from_word(d, word)};
}

std::vector<ExponentVector> weyl_orbit(const RootDatum& d, const ExponentVector& v,
                                       size_t cap) {
  std::set<ExponentVector> seen{v};
  std::deque<ExponentVector> queue{v};
  std::vector<ExponentVector> orbit;
  while (!queue.empty()) {
    ExponentVector cur = std::move(queue.front());
    queue.pop_front();
    orbit.push_back(cur);
    for (int i = 0; i < d.rank(); ++i) {
      ExponentVector nxt = reflect(d, i, cur);
      if (seen.insert(nxt).second) {
        if (seen.size() > cap)
          throw OrbitTooLarge("Weyl orbit exceeds cap " + std::to_string(cap));
        queue.push_back(std::move(nxt));
      }
    }
  }
  return orbit;
}

std::vector<WeylElement> enumerate_weyl(const RootDatum& d, size_t cap) {
  std::set<std::vector<std::vector<long>>> seen;
  std::deque<WeylElement> queue{WeylElement::identity(d)};
  seen.insert(queue.front().matrix);
  std::vector<WeylElement> out;
  while (!queue.empty()) {
    WeylElement w = std::move(queue.front());
    queue.pop_front();
    out.push_back(w);
    for (int i = 0; i < d.rank(); ++i) {
      WeylElement nxt;
      nxt.word = w.word;
      nxt.word.push_back(i);
      nxt.matrix = mat_mul(simple_matrix(d, i), w.matrix);
      if (seen.insert(nxt.matrix).second) {
        if (seen.size() > cap)
          throw OrbitTooLarge("Weyl group exceeds cap " + std::to_string(cap));
        queue.push_back(std::move(nxt));
      }
    }
  }
  return out;
}

namespace {

struct WitnessProblem {
  const RootDatum& d;
  LeviSubset m;
  ExponentVector v;
  ExponentVector neg_v;
  std::set<std::vector<long>> levi_weights;  // weight coords, positive roots of M

  WitnessProblem(const RootDatum& dat, const LeviSubset& subset,
                 const ExponentVector& vec, int rank_cap)
      : d(dat) {
    if (d.rank() > rank_cap)
      throw CapExceeded("hermitian witness search capped at rank " +
                        std::to_string(rank_cap));
    m = normalize_subset(subset, d.rank());
    if (static_cast<int>(vec.size()) != d.rank())
      throw InvalidParam("vector length does not match rank");
    for (int i = 0; i < d.rank(); ++i) {
      if (vec[i] < 0) throw InvalidParam("witness search needs a dominant vector");
      if (!subset_contains(m, i) && vec[i] == 0)
        throw InvalidParam("vector must pair strictly positively outside the subset");
    }
    v = vec;
    neg_v.reserve(v.size());
    for (const Rat& c : v) neg_v.push_back(-c);
    for (const Root& r : d.levi_split(m).levi) levi_weights.insert(r.weight);
  }

  bool matches(const WeylElement& w) const {
    if (w.apply(v) != neg_v) return false;
    for (const auto& wt : levi_weights) {
      std::vector<long> img = w.apply_int(wt);
      if (levi_weights.count(img)) continue;
      for (auto& c : img) c = -c;
      if (!levi_weights.count(img)) return false;
    }
    return true;
  }
};

}  // namespace

std::optional<WeylElement> hermitian_witness_serial(const RootDatum& d,
                                                    const LeviSubset& m,
                                                    const ExponentVector& v,
                                                    int rank_cap) {
  WitnessProblem problem(d, m, v, rank_cap);
  for (const WeylElement& w : enumerate_weyl(d))
    if (problem.matches(w)) return w;
  return std::nullopt;
}

std::optional<WeylElement> hermitian_witness(const RootDatum& d, const LeviSubset& m,
                                             const ExponentVector& v, int rank_cap) {
  WitnessProblem problem(d, m, v, rank_cap);
  std::vector<WeylElement> elems = enumerate_weyl(d);
  const long n = static_cast<long>(elems.size());
  long best = n;
#pragma omp parallel for schedule(dynamic, 64) reduction(min : best)
  for (long k = 0; k < n; ++k) {
    if (problem.matches(elems[k]) && k < best) best = k;
  }
  if (best == n) return std::nullopt;
  return elems[best];
}

std::vector<WeylElement> hermitian_witnesses(const RootDatum& d, const LeviSubset& m,
                                             const ExponentVector& v, int rank_cap) {
  WitnessProblem problem(d, m, v, rank_cap);
  std::vector<WeylElement> out;
  for (const WeylElement& w : enumerate_weyl(d))
    if (problem.matches(w)) out.push_back(w);
  return out;
}

}  // namespace fpp
