#include "fpp/rootdata.hpp"

#include <algorithm>
#include <deque>
#include <numeric>
#include <set>

#include "fpp/errors.hpp"

namespace fpp {

namespace {

// Safety bound: root enumeration must terminate for finite type long before
// this; affine or indefinite input fails loudly instead of looping.
constexpr size_t kMaxRoots = 10000;

// Positive rational diagonal d with d_i a_ij = d_j a_ji, or failure.
bool symmetrizer(const std::vector<std::vector<long>>& a, std::vector<Rat>* d_out) {
  const int n = static_cast<int>(a.size());
  std::vector<Rat> d(n, Rat(0));
  for (int start = 0; start < n; ++start) {
    if (d[start] != 0) continue;
    d[start] = 1;
    std::deque<int> queue{start};
    while (!queue.empty()) {
      int i = queue.front();
      queue.pop_front();
      for (int j = 0; j < n; ++j) {
        if (i == j || a[i][j] == 0) continue;
        Rat dj = d[i] * a[i][j] / a[j][i];
        if (d[j] == 0) {
          d[j] = dj;
          queue.push_back(j);
        } else if (d[j] != dj) {
          return false;
        }
      }
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (d[i] * a[i][j] != d[j] * a[j][i]) return false;
  *d_out = d;
  return true;
}

// Sylvester: a symmetric rational matrix is positive definite iff Gaussian
// elimination without pivoting produces positive pivots throughout.
bool positive_definite(std::vector<std::vector<Rat>> b) {
  const int n = static_cast<int>(b.size());
  for (int k = 0; k < n; ++k) {
    if (b[k][k] <= 0) return false;
    for (int i = k + 1; i < n; ++i) {
      Rat f = b[i][k] / b[k][k];
      for (int j = k; j < n; ++j) b[i][j] -= f * b[k][j];
    }
  }
  return true;
}

}  // namespace

LeviSubset normalize_subset(LeviSubset s, int rank) {
  std::sort(s.begin(), s.end());
  s.erase(std::unique(s.begin(), s.end()), s.end());
  for (int i : s)
    if (i < 0 || i >= rank)
      throw IndexOutOfRange("subset index " + std::to_string(i + 1) +
                            " out of range for rank " + std::to_string(rank));
  return s;
}

bool subset_contains(const LeviSubset& s, int i) {
  return std::binary_search(s.begin(), s.end(), i);
}

bool subset_includes(const LeviSubset& big, const LeviSubset& small) {
  return std::includes(big.begin(), big.end(), small.begin(), small.end());
}

long Root::height() const {
  return std::accumulate(root_coeffs.begin(), root_coeffs.end(), 0L);
}

long Root::coroot_height() const {
  return std::accumulate(coroot_coeffs.begin(), coroot_coeffs.end(), 0L);
}

Rat Root::pairing(const ExponentVector& v) const {
  Rat acc(0);
  for (size_t j = 0; j < coroot_coeffs.size(); ++j)
    if (coroot_coeffs[j] != 0) acc += Rat(coroot_coeffs[j]) * v[j];
  return acc;
}

bool Root::supported_in(const LeviSubset& s) const {
  for (size_t j = 0; j < root_coeffs.size(); ++j)
    if (root_coeffs[j] != 0 && !subset_contains(s, static_cast<int>(j)))
      return false;
  return true;
}

RootDatum RootDatum::build(std::vector<std::vector<long>> cartan,
                           std::vector<int> gamma, std::string label) {
  const int n = static_cast<int>(cartan.size());
  if (n < 1) throw NotCartan("empty Cartan matrix");
  for (const auto& row : cartan)
    if (static_cast<int>(row.size()) != n)
      throw NotCartan("Cartan matrix is not square");
  for (int i = 0; i < n; ++i) {
    if (cartan[i][i] != 2)
      throw NotCartan("diagonal entry != 2 at position " + std::to_string(i + 1));
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      if (cartan[i][j] > 0)
        throw NotCartan("positive off-diagonal entry at (" + std::to_string(i + 1) +
                        "," + std::to_string(j + 1) + ")");
      if ((cartan[i][j] == 0) != (cartan[j][i] == 0))
        throw NotCartan("asymmetric zero pattern at (" + std::to_string(i + 1) +
                        "," + std::to_string(j + 1) + ")");
    }
  }

  if (static_cast<int>(gamma.size()) != n)
    throw GammaNotAutomorphism("permutation length does not match rank");
  {
    std::vector<bool> seen(n, false);
    for (int g : gamma) {
      if (g < 0 || g >= n || seen[g])
        throw GammaNotAutomorphism("gamma is not a permutation of 1.." +
                                   std::to_string(n));
      seen[g] = true;
    }
  }
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (cartan[gamma[i]][gamma[j]] != cartan[i][j])
        throw GammaNotAutomorphism("gamma does not preserve the Cartan matrix");

  std::vector<Rat> sym;
  if (!symmetrizer(cartan, &sym))
    throw NotFiniteType("Cartan matrix is not symmetrizable");
  std::vector<std::vector<Rat>> b(n, std::vector<Rat>(n));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) b[i][j] = sym[i] * cartan[i][j];
  if (!positive_definite(std::move(b)))
    throw NotFiniteType("symmetrized Cartan matrix is not positive definite");

  RootDatum d;
  d.rank_ = n;
  d.cartan_ = std::move(cartan);
  d.gamma_ = std::move(gamma);
  d.label_ = std::move(label);

  // Closure of the simple roots under simple reflections, keeping the
  // positive ones. Coroots are carried along through the dual reflections.
  std::set<std::vector<long>> seen;
  std::deque<Root> queue;
  for (int i = 0; i < n; ++i) {
    Root r;
    r.root_coeffs.assign(n, 0);
    r.coroot_coeffs.assign(n, 0);
    r.root_coeffs[i] = 1;
    r.coroot_coeffs[i] = 1;
    seen.insert(r.root_coeffs);
    queue.push_back(std::move(r));
  }
  std::vector<Root> roots;
  while (!queue.empty()) {
    Root r = std::move(queue.front());
    queue.pop_front();
    roots.push_back(r);
    if (roots.size() > kMaxRoots)
      throw NotFiniteType("root enumeration exceeded safety bound");
    for (int i = 0; i < n; ++i) {
      long pr = 0, pc = 0;
      for (int j = 0; j < n; ++j) {
        pr += d.cartan_[i][j] * r.root_coeffs[j];
        pc += d.cartan_[j][i] * r.coroot_coeffs[j];
      }
      Root s = r;
      s.root_coeffs[i] -= pr;
      s.coroot_coeffs[i] -= pc;
      bool positive = true;
      for (long c : s.root_coeffs)
        if (c < 0) positive = false;
      if (!positive || seen.count(s.root_coeffs)) continue;
      seen.insert(s.root_coeffs);
      queue.push_back(std::move(s));
    }
  }
  std::sort(roots.begin(), roots.end(), [](const Root& x, const Root& y) {
    long hx = x.height(), hy = y.height();
    if (hx != hy) return hx < hy;
    return x.root_coeffs < y.root_coeffs;
  });
  for (auto& r : roots) {
    r.weight.assign(n, 0);
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) r.weight[i] += d.cartan_[i][j] * r.root_coeffs[j];
  }
  d.positive_ = std::move(roots);
  for (size_t k = 0; k < d.positive_.size(); ++k) {
    d.root_index_[d.positive_[k].weight] = 1;
    std::vector<long> neg = d.positive_[k].weight;
    for (auto& c : neg) c = -c;
    d.root_index_[neg] = -1;
  }
  return d;
}

ExponentVector RootDatum::rho() const { return ExponentVector(rank_, Rat(1)); }

RootDatum::LeviSplit RootDatum::levi_split(const LeviSubset& m) const {
  LeviSubset s = normalize_subset(m, rank_);
  LeviSplit out;
  for (const Root& r : positive_) {
    if (r.supported_in(s))
      out.levi.push_back(r);
    else
      out.nilradical.push_back(r);
  }
  return out;
}

bool RootDatum::gamma_stable(const LeviSubset& m) const {
  for (int i : m)
    if (!subset_contains(m, gamma_[i])) return false;
  return true;
}

int RootDatum::root_sign(const std::vector<long>& weight_coords) const {
  auto it = root_index_.find(weight_coords);
  return it == root_index_.end() ? 0 : it->second;
}

namespace {

std::vector<std::vector<long>> chain_matrix(int n) {
  std::vector<std::vector<long>> a(n, std::vector<long>(n, 0));
  for (int i = 0; i < n; ++i) {
    a[i][i] = 2;
    if (i + 1 < n) a[i][i + 1] = a[i + 1][i] = -1;
  }
  return a;
}

std::vector<int> id_perm(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  return p;
}

RootDatum make_named(const std::string& name) {
  char family = name[0];
  int n = std::stoi(name.substr(1));
  auto a = chain_matrix(n);
  switch (family) {
    case 'A':
      break;
    case 'B':
      a[n - 1][n - 2] = -2;  // last simple root short
      break;
    case 'C':
      a[n - 2][n - 1] = -2;  // last simple root long
      break;
    case 'D':
      a[n - 2][n - 1] = a[n - 1][n - 2] = 0;
      a[1][n - 1] = a[n - 1][1] = -1;  // fork at the second node
      break;
    case 'G':
      a = {{2, -1}, {-3, 2}};
      break;
    case 'F':
      a = {{2, -1, 0, 0}, {-1, 2, -1, 0}, {0, -2, 2, -1}, {0, 0, -1, 2}};
      break;
    default:
      throw ParseError("unknown datum family: " + name);
  }
  return RootDatum::build(std::move(a), id_perm(n), name);
}

}  // namespace

const RootDatum& named_root_datum(const std::string& name) {
  static const std::map<std::string, RootDatum> registry = [] {
    std::map<std::string, RootDatum> reg;
    for (const std::string& n : named_root_datum_list()) reg.emplace(n, make_named(n));
    return reg;
  }();
  auto it = registry.find(name);
  if (it == registry.end()) throw ParseError("unknown named root datum: " + name);
  return it->second;
}

std::vector<std::string> named_root_datum_list() {
  return {"A1", "A2", "A3", "A4", "A5", "B2", "B3", "C2", "C3", "D4", "G2", "F4"};
}

RootDatum type_a_datum(int rank) {
  if (rank < 1) throw IndexOutOfRange("type A datum needs rank >= 1");
  return RootDatum::build(chain_matrix(rank), id_perm(rank), "A" + std::to_string(rank));
}

}  // namespace fpp
