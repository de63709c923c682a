#include "fpp/sampling.hpp"

#include <algorithm>

#include "fpp/errors.hpp"

namespace fpp {

uint64_t Rng::next() {
  state += 0x9e3779b97f4a7c15ULL;
  uint64_t z = state;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

long Rng::uniform(long lo, long hi) {
  return lo + static_cast<long>(next() % static_cast<uint64_t>(hi - lo + 1));
}

bool Rng::coin() { return next() & 1; }

Rat Rng::positive_rational(long num_hi, long den_hi) {
  Rat q(uniform(1, num_hi), uniform(1, den_hi));
  q.canonicalize();
  return q;
}

uint64_t index_seed(uint64_t seed, long index) {
  return seed ^ (0x9e3779b97f4a7c15ULL * static_cast<uint64_t>(index + 1));
}

ExponentVector random_dominant(const RootDatum& d, Rng& rng) {
  ExponentVector v(d.rank());
  for (int i = 0; i < d.rank(); ++i)
    v[i] = rng.uniform(0, 3) == 0 ? Rat(0) : rng.positive_rational(10, 4);
  return v;
}

ExponentParam random_exponent_param(const RootDatum& d, Rng& rng) {
  ExponentParam p;
  for (int i = 0; i < d.rank(); ++i)
    if (rng.coin()) p.levi.push_back(i);

  p.nu.assign(d.rank(), Rat(0));
  for (int i = 0; i < d.rank(); ++i)
    if (!subset_contains(p.levi, i)) p.nu[i] = rng.positive_rational(10, 4);

  // Pick a random strongly orthogonal set of positive roots of the Levi.
  std::vector<Root> pool = d.levi_split(p.levi).levi;
  for (size_t k = pool.size(); k > 1; --k)
    std::swap(pool[k - 1], pool[rng.uniform(0, static_cast<long>(k) - 1)]);
  std::vector<Root> chosen;
  for (const Root& cand : pool) {
    if (!rng.coin()) continue;
    bool ok = true;
    for (const Root& got : chosen) {
      std::vector<long> sum(d.rank()), diff(d.rank());
      for (int i = 0; i < d.rank(); ++i) {
        sum[i] = cand.weight[i] + got.weight[i];
        diff[i] = cand.weight[i] - got.weight[i];
      }
      if (d.root_sign(sum) != 0 || d.root_sign(diff) != 0 ||
          cand.weight == got.weight) {
        ok = false;
        break;
      }
    }
    if (ok) chosen.push_back(cand);
  }
  std::vector<long> h(d.rank(), 0);
  for (const Root& r : chosen)
    for (int i = 0; i < d.rank(); ++i) h[i] += r.weight[i];
  // Dominantize within the Levi's Weyl group.
  for (;;) {
    int neg = -1;
    for (int i : p.levi)
      if (h[i] < 0) {
        neg = i;
        break;
      }
    if (neg < 0) break;
    long hi = h[neg];
    for (int k = 0; k < d.rank(); ++k) h[k] -= hi * d.cartan()[k][neg];
  }
  p.h.assign(d.rank(), Rat(0));
  for (int i = 0; i < d.rank(); ++i) p.h[i] = Rat(h[i]);
  p.tempered_tag = "sample";
  p.validate(d);
  return p;
}

Multisegment random_multisegment(Rng& rng, long n, long span) {
  Multisegment m;
  long used = 0;
  while (used < n) {
    long a = rng.uniform(0, span);
    long maxlen = std::min(n - used, span - a + 1);
    long b = a + rng.uniform(0, maxlen - 1);
    m.segs.emplace_back(a, b);
    used += b - a + 1;
  }
  m.normalize();
  return m;
}

RatVec random_exponent_values(Rng& rng, int n) {
  static const Rat shifts[] = {Rat(0), Rat(1, 2), Rat(1, 3)};
  RatVec out;
  for (int k = 0; k < n; ++k)
    out.push_back(Rat(rng.uniform(0, 3)) + shifts[rng.uniform(0, 2)]);
  std::sort(out.begin(), out.end(), [](const Rat& x, const Rat& y) { return x > y; });
  return out;
}

}  // namespace fpp
