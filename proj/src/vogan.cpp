#include "fpp/vogan.hpp"

#include <algorithm>
#include <functional>

#include "fpp/errors.hpp"

namespace fpp {

void GradedDims::validate() const {
  for (const auto& [i, d] : dims)
    if (d < 1)
      throw InvalidParam("graded dimension at " + std::to_string(i) +
                         " must be positive");
}

long GradedDims::total() const {
  long t = 0;
  for (const auto& [i, d] : dims) t += d;
  return t;
}

long GradedDims::dim_at(long i) const {
  auto it = dims.find(i);
  return it == dims.end() ? 0 : it->second;
}

std::vector<std::vector<long>> GradedDims::runs() const {
  std::vector<std::vector<long>> out;
  for (const auto& [i, d] : dims) {
    (void)d;
    if (!out.empty() && out.back().back() + 1 == i)
      out.back().push_back(i);
    else
      out.push_back({i});
  }
  return out;
}

void Multisegment::normalize() { std::sort(segs.begin(), segs.end()); }

void Multisegment::validate() const {
  for (const auto& [a, b] : segs)
    if (a > b)
      throw InvalidParam("segment [" + std::to_string(a) + "," + std::to_string(b) +
                         "] has a > b");
}

GradedDims Multisegment::support() const {
  GradedDims g;
  for (const auto& [a, b] : segs)
    for (long i = a; i <= b; ++i) g.dims[i] += 1;
  return g;
}

long RankMatrix::at(long i, long j) const {
  auto it = r.find({i, j});
  return it == r.end() ? 0 : it->second;
}

namespace {

// Enumerates the multisegments supported on one contiguous run by walking
// the grades left to right and tracking, per start grade, how many segments
// are still open.
void enumerate_run(const GradedDims& g, const std::vector<long>& run, size_t pos,
                   std::vector<long>& open,  // open[k]: started at run[k]
                   std::vector<std::pair<long, long>>& acc,
                   std::vector<Multisegment>& out) {
  const long grade = run[pos];
  long continuing = 0;
  for (long c : open) continuing += c;
  const long fresh = g.dim_at(grade) - continuing;
  if (fresh < 0) return;
  open.push_back(fresh);  // segments starting at this grade

  const bool last = pos + 1 == run.size();
  // Choose how many open segments close here, per start grade. On the last
  // grade everything closes.
  std::vector<long> close(open.size(), 0);
  if (last) close = open;
  for (;;) {
    size_t base = acc.size();
    for (size_t k = 0; k < close.size(); ++k)
      for (long c = 0; c < close[k]; ++c) acc.emplace_back(run[k], grade);
    if (last) {
      Multisegment m{acc};
      m.normalize();
      out.push_back(std::move(m));
    } else {
      for (size_t k = 0; k < close.size(); ++k) open[k] -= close[k];
      enumerate_run(g, run, pos + 1, open, acc, out);
      for (size_t k = 0; k < close.size(); ++k) open[k] += close[k];
    }
    acc.resize(base);
    if (last) break;
    // Odometer over the closing vector.
    size_t k = 0;
    while (k < close.size()) {
      if (close[k] < open[k]) {
        ++close[k];
        break;
      }
      close[k] = 0;
      ++k;
    }
    if (k == close.size()) break;
  }
  open.pop_back();
}

}  // namespace

std::vector<Multisegment> enumerate_orbits(const GradedDims& g, long cap) {
  g.validate();
  if (g.total() > cap)
    throw TooLarge("total dimension " + std::to_string(g.total()) +
                   " exceeds orbit enumeration cap " + std::to_string(cap));
  std::vector<Multisegment> acc{Multisegment{}};
  for (const auto& run : g.runs()) {
    std::vector<Multisegment> per_run;
    std::vector<long> open;
    std::vector<std::pair<long, long>> partial;
    enumerate_run(g, run, 0, open, partial, per_run);
    std::vector<Multisegment> next;
    next.reserve(acc.size() * per_run.size());
    for (const auto& left : acc)
      for (const auto& right : per_run) {
        Multisegment m = left;
        m.segs.insert(m.segs.end(), right.segs.begin(), right.segs.end());
        m.normalize();
        next.push_back(std::move(m));
      }
    acc = std::move(next);
  }
  std::sort(acc.begin(), acc.end());
  return acc;
}

RankMatrix rank_invariants(const Multisegment& m) {
  m.validate();
  RankMatrix out;
  GradedDims g = m.support();
  for (const auto& run : g.runs())
    for (size_t x = 0; x < run.size(); ++x)
      for (size_t y = x; y < run.size(); ++y) {
        long i = run[x], j = run[y];
        long count = 0;
        for (const auto& [a, b] : m.segs)
          if (a <= i && j <= b) ++count;
        out.r[{i, j}] = count;
      }
  return out;
}

QMat QMat::zero(long r, long c) {
  QMat m;
  m.rows = r;
  m.cols = c;
  m.a.assign(r * c, Rat(0));
  return m;
}

long QMat::rank() const {
  QMat w = *this;
  long rank = 0;
  for (long col = 0; col < w.cols && rank < w.rows; ++col) {
    long pivot = -1;
    for (long r = rank; r < w.rows; ++r)
      if (w.at(r, col) != 0) {
        pivot = r;
        break;
      }
    if (pivot < 0) continue;
    for (long c = 0; c < w.cols; ++c) std::swap(w.a[rank * w.cols + c], w.a[pivot * w.cols + c]);
    for (long r = rank + 1; r < w.rows; ++r) {
      if (w.at(r, col) == 0) continue;
      Rat f = w.at(r, col) / w.at(rank, col);
      for (long c = col; c < w.cols; ++c) w.at(r, c) -= f * w.at(rank, c);
    }
    ++rank;
  }
  return rank;
}

QMat qmat_mul(const QMat& x, const QMat& y) {
  if (x.cols != y.rows) throw ShapeMismatch("matrix product shape mismatch");
  QMat z = QMat::zero(x.rows, y.cols);
  for (long i = 0; i < x.rows; ++i)
    for (long k = 0; k < x.cols; ++k) {
      const Rat& v = x.at(i, k);
      if (v == 0) continue;
      for (long j = 0; j < y.cols; ++j) z.at(i, j) += v * y.at(k, j);
    }
  return z;
}

namespace {

// Slot of each segment at each grade it covers, in sorted segment order.
std::map<long, std::vector<size_t>> grade_slots(const Multisegment& m) {
  std::map<long, std::vector<size_t>> slots;
  for (size_t s = 0; s < m.segs.size(); ++s)
    for (long i = m.segs[s].first; i <= m.segs[s].second; ++i)
      slots[i].push_back(s);
  return slots;
}

}  // namespace

GradedMaps canonical_matrices(const Multisegment& m) {
  Multisegment sorted = m;
  sorted.normalize();
  sorted.validate();
  GradedDims g = sorted.support();
  auto slots = grade_slots(sorted);
  GradedMaps maps;
  for (const auto& run : g.runs())
    for (size_t k = 0; k + 1 < run.size(); ++k) {
      long i = run[k];
      QMat x = QMat::zero(g.dim_at(i + 1), g.dim_at(i));
      const auto& from = slots[i];
      const auto& to = slots[i + 1];
      for (size_t col = 0; col < from.size(); ++col) {
        size_t seg = from[col];
        if (sorted.segs[seg].second < i + 1) continue;
        size_t row = std::find(to.begin(), to.end(), seg) - to.begin();
        x.at(row, col) = 1;
      }
      maps[i] = std::move(x);
    }
  return maps;
}

Multisegment multisegment_from_matrices(const GradedDims& g, const GradedMaps& x) {
  g.validate();
  for (const auto& [i, mat] : x) {
    if (mat.rows != g.dim_at(i + 1) || mat.cols != g.dim_at(i))
      throw ShapeMismatch("map at grade " + std::to_string(i) +
                          " has shape inconsistent with the graded dimensions");
  }
  // Composite ranks within each run.
  std::map<std::pair<long, long>, long> rank;
  for (const auto& run : g.runs()) {
    for (size_t s = 0; s < run.size(); ++s) {
      long i = run[s];
      rank[{i, i}] = g.dim_at(i);
      QMat acc;
      for (size_t t = s; t + 1 < run.size(); ++t) {
        long j = run[t];
        auto it = x.find(j);
        if (it == x.end())
          throw ShapeMismatch("missing map at grade " + std::to_string(j));
        acc = (t == s) ? it->second : qmat_mul(it->second, acc);
        rank[{i, run[t + 1]}] = acc.rank();
      }
    }
  }
  auto r = [&](long i, long j) {
    auto it = rank.find({i, j});
    return it == rank.end() ? 0L : it->second;
  };
  Multisegment m;
  for (const auto& run : g.runs())
    for (size_t s = 0; s < run.size(); ++s)
      for (size_t t = s; t < run.size(); ++t) {
        long i = run[s], j = run[t];
        long mult = r(i, j) - r(i - 1, j) - r(i, j + 1) + r(i - 1, j + 1);
        if (mult < 0)
          throw Error("internal: negative multiplicity in rank inversion");
        for (long c = 0; c < mult; ++c) m.segs.emplace_back(i, j);
      }
  m.normalize();
  if (!(m.support() == g))
    throw Error("internal: recovered multisegment has wrong support");
  return m;
}

long orbit_dimension(const Multisegment& m) {
  Multisegment sorted = m;
  sorted.normalize();
  GradedDims g = sorted.support();
  GradedMaps x = canonical_matrices(sorted);

  // Index the domain (one gl(d_i) per grade) and the codomain (one Hom per
  // consecutive pair).
  std::vector<long> grades;
  for (const auto& [i, d] : g.dims) {
    (void)d;
    grades.push_back(i);
  }
  std::map<long, long> dom_offset;
  long dom_dim = 0;
  for (long i : grades) {
    dom_offset[i] = dom_dim;
    dom_dim += g.dim_at(i) * g.dim_at(i);
  }
  std::map<long, long> cod_offset;
  long cod_dim = 0;
  for (const auto& [i, mat] : x) {
    cod_offset[i] = cod_dim;
    cod_dim += mat.rows * mat.cols;
  }
  QMat big = QMat::zero(cod_dim, dom_dim);
  for (long k : grades) {
    const long dk = g.dim_at(k);
    for (long p = 0; p < dk; ++p)
      for (long q = 0; q < dk; ++q) {
        long col = dom_offset[k] + p * dk + q;
        // h_k acts on the incoming edge by left multiplication...
        if (auto it = x.find(k - 1); it != x.end()) {
          const QMat& xin = it->second;
          for (long c = 0; c < xin.cols; ++c)
            big.at(cod_offset[k - 1] + p * xin.cols + c, col) += xin.at(q, c);
        }
        // ...and on the outgoing edge by right multiplication, negated.
        if (auto it = x.find(k); it != x.end()) {
          const QMat& xout = it->second;
          for (long r = 0; r < xout.rows; ++r)
            big.at(cod_offset[k] + r * xout.cols + q, col) -= xout.at(r, p);
        }
      }
  }
  return big.rank();
}

bool closure_leq(const Multisegment& m1, const Multisegment& m2) {
  if (!(m1.support() == m2.support()))
    throw SupportMismatch("closure comparison needs equal support");
  RankMatrix r1 = rank_invariants(m1);
  RankMatrix r2 = rank_invariants(m2);
  for (const auto& [key, v] : r1.r)
    if (v > r2.at(key.first, key.second)) return false;
  return true;
}

RatVec infchar_of_multisegment(const Multisegment& m, const Rat& shift) {
  m.validate();
  RatVec out;
  for (const auto& [a, b] : m.segs)
    for (long i = a; i <= b; ++i) out.push_back(Rat(i) + shift);
  std::sort(out.begin(), out.end(), [](const Rat& x, const Rat& y) { return x > y; });
  return out;
}

std::vector<GradedClass> graded_from_values(const RatVec& values) {
  std::map<Rat, GradedDims> classes;
  for (const Rat& v : values) {
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), v.get_num().get_mpz_t(), v.get_den().get_mpz_t());
    Rat frac = v - Rat(fl);
    classes[frac].dims[fl.get_si()] += 1;
  }
  std::vector<GradedClass> out;
  for (auto& [shift, dims] : classes) out.push_back({shift, std::move(dims)});
  return out;
}

}  // namespace fpp
