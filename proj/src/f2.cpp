#include "fpp/f2.hpp"

#include "fpp/errors.hpp"

namespace fpp {

namespace {

// Bit-packed matrix over F_2, row major, at most 8x8.
struct F2Mat {
  int rows = 0, cols = 0;
  uint64_t bits = 0;

  bool get(int r, int c) const { return (bits >> (r * cols + c)) & 1; }
  void set(int r, int c, bool v) {
    uint64_t m = 1ULL << (r * cols + c);
    bits = v ? (bits | m) : (bits & ~m);
  }
};

F2Mat f2_mul(const F2Mat& a, const F2Mat& b) {
  F2Mat c;
  c.rows = a.rows;
  c.cols = b.cols;
  for (int i = 0; i < a.rows; ++i)
    for (int j = 0; j < b.cols; ++j) {
      bool acc = false;
      for (int k = 0; k < a.cols; ++k) acc ^= (a.get(i, k) && b.get(k, j));
      c.set(i, j, acc);
    }
  return c;
}

bool f2_invert(const F2Mat& a, F2Mat* inv) {
  int n = a.rows;
  F2Mat w = a;
  F2Mat id;
  id.rows = id.cols = n;
  for (int i = 0; i < n; ++i) id.set(i, i, true);
  for (int col = 0; col < n; ++col) {
    int pivot = -1;
    for (int r = col; r < n; ++r)
      if (w.get(r, col)) {
        pivot = r;
        break;
      }
    if (pivot < 0) return false;
    if (pivot != col)
      for (int c = 0; c < n; ++c) {
        bool t = w.get(pivot, c);
        w.set(pivot, c, w.get(col, c));
        w.set(col, c, t);
        t = id.get(pivot, c);
        id.set(pivot, c, id.get(col, c));
        id.set(col, c, t);
      }
    for (int r = 0; r < n; ++r) {
      if (r == col || !w.get(r, col)) continue;
      for (int c = 0; c < n; ++c) {
        w.set(r, c, w.get(r, c) ^ w.get(col, c));
        id.set(r, c, id.get(r, c) ^ id.get(col, c));
      }
    }
  }
  *inv = id;
  return true;
}

std::vector<std::pair<F2Mat, F2Mat>> enumerate_gl(int n) {
  std::vector<std::pair<F2Mat, F2Mat>> out;
  const uint64_t count = 1ULL << (n * n);
  for (uint64_t bits = 0; bits < count; ++bits) {
    F2Mat m;
    m.rows = m.cols = n;
    m.bits = bits;
    F2Mat inv;
    if (f2_invert(m, &inv)) out.emplace_back(m, inv);
  }
  return out;
}

struct F2Problem {
  std::vector<long> grades;               // grades in order
  std::vector<int> dims;                  // per grade
  std::vector<int> edge_from;             // index into grades, edge k: grades[e]..+1
  std::vector<int> edge_bits;             // bits per edge matrix
  std::vector<int> edge_shift;            // bit offset of edge in the packed point
  long point_bits = 0;
  std::vector<std::vector<std::pair<F2Mat, F2Mat>>> gl;  // per grade
  std::vector<size_t> group_sel;          // mixed-radix sizes per grade

  explicit F2Problem(const GradedDims& g) {
    g.validate();
    for (const auto& [i, d] : g.dims) {
      if (d > 8) throw TooLarge("graded dimension too large for the F_2 oracle");
      grades.push_back(i);
      dims.push_back(static_cast<int>(d));
    }
    for (size_t e = 0; e + 1 < grades.size(); ++e) {
      if (grades[e] + 1 != grades[e + 1]) continue;
      edge_from.push_back(static_cast<int>(e));
      int bits = dims[e] * dims[e + 1];
      edge_bits.push_back(bits);
      edge_shift.push_back(static_cast<int>(point_bits));
      point_bits += bits;
    }
    if (point_bits > kMaxF2PointBits)
      throw TooLarge("F_2 point space too large to enumerate");
    unsigned long long group = 1;
    for (int d : dims) {
      unsigned long long order = 1;  // |GL(d, 2)| = prod (2^d - 2^i)
      for (int i = 0; i < d; ++i) order *= (1ULL << d) - (1ULL << i);
      group *= order;
      if (group > kMaxF2GroupSize)
        throw TooLarge("F_2 symmetry group too large to enumerate");
    }
    for (int d : dims) {
      gl.push_back(enumerate_gl(d));
      group_sel.push_back(gl.back().size());
    }
  }

  std::vector<F2Mat> decode(uint64_t key) const {
    std::vector<F2Mat> x(edge_from.size());
    for (size_t k = 0; k < edge_from.size(); ++k) {
      int e = edge_from[k];
      x[k].rows = dims[e + 1];
      x[k].cols = dims[e];
      x[k].bits = (key >> edge_shift[k]) & ((1ULL << edge_bits[k]) - 1);
    }
    return x;
  }

  uint64_t encode(const std::vector<F2Mat>& x) const {
    uint64_t key = 0;
    for (size_t k = 0; k < x.size(); ++k) key |= x[k].bits << edge_shift[k];
    return key;
  }

  // Least key in the orbit of the point.
  uint64_t orbit_min(uint64_t key) const {
    std::vector<F2Mat> x = decode(key);
    uint64_t best = key;
    std::vector<size_t> sel(dims.size(), 0);
    for (;;) {
      uint64_t cand = 0;
      for (size_t k = 0; k < x.size(); ++k) {
        int e = edge_from[k];
        F2Mat moved = f2_mul(f2_mul(gl[e + 1][sel[e + 1]].first, x[k]),
                             gl[e][sel[e]].second);
        cand |= moved.bits << edge_shift[k];
      }
      if (cand < best) best = cand;
      size_t i = 0;
      while (i < sel.size()) {
        if (++sel[i] < group_sel[i]) break;
        sel[i] = 0;
        ++i;
      }
      if (i == sel.size()) break;
    }
    return best;
  }
};

}  // namespace

long orbit_count_f2_serial(const GradedDims& g) {
  F2Problem problem(g);
  const uint64_t points = 1ULL << problem.point_bits;
  long count = 0;
  for (uint64_t key = 0; key < points; ++key)
    if (problem.orbit_min(key) == key) ++count;
  return count;
}

long orbit_count_f2(const GradedDims& g) {
  F2Problem problem(g);
  const long points = 1L << problem.point_bits;
  long count = 0;
#pragma omp parallel for schedule(dynamic, 16) reduction(+ : count)
  for (long key = 0; key < points; ++key)
    if (problem.orbit_min(static_cast<uint64_t>(key)) == static_cast<uint64_t>(key))
      ++count;
  return count;
}

}  // namespace fpp
