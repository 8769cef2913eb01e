#include "cayley/linalg.hpp"

#include <stdexcept>

namespace cayley {

std::vector<size_t> rref(Mat& m) {
  std::vector<size_t> pivots;
  if (m.empty()) return pivots;
  size_t rows = m.size(), cols = m[0].size();
  size_t r = 0;
  for (size_t c = 0; c < cols && r < rows; ++c) {
    size_t sel = r;
    while (sel < rows && m[sel][c].is_zero()) ++sel;
    if (sel == rows) continue;
    std::swap(m[sel], m[r]);
    Rational inv = m[r][c].inverse();
    for (size_t j = c; j < cols; ++j) m[r][j] *= inv;
    for (size_t i = 0; i < rows; ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      Rational f = m[i][c];
      for (size_t j = c; j < cols; ++j) m[i][j] -= f * m[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

size_t rank(Mat m) { return rref(m).size(); }

std::vector<Vec> nullspace(const Mat& m, size_t cols) {
  Mat a = m;
  for (auto& row : a)
    if (row.size() != cols) throw std::invalid_argument("nullspace: ragged matrix");
  std::vector<size_t> pivots = rref(a);
  std::vector<bool> is_pivot(cols, false);
  for (size_t c : pivots) is_pivot[c] = true;
  std::vector<Vec> basis;
  for (size_t free_c = 0; free_c < cols; ++free_c) {
    if (is_pivot[free_c]) continue;
    Vec v(cols, Rational(0));
    v[free_c] = Rational(1);
    for (size_t i = 0; i < pivots.size(); ++i) {
      if (pivots[i] < cols && i < a.size()) v[pivots[i]] = -a[i][free_c];
    }
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<Vec> solve(const Mat& a, const Vec& b, bool* rank_deficient) {
  size_t rows = a.size();
  if (rows != b.size()) throw std::invalid_argument("solve: size mismatch");
  size_t cols = rows ? a[0].size() : 0;
  Mat aug = a;
  for (size_t i = 0; i < rows; ++i) aug[i].push_back(b[i]);
  std::vector<size_t> pivots = rref(aug);
  if (rank_deficient) *rank_deficient = false;
  Vec x(cols, Rational(0));
  for (size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] == cols) return std::nullopt;  // pivot in augmented column
    x[pivots[i]] = aug[i][cols];
  }
  size_t pivot_count = 0;
  for (size_t c : pivots)
    if (c < cols) ++pivot_count;
  if (pivot_count < cols && rank_deficient) *rank_deficient = true;
  return x;
}

std::optional<Mat> invert(const Mat& m) {
  size_t n = m.size();
  Mat aug = m;
  for (size_t i = 0; i < n; ++i) {
    if (aug[i].size() != n) throw std::invalid_argument("invert: not square");
    for (size_t j = 0; j < n; ++j) aug[i].push_back(Rational(i == j ? 1 : 0));
  }
  std::vector<size_t> pivots = rref(aug);
  if (pivots.size() != n) return std::nullopt;
  for (size_t i = 0; i < n; ++i) {
    if (pivots[i] != i) return std::nullopt;
  }
  Mat inv(n, Vec(n));
  for (size_t i = 0; i < n; ++i)
    for (size_t j = 0; j < n; ++j) inv[i][j] = aug[i][n + j];
  return inv;
}

Mat mat_mul(const Mat& a, const Mat& b) {
  size_t n = a.size(), k = b.size();
  size_t m = k ? b[0].size() : 0;
  Mat c(n, Vec(m, Rational(0)));
  for (size_t i = 0; i < n; ++i) {
    if (a[i].size() != k) throw std::invalid_argument("mat_mul: size mismatch");
    for (size_t l = 0; l < k; ++l) {
      if (a[i][l].is_zero()) continue;
      for (size_t j = 0; j < m; ++j) c[i][j] += a[i][l] * b[l][j];
    }
  }
  return c;
}

bool same_row_span(Mat a, Mat b) {
  std::vector<size_t> pa = rref(a), pb = rref(b);
  if (pa.size() != pb.size() || pa != pb) return false;
  for (size_t i = 0; i < pa.size(); ++i)
    if (a[i] != b[i]) return false;
  return true;
}

}  // namespace cayley
