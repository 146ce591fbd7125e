#include "ddca/linalg.hpp"

#include <stdexcept>

namespace ddca {

Rref rref(RatMatrix m) {
  Rref r;
  int rows = static_cast<int>(m.size());
  int cols = rows ? static_cast<int>(m[0].size()) : 0;
  int row = 0;
  for (int col = 0; col < cols && row < rows; ++col) {
    int piv = -1;
    for (int i = row; i < rows; ++i)
      if (m[i][col] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[piv], m[row]);
    Rat inv = 1 / m[row][col];
    for (int j = col; j < cols; ++j) m[row][j] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == row || m[i][col] == 0) continue;
      Rat f = m[i][col];
      for (int j = col; j < cols; ++j)
        if (m[row][j] != 0) m[i][j] -= f * m[row][j];
    }
    r.pivots.push_back(col);
    ++row;
  }
  r.rank = row;
  r.m = std::move(m);
  return r;
}

int rank(const RatMatrix& m) { return rref(m).rank; }

RatMatrix nullspace(const RatMatrix& m, int cols) {
  Rref r = rref(m);
  std::vector<bool> is_pivot(cols, false);
  for (int p : r.pivots) is_pivot[p] = true;
  RatMatrix basis;
  for (int f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    RatVec v(cols, Rat(0));
    v[f] = 1;
    for (int i = 0; i < r.rank; ++i) v[r.pivots[i]] = -r.m[i][f];
    basis.push_back(std::move(v));
  }
  return basis;
}

LinearSolution solve_linear_exact(const RatMatrix& a, const RatVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("shape mismatch: rows vs right-hand side");
  int cols = a.empty() ? 0 : static_cast<int>(a[0].size());
  RatMatrix aug = a;
  for (std::size_t i = 0; i < aug.size(); ++i) {
    if (static_cast<int>(aug[i].size()) != cols) throw std::invalid_argument("ragged matrix");
    aug[i].push_back(b[i]);
  }
  Rref r = rref(aug);
  LinearSolution sol;
  bool consistent = r.pivots.empty() || r.pivots.back() < cols;
  sol.rank = consistent ? r.rank : r.rank - 1;
  if (consistent) {
    RatVec x(cols, Rat(0));
    for (int i = 0; i < r.rank; ++i) x[r.pivots[i]] = r.m[i][cols];
    sol.particular = std::move(x);
  }
  sol.kernel = nullspace(a, cols);
  return sol;
}

std::optional<PolyVec> solve_poly_rhs(const RatMatrix& a, const PolyVec& b) {
  if (a.size() != b.size()) throw std::invalid_argument("shape mismatch: rows vs right-hand side");
  int rows = static_cast<int>(a.size());
  int cols = rows ? static_cast<int>(a[0].size()) : 0;
  RatMatrix m = a;
  PolyVec rhs = b;
  int row = 0;
  std::vector<int> pivots;
  for (int col = 0; col < cols && row < rows; ++col) {
    int piv = -1;
    for (int i = row; i < rows; ++i)
      if (m[i][col] != 0) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    std::swap(m[piv], m[row]);
    std::swap(rhs[piv], rhs[row]);
    Rat inv = 1 / m[row][col];
    for (int j = col; j < cols; ++j) m[row][j] *= inv;
    rhs[row] *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == row || m[i][col] == 0) continue;
      Rat f = m[i][col];
      for (int j = col; j < cols; ++j)
        if (m[row][j] != 0) m[i][j] -= f * m[row][j];
      rhs[i] -= rhs[row] * f;
    }
    pivots.push_back(col);
    ++row;
  }
  for (int i = row; i < rows; ++i)
    if (!rhs[i].is_zero()) return std::nullopt;
  PolyVec x(cols);
  for (int i = 0; i < row; ++i) x[pivots[i]] = rhs[i];
  return x;
}

BareissResult bareiss(PolyMatrix m) {
  BareissResult res;
  int rows = static_cast<int>(m.size());
  int cols = rows ? static_cast<int>(m[0].size()) : 0;
  ParamPoly prev(1L);
  int row = 0;
  int sign = 1;
  for (int col = 0; col < cols && row < rows; ++col) {
    int piv = -1;
    for (int i = row; i < rows; ++i)
      if (!m[i][col].is_zero()) {
        piv = i;
        break;
      }
    if (piv < 0) continue;
    if (piv != row) {
      std::swap(m[piv], m[row]);
      sign = -sign;
    }
    for (int i = row + 1; i < rows; ++i) {
      for (int j = col + 1; j < cols; ++j)
        m[i][j] = (m[row][col] * m[i][j] - m[i][col] * m[row][j]).divexact(prev);
      m[i][col] = ParamPoly();
    }
    prev = m[row][col];
    ++row;
  }
  res.rank = row;
  if (rows == cols) res.det = row == rows ? (sign > 0 ? prev : -prev) : ParamPoly();
  res.m = std::move(m);
  return res;
}

int rank(const PolyMatrix& m) { return bareiss(m).rank; }

ParamPoly determinant(const PolyMatrix& m) {
  if (m.empty()) return ParamPoly(1L);
  if (m.size() != m[0].size()) throw std::invalid_argument("determinant of a non-square matrix");
  return bareiss(m).det;
}

ParamPoly determinant_laplace(const PolyMatrix& m) {
  std::size_t n = m.size();
  if (n == 0) return ParamPoly(1L);
  if (n == 1) return m[0][0];
  ParamPoly total;
  for (std::size_t j = 0; j < n; ++j) {
    if (m[0][j].is_zero()) continue;
    PolyMatrix minor;
    for (std::size_t i = 1; i < n; ++i) {
      PolyVec r;
      for (std::size_t c = 0; c < n; ++c)
        if (c != j) r.push_back(m[i][c]);
      minor.push_back(std::move(r));
    }
    ParamPoly term = m[0][j] * determinant_laplace(minor);
    if (j % 2) total -= term; else total += term;
  }
  return total;
}

PolyVec maximal_minors(const PolyMatrix& m) {
  std::size_t k = m.size();
  std::size_t cols = k ? m[0].size() : 0;
  PolyVec out;
  if (k > cols) return out;
  std::vector<std::size_t> pick(k);
  for (std::size_t i = 0; i < k; ++i) pick[i] = i;
  for (;;) {
    PolyMatrix sub(k, PolyVec(k));
    for (std::size_t i = 0; i < k; ++i)
      for (std::size_t j = 0; j < k; ++j) sub[i][j] = m[i][pick[j]];
    out.push_back(determinant(sub));
    int i = static_cast<int>(k) - 1;
    while (i >= 0 && pick[i] == cols - k + i) --i;
    if (i < 0) break;
    ++pick[i];
    for (std::size_t j = i + 1; j < k; ++j) pick[j] = pick[j - 1] + 1;
  }
  return out;
}

}  // namespace ddca
