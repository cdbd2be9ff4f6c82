#include "x0eq/linsolve.hpp"

#include <stdexcept>

namespace x0eq {

SolveStatus solve_exact(QMatrix A, std::vector<Rat> b, std::vector<Rat>& x) {
  if (b.size() != A.rows)
    throw std::invalid_argument("solve_exact: dimension mismatch");
  const size_t m = A.rows, n = A.cols;
  std::vector<size_t> pivot_row(n, SIZE_MAX);
  size_t rank = 0;
  for (size_t col = 0; col < n && rank < m; ++col) {
    size_t pr = SIZE_MAX;
    for (size_t r = rank; r < m; ++r)
      if (A.at(r, col) != 0) {
        pr = r;
        break;
      }
    if (pr == SIZE_MAX) continue;
    if (pr != rank) {
      for (size_t c = col; c < n; ++c) std::swap(A.at(pr, c), A.at(rank, c));
      std::swap(b[pr], b[rank]);
    }
    Rat inv_p = Rat(1) / A.at(rank, col);
    for (size_t r = rank + 1; r < m; ++r) {
      if (A.at(r, col) == 0) continue;
      Rat f = A.at(r, col) * inv_p;
      A.at(r, col) = 0;
      for (size_t c = col + 1; c < n; ++c)
        if (A.at(rank, c) != 0) A.at(r, c) -= f * A.at(rank, c);
      b[r] -= f * b[rank];
    }
    pivot_row[col] = rank;
    ++rank;
  }
  for (size_t r = rank; r < m; ++r)
    if (b[r] != 0) return SolveStatus::kInconsistent;
  for (size_t c = 0; c < n; ++c)
    if (pivot_row[c] == SIZE_MAX) return SolveStatus::kUnderdetermined;
  x.assign(n, Rat(0));
  for (size_t c = n; c-- > 0;) {
    size_t r = pivot_row[c];
    Rat acc = b[r];
    for (size_t c2 = c + 1; c2 < n; ++c2)
      if (A.at(r, c2) != 0) acc -= A.at(r, c2) * x[c2];
    x[c] = acc / A.at(r, c);
  }
  return SolveStatus::kUnique;
}

QMatrix invert_exact(const QMatrix& A) {
  if (A.rows != A.cols)
    throw std::invalid_argument("invert_exact: matrix not square");
  const size_t n = A.rows;
  QMatrix W(n, 2 * n);
  for (size_t r = 0; r < n; ++r) {
    for (size_t c = 0; c < n; ++c) W.at(r, c) = A.at(r, c);
    W.at(r, n + r) = 1;
  }
  for (size_t col = 0; col < n; ++col) {
    size_t pr = SIZE_MAX;
    for (size_t r = col; r < n; ++r)
      if (W.at(r, col) != 0) {
        pr = r;
        break;
      }
    if (pr == SIZE_MAX)
      throw std::domain_error("invert_exact: singular matrix");
    if (pr != col)
      for (size_t c = 0; c < 2 * n; ++c) std::swap(W.at(pr, c), W.at(col, c));
    Rat inv_p = Rat(1) / W.at(col, col);
    for (size_t c = 0; c < 2 * n; ++c) W.at(col, c) *= inv_p;
    for (size_t r = 0; r < n; ++r) {
      if (r == col || W.at(r, col) == 0) continue;
      Rat f = W.at(r, col);
      for (size_t c = col; c < 2 * n; ++c) W.at(r, c) -= f * W.at(col, c);
    }
  }
  QMatrix inv(n, n);
  for (size_t r = 0; r < n; ++r)
    for (size_t c = 0; c < n; ++c) inv.at(r, c) = W.at(r, n + c);
  return inv;
}

std::vector<Rat> mat_vec(const QMatrix& A, const std::vector<Rat>& v) {
  if (v.size() != A.cols)
    throw std::invalid_argument("mat_vec: dimension mismatch");
  std::vector<Rat> out(A.rows, Rat(0));
  for (size_t r = 0; r < A.rows; ++r)
    for (size_t c = 0; c < A.cols; ++c)
      if (A.at(r, c) != 0 && v[c] != 0) out[r] += A.at(r, c) * v[c];
  return out;
}

}  // namespace x0eq
