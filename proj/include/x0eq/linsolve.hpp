#pragma once

#include <vector>

#include "x0eq/numutil.hpp"

namespace x0eq {

// Dense exact rational matrix, row major.
struct QMatrix {
  size_t rows = 0, cols = 0;
  std::vector<Rat> a;

  QMatrix() = default;
  QMatrix(size_t r, size_t c) : rows(r), cols(c), a(r * c, Rat(0)) {}
  Rat& at(size_t r, size_t c) { return a[r * cols + c]; }
  const Rat& at(size_t r, size_t c) const { return a[r * cols + c]; }
};

enum class SolveStatus { kUnique, kInconsistent, kUnderdetermined };

// Exact Gaussian elimination on A x = b (A may have more rows than columns).
// On kUnique, x holds the solution and every extra row was verified
// consistent.
SolveStatus solve_exact(QMatrix A, std::vector<Rat> b, std::vector<Rat>& x);

// Inverse of a square matrix; throws std::domain_error if singular.
QMatrix invert_exact(const QMatrix& A);

std::vector<Rat> mat_vec(const QMatrix& A, const std::vector<Rat>& v);

}  // namespace x0eq
