#pragma once

#include <map>
#include <optional>
#include <span>
#include <vector>

#include "cumulant/scalar.hpp"

namespace cumulant::linalg {

using SparseRow = std::map<int, Scalar>;

/// Row-major sparse matrix over Q.
struct Matrix {
  int rows = 0;
  int cols = 0;
  std::vector<SparseRow> data;

  Matrix() = default;
  Matrix(int r, int c) : rows(r), cols(c), data(r) {}

  void set(int r, int c, const Scalar& v);
  Scalar get(int r, int c) const;
};

/// Reduced row echelon form by exact Gauss-Jordan elimination. Returns the
/// pivot column of each nonzero row.
std::vector<int> row_reduce(Matrix& m);

int rank(Matrix m);

/// Some x with a x = b (free variables set to zero), or nullopt if inconsistent.
std::optional<std::vector<Scalar>> solve(const Matrix& a, std::span<const Scalar> b);

/// Inverse of a square matrix, or nullopt if singular.
std::optional<Matrix> inverse(const Matrix& m);

}  // namespace cumulant::linalg
