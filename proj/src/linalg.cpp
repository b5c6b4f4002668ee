#include "cumulant/linalg.hpp"

#include "cumulant/errors.hpp"

namespace cumulant::linalg {

void Matrix::set(int r, int c, const Scalar& v) {
  if (r < 0 || r >= rows || c < 0 || c >= cols) throw MismatchError("matrix index out of range");
  if (sgn(v) == 0) {
    data[r].erase(c);
  } else {
    data[r][c] = v;
  }
}

Scalar Matrix::get(int r, int c) const {
  auto it = data.at(r).find(c);
  return it == data[r].end() ? Scalar(0) : it->second;
}

namespace {

// row -= factor * pivot_row
void eliminate(SparseRow& row, const SparseRow& pivot_row, const Scalar& factor) {
  for (const auto& [c, v] : pivot_row) {
    auto [it, inserted] = row.try_emplace(c, -factor * v);
    if (!inserted) {
      it->second -= factor * v;
      if (sgn(it->second) == 0) row.erase(it);
    }
  }
}

}  // namespace

std::vector<int> row_reduce(Matrix& m) {
  std::vector<int> pivots;
  int next = 0;
  for (int col = 0; col < m.cols && next < m.rows; ++col) {
    // Sparsest row with a nonzero in this column keeps fill-in down.
    int best = -1;
    for (int r = next; r < m.rows; ++r) {
      if (m.data[r].count(col) && (best < 0 || m.data[r].size() < m.data[best].size())) best = r;
    }
    if (best < 0) continue;
    std::swap(m.data[next], m.data[best]);
    SparseRow& pivot = m.data[next];
    const Scalar inv = 1 / pivot.at(col);
    for (auto& [c, v] : pivot) v *= inv;
    for (int r = 0; r < m.rows; ++r) {
      if (r == next) continue;
      auto it = m.data[r].find(col);
      if (it == m.data[r].end()) continue;
      const Scalar factor = it->second;
      eliminate(m.data[r], pivot, factor);
    }
    pivots.push_back(col);
    ++next;
  }
  return pivots;
}

int rank(Matrix m) { return static_cast<int>(row_reduce(m).size()); }

std::optional<std::vector<Scalar>> solve(const Matrix& a, std::span<const Scalar> b) {
  if (static_cast<int>(b.size()) != a.rows) throw MismatchError("solve: right-hand side has wrong length");
  Matrix augmented(a.rows, a.cols + 1);
  for (int r = 0; r < a.rows; ++r) {
    augmented.data[r] = a.data[r];
    if (sgn(b[r]) != 0) augmented.data[r][a.cols] = b[r];
  }
  const auto pivots = row_reduce(augmented);
  std::vector<Scalar> x(a.cols, Scalar(0));
  for (std::size_t i = 0; i < pivots.size(); ++i) {
    if (pivots[i] == a.cols) return std::nullopt;
    x[pivots[i]] = augmented.get(static_cast<int>(i), a.cols);
  }
  return x;
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (m.rows != m.cols) throw MismatchError("inverse: matrix is not square");
  const int n = m.rows;
  if (n == 0) return Matrix(0, 0);
  Matrix augmented(n, 2 * n);
  for (int r = 0; r < n; ++r) {
    augmented.data[r] = m.data[r];
    augmented.data[r][n + r] = 1;
  }
  const auto pivots = row_reduce(augmented);
  if (static_cast<int>(pivots.size()) < n || pivots[n - 1] >= n) return std::nullopt;
  Matrix out(n, n);
  for (int r = 0; r < n; ++r) {
    for (const auto& [c, v] : augmented.data[r]) {
      if (c >= n) out.data[r][c - n] = v;
    }
  }
  return out;
}

}  // namespace cumulant::linalg
