#include "aag/linalg.hpp"

#include <utility>

namespace aag {
namespace {

// Row echelon form in place. Pivot choice: among the nonzero candidates of
// the current column, take the entry of smallest bit size. Any nonzero pivot
// is correct in exact arithmetic; small pivots limit coefficient growth.
// Returns the pivot column of each eliminated row, in elimination order.
std::vector<Index> echelonize(MatQ& m) {
  const Index rows = m.rows();
  const Index cols = m.cols();
  std::vector<Index> pivot_cols;
  Index row = 0;
  for (Index col = 0; col < cols && row < rows; ++col) {
    Index best = -1;
    std::size_t best_bits = 0;
    for (Index r = row; r < rows; ++r) {
      if (m(r, col) == 0) continue;
      const std::size_t bits = bit_size(m(r, col));
      if (best < 0 || bits < best_bits) {
        best = r;
        best_bits = bits;
      }
    }
    if (best < 0) continue;
    if (best != row) m.row(best).swap(m.row(row));
    const Rational pivot = m(row, col);
    for (Index r = row + 1; r < rows; ++r) {
      if (m(r, col) == 0) continue;
      const Rational factor = m(r, col) / pivot;
      m(r, col) = 0;
      for (Index c = col + 1; c < cols; ++c) {
        if (m(row, c) != 0) m(r, c) -= factor * m(row, c);
      }
    }
    pivot_cols.push_back(col);
    ++row;
  }
  return pivot_cols;
}

}  // namespace

Index rank(const MatQ& a) {
  MatQ m = a;
  return static_cast<Index>(echelonize(m).size());
}

Rational determinant(const MatQ& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("determinant of non-square matrix");
  MatQ m = a;
  const Index n = m.rows();
  Rational det = 1;
  for (Index col = 0; col < n; ++col) {
    Index best = -1;
    std::size_t best_bits = 0;
    for (Index r = col; r < n; ++r) {
      if (m(r, col) == 0) continue;
      const std::size_t bits = bit_size(m(r, col));
      if (best < 0 || bits < best_bits) {
        best = r;
        best_bits = bits;
      }
    }
    if (best < 0) return Rational(0);
    if (best != col) {
      m.row(best).swap(m.row(col));
      det = -det;
    }
    const Rational pivot = m(col, col);
    det *= pivot;
    for (Index r = col + 1; r < n; ++r) {
      if (m(r, col) == 0) continue;
      const Rational factor = m(r, col) / pivot;
      for (Index c = col + 1; c < n; ++c) {
        if (m(col, c) != 0) m(r, c) -= factor * m(col, c);
      }
    }
  }
  return det;
}

MatQ inverse(const MatQ& a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("inverse of non-square matrix");
  const Index n = a.rows();
  // Gauss-Jordan on [a | I].
  MatQ m(n, 2 * n);
  m.leftCols(n) = a;
  m.rightCols(n) = MatQ::Identity(n, n);
  for (Index col = 0; col < n; ++col) {
    Index best = -1;
    std::size_t best_bits = 0;
    for (Index r = col; r < n; ++r) {
      if (m(r, col) == 0) continue;
      const std::size_t bits = bit_size(m(r, col));
      if (best < 0 || bits < best_bits) {
        best = r;
        best_bits = bits;
      }
    }
    if (best < 0) throw SingularMatrixError();
    if (best != col) m.row(best).swap(m.row(col));
    const Rational pivot = m(col, col);
    if (pivot != 1) m.row(col) /= pivot;
    for (Index r = 0; r < n; ++r) {
      if (r == col || m(r, col) == 0) continue;
      const Rational factor = m(r, col);
      m.row(r) -= factor * m.row(col);
    }
  }
  return m.rightCols(n);
}

SolveResult solve(const MatQ& a, const VecQ& b) {
  if (a.rows() != b.size()) throw std::invalid_argument("solve: right-hand side length mismatch");
  const Index rows = a.rows();
  const Index cols = a.cols();

  MatQ aug(rows, cols + 1);
  aug.leftCols(cols) = a;
  aug.col(cols) = b;
  const std::vector<Index> pivots = echelonize(aug);

  // A pivot in the augmented column means no solution.
  for (const Index col : pivots) {
    if (col == cols) return SolveResult{};
  }

  // Back substitution on the echelon form: free columns set to zero.
  VecQ x = VecQ::Zero(cols);
  for (Index i = static_cast<Index>(pivots.size()) - 1; i >= 0; --i) {
    const Index pc = pivots[static_cast<std::size_t>(i)];
    Rational rhs = aug(i, cols);
    for (Index c = pc + 1; c < cols; ++c) {
      if (aug(i, c) != 0) rhs -= aug(i, c) * x[c];
    }
    x[pc] = rhs / aug(i, pc);
  }

  SolveResult result;
  result.particular = std::move(x);

  if (static_cast<Index>(pivots.size()) == cols) {
    result.kind = SolveResult::Kind::Unique;
  } else {
    result.kind = SolveResult::Kind::Affine;
    std::vector<bool> is_pivot(static_cast<std::size_t>(cols), false);
    for (const Index col : pivots) is_pivot[static_cast<std::size_t>(col)] = true;
    for (Index free = 0; free < cols; ++free) {
      if (is_pivot[static_cast<std::size_t>(free)]) continue;
      VecQ k = VecQ::Zero(cols);
      k[free] = 1;
      for (Index i = static_cast<Index>(pivots.size()) - 1; i >= 0; --i) {
        const Index pc = pivots[static_cast<std::size_t>(i)];
        if (pc > free) continue;
        Rational rhs = 0;
        for (Index c = pc + 1; c < cols; ++c) {
          if (aug(i, c) != 0) rhs -= aug(i, c) * k[c];
        }
        k[pc] = rhs / aug(i, pc);
      }
      result.kernel_basis.push_back(std::move(k));
    }
  }

  // Exact self-check before returning.
  if (!((a * result.particular).array() == b.array()).all())
    throw std::logic_error("solve: back-substitution check failed");
  for (const VecQ& k : result.kernel_basis) {
    if (!((a * k).array() == 0).all())
      throw std::logic_error("solve: kernel vector check failed");
  }

  return result;
}

}  // namespace aag
