#pragma once

#include <vector>

#include "aag/rational.hpp"

namespace aag {

/// Classification of an exact linear system a x = b.
struct SolveResult {
  enum class Kind { Unique, Affine, Inconsistent };

  Kind kind = Kind::Inconsistent;
  /// One exact solution (Unique and Affine).
  VecQ particular;
  /// Basis of the solution space of a x = 0 (Affine only, nonempty there).
  std::vector<VecQ> kernel_basis;

  bool unique() const { return kind == Kind::Unique; }
  bool inconsistent() const { return kind == Kind::Inconsistent; }
};

struct SingularMatrixError : std::domain_error {
  SingularMatrixError() : std::domain_error("matrix is singular") {}
};

/// Exact row rank via Gaussian elimination.
Index rank(const MatQ& a);

/// Exact inverse; throws SingularMatrixError when no inverse exists.
MatQ inverse(const MatQ& a);

/// Exact determinant via elimination (product of pivots, sign-tracked).
Rational determinant(const MatQ& a);

/// Solves a x = b exactly and classifies the solution set. The returned
/// particular solution and kernel vectors are re-substituted into the
/// system before returning.
SolveResult solve(const MatQ& a, const VecQ& b);

}  // namespace aag
