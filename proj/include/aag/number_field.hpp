#pragma once

#include <memory>
#include <string>
#include <vector>

#include "aag/linalg.hpp"
#include "aag/rational.hpp"

namespace aag {

/// Monic integer polynomial f = x^n + c_{n-1} x^{n-1} + ... + c_0, stored as
/// the coefficient list c_0..c_{n-1}; the leading 1 is implicit.
struct MonicIntPolynomial {
  std::vector<Integer> coefficients;

  Index degree() const { return static_cast<Index>(coefficients.size()); }
  bool operator==(const MonicIntPolynomial&) const = default;

  /// f evaluated at a rational point, exactly.
  Rational operator()(const Rational& x) const;

  std::string str(const std::string& var = "x") const;
};

/// Companion matrix of f in the subdiagonal-of-ones layout: ones below the
/// diagonal, last column -c_0..-c_{n-1}, zeros elsewhere.
MatQ companion_matrix(const MonicIntPolynomial& f);

class NumberField;
using FieldHandle = std::shared_ptr<const NumberField>;

/// Element of F = Q[x]/(f), stored as power-basis coordinates a_0..a_{n-1}.
/// The matrix image a_0 E + a_1 M + ... + a_{n-1} M^{n-1} is derived on
/// demand; both models multiply identically.
class FieldElement {
 public:
  FieldElement() = default;
  FieldElement(FieldHandle field, VecQ coeffs);

  const VecQ& coeffs() const { return coeffs_; }
  const FieldHandle& field() const { return field_; }

  bool is_zero() const { return (coeffs_.array() == 0).all(); }
  bool operator==(const FieldElement& other) const;

  FieldElement operator+(const FieldElement& other) const;
  FieldElement operator-(const FieldElement& other) const;
  FieldElement operator-() const;
  FieldElement operator*(const FieldElement& other) const;

  std::string str() const;

 private:
  FieldHandle field_;
  VecQ coeffs_;
};

/// The ambient field F = Q[x]/(f), carrying the companion-matrix model.
/// Construction checks degree >= 2, f(M) = 0, and that f has no rational
/// root among the divisors of c_0; full irreducibility is a declared
/// precondition of the caller, not verified here.
class NumberField : public std::enable_shared_from_this<NumberField> {
 public:
  static FieldHandle create(MonicIntPolynomial poly);

  const MonicIntPolynomial& poly() const { return poly_; }
  const MatQ& companion() const { return companion_; }
  Index degree() const { return poly_.degree(); }

  FieldElement zero() const;
  FieldElement one() const;
  /// The class x of the quotient (the root adjoined by f).
  FieldElement generator() const;
  FieldElement element(VecQ coeffs) const;
  /// Element with constant coefficient q, zero elsewhere.
  FieldElement constant(const Rational& q) const;

 private:
  explicit NumberField(MonicIntPolynomial poly);

  MonicIntPolynomial poly_;
  MatQ companion_;
};

/// Matrix image a_0 E + a_1 M + ... + a_{n-1} M^{n-1}. Its columns are the
/// power-basis coordinates of e, e*x, ..., e*x^{n-1}, so it is also the
/// matrix of multiplication-by-e on coordinate columns.
MatQ to_matrix(const FieldElement& e);

/// Multiplicative inverse through the extended Euclidean algorithm in Q[x]
/// modulo f; throws on zero. The matrix-inverse route is kept in the tests
/// as an independent oracle.
FieldElement fe_inv(const FieldElement& e);

/// Field norm: determinant of the matrix image. Multiplicative; equals +-1
/// exactly on the units used by the platform fixtures.
Rational fe_norm(const FieldElement& e);

struct FieldMismatchError : std::invalid_argument {
  FieldMismatchError() : std::invalid_argument("elements of different number fields") {}
};

}  // namespace aag
