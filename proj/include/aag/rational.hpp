#pragma once

#include <Eigen/Dense>
#include <boost/multiprecision/eigen.hpp>
#include <boost/multiprecision/gmp.hpp>

#include <cstddef>
#include <stdexcept>
#include <string>

namespace aag {

/// Exact arbitrary-precision integer (GMP-backed).
using Integer = boost::multiprecision::mpz_int;

/// Exact rational scalar, always kept canonical (gcd(num, den) = 1, den >= 1).
using Rational = boost::multiprecision::mpq_rational;

/// Dense rational matrix, row-major storage irrelevant to callers.
using MatQ = Eigen::Matrix<Rational, Eigen::Dynamic, Eigen::Dynamic>;

/// Dense rational column vector.
using VecQ = Eigen::Matrix<Rational, Eigen::Dynamic, 1>;

/// Dense rational row vector; used where the group law acts on the right.
using RowVecQ = Eigen::Matrix<Rational, 1, Eigen::Dynamic>;

using Index = Eigen::Index;

inline bool is_integral(const Rational& q) { return denominator(q) == 1; }

inline bool is_integral(const VecQ& v) {
  for (Index i = 0; i < v.size(); ++i)
    if (!is_integral(v[i])) return false;
  return true;
}

inline bool is_integral(const MatQ& m) {
  for (Index j = 0; j < m.cols(); ++j)
    for (Index i = 0; i < m.rows(); ++i)
      if (!is_integral(m(i, j))) return false;
  return true;
}

/// Total bit size of a rational; pivot-selection heuristic for elimination.
inline std::size_t bit_size(const Rational& q) {
  if (q == 0) return 0;
  const Integer n = abs(numerator(q));
  const Integer d = denominator(q);
  return static_cast<std::size_t>(msb(n)) + static_cast<std::size_t>(msb(d)) + 2;
}

/// Parses "p", "-p" or "p/q" with arbitrary-precision parts.
inline Rational parse_rational(const std::string& text) {
  try {
    const auto slash = text.find('/');
    if (slash == std::string::npos) return Rational(Integer(text));
    const Integer num(text.substr(0, slash));
    const Integer den(text.substr(slash + 1));
    if (den <= 0) throw std::invalid_argument("denominator must be positive");
    return Rational(num, den);
  } catch (const std::exception&) {
    throw std::invalid_argument("not a rational literal: '" + text + "'");
  }
}

inline std::string to_string(const Rational& q) { return q.str(); }

}  // namespace aag
