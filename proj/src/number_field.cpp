#include "aag/number_field.hpp"

#include <sstream>
#include <utility>

namespace aag {
namespace {

// Polynomials over Q as dense coefficient vectors, lowest degree first.
using Poly = std::vector<Rational>;

Index poly_degree(const Poly& p) {
  for (Index i = static_cast<Index>(p.size()) - 1; i >= 0; --i)
    if (p[static_cast<std::size_t>(i)] != 0) return i;
  return -1;
}

Poly poly_scale(const Poly& p, const Rational& s) {
  Poly r = p;
  for (auto& c : r) c *= s;
  return r;
}

Poly poly_sub(const Poly& a, const Poly& b) {
  Poly r(std::max(a.size(), b.size()), Rational(0));
  for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  return r;
}

// Remainder and quotient of a / b, b nonzero.
std::pair<Poly, Poly> poly_divmod(Poly a, const Poly& b) {
  const Index db = poly_degree(b);
  Poly quot(a.size(), Rational(0));
  for (Index da = poly_degree(a); da >= db && da >= 0; da = poly_degree(a)) {
    const Rational factor =
        a[static_cast<std::size_t>(da)] / b[static_cast<std::size_t>(db)];
    quot[static_cast<std::size_t>(da - db)] = factor;
    for (Index i = 0; i <= db; ++i) {
      a[static_cast<std::size_t>(da - db + i)] -= factor * b[static_cast<std::size_t>(i)];
    }
  }
  return {std::move(quot), std::move(a)};
}

// Divisors of |v|, both signs, by trial division. The scan is capped; this
// backs a sanity check, not a factorization routine.
std::vector<Integer> signed_divisors(const Integer& v) {
  std::vector<Integer> divs;
  const Integer a = abs(v);
  Integer i = 1;
  int steps = 0;
  while (i * i <= a && steps < 1000000) {
    if (a % i == 0) {
      divs.push_back(i);
      divs.push_back(-i);
      const Integer other = a / i;
      if (other != i) {
        divs.push_back(other);
        divs.push_back(-other);
      }
    }
    ++i;
    ++steps;
  }
  return divs;
}

}  // namespace

Rational MonicIntPolynomial::operator()(const Rational& x) const {
  Rational acc = 1;  // leading coefficient
  for (Index i = degree() - 1; i >= 0; --i) {
    acc = acc * x + Rational(coefficients[static_cast<std::size_t>(i)]);
  }
  return acc;
}

std::string MonicIntPolynomial::str(const std::string& var) const {
  std::ostringstream out;
  out << var << "^" << degree();
  for (Index i = degree() - 1; i >= 0; --i) {
    const Integer& c = coefficients[static_cast<std::size_t>(i)];
    if (c == 0) continue;
    out << (c > 0 ? "+" : "-");
    const Integer a = abs(c);
    if (a != 1 || i == 0) out << a;
    if (i == 1)
      out << var;
    else if (i > 1)
      out << var << "^" << i;
  }
  return out.str();
}

MatQ companion_matrix(const MonicIntPolynomial& f) {
  const Index n = f.degree();
  if (n < 2) throw std::invalid_argument("companion matrix needs degree >= 2");
  MatQ m = MatQ::Zero(n, n);
  for (Index i = 1; i < n; ++i) m(i, i - 1) = 1;
  for (Index i = 0; i < n; ++i)
    m(i, n - 1) = Rational(-f.coefficients[static_cast<std::size_t>(i)]);
  return m;
}

NumberField::NumberField(MonicIntPolynomial poly)
    : poly_(std::move(poly)), companion_(companion_matrix(poly_)) {}

FieldHandle NumberField::create(MonicIntPolynomial poly) {
  FieldHandle field(new NumberField(std::move(poly)));
  const MonicIntPolynomial& f = field->poly_;
  const Index n = f.degree();

  // Cayley-Hamilton: f(M) = 0 for the companion matrix M.
  const MatQ& m = field->companion_;
  MatQ acc = MatQ::Identity(n, n);
  for (Index i = n - 1; i >= 0; --i) {
    acc = m * acc;
    acc += MatQ::Identity(n, n) * Rational(f.coefficients[static_cast<std::size_t>(i)]);
  }
  if (!(acc.array() == 0).all())
    throw std::invalid_argument("companion matrix does not satisfy its polynomial");

  // Rational-root rejection: a monic integer polynomial can only vanish at
  // integer divisors of its constant term.
  if (f.coefficients[0] == 0)
    throw std::invalid_argument("polynomial has root 0, not irreducible: " + f.str());
  for (const Integer& d : signed_divisors(f.coefficients[0])) {
    if (f(Rational(d)) == 0)
      throw std::invalid_argument("polynomial has rational root " + d.str() +
                                  ", not irreducible: " + f.str());
  }
  return field;
}

FieldElement NumberField::zero() const { return element(VecQ::Zero(degree())); }

FieldElement NumberField::one() const { return constant(1); }

FieldElement NumberField::generator() const {
  VecQ v = VecQ::Zero(degree());
  v[1] = 1;
  return element(std::move(v));
}

FieldElement NumberField::element(VecQ coeffs) const {
  return FieldElement(shared_from_this(), std::move(coeffs));
}

FieldElement NumberField::constant(const Rational& q) const {
  VecQ v = VecQ::Zero(degree());
  v[0] = q;
  return element(std::move(v));
}

FieldElement::FieldElement(FieldHandle field, VecQ coeffs)
    : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  if (!field_) throw std::invalid_argument("field element without a field");
  if (coeffs_.size() != field_->degree())
    throw std::invalid_argument("coefficient vector length does not match field degree");
}

namespace {

void check_same_field(const FieldElement& a, const FieldElement& b) {
  if (a.field() == b.field()) return;
  if (a.field() && b.field() && a.field()->poly() == b.field()->poly()) return;
  throw FieldMismatchError();
}

}  // namespace

bool FieldElement::operator==(const FieldElement& other) const {
  check_same_field(*this, other);
  return (coeffs_.array() == other.coeffs_.array()).all();
}

FieldElement FieldElement::operator+(const FieldElement& other) const {
  check_same_field(*this, other);
  return FieldElement(field_, coeffs_ + other.coeffs_);
}

FieldElement FieldElement::operator-(const FieldElement& other) const {
  check_same_field(*this, other);
  return FieldElement(field_, coeffs_ - other.coeffs_);
}

FieldElement FieldElement::operator-() const { return FieldElement(field_, -coeffs_); }

FieldElement FieldElement::operator*(const FieldElement& other) const {
  check_same_field(*this, other);
  const Index n = field_->degree();
  const auto& f = field_->poly().coefficients;

  // Polynomial product, then reduction by x^n = -(c_{n-1} x^{n-1} + ... + c_0).
  VecQ prod = VecQ::Zero(2 * n - 1);
  for (Index i = 0; i < n; ++i) {
    if (coeffs_[i] == 0) continue;
    for (Index j = 0; j < n; ++j) {
      if (other.coeffs_[j] != 0) prod[i + j] += coeffs_[i] * other.coeffs_[j];
    }
  }
  for (Index k = 2 * n - 2; k >= n; --k) {
    const Rational c = prod[k];
    if (c == 0) continue;
    prod[k] = 0;
    for (Index j = 0; j < n; ++j) {
      if (f[static_cast<std::size_t>(j)] != 0)
        prod[k - n + j] -= c * Rational(f[static_cast<std::size_t>(j)]);
    }
  }
  return FieldElement(field_, prod.head(n));
}

std::string FieldElement::str() const {
  std::ostringstream out;
  out << "(";
  for (Index i = 0; i < coeffs_.size(); ++i) {
    if (i > 0) out << ", ";
    out << coeffs_[i];
  }
  out << ")";
  return out.str();
}

MatQ to_matrix(const FieldElement& e) {
  const auto& field = e.field();
  const Index n = field->degree();
  const MatQ& m = field->companion();
  // Column j holds the power-basis coordinates of e * x^j.
  MatQ result(n, n);
  VecQ col = e.coeffs();
  result.col(0) = col;
  for (Index j = 1; j < n; ++j) {
    col = m * col;
    result.col(j) = col;
  }
  return result;
}

FieldElement fe_inv(const FieldElement& e) {
  if (e.is_zero()) throw std::domain_error("inverse of zero field element");
  const auto& field = e.field();
  const Index n = field->degree();

  // Extended Euclid on (a, f) in Q[x]: maintain u with u*a = r mod f.
  Poly r0(static_cast<std::size_t>(n) + 1, Rational(0));
  for (Index i = 0; i < n; ++i)
    r0[static_cast<std::size_t>(i)] = Rational(field->poly().coefficients[static_cast<std::size_t>(i)]);
  r0[static_cast<std::size_t>(n)] = 1;
  Poly r1(static_cast<std::size_t>(n), Rational(0));
  for (Index i = 0; i < n; ++i) r1[static_cast<std::size_t>(i)] = e.coeffs()[i];

  Poly u0(1, Rational(0));
  Poly u1(1, Rational(1));
  while (true) {
    auto [quot, rem] = poly_divmod(r0, r1);
    const Index dr = poly_degree(rem);
    if (dr < 0) {
      // r1 is gcd(a, f); for irreducible f it is a nonzero constant.
      const Index d1 = poly_degree(r1);
      if (d1 != 0)
        throw std::domain_error("element shares a factor with the modulus; field is degenerate");
      const Poly inv = poly_scale(u1, 1 / r1[0]);
      VecQ coeffs = VecQ::Zero(n);
      for (std::size_t i = 0; i < inv.size() && static_cast<Index>(i) < n; ++i)
        coeffs[static_cast<Index>(i)] = inv[i];
      return field->element(std::move(coeffs));
    }
    Poly qu(quot.size() + u1.size(), Rational(0));
    for (std::size_t i = 0; i < quot.size(); ++i) {
      if (quot[i] == 0) continue;
      for (std::size_t j = 0; j < u1.size(); ++j) qu[i + j] += quot[i] * u1[j];
    }
    Poly u2 = poly_sub(u0, qu);
    r0 = std::move(r1);
    r1 = std::move(rem);
    u0 = std::move(u1);
    u1 = std::move(u2);
  }
}

Rational fe_norm(const FieldElement& e) { return determinant(to_matrix(e)); }

}  // namespace aag
