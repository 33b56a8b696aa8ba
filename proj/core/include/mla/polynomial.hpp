#pragma once

#include <utility>

#include "mla/matrix.hpp"

namespace mla {

// Dense univariate polynomial over Q, coefficients from degree 0 upward.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(Vector coeffs);
  static Polynomial monomial(std::size_t degree, const Rational& c = 1);

  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(c_.size()) - 1; }
  bool is_zero() const { return c_.empty(); }
  const Vector& coeffs() const { return c_; }
  Rational coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rational(0); }
  const Rational& leading() const { return c_.back(); }

  Polynomial derivative() const;
  Polynomial monic() const;
  Rational operator()(const Rational& x) const;
  Matrix operator()(const Matrix& m) const;

  friend Polynomial operator+(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator-(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.c_ == b.c_; }

 private:
  void trim();
  Vector c_;
};

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);
// Monic gcd; gcd(0, 0) = 0.
Polynomial gcd(Polynomial a, Polynomial b);
// p / gcd(p, p'), made monic.
Polynomial squarefree_part(const Polynomial& p);
// Monic minimal polynomial, found from the first linear dependency among I, M, M^2, ...
Polynomial minimal_polynomial(const Matrix& m);

// Number of distinct real roots (Sturm); the zero polynomial is rejected.
std::size_t real_root_count(const Polynomial& p);
// Unique polynomial of degree < xs.size() through the points.
Polynomial interpolate(const Vector& xs, const Vector& ys);

}  // namespace mla
