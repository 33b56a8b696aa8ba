#include "mla/polynomial.hpp"

#include <algorithm>

#include "mla/errors.hpp"
#include "mla/linalg.hpp"

namespace mla {

Polynomial::Polynomial(Vector coeffs) : c_(std::move(coeffs)) { trim(); }

Polynomial Polynomial::monomial(std::size_t degree, const Rational& c) {
  Vector v = zero_vector(degree + 1);
  v[degree] = c;
  return Polynomial(v);
}

void Polynomial::trim() {
  while (!c_.empty() && sgn(c_.back()) == 0) c_.pop_back();
}

Polynomial Polynomial::derivative() const {
  if (c_.size() <= 1) return {};
  Vector d(c_.size() - 1);
  for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<unsigned long>(i);
  return Polynomial(d);
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  Rational inv = 1 / c_.back();
  Vector d = c_;
  for (auto& x : d) x *= inv;
  return Polynomial(d);
}

Rational Polynomial::operator()(const Rational& x) const {
  Rational r = 0;
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) r = r * x + *it;
  return r;
}

Matrix Polynomial::operator()(const Matrix& m) const {
  if (!m.square()) throw UsageError("polynomial of non-square matrix");
  Matrix r(m.rows(), m.cols());
  for (auto it = c_.rbegin(); it != c_.rend(); ++it) {
    r = r * m;
    for (std::size_t i = 0; i < m.rows(); ++i) r(i, i) += *it;
  }
  return r;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  Vector c = zero_vector(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] += b.c_[i];
  return Polynomial(c);
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  Vector c = zero_vector(std::max(a.c_.size(), b.c_.size()));
  for (std::size_t i = 0; i < a.c_.size(); ++i) c[i] += a.c_[i];
  for (std::size_t i = 0; i < b.c_.size(); ++i) c[i] -= b.c_[i];
  return Polynomial(c);
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  Vector c = zero_vector(a.c_.size() + b.c_.size() - 1);
  for (std::size_t i = 0; i < a.c_.size(); ++i)
    for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
  return Polynomial(c);
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw UsageError("polynomial division by zero");
  Vector r = a.coeffs();
  const int db = b.degree();
  if (a.degree() < db) return {Polynomial(), a};
  Vector q = zero_vector(a.degree() - db + 1);
  for (int k = a.degree(); k >= db; --k) {
    if (sgn(r[k]) == 0) continue;
    Rational f = r[k] / b.leading();
    q[k - db] = f;
    for (int j = 0; j <= db; ++j) r[k - db + j] -= f * b.coeff(j);
  }
  return {Polynomial(q), Polynomial(r)};
}

Polynomial gcd(Polynomial a, Polynomial b) {
  while (!b.is_zero()) {
    Polynomial r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  return a.monic();
}

Polynomial squarefree_part(const Polynomial& p) {
  if (p.degree() <= 0) return p.monic();
  return divmod(p, gcd(p, p.derivative())).first.monic();
}

Polynomial minimal_polynomial(const Matrix& m) {
  if (!m.square()) throw UsageError("minimal polynomial of non-square matrix");
  const std::size_t n = m.rows();
  const std::size_t n2 = n * n;
  std::vector<Vector> powers;
  Matrix p = Matrix::identity(n);
  for (std::size_t k = 0; k <= n; ++k) {
    Vector flat(n2);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) flat[i * n + j] = p(i, j);
    powers.push_back(flat);
    // solve sum_{i<k} c_i P^i = P^k
    if (k > 0) {
      Matrix a = Matrix::from_columns(std::vector<Vector>(powers.begin(), powers.end() - 1), n2);
      auto sol = solve_affine(a, flat);
      if (sol) {
        Vector c(k + 1);
        for (std::size_t i = 0; i < k; ++i) c[i] = -sol->particular[i];
        c[k] = 1;
        return Polynomial(c);
      }
    } else if (n == 0) {
      return Polynomial(Vector{Rational(1)});
    }
    p = p * m;
  }
  throw InternalError("minimal polynomial: no dependency found");
}

std::size_t real_root_count(const Polynomial& p) {
  if (p.is_zero()) throw UsageError("real_root_count: zero polynomial");
  std::vector<Polynomial> seq{squarefree_part(p)};
  seq.push_back(seq[0].derivative());
  while (!seq.back().is_zero()) {
    auto [q, r] = divmod(seq[seq.size() - 2], seq.back());
    seq.push_back(Polynomial() - r);
  }
  seq.pop_back();
  auto changes = [&](bool at_plus) {
    int last = 0;
    std::size_t count = 0;
    for (const auto& s : seq) {
      int sg = sgn(s.leading());
      if (!at_plus && s.degree() % 2 == 1) sg = -sg;
      if (sg != 0 && last != 0 && sg != last) ++count;
      if (sg != 0) last = sg;
    }
    return count;
  };
  return changes(false) - changes(true);
}

Polynomial interpolate(const Vector& xs, const Vector& ys) {
  if (xs.size() != ys.size()) throw UsageError("interpolate: size mismatch");
  Polynomial out;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    Polynomial term(Vector{ys[i]});
    for (std::size_t j = 0; j < xs.size(); ++j) {
      if (j == i) continue;
      Rational d = xs[i] - xs[j];
      term = term * Polynomial(Vector{-xs[j] / d, Rational(1) / d});
    }
    out = out + term;
  }
  return out;
}

}  // namespace mla
