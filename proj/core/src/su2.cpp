#include <array>

#include "mla/catalog.hpp"
#include "mla/errors.hpp"

namespace mla {

namespace {

using Exponent = std::array<std::size_t, 3>;

std::vector<Exponent> monomials(std::size_t k) {
  std::vector<Exponent> out;
  for (std::size_t a = k + 1; a-- > 0;)
    for (std::size_t b = k - a + 1; b-- > 0;) out.push_back({a, b, k - a - b});
  return out;
}

std::size_t position(const std::vector<Exponent>& basis, const Exponent& e) {
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (basis[i] == e) return i;
  throw InternalError("su2: monomial out of range");
}

Rational factorial(std::size_t n) {
  Rational f = 1;
  for (std::size_t i = 2; i <= n; ++i) f *= static_cast<long>(i);
  return f;
}

// so(3) generators with [E1,E2] = E3: (E_i)_{jl} = -eps_{ijl}.
int eps(std::size_t i, std::size_t j, std::size_t l) {
  if (i == j || j == l || i == l) return 0;
  return ((j + 3 - i) % 3 == 1) ? 1 : -1;
}

// rho(E) f = -grad f . (E x) on homogeneous polynomials of degree k.
Matrix vector_field(const std::vector<Exponent>& basis, std::size_t i) {
  Matrix m(basis.size(), basis.size());
  for (std::size_t c = 0; c < basis.size(); ++c)
    for (std::size_t j = 0; j < 3; ++j) {
      if (basis[c][j] == 0) continue;
      for (std::size_t l = 0; l < 3; ++l) {
        int e = -eps(i, j, l);  // (E_i)_{jl}
        if (e == 0) continue;
        Exponent t = basis[c];
        Rational coef = static_cast<long>(t[j]);
        t[j] -= 1;
        t[l] += 1;
        m(position(basis, t), c) -= coef * e;
      }
    }
  return m;
}

Matrix kron(const Matrix& a, const Matrix& b) {
  Matrix out(a.rows() * b.rows(), a.cols() * b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      if (sgn(a(i, j)) == 0) continue;
      for (std::size_t r = 0; r < b.rows(); ++r)
        for (std::size_t s = 0; s < b.cols(); ++s) out(i * b.rows() + r, j * b.cols() + s) = a(i, j) * b(r, s);
    }
  return out;
}

Su2Irrep restrict_irrep(const std::vector<Matrix>& action, const Matrix& gram, const Subspace& u) {
  Su2Irrep out;
  const std::size_t d = u.dim();
  for (const Matrix& a : action) {
    Matrix r(d, d);
    for (std::size_t c = 0; c < d; ++c) r.set_col(c, u.coordinates(a.apply(u.basis().row(c))));
    out.action.push_back(r);
  }
  out.gram = u.basis() * gram * u.basis().transpose();
  Matrix cas(d, d);
  for (const Matrix& a : out.action) cas += a * a;
  out.casimir = d == 0 ? Rational(0) : cas(0, 0);
  if (!(cas == out.casimir * Matrix::identity(d))) throw InternalError("su2: Casimir is not scalar");
  return out;
}

}  // namespace

Su2Irrep su2_sigma(std::size_t k) {
  if (k == 0) throw UsageError("su2_sigma: k must be positive");
  auto basis = monomials(k);
  auto lower = k >= 2 ? monomials(k - 2) : std::vector<Exponent>{};
  Matrix lap(k >= 2 ? lower.size() : 0, basis.size());
  if (k >= 2)
    for (std::size_t c = 0; c < basis.size(); ++c)
      for (std::size_t j = 0; j < 3; ++j)
        if (basis[c][j] >= 2) {
          Exponent t = basis[c];
          Rational coef = static_cast<long>(t[j] * (t[j] - 1));
          t[j] -= 2;
          lap(position(lower, t), c) += coef;
        }
  Subspace harmonic = Subspace::span(basis.size(), kernel_basis(lap));
  if (harmonic.dim() != 2 * k + 1) throw InternalError("su2_sigma: harmonic space has the wrong dimension");
  std::vector<Matrix> action;
  for (std::size_t i = 0; i < 3; ++i) action.push_back(vector_field(basis, i));
  Vector fischer;
  for (const auto& e : basis) fischer.push_back(factorial(e[0]) * factorial(e[1]) * factorial(e[2]));
  return restrict_irrep(action, Matrix::diagonal(fischer), harmonic);
}

Su2Irrep su2_sigma_quat(std::size_t k) {
  if (k == 0) throw UsageError("su2_sigma_quat: k must be positive");
  // left multiplication by i/2, j/2, k/2 on H with basis 1, i, j, k
  const Rational h(1, 2);
  std::vector<Matrix> quat = {
      h * Matrix{{0, -1, 0, 0}, {1, 0, 0, 0}, {0, 0, 0, -1}, {0, 0, 1, 0}},
      h * Matrix{{0, 0, -1, 0}, {0, 0, 0, 1}, {1, 0, 0, 0}, {0, -1, 0, 0}},
      h * Matrix{{0, 0, 0, -1}, {0, 0, -1, 0}, {0, 1, 0, 0}, {1, 0, 0, 0}},
  };
  if (k == 1) return restrict_irrep(quat, Matrix::identity(4), Subspace::full(4));
  Su2Irrep inner = su2_sigma(k - 1);
  const std::size_t d = inner.gram.rows();
  std::vector<Matrix> action;
  Matrix cas(4 * d, 4 * d);
  for (std::size_t i = 0; i < 3; ++i) {
    action.push_back(kron(quat[i], Matrix::identity(d)) + kron(Matrix::identity(4), inner.action[i]));
    cas += action.back() * action.back();
  }
  // spin k - 1/2 has Casimir -(k - 1/2)(k + 1/2)
  Rational target = -(Rational(static_cast<long>(k)) * static_cast<long>(k) - Rational(1, 4));
  Subspace eig = Subspace::span(4 * d, kernel_basis(cas - target * Matrix::identity(4 * d)));
  if (eig.dim() != 4 * k) throw InternalError("su2_sigma_quat: Casimir eigenspace has the wrong dimension");
  return restrict_irrep(action, kron(Matrix::identity(4), inner.gram), eig);
}

}  // namespace mla
