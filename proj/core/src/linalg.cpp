#include "mla/linalg.hpp"

#include <utility>

#include "mla/errors.hpp"

namespace mla {

RowEchelon rref(Matrix m) {
  RowEchelon out;
  const std::size_t rows = m.rows(), cols = m.cols();
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && sgn(m(p, c)) == 0) ++p;
    if (p == rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(m(p, j), m(r, j));
    Rational inv = 1 / m(r, c);
    for (std::size_t j = c; j < cols; ++j)
      if (sgn(m(r, j)) != 0) m(r, j) *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || sgn(m(i, c)) == 0) continue;
      Rational f = m(i, c);
      for (std::size_t j = c; j < cols; ++j)
        if (sgn(m(r, j)) != 0) m(i, j) -= f * m(r, j);
    }
    out.pivots.push_back(c);
    ++r;
  }
  out.reduced = std::move(m);
  return out;
}

std::size_t rank(const Matrix& m) { return rref(m).pivots.size(); }

Matrix kernel_basis(const Matrix& m) {
  RowEchelon e = rref(m);
  const std::size_t n = m.cols();
  std::vector<bool> is_pivot(n, false);
  for (auto p : e.pivots) is_pivot[p] = true;
  std::vector<Vector> out;
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vector x = zero_vector(n);
    x[f] = 1;
    for (std::size_t i = 0; i < e.pivots.size(); ++i) x[e.pivots[i]] = -e.reduced(i, f);
    out.push_back(std::move(x));
  }
  return Matrix::from_rows(out, n);
}

std::optional<Matrix> inverse(const Matrix& m) {
  if (!m.square()) throw UsageError("inverse of non-square matrix");
  const std::size_t n = m.rows();
  RowEchelon e = rref(hstack(m, Matrix::identity(n)));
  if (e.pivots.size() < n || (n > 0 && e.pivots[n - 1] != n - 1)) return std::nullopt;
  return e.reduced.block(0, n, n, n);
}

Rational determinant(Matrix m) {
  if (!m.square()) throw UsageError("determinant of non-square matrix");
  const std::size_t n = m.rows();
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && sgn(m(p, c)) == 0) ++p;
    if (p == n) return 0;
    if (p != c) {
      for (std::size_t j = 0; j < n; ++j) std::swap(m(p, j), m(c, j));
      det = -det;
    }
    det *= m(c, c);
    for (std::size_t i = c + 1; i < n; ++i) {
      if (sgn(m(i, c)) == 0) continue;
      Rational f = m(i, c) / m(c, c);
      for (std::size_t j = c; j < n; ++j) m(i, j) -= f * m(c, j);
    }
  }
  return det;
}

Matrix left_inverse(const Matrix& m) {
  const std::size_t n = m.rows(), k = m.cols();
  RowEchelon e = rref(m.transpose());
  if (e.pivots.size() != k) throw UsageError("left_inverse: matrix lacks full column rank");
  Matrix sq(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) sq(i, j) = m(e.pivots[i], j);
  Matrix inv = *inverse(sq);
  Matrix l(k, n);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) l(i, e.pivots[j]) = inv(i, j);
  return l;
}

Subspace Subspace::zero(std::size_t n) {
  Subspace s;
  s.n_ = n;
  s.basis_ = Matrix(0, n);
  return s;
}

Subspace Subspace::full(std::size_t n) {
  Subspace s;
  s.n_ = n;
  s.basis_ = Matrix::identity(n);
  for (std::size_t i = 0; i < n; ++i) s.pivots_.push_back(i);
  return s;
}

Subspace Subspace::span(std::size_t n, const Matrix& rows) {
  if (rows.rows() > 0 && rows.cols() != n) throw UsageError("span: ambient dimension mismatch");
  Subspace s;
  s.n_ = n;
  if (rows.rows() == 0) {
    s.basis_ = Matrix(0, n);
    return s;
  }
  RowEchelon e = rref(rows);
  s.pivots_ = e.pivots;
  s.basis_ = e.reduced.block(0, 0, e.pivots.size(), n);
  return s;
}

Subspace Subspace::span(std::size_t n, const std::vector<Vector>& vectors) {
  return span(n, Matrix::from_rows(vectors, n));
}

Subspace Subspace::coordinate(std::size_t n, std::size_t first, std::size_t count) {
  std::vector<Vector> v;
  for (std::size_t i = 0; i < count; ++i) v.push_back(unit_vector(n, first + i));
  return span(n, v);
}

bool Subspace::contains(const Vector& v) const {
  if (v.size() != n_) throw UsageError("contains: ambient dimension mismatch");
  Vector r = v;
  for (std::size_t i = 0; i < pivots_.size(); ++i) {
    if (sgn(r[pivots_[i]]) == 0) continue;
    Rational f = r[pivots_[i]];
    for (std::size_t j = 0; j < n_; ++j)
      if (sgn(basis_(i, j)) != 0) r[j] -= f * basis_(i, j);
  }
  return mla::is_zero(r);
}

bool Subspace::contains(const Subspace& u) const {
  if (u.n_ != n_) throw UsageError("contains: ambient dimension mismatch");
  for (std::size_t i = 0; i < u.dim(); ++i)
    if (!contains(u.basis_.row(i))) return false;
  return true;
}

Vector Subspace::coordinates(const Vector& v) const {
  if (!contains(v)) throw UsageError("coordinates: vector not in subspace");
  Vector c(pivots_.size());
  for (std::size_t i = 0; i < pivots_.size(); ++i) c[i] = v[pivots_[i]];
  return c;
}

Subspace Subspace::operator+(const Subspace& o) const {
  if (o.n_ != n_) throw UsageError("sum: ambient dimension mismatch");
  if (o.dim() == 0) return *this;
  if (dim() == 0) return o;
  return span(n_, vstack(basis_, o.basis_));
}

Subspace Subspace::intersect(const Subspace& o) const {
  if (o.n_ != n_) throw UsageError("intersect: ambient dimension mismatch");
  if (dim() == 0 || o.dim() == 0) return zero(n_);
  Matrix stacked = vstack(basis_, -o.basis_).transpose();
  Matrix k = kernel_basis(stacked);
  std::vector<Vector> out;
  for (std::size_t r = 0; r < k.rows(); ++r) {
    Vector x = zero_vector(n_);
    for (std::size_t i = 0; i < dim(); ++i) axpy(x, k(r, i), basis_.row(i));
    out.push_back(std::move(x));
  }
  return span(n_, out);
}

Subspace Subspace::image(const Matrix& m) const {
  if (m.cols() != n_) throw UsageError("image: shape mismatch");
  if (dim() == 0) return zero(m.rows());
  return span(m.rows(), (m * basis_.transpose()).transpose());
}

Subspace Subspace::preimage(const Matrix& m) const {
  if (m.rows() != n_) throw UsageError("preimage: shape mismatch");
  Matrix f = kernel_basis(basis_);
  if (f.rows() == 0) return full(m.cols());
  return span(m.cols(), kernel_basis(f * m));
}

Subspace Subspace::annihilator() const {
  if (dim() == 0) return full(n_);
  return span(n_, kernel_basis(basis_));
}

Matrix complement_basis(const Subspace& u, const Subspace& w) {
  if (!w.contains(u)) throw UsageError("complement_basis: u is not contained in w");
  Subspace cur = u;
  std::vector<Vector> out;
  for (std::size_t i = 0; i < w.dim() && cur.dim() < w.dim(); ++i) {
    Vector v = w.basis().row(i);
    if (cur.contains(v)) continue;
    out.push_back(v);
    cur = cur + Subspace::span(w.ambient_dim(), std::vector<Vector>{v});
  }
  return Matrix::from_rows(out, w.ambient_dim());
}

SubspaceOps subspace_ops(const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim()) throw UsageError("subspace_ops: ambient dimension mismatch");
  SubspaceOps r;
  r.sum = u + v;
  r.intersection = u.intersect(v);
  r.complement_of_u_in_sum = Subspace::span(u.ambient_dim(), complement_basis(u, r.sum));
  r.quotient_dim = r.sum.dim() - u.dim();
  return r;
}

std::optional<AffineSolution> solve_affine(const Matrix& a, const Vector& b) {
  if (a.rows() != b.size()) throw UsageError("solve_affine: A.rows != length(b)");
  const std::size_t n = a.cols();
  Matrix aug(a.rows(), n + 1);
  aug.set_block(0, 0, a);
  for (std::size_t i = 0; i < b.size(); ++i) aug(i, n) = b[i];
  RowEchelon e = rref(aug);
  if (!e.pivots.empty() && e.pivots.back() == n) return std::nullopt;
  AffineSolution s;
  s.particular = zero_vector(n);
  for (std::size_t i = 0; i < e.pivots.size(); ++i) s.particular[e.pivots[i]] = e.reduced(i, n);
  Matrix k(0, n);
  {
    std::vector<bool> is_pivot(n, false);
    for (auto p : e.pivots) is_pivot[p] = true;
    std::vector<Vector> rows;
    for (std::size_t f = 0; f < n; ++f) {
      if (is_pivot[f]) continue;
      Vector x = zero_vector(n);
      x[f] = 1;
      for (std::size_t i = 0; i < e.pivots.size(); ++i) x[e.pivots[i]] = -e.reduced(i, f);
      rows.push_back(std::move(x));
    }
    k = Matrix::from_rows(rows, n);
  }
  s.kernel = Subspace::span(n, k);
  return s;
}

QuotientMap::QuotientMap(const Subspace& w, const Subspace& u) : w_(w), u_(u) {
  complement_ = complement_basis(u, w);
  if (w.dim() > 0) solver_ = left_inverse(vstack(complement_, u.basis()).transpose());
}

Vector QuotientMap::coords(const Vector& v) const {
  if (dim() == 0) return {};
  Vector all = solver_.apply(v);
  all.resize(dim());
  return all;
}

Vector QuotientMap::lift(const Vector& q) const {
  if (q.size() != dim()) throw UsageError("lift: wrong coordinate count");
  Vector v = zero_vector(w_.ambient_dim());
  for (std::size_t i = 0; i < q.size(); ++i) axpy(v, q[i], complement_.row(i));
  return v;
}

SymmetricForm::SymmetricForm(Matrix gram) : gram_(std::move(gram)) {
  if (!gram_.is_symmetric()) throw InvalidInput("form gram matrix is not symmetric");
}

SymmetricForm SymmetricForm::euclidean(std::size_t n) { return SymmetricForm(Matrix::identity(n)); }
SymmetricForm SymmetricForm::diagonal(const Vector& d) { return SymmetricForm(Matrix::diagonal(d)); }
SymmetricForm SymmetricForm::zero(std::size_t n) { return SymmetricForm(Matrix(n, n)); }

Rational SymmetricForm::operator()(const Vector& x, const Vector& y) const { return dot(x, gram_.apply(y)); }

bool SymmetricForm::nondegenerate() const { return rank(gram_) == dim(); }

Matrix SymmetricForm::restricted_gram(const Matrix& rows) const { return rows * gram_ * rows.transpose(); }

bool SymmetricForm::nondegenerate_on(const Subspace& u) const {
  return rank(restricted_gram(u.basis())) == u.dim();
}

bool SymmetricForm::isotropic(const Subspace& u) const { return restricted_gram(u.basis()).is_zero(); }

Inertia signature(const SymmetricForm& form) {
  Matrix a = form.gram();
  const std::size_t n = a.rows();
  Inertia in;
  std::size_t k = 0;
  auto swap_index = [&](std::size_t i, std::size_t j) {
    if (i == j) return;
    for (std::size_t c = 0; c < n; ++c) std::swap(a(i, c), a(j, c));
    for (std::size_t r = 0; r < n; ++r) std::swap(a(r, i), a(r, j));
  };
  for (; k < n; ++k) {
    std::size_t p = k;
    while (p < n && sgn(a(p, p)) == 0) ++p;
    if (p == n) {
      // all remaining diagonal entries vanish: use i + j trick on an off-diagonal entry
      std::size_t pi = n, pj = n;
      for (std::size_t i = k; i < n && pi == n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
          if (sgn(a(i, j)) != 0) {
            pi = i;
            pj = j;
            break;
          }
      if (pi == n) break;
      for (std::size_t c = 0; c < n; ++c) a(pi, c) += a(pj, c);
      for (std::size_t r = 0; r < n; ++r) a(r, pi) += a(r, pj);
      p = pi;
    }
    swap_index(k, p);
    const Rational piv = a(k, k);
    for (std::size_t r = k + 1; r < n; ++r) {
      if (sgn(a(r, k)) == 0) continue;
      Rational f = a(r, k) / piv;
      for (std::size_t c = k; c < n; ++c) a(r, c) -= f * a(k, c);
      for (std::size_t c = k; c < n; ++c) a(c, r) = a(r, c);
    }
    if (sgn(piv) > 0)
      ++in.positives;
    else
      ++in.negatives;
  }
  in.zeros = n - in.positives - in.negatives;
  return in;
}

Subspace orthogonal_complement(const Subspace& u, const SymmetricForm& form) {
  if (u.ambient_dim() != form.dim()) throw UsageError("orthogonal_complement: dimension mismatch");
  if (u.dim() == 0) return Subspace::full(form.dim());
  return Subspace::span(form.dim(), kernel_basis(u.basis() * form.gram()));
}

SymmetricForm direct_sum(const SymmetricForm& a, const SymmetricForm& b) {
  return SymmetricForm(block_diagonal(a.gram(), b.gram()));
}

}  // namespace mla
