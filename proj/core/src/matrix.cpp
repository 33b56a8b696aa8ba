#include "mla/matrix.hpp"

#include <ostream>

#include "mla/errors.hpp"

namespace mla {

Rational parse_rational(const std::string& text) {
  std::string t;
  for (char c : text)
    if (c != ' ') t.push_back(c);
  if (t.empty()) throw ParseError("rational", "empty string");
  auto slash = t.find('/');
  auto check_int = [&](const std::string& s) {
    std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
    if (i >= s.size()) throw ParseError("rational", "malformed '" + text + "'");
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') throw ParseError("rational", "malformed '" + text + "'");
  };
  Rational q;
  if (slash == std::string::npos) {
    check_int(t);
    q = Rational(mpz_class(t[0] == '+' ? t.substr(1) : t));
  } else {
    std::string num = t.substr(0, slash), den = t.substr(slash + 1);
    check_int(num);
    check_int(den);
    mpz_class d(den[0] == '+' ? den.substr(1) : den);
    if (d == 0) throw ParseError("rational", "zero denominator in '" + text + "'");
    q = Rational(mpz_class(num[0] == '+' ? num.substr(1) : num), d);
    q.canonicalize();
  }
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

Vector zero_vector(std::size_t n) { return Vector(n, Rational(0)); }

Vector unit_vector(std::size_t n, std::size_t i) {
  Vector v(n, Rational(0));
  v.at(i) = 1;
  return v;
}

bool is_zero(const Vector& v) {
  for (const auto& x : v)
    if (sgn(x) != 0) return false;
  return true;
}

static void check_same(const Vector& a, const Vector& b) {
  if (a.size() != b.size()) throw UsageError("vector size mismatch");
}

Vector operator+(const Vector& a, const Vector& b) {
  Vector r = a;
  r += b;
  return r;
}

Vector operator-(const Vector& a, const Vector& b) {
  Vector r = a;
  r -= b;
  return r;
}

Vector operator-(const Vector& a) {
  Vector r(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) r[i] = -a[i];
  return r;
}

Vector operator*(const Rational& s, const Vector& v) {
  Vector r(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) r[i] = s * v[i];
  return r;
}

Vector& operator+=(Vector& a, const Vector& b) {
  check_same(a, b);
  for (std::size_t i = 0; i < a.size(); ++i) a[i] += b[i];
  return a;
}

Vector& operator-=(Vector& a, const Vector& b) {
  check_same(a, b);
  for (std::size_t i = 0; i < a.size(); ++i) a[i] -= b[i];
  return a;
}

void axpy(Vector& a, const Rational& s, const Vector& b) {
  check_same(a, b);
  if (sgn(s) == 0) return;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (sgn(b[i]) != 0) a[i] += s * b[i];
}

Rational dot(const Vector& a, const Vector& b) {
  check_same(a, b);
  Rational s = 0;
  for (std::size_t i = 0; i < a.size(); ++i)
    if (sgn(a[i]) != 0 && sgn(b[i]) != 0) s += a[i] * b[i];
  return s;
}

Vector concat(const Vector& a, const Vector& b) {
  Vector r = a;
  r.insert(r.end(), b.begin(), b.end());
  return r;
}

Matrix::Matrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rational(0)) {}

Matrix::Matrix(std::initializer_list<std::initializer_list<Rational>> rows) {
  rows_ = rows.size();
  cols_ = rows_ ? rows.begin()->size() : 0;
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw UsageError("ragged matrix literal");
    for (const auto& x : r) data_.push_back(x);
  }
}

Matrix Matrix::identity(std::size_t n) {
  Matrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

Matrix Matrix::from_rows(const std::vector<Vector>& rows, std::size_t cols) {
  Matrix m(rows.size(), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) m.set_row(r, rows[r]);
  return m;
}

Matrix Matrix::from_columns(const std::vector<Vector>& cols, std::size_t rows) {
  Matrix m(rows, cols.size());
  for (std::size_t c = 0; c < cols.size(); ++c) m.set_col(c, cols[c]);
  return m;
}

Matrix Matrix::diagonal(const Vector& d) {
  Matrix m(d.size(), d.size());
  for (std::size_t i = 0; i < d.size(); ++i) m(i, i) = d[i];
  return m;
}

Vector Matrix::row(std::size_t r) const {
  if (r >= rows_) throw UsageError("row index out of range");
  return Vector(data_.begin() + r * cols_, data_.begin() + (r + 1) * cols_);
}

Vector Matrix::col(std::size_t c) const {
  if (c >= cols_) throw UsageError("column index out of range");
  Vector v(rows_);
  for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
  return v;
}

void Matrix::set_row(std::size_t r, const Vector& v) {
  if (r >= rows_ || v.size() != cols_) throw UsageError("set_row shape mismatch");
  for (std::size_t c = 0; c < cols_; ++c) (*this)(r, c) = v[c];
}

void Matrix::set_col(std::size_t c, const Vector& v) {
  if (c >= cols_ || v.size() != rows_) throw UsageError("set_col shape mismatch");
  for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
}

std::vector<Vector> Matrix::row_list() const {
  std::vector<Vector> out;
  out.reserve(rows_);
  for (std::size_t r = 0; r < rows_; ++r) out.push_back(row(r));
  return out;
}

Matrix Matrix::transpose() const {
  Matrix t(cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
  return t;
}

Matrix Matrix::block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const {
  if (r0 + nr > rows_ || c0 + nc > cols_) throw UsageError("block out of range");
  Matrix b(nr, nc);
  for (std::size_t r = 0; r < nr; ++r)
    for (std::size_t c = 0; c < nc; ++c) b(r, c) = (*this)(r0 + r, c0 + c);
  return b;
}

void Matrix::set_block(std::size_t r0, std::size_t c0, const Matrix& b) {
  if (r0 + b.rows() > rows_ || c0 + b.cols() > cols_) throw UsageError("set_block out of range");
  for (std::size_t r = 0; r < b.rows(); ++r)
    for (std::size_t c = 0; c < b.cols(); ++c) (*this)(r0 + r, c0 + c) = b(r, c);
}

Vector Matrix::apply(const Vector& v) const {
  if (v.size() != cols_) throw UsageError("apply: shape mismatch");
  Vector out(rows_, Rational(0));
  for (std::size_t c = 0; c < cols_; ++c) {
    if (sgn(v[c]) == 0) continue;
    for (std::size_t r = 0; r < rows_; ++r) {
      const Rational& a = (*this)(r, c);
      if (sgn(a) != 0) out[r] += a * v[c];
    }
  }
  return out;
}

Rational Matrix::trace() const {
  if (!square()) throw UsageError("trace of non-square matrix");
  Rational t = 0;
  for (std::size_t i = 0; i < rows_; ++i) t += (*this)(i, i);
  return t;
}

bool Matrix::is_zero() const {
  for (const auto& x : data_)
    if (sgn(x) != 0) return false;
  return true;
}

bool Matrix::is_symmetric() const {
  if (!square()) return false;
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = r + 1; c < cols_; ++c)
      if ((*this)(r, c) != (*this)(c, r)) return false;
  return true;
}

Matrix& Matrix::operator+=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw UsageError("matrix sum shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] += o.data_[i];
  return *this;
}

Matrix& Matrix::operator-=(const Matrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw UsageError("matrix difference shape mismatch");
  for (std::size_t i = 0; i < data_.size(); ++i) data_[i] -= o.data_[i];
  return *this;
}

Matrix& Matrix::operator*=(const Rational& s) {
  for (auto& x : data_) x *= s;
  return *this;
}

Matrix operator+(Matrix a, const Matrix& b) { return a += b; }
Matrix operator-(Matrix a, const Matrix& b) { return a -= b; }
Matrix operator-(Matrix a) { return a *= Rational(-1); }
Matrix operator*(const Rational& s, Matrix a) { return a *= s; }

Matrix operator*(const Matrix& a, const Matrix& b) {
  if (a.cols() != b.rows()) throw UsageError("matrix product shape mismatch");
  Matrix p(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Rational& x = a(i, k);
      if (sgn(x) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) {
        const Rational& y = b(k, j);
        if (sgn(y) != 0) p(i, j) += x * y;
      }
    }
  return p;
}

Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

Matrix vstack(const Matrix& a, const Matrix& b) {
  if (a.rows() == 0) return b;
  if (b.rows() == 0) return a;
  if (a.cols() != b.cols()) throw UsageError("vstack shape mismatch");
  Matrix m(a.rows() + b.rows(), a.cols());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), 0, b);
  return m;
}

Matrix hstack(const Matrix& a, const Matrix& b) {
  if (a.rows() != b.rows()) throw UsageError("hstack shape mismatch");
  Matrix m(a.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(0, a.cols(), b);
  return m;
}

Matrix block_diagonal(const Matrix& a, const Matrix& b) {
  Matrix m(a.rows() + b.rows(), a.cols() + b.cols());
  m.set_block(0, 0, a);
  m.set_block(a.rows(), a.cols(), b);
  return m;
}

Matrix exp_nilpotent(const Matrix& n) {
  if (!n.square()) throw UsageError("exp of non-square matrix");
  Matrix result = Matrix::identity(n.rows());
  Matrix term = Matrix::identity(n.rows());
  for (std::size_t k = 1; k <= n.rows(); ++k) {
    term = term * n;
    term *= Rational(1, static_cast<unsigned long>(k));
    if (term.is_zero()) return result;
    result += term;
  }
  throw UsageError("exp_nilpotent: matrix is not nilpotent");
}

std::ostream& operator<<(std::ostream& os, const Matrix& m) {
  os << '[';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    if (r) os << "; ";
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? " " : "") << m(r, c);
  }
  return os << ']';
}

std::ostream& operator<<(std::ostream& os, const Vector& v) {
  os << '(';
  for (std::size_t i = 0; i < v.size(); ++i) os << (i ? ", " : "") << v[i];
  return os << ')';
}

}  // namespace mla
