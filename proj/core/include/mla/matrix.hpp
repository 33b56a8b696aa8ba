#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <initializer_list>
#include <iosfwd>
#include <string>
#include <vector>

namespace mla {

using Rational = mpq_class;
using Vector = std::vector<Rational>;

Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);

Vector zero_vector(std::size_t n);
Vector unit_vector(std::size_t n, std::size_t i);
bool is_zero(const Vector& v);
Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator-(const Vector& a);
Vector operator*(const Rational& s, const Vector& v);
Vector& operator+=(Vector& a, const Vector& b);
Vector& operator-=(Vector& a, const Vector& b);
// a += s*b
void axpy(Vector& a, const Rational& s, const Vector& b);
Rational dot(const Vector& a, const Vector& b);
Vector concat(const Vector& a, const Vector& b);

// Dense row-major rational matrix. Linear maps act on column vectors.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols);
  Matrix(std::initializer_list<std::initializer_list<Rational>> rows);

  static Matrix identity(std::size_t n);
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
  static Matrix from_columns(const std::vector<Vector>& cols, std::size_t rows);
  static Matrix diagonal(const Vector& d);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  bool square() const { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector row(std::size_t r) const;
  Vector col(std::size_t c) const;
  void set_row(std::size_t r, const Vector& v);
  void set_col(std::size_t c, const Vector& v);
  std::vector<Vector> row_list() const;

  Matrix transpose() const;
  Matrix block(std::size_t r0, std::size_t c0, std::size_t nr, std::size_t nc) const;
  void set_block(std::size_t r0, std::size_t c0, const Matrix& b);
  Vector apply(const Vector& v) const;
  Rational trace() const;
  bool is_zero() const;
  bool is_symmetric() const;

  Matrix& operator+=(const Matrix& o);
  Matrix& operator-=(const Matrix& o);
  Matrix& operator*=(const Rational& s);

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rational> data_;
};

Matrix operator+(Matrix a, const Matrix& b);
Matrix operator-(Matrix a, const Matrix& b);
Matrix operator-(Matrix a);
Matrix operator*(const Matrix& a, const Matrix& b);
Matrix operator*(const Rational& s, Matrix a);
Matrix commutator(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);
Matrix hstack(const Matrix& a, const Matrix& b);
Matrix block_diagonal(const Matrix& a, const Matrix& b);
// Sum of I + N + N^2/2 + ... for nilpotent N; throws if N is not nilpotent.
Matrix exp_nilpotent(const Matrix& n);

std::ostream& operator<<(std::ostream& os, const Matrix& m);
std::ostream& operator<<(std::ostream& os, const Vector& v);

}  // namespace mla
