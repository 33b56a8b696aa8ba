#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "mla/matrix.hpp"

namespace mla {

struct RowEchelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

RowEchelon rref(Matrix m);
std::size_t rank(const Matrix& m);
// Rows form a basis of {x : m x = 0}.
Matrix kernel_basis(const Matrix& m);
std::optional<Matrix> inverse(const Matrix& m);
Rational determinant(Matrix m);
// For m of full column rank: some L with L m = I.
Matrix left_inverse(const Matrix& m);

// Row space in canonical reduced row echelon form.
class Subspace {
 public:
  Subspace() = default;
  static Subspace zero(std::size_t n);
  static Subspace full(std::size_t n);
  static Subspace span(std::size_t n, const Matrix& rows);
  static Subspace span(std::size_t n, const std::vector<Vector>& vectors);
  static Subspace coordinate(std::size_t n, std::size_t first, std::size_t count);

  std::size_t ambient_dim() const { return n_; }
  std::size_t dim() const { return basis_.rows(); }
  bool is_zero() const { return dim() == 0; }
  bool is_full() const { return dim() == n_; }
  const Matrix& basis() const { return basis_; }
  const std::vector<std::size_t>& pivots() const { return pivots_; }
  std::vector<Vector> vectors() const { return basis_.row_list(); }

  bool contains(const Vector& v) const;
  bool contains(const Subspace& u) const;
  // Coordinates of v with respect to basis(); v must lie in the subspace.
  Vector coordinates(const Vector& v) const;

  Subspace operator+(const Subspace& o) const;
  Subspace intersect(const Subspace& o) const;
  // {m u : u in this}; m has ambient_dim columns.
  Subspace image(const Matrix& m) const;
  // {x : m x in this}; m has ambient_dim rows.
  Subspace preimage(const Matrix& m) const;
  // {x : f(x) = 0 for all rows f}, rows treated as functionals.
  Subspace annihilator() const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.n_ == b.n_ && a.basis_ == b.basis_;
  }

 private:
  std::size_t n_ = 0;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

// Rows spanning a complement of u inside w, chosen greedily from w's basis.
Matrix complement_basis(const Subspace& u, const Subspace& w);

struct SubspaceOps {
  Subspace sum;
  Subspace intersection;
  Subspace complement_of_u_in_sum;
  std::size_t quotient_dim = 0;
};
SubspaceOps subspace_ops(const Subspace& u, const Subspace& v);

struct AffineSolution {
  Vector particular;
  Subspace kernel;
};
std::optional<AffineSolution> solve_affine(const Matrix& a, const Vector& b);

// Coordinates on w/u with respect to a fixed complement of u in w.
class QuotientMap {
 public:
  QuotientMap() = default;
  QuotientMap(const Subspace& w, const Subspace& u);
  std::size_t dim() const { return complement_.rows(); }
  const Matrix& complement() const { return complement_; }
  const Subspace& top() const { return w_; }
  const Subspace& bottom() const { return u_; }
  // v must lie in w.
  Vector coords(const Vector& v) const;
  // Representative in w of a quotient coordinate vector.
  Vector lift(const Vector& q) const;

 private:
  Subspace w_, u_;
  Matrix complement_;
  Matrix solver_;  // maps ambient vectors in w to coordinates in [complement; u-basis]
};

struct Inertia {
  std::size_t negatives = 0;
  std::size_t zeros = 0;
  std::size_t positives = 0;
  friend bool operator==(const Inertia&, const Inertia&) = default;
};

class SymmetricForm {
 public:
  SymmetricForm() = default;
  explicit SymmetricForm(Matrix gram);
  static SymmetricForm euclidean(std::size_t n);
  static SymmetricForm diagonal(const Vector& d);
  static SymmetricForm zero(std::size_t n);

  std::size_t dim() const { return gram_.rows(); }
  const Matrix& gram() const { return gram_; }
  Rational operator()(const Vector& x, const Vector& y) const;
  bool nondegenerate() const;
  // Gram matrix of the restriction to the span of the given rows.
  Matrix restricted_gram(const Matrix& rows) const;
  bool nondegenerate_on(const Subspace& u) const;
  bool isotropic(const Subspace& u) const;

  friend bool operator==(const SymmetricForm& a, const SymmetricForm& b) { return a.gram_ == b.gram_; }

 private:
  Matrix gram_;
};

Inertia signature(const SymmetricForm& form);
Subspace orthogonal_complement(const Subspace& u, const SymmetricForm& form);
SymmetricForm direct_sum(const SymmetricForm& a, const SymmetricForm& b);

}  // namespace mla
