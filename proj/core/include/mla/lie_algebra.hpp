#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mla/linalg.hpp"

namespace mla {

// Mutable structure constants used to assemble a LieAlgebra.
class StructureTable {
 public:
  explicit StructureTable(std::size_t dim);
  std::size_t dim() const { return n_; }
  // [e_i, e_j] = v; the opposite order is implied.
  void set(std::size_t i, std::size_t j, const Vector& v);
  void add(std::size_t i, std::size_t j, std::size_t k, const Rational& c);
  Vector get(std::size_t i, std::size_t j) const;
  std::vector<std::string> labels;

 private:
  friend class LieAlgebra;
  std::size_t n_;
  std::vector<Matrix> ad_;
};

struct JacobiWitness {
  std::size_t i = 0, j = 0, k = 0;
  Vector defect;
};

struct ReductiveData;

class LieAlgebra {
 public:
  LieAlgebra();
  // Throws InvalidInput if the Jacobi identity fails.
  static LieAlgebra make(const StructureTable& t);
  // No Jacobi check; for inspecting tampered tables.
  static LieAlgebra unchecked(const StructureTable& t);
  static LieAlgebra abelian(std::size_t n);

  std::size_t dim() const { return n_; }
  const std::vector<std::string>& labels() const { return labels_; }
  std::string label(std::size_t i) const;
  const Matrix& ad(std::size_t i) const { return ad_.at(i); }
  Matrix ad(const Vector& x) const;
  Vector bracket(std::size_t i, std::size_t j) const { return ad_.at(i).col(j); }
  Vector bracket(const Vector& x, const Vector& y) const;
  const Rational& constant(std::size_t i, std::size_t j, std::size_t k) const { return ad_[i](k, j); }
  StructureTable table() const;
  bool is_abelian() const;

  // Nilpotency radical and lifts of a basis of the centre of g/R(g), computed once.
  const ReductiveData& reductive() const;

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) { return a.n_ == b.n_ && a.ad_ == b.ad_; }

 private:
  std::size_t n_ = 0;
  std::vector<Matrix> ad_;
  std::vector<std::string> labels_;
  struct Cache;
  std::shared_ptr<Cache> cache_;
};

struct ReductiveData {
  Subspace nilpotency_radical;
  std::vector<Vector> central_lifts;
};

struct IdealChain {
  std::vector<Subspace> entries;
};

std::optional<JacobiWitness> jacobi_check(const LieAlgebra& g);

struct StructureReport {
  Subspace derived;
  Subspace center;
  IdealChain lower_central;
  IdealChain derived_series;
  bool is_nilpotent = false;
  bool is_solvable = false;
};
StructureReport structure_report(const LieAlgebra& g);

struct KillingRadical {
  SymmetricForm killing;
  Subspace radical;
};
KillingRadical killing_and_radical(const LieAlgebra& g);
SymmetricForm killing_form(const LieAlgebra& g);
// [g, r] for the solvable radical r; throws InternalError if it differs from r ∩ g'.
Subspace nilpotency_radical(const LieAlgebra& g);
LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b);

Subspace bracket_span(const LieAlgebra& g, const Subspace& u, const Subspace& v);
Subspace derived_algebra(const LieAlgebra& g);
Subspace center(const LieAlgebra& g);
Subspace centralizer(const LieAlgebra& g, const Subspace& u);
bool is_ideal(const LieAlgebra& g, const Subspace& u);
bool is_subalgebra(const LieAlgebra& g, const Subspace& u);
// Sum of all simple ideals (zero iff g has none).
Subspace semisimple_ideal(const LieAlgebra& g);
// Algebra structure on the rows of `basis` (which must span a subalgebra).
LieAlgebra restrict_to(const LieAlgebra& g, const Matrix& basis);
// g / ideal in the coordinates of `q`; q must be QuotientMap(full, ideal).
LieAlgebra quotient_algebra(const LieAlgebra& g, const QuotientMap& q);

}  // namespace mla
