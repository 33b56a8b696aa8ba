#pragma once

#include <memory>
#include <mutex>
#include <optional>
#include <vector>

#include "mla/representation.hpp"

namespace mla {

// Lexicographically ordered p-subsets of {0, ..., n-1}.
class SubsetIndex {
 public:
  SubsetIndex(std::size_t n, std::size_t p);
  std::size_t n() const { return n_; }
  std::size_t p() const { return p_; }
  std::size_t count() const { return subsets_.size(); }
  const std::vector<std::size_t>& subset(std::size_t idx) const { return subsets_[idx]; }
  // Index of a strictly increasing index list.
  std::size_t index(const std::vector<std::size_t>& sorted) const;
  // Index and sign of an arbitrary index list; nullopt when an index repeats.
  std::optional<std::pair<std::size_t, int>> locate(std::vector<std::size_t> args) const;

 private:
  std::size_t n_, p_;
  std::vector<std::vector<std::size_t>> subsets_;
  std::vector<std::size_t> by_mask_;
};

const SubsetIndex& subsets(std::size_t n, std::size_t p);

// Alternating p-form on an algebra of dimension l_dim with values in a module of dimension module_dim.
// coords[s * module_dim + a] is the a-th component on the s-th lexicographic p-subset.
struct Cochain {
  std::size_t l_dim = 0;
  std::size_t degree = 0;
  std::size_t module_dim = 1;
  Vector coords;

  static Cochain zero(std::size_t l_dim, std::size_t degree, std::size_t module_dim);
  Vector value(const std::vector<std::size_t>& args) const;
  Vector value(std::size_t subset_index) const;
  void add_value(const std::vector<std::size_t>& sorted_args, const Vector& v);
  bool is_zero() const { return mla::is_zero(coords); }

  friend bool operator==(const Cochain&, const Cochain&) = default;
};

Cochain operator+(const Cochain& a, const Cochain& b);
Cochain operator-(const Cochain& a, const Cochain& b);
Cochain operator-(const Cochain& a);
Cochain operator*(const Rational& s, const Cochain& c);

// C^*(l, a) with cached differential matrices.
class CochainComplex {
 public:
  explicit CochainComplex(Representation rep);
  const Representation& module() const { return rep_; }
  const LieAlgebra& algebra() const { return rep_.algebra(); }
  std::size_t l_dim() const { return rep_.algebra_dim(); }
  std::size_t module_dim() const { return rep_.module_dim(); }
  std::size_t cochain_dim(std::size_t p) const;
  Cochain zero(std::size_t p) const { return Cochain::zero(l_dim(), p, module_dim()); }
  Cochain from_coords(std::size_t p, Vector coords) const;

  Cochain differential(const Cochain& c) const;
  // Matrix of d: C^p -> C^{p+1}; for p >= dim l it has zero rows.
  const Matrix& differential_matrix(std::size_t p) const;
  // c(v_1, ..., v_p) for arbitrary vectors of l.
  Vector evaluate(const Cochain& c, const std::vector<Vector>& args) const;

 private:
  Representation rep_;
  mutable std::mutex mutex_;
  mutable std::vector<std::unique_ptr<Matrix>> d_cache_;
};

// (l, a, rho, <,>_a) together with its coefficient and scalar complexes.
class Pair {
 public:
  Pair() = default;
  explicit Pair(Representation rep);
  const Representation& module() const { return coeff_->module(); }
  const LieAlgebra& algebra() const { return coeff_->algebra(); }
  const AlgebraPtr& algebra_ptr() const { return coeff_->module().algebra_ptr(); }
  const SymmetricForm& form() const { return coeff_->module().metric(); }
  std::size_t l_dim() const { return coeff_->l_dim(); }
  std::size_t a_dim() const { return coeff_->module_dim(); }
  const CochainComplex& coeff() const { return *coeff_; }
  const CochainComplex& scalar() const { return *scalar_; }

 private:
  std::shared_ptr<const CochainComplex> coeff_;
  std::shared_ptr<const CochainComplex> scalar_;
};

// Sum over shuffles of sgn * <alpha(first p), tau(last q)>.
Cochain wedge_pair(const SymmetricForm& form, const Cochain& alpha, const Cochain& tau);
inline Cochain wedge_pair(const Pair& pr, const Cochain& a, const Cochain& t) { return wedge_pair(pr.form(), a, t); }

class CohomologySpace {
 public:
  CohomologySpace(const CochainComplex& cx, std::size_t p);
  std::size_t degree() const { return p_; }
  std::size_t dim() const { return reps_.size(); }
  const std::vector<Cochain>& representatives() const { return reps_; }
  const Subspace& cocycles() const { return z_; }
  const Subspace& coboundaries() const { return b_; }
  bool is_cocycle(const Cochain& c) const { return z_.contains(c.coords); }
  bool is_coboundary(const Cochain& c) const { return b_.contains(c.coords); }
  // Some x with dx = c, when c is a coboundary.
  std::optional<Cochain> primitive(const Cochain& c) const;
  // Coordinates of the class of a cocycle with respect to representatives().
  Vector class_coords(const Cochain& c) const;

 private:
  const CochainComplex* cx_;
  std::size_t p_;
  Subspace z_, b_;
  std::vector<Cochain> reps_;
  Matrix solver_;
};

// Class of <a ∧ b> in H^{p+q}(l), as coordinates in the scalar cohomology of that degree.
Vector cup(const Pair& pr, const Cochain& a, const Cochain& b);

struct QuadraticCochain {
  Cochain tau;
  Cochain sigma;
  friend bool operator==(const QuadraticCochain&, const QuadraticCochain&) = default;
};

struct QuadraticCocycle {
  Cochain alpha;
  Cochain gamma;
  std::size_t p() const { return alpha.degree; }
  friend bool operator==(const QuadraticCocycle&, const QuadraticCocycle&) = default;
};

QuadraticCochain zero_quadratic_cochain(const Pair& pr, std::size_t p = 2);
QuadraticCocycle zero_cocycle(const Pair& pr, std::size_t p = 2);

enum class CocycleDefect { none, shape, alpha_not_closed, gamma_equation };
CocycleDefect check_cocycle(const Pair& pr, const QuadraticCocycle& z);
inline bool is_quadratic_cocycle(const Pair& pr, const QuadraticCocycle& z) {
  return check_cocycle(pr, z) == CocycleDefect::none;
}

QuadraticCochain q_star(const Pair& pr, const QuadraticCochain& c1, const QuadraticCochain& c2);
QuadraticCochain q_inverse(const Pair& pr, const QuadraticCochain& c);
QuadraticCocycle q_action(const Pair& pr, const QuadraticCocycle& z, const QuadraticCochain& c);
// Some c with z2 · c = z1, or nullopt when the classes differ.
std::optional<QuadraticCochain> equivalent_cocycles(const Pair& pr, const QuadraticCocycle& z1,
                                                    const QuadraticCocycle& z2);

// (S, U): (l1, a1) -> (l2, a2) with S: l1 -> l2 and U: a2 -> a1.
struct PairMorphism {
  Matrix s;
  Matrix u;
};
std::optional<std::string> check_morphism(const Pair& p1, const Pair& p2, const PairMorphism& f);
// Pullback of a cochain on l2 (values in a2) to l1 (values in a1), applying u to values.
Cochain pullback_cochain(const Matrix& s, const Matrix& u, const Cochain& c, std::size_t l1_dim);
QuadraticCocycle pullback(const PairMorphism& f, const QuadraticCocycle& z, std::size_t l1_dim);
// (e^{ad L}, e^{-rho(L)}), for L with nilpotent ad L and rho(L).
PairMorphism inner_automorphism(const Pair& pr, const Vector& l);

struct PairSum {
  Pair pair;
  QuadraticCocycle cocycle;
};
PairSum sum_classes(const Pair& p1, const QuadraticCocycle& z1, const Pair& p2, const QuadraticCocycle& z2);
Pair direct_sum(const Pair& p1, const Pair& p2);

struct FiberStructure {
  std::size_t fiber_dim = 0;
  // scalar cocycles delta whose classes span a complement of a ∪ H^{p-1}(l,a) in H^{2p-1}(l)
  std::vector<Cochain> directions;
};
// Requires [alpha ∪ alpha] = 0; throws UsageError otherwise.
FiberStructure fiber_structure(const Pair& pr, const Cochain& alpha);
QuadraticCocycle translate(const QuadraticCocycle& z, const Cochain& delta);

}  // namespace mla
