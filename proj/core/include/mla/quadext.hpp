#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mla/metric.hpp"

namespace mla {

// d_{alpha,gamma}(l, a, rho) on the basis l* (0..n-1), a (n..n+m-1), l (n+m..2n+m-1).
struct StandardModel {
  MetricLieAlgebra metric;
  Pair pair;
  QuadraticCocycle cocycle;
  std::optional<SymmetricForm> ip_l;  // set for the modified model

  std::size_t l_dim() const { return pair.l_dim(); }
  std::size_t a_dim() const { return pair.a_dim(); }
  std::size_t dim() const { return 2 * l_dim() + a_dim(); }
  std::size_t lstar_begin() const { return 0; }
  std::size_t a_begin() const { return l_dim(); }
  std::size_t l_begin() const { return l_dim() + a_dim(); }
  Subspace lstar_block() const { return Subspace::coordinate(dim(), 0, l_dim()); }
  Subspace a_block() const { return Subspace::coordinate(dim(), a_begin(), a_dim()); }
  Subspace l_block() const { return Subspace::coordinate(dim(), l_begin(), l_dim()); }
};

// Brackets of the standard model without any validation.
LieAlgebra standard_brackets(const Pair& pr, const QuadraticCocycle& z);
SymmetricForm standard_form(const Pair& pr);
// Rejects non-cocycles with InvalidInput.
StandardModel build_model(const Pair& pr, const QuadraticCocycle& z);

struct ModifiedModel {
  StandardModel model;     // brackets of z, form <,> + ip_l
  Matrix equivalence;      // isometric isomorphism onto the standard model of `target`
  QuadraticCocycle target; // (alpha, gamma - 1/2 <[.,.]_l, .>_l)
};
ModifiedModel build_modified(const Pair& pr, const SymmetricForm& ip_l, const QuadraticCocycle& z);

// Isometry d_{z.c} -> d_z in the block basis.
Matrix psi_map(const Pair& pr, const QuadraticCochain& c);

bool is_balanced(const StandardModel& model);

struct AdmissibilityStep {
  std::size_t k = 0;
  bool a_k = true;
  bool b_k = true;
  // For a failing (a_k): projection of S(d_k) to R_k(l). For a failing (b_k): pr_a(S(M_k)).
  std::optional<Subspace> witness;
};

struct AdmissibilityReport {
  bool rho_semisimple = false;
  std::vector<AdmissibilityStep> per_k;
  bool b0_prime = false;
  bool admissible = false;
  bool regularly_admissible = false;
  // Conditions of the explicit k = 0 systems; checked against a_0/b_0 when rho is semisimple.
  bool a0_explicit = false;
  bool b0_explicit = false;
  bool balanced_direct = false;
  std::string summary() const;
};
AdmissibilityReport admissibility(const Pair& pr, const QuadraticCocycle& z);

enum class Decomposability { indecomposable, decomposable, undecided };

struct IndecomposabilityResult {
  Decomposability verdict = Decomposability::undecided;
  std::string certificate;
};
IndecomposabilityResult is_indecomposable_class(const Pair& pr, const QuadraticCocycle& z);

}  // namespace mla
