#pragma once

#include <optional>
#include <string>

#include "mla/cochain.hpp"

namespace mla {

struct MetricLieAlgebra {
  AlgebraPtr algebra;
  SymmetricForm form;
  std::size_t dim() const { return algebra->dim(); }
  const LieAlgebra& lie() const { return *algebra; }
};

struct MetricViolation {
  enum class Kind { shape, degenerate, not_invariant } kind;
  std::size_t i = 0, j = 0, k = 0;
  std::string describe() const;
};

std::optional<MetricViolation> check_metric(const LieAlgebra& g, const SymmetricForm& form);
// Throws InvalidInput carrying the violation.
MetricLieAlgebra validate_metric(AlgebraPtr g, SymmetricForm form);
MetricLieAlgebra validate_metric(LieAlgebra g, SymmetricForm form);
std::size_t index(const MetricLieAlgebra& g);

struct CanonicalIdeals {
  Subspace i;
  Subspace j;
  ModuleFiltration filtration;
  // Sum of the simple ideals; zero for algebras with a canonical extension.
  Subspace simple_part;
  bool has_simple_ideals() const { return !simple_part.is_zero(); }
};
CanonicalIdeals canonical_ideals(const MetricLieAlgebra& g);

// Canonical quadratic-extension data of g. Matrices hold vectors of g as columns:
// section s(L_b), ideal basis p*(L_b^*), and representatives in j of the basis of a = j/i.
struct ExtensionData {
  MetricLieAlgebra source;
  AlgebraPtr base;
  Pair pair;
  Subspace ideal;
  Subspace perp;
  Matrix section;
  Matrix ideal_basis;
  Matrix a_basis;
  QuadraticCocycle cocycle;
};

ExtensionData canonical_extension(const MetricLieAlgebra& g);
QuadraticCocycle extract_cocycle(const ExtensionData& data);
// Same extension with another isotropic section; recomputes the cocycle.
ExtensionData with_section(const ExtensionData& data, const Matrix& section);

}  // namespace mla
