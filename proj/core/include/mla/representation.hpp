#pragma once

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "mla/lie_algebra.hpp"

namespace mla {

using AlgebraPtr = std::shared_ptr<const LieAlgebra>;

inline AlgebraPtr share(LieAlgebra g) { return std::make_shared<const LieAlgebra>(std::move(g)); }

class Representation {
 public:
  Representation() = default;
  Representation(AlgebraPtr algebra, std::size_t module_dim, std::vector<Matrix> action,
                 std::optional<SymmetricForm> form = std::nullopt);
  static Representation trivial(AlgebraPtr algebra, std::size_t module_dim,
                                std::optional<SymmetricForm> form = std::nullopt);
  static Representation adjoint(AlgebraPtr algebra);

  const LieAlgebra& algebra() const { return *algebra_; }
  const AlgebraPtr& algebra_ptr() const { return algebra_; }
  std::size_t module_dim() const { return m_; }
  std::size_t algebra_dim() const { return action_.size(); }
  const Matrix& rho(std::size_t i) const { return action_.at(i); }
  Matrix rho(const Vector& x) const;
  const std::vector<Matrix>& action() const { return action_; }
  const std::optional<SymmetricForm>& form() const { return form_; }
  bool has_form() const { return form_.has_value(); }
  // Gram of the module form; throws if absent.
  const SymmetricForm& metric() const;
  Representation with_form(std::optional<SymmetricForm> f) const;

 private:
  AlgebraPtr algebra_;
  std::size_t m_ = 0;
  std::vector<Matrix> action_;
  std::optional<SymmetricForm> form_;
};

struct RepresentationWitness {
  enum class Kind { homomorphism, skew_adjoint, form_degenerate } kind;
  std::size_t i = 0, j = 0;
  std::string describe() const;
};
std::optional<RepresentationWitness> check_representation(const Representation& rep);
bool is_submodule(const Representation& rep, const Subspace& w);

struct ModuleFiltration {
  IdealChain socles;    // S_0 = 0 ⊂ S_1 ⊂ ... ⊂ V
  IdealChain radicals;  // R_0 = V ⊃ R_1 ⊃ ... ⊃ 0
  // S_k, R_k with the chains padded by V and 0 past their ends.
  Subspace socle(std::size_t k) const;
  Subspace radical(std::size_t k) const;
  // Loewy length: number of proper steps in either chain.
  std::size_t length() const;
};

Subspace module_radical(const Representation& rep, const Subspace& w);
Subspace module_radical(const Representation& rep);
Subspace module_socle(const Representation& rep, const Subspace& w);
Subspace module_socle(const Representation& rep);
ModuleFiltration filtration(const Representation& rep);
bool is_semisimple(const Representation& rep);

struct InvariantSplit {
  Subspace invariants;
  Subspace complement;
};
InvariantSplit invariant_split(const Representation& rep);

Representation dual(const Representation& rep);

struct SubModule {
  Representation rep;
  Matrix embedding;  // rows: basis of U in V, in the order used by rep
};
SubModule submodule(const Representation& rep, const Subspace& u);

struct QuotientModule {
  Representation rep;
  QuotientMap map;
};
QuotientModule quotient_module(const Representation& rep, const Subspace& u);

struct DualSubQuotient {
  Representation dual;
  SubModule sub;
  QuotientModule quotient;
};
DualSubQuotient dual_and_sub_quotient(const Representation& rep, const Subspace& u);

// Same algebra, block sum of actions and forms.
Representation direct_sum(const Representation& a, const Representation& b);
// Representation of a ⊕ b (as algebras) on the sum of the modules, each factor acting on its own block.
Representation external_sum(const Representation& a, const Representation& b, AlgebraPtr sum_algebra);

}  // namespace mla
