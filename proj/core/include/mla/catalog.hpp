#pragma once

#include <optional>
#include <string>
#include <vector>

#include "mla/quadext.hpp"

namespace mla {

enum class BaseName { n2, r3m1, r3m2, h1, sl2, su2, R1, R2, R3 };
std::string to_string(BaseName b);
std::optional<BaseName> parse_base(const std::string& s);

// n2, r3m1, r3m2, h1 on X, Y, Z; sl2 on H, E, F; su2 cyclic on e1, e2, e3; R^k abelian.
LieAlgebra base_algebra(BaseName b);

// One orthogonal summand of a representation family. Weights are functionals on l given by
// their values on the basis; they must vanish on the nilpotency radical.
struct RepBlock {
  enum class Kind { plus, minus, prime, doubleprime, trivial, su2_odd, su2_quat } kind = Kind::trivial;
  Vector weight;       // lambda, or mu for doubleprime
  Vector second;       // nu for doubleprime
  std::size_t p = 0;   // trivial block: signature (p negative, q positive)
  std::size_t q = 0;
  std::size_t k = 0;   // su2 index
  std::size_t dim() const;
};

struct RepFamilySpec {
  std::vector<RepBlock> blocks;
  std::size_t dim() const;
  // (negatives, positives) of the module form
  std::pair<std::size_t, std::size_t> target_signature() const;
};

Representation build_rep(const RepFamilySpec& spec, AlgebraPtr l);

// Real irreducible su(2)-modules: sigma_k (dim 2k+1) and sigma'_k (dim 4k), with an invariant
// positive definite form that is not orthonormal in the returned basis.
struct Su2Irrep {
  std::vector<Matrix> action;
  Matrix gram;
  Rational casimir;  // sum of rho(e_i)^2 acts by this scalar
};
Su2Irrep su2_sigma(std::size_t k);
Su2Irrep su2_sigma_quat(std::size_t k);

struct RowParams {
  std::vector<Vector> lambda;   // one functional per rho^+ block, values on the generators of l/R(l)
  Rational r = 0;               // n2-III
  Rational nu = 0;              // R1-I
  Rational mu = 0;              // R1-III
  Rational c = 0;               // sl2, su2
  Rational gamma = 0;           // R3-gamma
  std::vector<std::size_t> k_odd, k_quat;  // su2
  friend bool operator==(const RowParams&, const RowParams&) = default;
};

struct RowKey {
  BaseName base = BaseName::n2;
  std::string variant;
  RowParams params;
  std::string name() const;  // e.g. "n2-III"
};

struct CatalogRow {
  RowKey key;
  Pair pair;
  QuadraticCocycle cocycle;  // class of the standard model isometric to `model`
  StandardModel model;       // for sl2, su2 this is the modified model with c times the Killing form
  bool conditional = false;  // uniqueness not certified (R^3 rows)
};

// Variants known for a base, e.g. {"Ia","Ib","II","III","IV"} for n2.
std::vector<std::string> catalog_variants(BaseName b);
// Throws InvalidInput naming the violated constraint.
CatalogRow catalog_row(const RowKey& key);

struct RowVerdict {
  std::size_t index = 0;
  bool balanced = false;
  bool simple_ideal_free = false;
  AdmissibilityReport admissibility;
  IndecomposabilityResult indecomposability;
  std::vector<std::string> failures;
  bool passes() const { return failures.empty(); }
};
RowVerdict verify_row(const CatalogRow& row);

struct Certificate {
  std::string family;   // base and variant group
  std::size_t m = 0;
  bool complete = false;
  Vector invariant;
  std::string description;
};
Certificate certificate(const CatalogRow& row);

enum class Comparison { equal, distinct, incomparable, undetermined };
std::string to_string(Comparison c);
struct CertificateVerdict {
  Comparison verdict = Comparison::undetermined;
  bool l_invariant_distinct = false;
  std::string reason;
};
CertificateVerdict non_isomorphism_certificate(const CatalogRow& a, const CatalogRow& b);

struct Control {
  std::string name;
  Pair pair;
  QuadraticCocycle cocycle;
  bool expected_admissible = false;
  bool excluded_from_index3 = false;
};
std::vector<Control> controls();

struct SweepBounds {
  std::size_t max_m = 1;
  std::size_t max_den = 1;
};

struct SweepEntry {
  RowKey key;
  RowVerdict verdict;
  Certificate certificate;
  double seconds = 0;
};

struct ControlOutcome {
  std::string name;
  bool admissible = false;
  bool balanced = false;
  std::size_t index = 0;
  bool as_expected = false;
};

struct SweepReport {
  std::vector<SweepEntry> rows;
  std::vector<ControlOutcome> controls;
  // Rows whose parameters are distinct normal forms but whose certificates coincide.
  std::vector<std::pair<std::size_t, std::size_t>> collisions;
  // Rows with non-normalized parameters (h1, R2) found isomorphic by their certificates.
  std::vector<std::pair<std::size_t, std::size_t>> isomorphic_pairs;
  std::size_t families = 0;
  bool ok() const;
};

std::vector<RowKey> sweep_keys(const SweepBounds& bounds);
SweepReport sweep(const SweepBounds& bounds);

}  // namespace mla
