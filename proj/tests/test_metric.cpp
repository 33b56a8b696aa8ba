#include <gtest/gtest.h>

#include "mla/catalog.hpp"
#include "mla/errors.hpp"
#include "support.hpp"

using namespace mla;
using mla::fixtures::Gen;
using mla::fixtures::plus_pair;
using mla::fixtures::random_cocycle;

namespace {

StandardModel oscillator() { return build_model(plus_pair(BaseName::R1, {1}), zero_cocycle(plus_pair(BaseName::R1, {1}))); }

Pair empty_pair(BaseName b) {
  return Pair(Representation::trivial(share(base_algebra(b)), 0, SymmetricForm::euclidean(0)));
}

// Extension data of a standard model read off its block basis.
ExtensionData block_data(const StandardModel& m) {
  const std::size_t n = m.l_dim(), a = m.a_dim(), d = m.dim();
  auto cols = [&](std::size_t first, std::size_t count) {
    Matrix c(d, count);
    for (std::size_t b = 0; b < count; ++b) c(first + b, b) = 1;
    return c;
  };
  ExtensionData e{m.metric,     m.pair.algebra_ptr(), m.pair,        m.lstar_block(), m.lstar_block() + m.a_block(),
                  cols(m.l_begin(), n), cols(0, n),   cols(n, a),    {}};
  e.cocycle = extract_cocycle(e);
  return e;
}

}  // namespace

TEST(ValidateMetric, Examples) {
  EXPECT_NO_THROW(validate_metric(LieAlgebra::abelian(2), SymmetricForm::euclidean(2)));
  LieAlgebra sl2 = base_algebra(BaseName::sl2);
  MetricLieAlgebra k = validate_metric(sl2, killing_form(sl2));
  EXPECT_EQ(index(k), 1u);
  EXPECT_EQ(index(validate_metric(LieAlgebra::abelian(3), SymmetricForm::euclidean(3))), 0u);

  LieAlgebra h = base_algebra(BaseName::h1);
  auto v = check_metric(h, SymmetricForm::euclidean(3));
  ASSERT_TRUE(v);
  EXPECT_EQ(v->kind, MetricViolation::Kind::not_invariant);
  EXPECT_THROW(validate_metric(h, SymmetricForm::euclidean(3)), InvalidInput);

  auto deg = check_metric(LieAlgebra::abelian(2), SymmetricForm::diagonal({1, 0}));
  ASSERT_TRUE(deg);
  EXPECT_EQ(deg->kind, MetricViolation::Kind::degenerate);
  EXPECT_EQ(check_metric(LieAlgebra::abelian(2), SymmetricForm::euclidean(3))->kind, MetricViolation::Kind::shape);
}

TEST(ValidateMetric, ModelIndexIsDimL) {
  Gen g(41);
  for (auto b : {BaseName::n2, BaseName::h1, BaseName::R2}) {
    Pair pr = plus_pair(b, {1}, 1);
    StandardModel m = build_model(pr, random_cocycle(g, pr));
    EXPECT_EQ(index(m.metric), pr.l_dim());
    EXPECT_EQ(signature(m.metric.form), (Inertia{pr.l_dim(), 0, pr.l_dim() + pr.a_dim()}));
  }
}

TEST(CanonicalIdeals, AbelianEuclidean) {
  auto ci = canonical_ideals(validate_metric(LieAlgebra::abelian(3), SymmetricForm::euclidean(3)));
  EXPECT_TRUE(ci.i.is_zero());
  EXPECT_TRUE(ci.j.is_full());
  EXPECT_FALSE(ci.has_simple_ideals());
}

TEST(CanonicalIdeals, Oscillator) {
  StandardModel m = oscillator();
  // [L,A1]=A2, [L,A2]=-A1, [A1,A2]=Z on the basis Z, A1, A2, L
  const LieAlgebra& g = m.metric.lie();
  EXPECT_EQ(g.bracket(3, 1), (Vector{0, 0, 1, 0}));
  EXPECT_EQ(g.bracket(3, 2), (Vector{0, -1, 0, 0}));
  EXPECT_EQ(g.bracket(1, 2), (Vector{1, 0, 0, 0}));
  EXPECT_EQ(index(m.metric), 1u);
  auto ci = canonical_ideals(m.metric);
  EXPECT_EQ(ci.i, Subspace::coordinate(4, 0, 1));
  EXPECT_EQ(ci.j, Subspace::coordinate(4, 0, 3));
}

TEST(CanonicalIdeals, Sl2TimesDual) {
  StandardModel m = build_model(empty_pair(BaseName::sl2), zero_cocycle(empty_pair(BaseName::sl2)));
  EXPECT_EQ(m.dim(), 6u);
  EXPECT_EQ(index(m.metric), 3u);
  auto ci = canonical_ideals(m.metric);
  EXPECT_EQ(ci.i, m.lstar_block());
  EXPECT_EQ(ci.j, m.lstar_block());
  ExtensionData e = canonical_extension(m.metric);
  EXPECT_EQ(e.pair.a_dim(), 0u);
  EXPECT_EQ(e.base->dim(), 3u);
  EXPECT_FALSE(structure_report(*e.base).is_solvable);
}

TEST(CanonicalIdeals, SimpleIdealsReported) {
  LieAlgebra sl2 = base_algebra(BaseName::sl2);
  auto ci = canonical_ideals(validate_metric(sl2, killing_form(sl2)));
  EXPECT_TRUE(ci.has_simple_ideals());
  EXPECT_THROW(canonical_extension(validate_metric(sl2, killing_form(sl2))), InvalidInput);
}

TEST(CanonicalIdeals, PropertiesOnRandomModels) {
  Gen g(42);
  std::vector<Pair> pairs{plus_pair(BaseName::n2, {1}, 1), plus_pair(BaseName::h1, {1}),
                          plus_pair(BaseName::r3m1, {2}), plus_pair(BaseName::R2, {1}, 1),
                          Pair(Representation::adjoint(share(base_algebra(BaseName::su2)))
                                   .with_form(SymmetricForm::euclidean(3)))};
  for (int t = 0; t < 10; ++t) {
    const Pair& pr = pairs[t % pairs.size()];
    StandardModel m = build_model(pr, random_cocycle(g, pr));
    auto ci = canonical_ideals(m.metric);
    const SymmetricForm& f = m.metric.form;
    EXPECT_EQ(ci.j, orthogonal_complement(ci.i, f));
    EXPECT_TRUE(f.isotropic(ci.i));
    EXPECT_TRUE(is_ideal(m.metric.lie(), ci.i));
    EXPECT_TRUE(ci.i.contains(bracket_span(m.metric.lie(), ci.j, ci.j)));
    for (std::size_t k = 0; k <= ci.filtration.length(); ++k)
      EXPECT_EQ(ci.filtration.socle(k), orthogonal_complement(ci.filtration.radical(k), f));
  }
}

TEST(CanonicalIdeals, DirectSum) {
  StandardModel a = oscillator();
  Pair pn = plus_pair(BaseName::n2, {1});
  Gen g(43);
  StandardModel b = build_model(pn, random_cocycle(g, pn));
  MetricLieAlgebra s = validate_metric(direct_sum(a.metric.lie(), b.metric.lie()),
                                       direct_sum(a.metric.form, b.metric.form));
  auto ia = canonical_ideals(a.metric).i, ib = canonical_ideals(b.metric).i;
  std::vector<Vector> emb;
  for (const auto& v : ia.vectors()) emb.push_back(concat(v, zero_vector(b.dim())));
  for (const auto& v : ib.vectors()) emb.push_back(concat(zero_vector(a.dim()), v));
  EXPECT_EQ(canonical_ideals(s).i, Subspace::span(s.dim(), emb));
}

TEST(Extraction, BlockSectionReturnsCocycleExactly) {
  Gen g(44);
  for (auto pr : {plus_pair(BaseName::n2, {1}, 1), plus_pair(BaseName::R2, {1}, 1), plus_pair(BaseName::h1, {2})}) {
    for (int t = 0; t < 3; ++t) {
      QuadraticCocycle z = random_cocycle(g, pr);
      StandardModel m = build_model(pr, z);
      EXPECT_EQ(block_data(m).cocycle, z);
    }
  }
}

TEST(Extraction, AbelianZero) {
  Pair pr = fixtures::trivial_pair(share(LieAlgebra::abelian(2)), 1);
  StandardModel m = build_model(pr, zero_cocycle(pr));
  QuadraticCocycle z = block_data(m).cocycle;
  EXPECT_TRUE(z.alpha.is_zero());
  EXPECT_TRUE(z.gamma.is_zero());
}

TEST(Extraction, PerturbedSectionGivesEquivalentCocycle) {
  Gen g(45);
  for (auto pr : {plus_pair(BaseName::n2, {1}, 1), plus_pair(BaseName::r3m1, {1}), plus_pair(BaseName::R2, {1}, 1)}) {
    QuadraticCocycle z = random_cocycle(g, pr);
    ExtensionData e = block_data(build_model(pr, z));
    const std::size_t n = pr.l_dim();
    Matrix skew = g.mat(n, n);
    skew = skew - skew.transpose();
    Matrix sec = e.section + e.ideal_basis * skew;
    ExtensionData e2 = with_section(e, sec);
    EXPECT_TRUE(equivalent_cocycles(pr, e2.cocycle, z));
    EXPECT_TRUE(equivalent_cocycles(pr, z, e2.cocycle));
    // A non-isotropic shear is refused.
    Matrix bad = e.section + e.ideal_basis * Matrix::identity(n);
    EXPECT_THROW(with_section(e, bad), InvalidInput);
  }
}

TEST(Extraction, CanonicalRoundTrip) {
  Gen g(46);
  Pair pr = plus_pair(BaseName::n2, {1}, 1);
  int tried = 0;
  for (int t = 0; t < 10; ++t) {
    QuadraticCocycle z = random_cocycle(g, pr);
    if (!admissibility(pr, z).admissible) continue;
    ++tried;
    StandardModel m = build_model(pr, z);
    ExtensionData e = canonical_extension(m.metric);
    ASSERT_EQ(e.pair.l_dim(), pr.l_dim());
    ASSERT_EQ(e.pair.a_dim(), pr.a_dim());
    EXPECT_EQ(*e.base, pr.algebra());
    EXPECT_EQ(e.pair.module().action(), pr.module().action());
    EXPECT_TRUE(equivalent_cocycles(pr, e.cocycle, z));
  }
  EXPECT_GT(tried, 0);
}
