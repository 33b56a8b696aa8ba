#include <gtest/gtest.h>

#include "mla/catalog.hpp"
#include "mla/errors.hpp"
#include "support.hpp"

using namespace mla;
using mla::fixtures::Gen;
using mla::fixtures::is_homomorphism;
using mla::fixtures::is_isometry;
using mla::fixtures::plus_pair;
using mla::fixtures::random_cocycle;
using mla::fixtures::trivial_pair;

namespace {

Pair empty_pair(AlgebraPtr l) { return Pair(Representation::trivial(l, 0, SymmetricForm::euclidean(0))); }

QuadraticCocycle with_gamma(const Pair& pr, const Rational& g) {
  QuadraticCocycle z = zero_cocycle(pr);
  z.gamma.add_value({0, 1, 2}, Vector{g});
  return z;
}

// alpha(Y,Z) = given vector of a, gamma = 0 on a three-dimensional l.
QuadraticCocycle alpha_yz(const Pair& pr, const Vector& a) {
  QuadraticCocycle z = zero_cocycle(pr);
  z.alpha.add_value({pr.l_dim() - 2, pr.l_dim() - 1}, a);
  return z;
}

Vector trivial_vector(const Pair& pr, std::size_t i) { return unit_vector(pr.a_dim(), i); }

}  // namespace

TEST(BuildModel, OscillatorBracketsByHand) {
  Pair pr = plus_pair(BaseName::R1, {1});
  StandardModel m = build_model(pr, zero_cocycle(pr));
  ASSERT_EQ(m.dim(), 4u);
  StructureTable t(4);
  t.set(3, 1, Vector{0, 0, 1, 0});
  t.set(3, 2, Vector{0, -1, 0, 0});
  t.set(1, 2, Vector{1, 0, 0, 0});
  EXPECT_EQ(m.metric.lie(), LieAlgebra::make(t));
  EXPECT_EQ(index(m.metric), 1u);
}

TEST(BuildModel, Sl2Coadjoint) {
  AlgebraPtr sl2 = share(base_algebra(BaseName::sl2));
  Pair pr = empty_pair(sl2);
  StandardModel m = build_model(pr, zero_cocycle(pr));
  EXPECT_EQ(index(m.metric), 3u);
  EXPECT_EQ(signature(m.metric.form), (Inertia{3, 0, 3}));
  // [L, Z] = ad*(L) Z: on the dual basis, -ad(L)^T
  for (std::size_t i = 0; i < 3; ++i)
    for (std::size_t k = 0; k < 3; ++k) {
      Vector br = m.metric.lie().bracket(3 + i, k);
      Vector expect = concat(-sl2->ad(i).transpose().col(k), zero_vector(3));
      EXPECT_EQ(br, expect);
    }
  EXPECT_TRUE(is_balanced(m));
}

TEST(BuildModel, AbelianAlphaReadsOff) {
  Pair pr = trivial_pair(share(LieAlgebra::abelian(2)), 1);
  QuadraticCocycle z = zero_cocycle(pr);
  z.alpha.add_value({0, 1}, Vector{1});
  StandardModel m = build_model(pr, z);
  ASSERT_EQ(m.dim(), 5u);
  // [Y, Z] has A-component alpha(Y,Z) = 1
  EXPECT_EQ(m.metric.lie().bracket(3, 4)[2], 1);
}

TEST(BuildModel, RejectsNonCocycle) {
  Pair pr = plus_pair(BaseName::n2, {1});
  QuadraticCocycle z = alpha_yz(pr, Vector{1, 0});
  ASSERT_FALSE(is_quadratic_cocycle(pr, z));
  EXPECT_THROW(build_model(pr, z), InvalidInput);
}

TEST(BuildModel, JacobiIffCocycle) {
  Gen g(71);
  AlgebraPtr l4 = share(direct_sum(base_algebra(BaseName::h1), LieAlgebra::abelian(1)));
  std::vector<Pair> pairs{plus_pair(BaseName::n2, {1}, 1), plus_pair(BaseName::h1, {1}), trivial_pair(l4, 2)};
  int yes = 0, no = 0;
  for (int t = 0; t < 60; ++t) {
    const Pair& pr = pairs[t % pairs.size()];
    QuadraticCocycle z = t % 2 ? random_cocycle(g, pr) : QuadraticCocycle{g.cochain(pr.coeff(), 2), g.cochain(pr.scalar(), 3)};
    bool cocycle = is_quadratic_cocycle(pr, z);
    LieAlgebra br = standard_brackets(pr, z);
    EXPECT_EQ(cocycle, !jacobi_check(br).has_value());
    EXPECT_FALSE(check_metric(br, standard_form(pr)) && cocycle);
    (cocycle ? yes : no)++;
  }
  EXPECT_GT(yes, 0);
  EXPECT_GT(no, 0);
}

TEST(BuildModified, ZeroFormIsStandard) {
  Gen g(72);
  Pair pr = plus_pair(BaseName::n2, {1}, 1);
  QuadraticCocycle z = random_cocycle(g, pr);
  ModifiedModel mm = build_modified(pr, SymmetricForm::zero(3), z);
  EXPECT_EQ(mm.equivalence, Matrix::identity(mm.model.dim()));
  EXPECT_EQ(mm.target, z);
  EXPECT_EQ(mm.model.metric.form, build_model(pr, z).metric.form);
}

TEST(BuildModified, KillingMultiples) {
  for (auto b : {BaseName::sl2, BaseName::su2}) {
    AlgebraPtr l = share(base_algebra(b));
    Pair pr = b == BaseName::sl2 ? empty_pair(l)
                                 : Pair(Representation::adjoint(l).with_form(SymmetricForm::euclidean(3)));
    for (Rational c : {Rational(0), Rational(1), Rational(-3, 2)}) {
      SymmetricForm ip(c * killing_form(*l).gram());
      ModifiedModel mm = build_modified(pr, ip, zero_cocycle(pr));
      StandardModel target = build_model(pr, mm.target);
      EXPECT_TRUE(is_homomorphism(mm.equivalence, mm.model.metric.lie(), target.metric.lie()));
      EXPECT_TRUE(is_isometry(mm.equivalence, mm.model.metric.form, target.metric.form));
      EXPECT_FALSE(check_metric(mm.model.metric.lie(), mm.model.metric.form));
    }
  }
  EXPECT_THROW(build_modified(empty_pair(share(base_algebra(BaseName::n2))), SymmetricForm::euclidean(3),
                              zero_cocycle(empty_pair(share(base_algebra(BaseName::n2))))),
               InvalidInput);
}

TEST(PsiMap, IdentityAndIsometry) {
  Gen g(73);
  Pair pr = plus_pair(BaseName::r3m1, {1}, 1);
  EXPECT_EQ(psi_map(pr, zero_quadratic_cochain(pr)), Matrix::identity(2 * 3 + 3));
  SymmetricForm f = standard_form(pr);
  for (int t = 0; t < 10; ++t) EXPECT_TRUE(is_isometry(psi_map(pr, g.qcochain(pr)), f, f));
}

TEST(PsiMap, ConjugatesBrackets) {
  Gen g(74);
  for (auto pr : {plus_pair(BaseName::n2, {1}, 1), plus_pair(BaseName::R2, {1}, 1), plus_pair(BaseName::h1, {2})}) {
    for (int t = 0; t < 5; ++t) {
      QuadraticCocycle z = random_cocycle(g, pr);
      QuadraticCochain c = g.qcochain(pr);
      Matrix psi = psi_map(pr, c);
      LieAlgebra moved = build_model(pr, q_action(pr, z, c)).metric.lie();
      EXPECT_TRUE(is_homomorphism(psi, moved, build_model(pr, z).metric.lie()));
    }
  }
}

TEST(PsiMap, GroupHomomorphism) {
  Gen g(75);
  Pair pr = plus_pair(BaseName::n2, {1, 2});
  for (int t = 0; t < 10; ++t) {
    QuadraticCochain c1 = g.qcochain(pr), c2 = g.qcochain(pr);
    EXPECT_EQ(psi_map(pr, q_star(pr, c1, c2)), psi_map(pr, c1) * psi_map(pr, c2));
  }
}

TEST(Balanced, Examples) {
  Pair osc = plus_pair(BaseName::R1, {1});
  EXPECT_TRUE(is_balanced(build_model(osc, zero_cocycle(osc))));
  Pair n2 = plus_pair(BaseName::n2, {1});
  EXPECT_FALSE(is_balanced(build_model(n2, zero_cocycle(n2))));
  Pair sl2 = empty_pair(share(base_algebra(BaseName::sl2)));
  EXPECT_TRUE(is_balanced(build_model(sl2, with_gamma(sl2, 5))));
}

TEST(Admissibility, Examples) {
  for (auto pr : {empty_pair(share(base_algebra(BaseName::h1))), plus_pair(BaseName::h1, {1}),
                  plus_pair(BaseName::h1, {}, 1)}) {
    for (Rational gm : {Rational(0), Rational(1), Rational(-7, 3)}) {
      AdmissibilityReport r = admissibility(pr, with_gamma(pr, gm));
      EXPECT_FALSE(r.admissible);
      EXPECT_FALSE(is_balanced(build_model(pr, with_gamma(pr, gm))));
    }
  }
  for (const auto& c : controls()) {
    if (c.name.rfind("r3m2", 0) != 0) continue;
    AdmissibilityReport r = admissibility(c.pair, c.cocycle);
    EXPECT_TRUE(r.admissible) << r.summary();
    EXPECT_TRUE(r.rho_semisimple);
  }
  Pair r2 = trivial_pair(share(LieAlgebra::abelian(2)), 1);
  QuadraticCocycle z = zero_cocycle(r2);
  z.alpha.add_value({0, 1}, Vector{1});
  EXPECT_TRUE(admissibility(r2, z).admissible);
  EXPECT_FALSE(admissibility(r2, zero_cocycle(r2)).admissible);
}

TEST(Admissibility, NonSemisimpleModuleRejected) {
  Matrix x(4, 4);
  x(0, 3) = 1;
  x(1, 2) = -1;
  Matrix gram(4, 4);
  gram.set_block(0, 2, Matrix::identity(2));
  gram.set_block(2, 0, Matrix::identity(2));
  Representation rep(share(LieAlgebra::abelian(1)), 4, {x}, SymmetricForm(gram));
  ASSERT_FALSE(check_representation(rep));
  Pair pr(rep);
  AdmissibilityReport r = admissibility(pr, zero_cocycle(pr));
  EXPECT_FALSE(r.rho_semisimple);
  EXPECT_FALSE(r.admissible);
  EXPECT_EQ(r.admissible, is_balanced(build_model(pr, zero_cocycle(pr))));
}

TEST(Admissibility, AgreesWithBalancedAndExplicitSystems) {
  Gen g(76);
  std::vector<Pair> pairs{plus_pair(BaseName::n2, {1}, 1), plus_pair(BaseName::r3m1, {1}),
                          plus_pair(BaseName::h1, {1}, 1), plus_pair(BaseName::R2, {1}, 1),
                          plus_pair(BaseName::R3, {1, 1})};
  for (int t = 0; t < 25; ++t) {
    const Pair& pr = pairs[t % pairs.size()];
    QuadraticCocycle z = random_cocycle(g, pr);
    AdmissibilityReport r = admissibility(pr, z);
    EXPECT_EQ(r.admissible, is_balanced(build_model(pr, z))) << r.summary();
    EXPECT_EQ(r.balanced_direct, r.admissible);
    if (r.rho_semisimple) {
      ASSERT_FALSE(r.per_k.empty());
      EXPECT_EQ(r.a0_explicit, r.per_k[0].a_k);
      EXPECT_EQ(r.b0_explicit, r.per_k[0].b_k);
    }
    bool all = r.rho_semisimple;
    for (const auto& s : r.per_k) all = all && s.a_k && s.b_k;
    EXPECT_EQ(all, r.admissible);
    if (r.regularly_admissible) {
      EXPECT_TRUE(r.admissible);
    }
  }
}

TEST(Admissibility, InvariantUnderAction) {
  Gen g(77);
  for (auto pr : {plus_pair(BaseName::n2, {1}, 1), plus_pair(BaseName::R2, {1}, 1)}) {
    for (int t = 0; t < 6; ++t) {
      QuadraticCocycle z = random_cocycle(g, pr);
      QuadraticCocycle moved = q_action(pr, z, g.qcochain(pr));
      EXPECT_EQ(admissibility(pr, z).admissible, admissibility(pr, moved).admissible);
    }
  }
}

TEST(Indecomposability, N2Examples) {
  Pair two = plus_pair(BaseName::n2, {1}, 2);
  QuadraticCocycle z = alpha_yz(two, trivial_vector(two, 2));
  ASSERT_TRUE(is_quadratic_cocycle(two, z));
  ASSERT_TRUE(admissibility(two, z).admissible);
  EXPECT_EQ(is_indecomposable_class(two, z).verdict, Decomposability::decomposable);

  Pair one = plus_pair(BaseName::n2, {1}, 1);
  QuadraticCocycle z1 = alpha_yz(one, trivial_vector(one, 2));
  ASSERT_TRUE(admissibility(one, z1).admissible);
  EXPECT_EQ(is_indecomposable_class(one, z1).verdict, Decomposability::indecomposable);
}

TEST(Indecomposability, SumsAreDecomposable) {
  Pair p1 = plus_pair(BaseName::R1, {1}), p2 = plus_pair(BaseName::R1, {2});
  PairSum s = sum_classes(p1, zero_cocycle(p1), p2, zero_cocycle(p2));
  ASSERT_TRUE(admissibility(s.pair, s.cocycle).admissible);
  EXPECT_EQ(is_indecomposable_class(s.pair, s.cocycle).verdict, Decomposability::decomposable);

  Pair n2 = plus_pair(BaseName::n2, {1}, 1);
  QuadraticCocycle z = alpha_yz(n2, trivial_vector(n2, 2));
  Pair line(Representation::trivial(share(LieAlgebra::abelian(0)), 1, SymmetricForm::euclidean(1)));
  PairSum s2 = sum_classes(n2, z, line, zero_cocycle(line));
  ASSERT_TRUE(admissibility(s2.pair, s2.cocycle).admissible);
  EXPECT_EQ(is_indecomposable_class(s2.pair, s2.cocycle).verdict, Decomposability::decomposable);
}

TEST(RoundTrip, CanonicalExtensionRecoversClass) {
  Gen g(78);
  std::vector<Pair> pairs{plus_pair(BaseName::n2, {1}, 1), plus_pair(BaseName::r3m1, {1, 2}),
                          plus_pair(BaseName::R2, {1}, 1)};
  int done = 0;
  for (int t = 0; t < 30 && done < 8; ++t) {
    const Pair& pr = pairs[t % pairs.size()];
    QuadraticCocycle z = random_cocycle(g, pr);
    if (!admissibility(pr, z).admissible) continue;
    ++done;
    StandardModel m = build_model(pr, z);
    ExtensionData e = canonical_extension(m.metric);
    EXPECT_EQ(e.ideal, m.lstar_block());
    ASSERT_EQ(*e.base, pr.algebra());
    ASSERT_EQ(e.pair.module().action(), pr.module().action());
    EXPECT_TRUE(equivalent_cocycles(pr, e.cocycle, z));
  }
  EXPECT_GT(done, 0);
}
