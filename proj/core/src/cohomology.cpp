#include "mla/cochain.hpp"
#include "mla/errors.hpp"

namespace mla {

QuadraticCochain zero_quadratic_cochain(const Pair& pr, std::size_t p) {
  if (p < 2 || p % 2) throw UsageError("quadratic cochains need an even degree p >= 2");
  return {pr.coeff().zero(p - 1), pr.scalar().zero(2 * p - 2)};
}

QuadraticCocycle zero_cocycle(const Pair& pr, std::size_t p) {
  if (p < 2 || p % 2) throw UsageError("quadratic cocycles need an even degree p >= 2");
  return {pr.coeff().zero(p), pr.scalar().zero(2 * p - 1)};
}

static bool shape_ok(const Pair& pr, const QuadraticCocycle& z) {
  const std::size_t p = z.alpha.degree;
  return p >= 2 && p % 2 == 0 && z.alpha.l_dim == pr.l_dim() && z.alpha.module_dim == pr.a_dim() &&
         z.alpha.coords.size() == pr.coeff().cochain_dim(p) && z.gamma.l_dim == pr.l_dim() &&
         z.gamma.module_dim == 1 && z.gamma.degree == 2 * p - 1 &&
         z.gamma.coords.size() == pr.scalar().cochain_dim(2 * p - 1);
}

static void require_shape(const Pair& pr, const QuadraticCochain& c) {
  const std::size_t q = c.tau.degree;
  if (q % 2 == 0 || c.tau.l_dim != pr.l_dim() || c.tau.module_dim != pr.a_dim() || c.sigma.degree != 2 * q ||
      c.sigma.module_dim != 1 || c.sigma.l_dim != pr.l_dim())
    throw UsageError("quadratic cochain has inconsistent shape");
}

CocycleDefect check_cocycle(const Pair& pr, const QuadraticCocycle& z) {
  if (!shape_ok(pr, z)) return CocycleDefect::shape;
  if (!pr.coeff().differential(z.alpha).is_zero()) return CocycleDefect::alpha_not_closed;
  Cochain lhs = pr.scalar().differential(z.gamma);
  Cochain rhs = Rational(1, 2) * wedge_pair(pr, z.alpha, z.alpha);
  if (!(lhs == rhs)) return CocycleDefect::gamma_equation;
  return CocycleDefect::none;
}

QuadraticCochain q_star(const Pair& pr, const QuadraticCochain& c1, const QuadraticCochain& c2) {
  require_shape(pr, c1);
  require_shape(pr, c2);
  return {c1.tau + c2.tau, c1.sigma + c2.sigma + Rational(1, 2) * wedge_pair(pr, c1.tau, c2.tau)};
}

QuadraticCochain q_inverse(const Pair& pr, const QuadraticCochain& c) {
  require_shape(pr, c);
  return {-c.tau, Rational(1, 2) * wedge_pair(pr, c.tau, c.tau) - c.sigma};
}

QuadraticCocycle q_action(const Pair& pr, const QuadraticCocycle& z, const QuadraticCochain& c) {
  require_shape(pr, c);
  if (!shape_ok(pr, z) || c.tau.degree + 1 != z.alpha.degree) throw UsageError("q_action: degree mismatch");
  Cochain dtau = pr.coeff().differential(c.tau);
  Cochain half = z.alpha + Rational(1, 2) * dtau;
  return {z.alpha + dtau, z.gamma + pr.scalar().differential(c.sigma) + wedge_pair(pr, half, c.tau)};
}

std::optional<QuadraticCochain> equivalent_cocycles(const Pair& pr, const QuadraticCocycle& z1,
                                                    const QuadraticCocycle& z2) {
  if (!shape_ok(pr, z1) || !shape_ok(pr, z2) || z1.p() != z2.p())
    throw UsageError("equivalent_cocycles: cocycles do not match the pair");
  const std::size_t p = z1.p();
  const CochainComplex& cc = pr.coeff();
  const CochainComplex& sc = pr.scalar();
  auto tau_sol = solve_affine(cc.differential_matrix(p - 1), (z1.alpha - z2.alpha).coords);
  if (!tau_sol) return std::nullopt;
  Cochain tau0 = cc.from_coords(p - 1, tau_sol->particular);
  Cochain dtau = cc.differential(tau0);
  Cochain beta = z2.alpha + Rational(1, 2) * dtau;
  Cochain rhs = z1.gamma - z2.gamma - wedge_pair(pr, beta, tau0);
  const Matrix& ds = sc.differential_matrix(2 * p - 2);
  const Subspace& ker = tau_sol->kernel;
  Matrix w(rhs.coords.size(), ker.dim());
  std::vector<Cochain> ks;
  for (std::size_t j = 0; j < ker.dim(); ++j) {
    ks.push_back(cc.from_coords(p - 1, ker.basis().row(j)));
    w.set_col(j, wedge_pair(pr, beta, ks.back()).coords);
  }
  auto sol = solve_affine(hstack(ds, w), rhs.coords);
  if (!sol) return std::nullopt;
  const std::size_t ns = ds.cols();
  Vector sigma(sol->particular.begin(), sol->particular.begin() + ns);
  Cochain tau = tau0;
  for (std::size_t j = 0; j < ks.size(); ++j) tau = tau + sol->particular[ns + j] * ks[j];
  QuadraticCochain c{tau, sc.from_coords(2 * p - 2, sigma)};
  if (!(q_action(pr, z2, c) == z1)) throw InternalError("equivalent_cocycles: witness does not verify");
  return c;
}

std::optional<std::string> check_morphism(const Pair& p1, const Pair& p2, const PairMorphism& f) {
  const std::size_t n1 = p1.l_dim(), n2 = p2.l_dim(), m1 = p1.a_dim(), m2 = p2.a_dim();
  if (f.s.rows() != n2 || f.s.cols() != n1 || f.u.rows() != m1 || f.u.cols() != m2)
    return "morphism matrices have wrong shapes";
  const LieAlgebra& g1 = p1.algebra();
  const LieAlgebra& g2 = p2.algebra();
  for (std::size_t i = 0; i < n1; ++i)
    for (std::size_t j = i + 1; j < n1; ++j)
      if (f.s.apply(g1.bracket(i, j)) != g2.bracket(f.s.col(i), f.s.col(j)))
        return "S does not preserve the bracket of basis pair (" + std::to_string(i) + "," + std::to_string(j) + ")";
  if (!(f.u.transpose() * p1.form().gram() * f.u == p2.form().gram())) return "U is not isometric";
  for (std::size_t i = 0; i < n1; ++i)
    if (!(f.u * p2.module().rho(f.s.col(i)) == p1.module().rho(i) * f.u))
      return "U does not intertwine the actions at basis element " + std::to_string(i);
  return std::nullopt;
}

Cochain pullback_cochain(const Matrix& s, const Matrix& u, const Cochain& c, std::size_t l1_dim) {
  const std::size_t p = c.degree;
  if (s.rows() != c.l_dim || s.cols() != l1_dim || u.cols() != c.module_dim)
    throw UsageError("pullback_cochain: shape mismatch");
  Cochain out = Cochain::zero(l1_dim, p, u.rows());
  const SubsetIndex& src = subsets(c.l_dim, p);
  const SubsetIndex& dst = subsets(l1_dim, p);
  std::vector<Vector> uvals;
  for (std::size_t i = 0; i < src.count(); ++i) uvals.push_back(u.apply(c.value(i)));
  for (std::size_t k = 0; k < dst.count(); ++k) {
    const auto& K = dst.subset(k);
    Vector acc = zero_vector(u.rows());
    for (std::size_t i = 0; i < src.count(); ++i) {
      if (is_zero(uvals[i])) continue;
      const auto& I = src.subset(i);
      Matrix minor(p, p);
      for (std::size_t r = 0; r < p; ++r)
        for (std::size_t t = 0; t < p; ++t) minor(r, t) = s(I[r], K[t]);
      Rational d = determinant(minor);
      if (sgn(d) != 0) axpy(acc, d, uvals[i]);
    }
    for (std::size_t a = 0; a < u.rows(); ++a) out.coords[k * u.rows() + a] = acc[a];
  }
  return out;
}

QuadraticCocycle pullback(const PairMorphism& f, const QuadraticCocycle& z, std::size_t l1_dim) {
  return {pullback_cochain(f.s, f.u, z.alpha, l1_dim), pullback_cochain(f.s, Matrix::identity(1), z.gamma, l1_dim)};
}

PairMorphism inner_automorphism(const Pair& pr, const Vector& l) {
  return {exp_nilpotent(pr.algebra().ad(l)), exp_nilpotent(-pr.module().rho(l))};
}

Pair direct_sum(const Pair& p1, const Pair& p2) {
  AlgebraPtr g = share(direct_sum(p1.algebra(), p2.algebra()));
  return Pair(external_sum(p1.module(), p2.module(), g));
}

PairSum sum_classes(const Pair& p1, const QuadraticCocycle& z1, const Pair& p2, const QuadraticCocycle& z2) {
  Pair pr = direct_sum(p1, p2);
  const std::size_t n1 = p1.l_dim(), n2 = p2.l_dim(), m1 = p1.a_dim(), m2 = p2.a_dim();
  const std::size_t n = n1 + n2, m = m1 + m2;
  Matrix q1(n1, n), q2(n2, n), j1(m, m1), j2(m, m2);
  for (std::size_t i = 0; i < n1; ++i) q1(i, i) = 1;
  for (std::size_t i = 0; i < n2; ++i) q2(i, n1 + i) = 1;
  for (std::size_t i = 0; i < m1; ++i) j1(i, i) = 1;
  for (std::size_t i = 0; i < m2; ++i) j2(m1 + i, i) = 1;
  QuadraticCocycle a = pullback({q1, j1}, z1, n);
  QuadraticCocycle b = pullback({q2, j2}, z2, n);
  return {pr, {a.alpha + b.alpha, a.gamma + b.gamma}};
}

FiberStructure fiber_structure(const Pair& pr, const Cochain& alpha) {
  const std::size_t p = alpha.degree;
  if (!pr.coeff().differential(alpha).is_zero()) throw UsageError("fiber_structure: alpha is not closed");
  Cochain aa = wedge_pair(pr, alpha, alpha);
  CohomologySpace top(pr.scalar(), 2 * p);
  if (!top.is_coboundary(aa)) throw UsageError("fiber_structure: a ∪ a is not zero");
  CohomologySpace h(pr.scalar(), 2 * p - 1);
  CohomologySpace h1(pr.coeff(), p - 1);
  std::vector<Vector> image;
  for (const auto& tau : h1.representatives()) image.push_back(h.class_coords(wedge_pair(pr, alpha, tau)));
  Subspace img = Subspace::span(h.dim(), image);
  FiberStructure f;
  f.fiber_dim = h.dim() - img.dim();
  Matrix comp = complement_basis(img, Subspace::full(h.dim()));
  for (std::size_t r = 0; r < comp.rows(); ++r) {
    Cochain d = pr.scalar().zero(2 * p - 1);
    for (std::size_t i = 0; i < h.dim(); ++i) d = d + comp(r, i) * h.representatives()[i];
    f.directions.push_back(d);
  }
  return f;
}

QuadraticCocycle translate(const QuadraticCocycle& z, const Cochain& delta) { return {z.alpha, z.gamma + delta}; }

}  // namespace mla
