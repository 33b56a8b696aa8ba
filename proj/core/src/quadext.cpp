#include "mla/quadext.hpp"

#include "mla/errors.hpp"

namespace mla {

LieAlgebra standard_brackets(const Pair& pr, const QuadraticCocycle& z) {
  const std::size_t n = pr.l_dim(), m = pr.a_dim(), N = 2 * n + m;
  if (z.p() != 2 || z.alpha.module_dim != m || z.alpha.l_dim != n) throw UsageError("standard_brackets: cocycle shape");
  const LieAlgebra& l = pr.algebra();
  const Matrix& G = pr.form().gram();
  const std::size_t A = n, L = n + m;
  StructureTable t(N);
  // [L_i, L_j] = gamma(L_i, L_j, .) + alpha(L_i, L_j) + [L_i, L_j]_l
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      Vector v = zero_vector(N);
      for (std::size_t k = 0; k < n; ++k) v[k] = z.gamma.value({i, j, k})[0];
      Vector a = z.alpha.value({i, j});
      for (std::size_t e = 0; e < m; ++e) v[A + e] = a[e];
      for (std::size_t k = 0; k < n; ++k) v[L + k] = l.constant(i, j, k);
      t.set(L + i, L + j, v);
    }
  // [L_i, A_e] = rho(L_i) A_e - <A_e, alpha(L_i, .)>
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t e = 0; e < m; ++e) {
      Vector v = zero_vector(N);
      for (std::size_t f = 0; f < m; ++f) v[A + f] = pr.module().rho(i)(f, e);
      for (std::size_t k = 0; k < n; ++k) v[k] = -G.apply(z.alpha.value({i, k}))[e];
      t.set(L + i, A + e, v);
    }
  // [L_i, Z_k] = -Z_k o ad(L_i)
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      Vector v = zero_vector(N);
      for (std::size_t s = 0; s < n; ++s) v[s] = -l.constant(i, s, k);
      t.set(L + i, k, v);
    }
  // [A_e, A_f] = <rho(.) A_e, A_f>
  for (std::size_t e = 0; e < m; ++e)
    for (std::size_t f = e + 1; f < m; ++f) {
      Vector v = zero_vector(N);
      for (std::size_t s = 0; s < n; ++s) v[s] = (G * pr.module().rho(s))(f, e);
      t.set(A + e, A + f, v);
    }
  for (std::size_t k = 0; k < n; ++k) t.labels.push_back(l.label(k) + "*");
  for (std::size_t e = 0; e < m; ++e) t.labels.push_back("A" + std::to_string(e + 1));
  for (std::size_t k = 0; k < n; ++k) t.labels.push_back(l.label(k));
  return LieAlgebra::unchecked(t);
}

SymmetricForm standard_form(const Pair& pr) {
  const std::size_t n = pr.l_dim(), m = pr.a_dim();
  Matrix g(2 * n + m, 2 * n + m);
  for (std::size_t k = 0; k < n; ++k) {
    g(k, n + m + k) = 1;
    g(n + m + k, k) = 1;
  }
  g.set_block(n, n, pr.form().gram());
  return SymmetricForm(g);
}

static const char* defect_text(CocycleDefect d) {
  switch (d) {
    case CocycleDefect::shape:
      return "cocycle has the wrong shape for the pair";
    case CocycleDefect::alpha_not_closed:
      return "d alpha != 0";
    case CocycleDefect::gamma_equation:
      return "d gamma != 1/2 <alpha ∧ alpha>";
    case CocycleDefect::none:
      break;
  }
  return "";
}

StandardModel build_model(const Pair& pr, const QuadraticCocycle& z) {
  if (auto d = check_cocycle(pr, z); d != CocycleDefect::none)
    throw InvalidInput(std::string("not a quadratic cocycle: ") + defect_text(d));
  LieAlgebra g = standard_brackets(pr, z);
  if (jacobi_check(g)) throw InternalError("standard model of a cocycle violates the Jacobi identity");
  SymmetricForm f = standard_form(pr);
  if (auto v = check_metric(g, f)) throw InternalError("standard model form not invariant: " + v->describe());
  return StandardModel{MetricLieAlgebra{share(std::move(g)), f}, pr, z, std::nullopt};
}

ModifiedModel build_modified(const Pair& pr, const SymmetricForm& ip_l, const QuadraticCocycle& z) {
  const std::size_t n = pr.l_dim(), m = pr.a_dim(), N = 2 * n + m;
  const LieAlgebra& l = pr.algebra();
  if (ip_l.dim() != n) throw UsageError("build_modified: ip_l has the wrong dimension");
  for (std::size_t k = 0; k < n; ++k)
    if (!(l.ad(k).transpose() * ip_l.gram() + ip_l.gram() * l.ad(k)).is_zero())
      throw InvalidInput("build_modified: ip_l is not invariant");
  StandardModel base = build_model(pr, z);
  Matrix g = base.metric.form.gram();
  g.set_block(n + m, n + m, ip_l.gram());
  SymmetricForm f(g);
  if (auto v = check_metric(base.metric.lie(), f)) throw InvalidInput("modified form: " + v->describe());
  StandardModel mod{MetricLieAlgebra{base.metric.algebra, f}, pr, z, ip_l};

  QuadraticCocycle target = z;
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b)
      for (std::size_t c = b + 1; c < n; ++c) {
        Rational v = ip_l(l.bracket(a, b), unit_vector(n, c));
        target.gamma.add_value({a, b, c}, Vector{-Rational(1, 2) * v});
      }
  Matrix phi = Matrix::identity(N);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t t = 0; t < n; ++t) phi(t, n + m + k) = Rational(1, 2) * ip_l.gram()(k, t);
  return ModifiedModel{mod, phi, target};
}

Matrix psi_map(const Pair& pr, const QuadraticCochain& c) {
  const std::size_t n = pr.l_dim(), m = pr.a_dim(), N = 2 * n + m;
  if (c.tau.degree != 1 || c.sigma.degree != 2) throw UsageError("psi_map: expects p = 2 cochains");
  const Matrix& G = pr.form().gram();
  Matrix tau(m, n);
  for (std::size_t j = 0; j < n; ++j) tau.set_col(j, c.tau.value({j}));
  Matrix tstar = tau.transpose() * G;  // l <- a
  Matrix tt = tstar * tau;
  Matrix psi = Matrix::identity(N);
  psi.set_block(0, n, -tstar);
  Matrix corner(n, n);
  for (std::size_t j = 0; j < n; ++j)
    for (std::size_t k = 0; k < n; ++k) corner(k, j) = (j == k ? Rational(0) : c.sigma.value({j, k})[0]) - Rational(1, 2) * tt(k, j);
  psi.set_block(0, n + m, corner);
  psi.set_block(n, n + m, tau);
  return psi;
}

bool is_balanced(const StandardModel& model) {
  CanonicalIdeals ci = canonical_ideals(model.metric);
  return ci.i == model.lstar_block();
}

}  // namespace mla
