#include <sstream>

#include "mla/errors.hpp"
#include "mla/quadext.hpp"

namespace mla {

namespace {

// Preimage in the ambient space of the socle of the submodule w/bottom of top/bottom.
Subspace subquotient_socle(const Representation& rep, const Subspace& top, const Subspace& bottom,
                           const Subspace& w) {
  const std::size_t N = rep.module_dim();
  SubModule sub = submodule(rep, top);
  std::vector<Vector> b_coords, w_coords;
  for (std::size_t i = 0; i < bottom.dim(); ++i) b_coords.push_back(top.coordinates(bottom.basis().row(i)));
  QuotientModule q = quotient_module(sub.rep, Subspace::span(top.dim(), b_coords));
  for (std::size_t i = 0; i < w.dim(); ++i) w_coords.push_back(q.map.coords(top.coordinates(w.basis().row(i))));
  Subspace soc = module_socle(q.rep, Subspace::span(q.rep.module_dim(), w_coords));
  std::vector<Vector> out;
  Matrix bt = sub.embedding.transpose();
  for (std::size_t i = 0; i < soc.dim(); ++i) out.push_back(bt.apply(q.map.lift(soc.basis().row(i))));
  return bottom + Subspace::span(N, out);
}

Subspace project(const Subspace& u, std::size_t begin, std::size_t count) {
  std::vector<Vector> out;
  for (std::size_t i = 0; i < u.dim(); ++i) {
    Vector v = u.basis().row(i);
    out.emplace_back(v.begin() + begin, v.begin() + begin + count);
  }
  return Subspace::span(count, out);
}

Subspace embed(const Subspace& u, std::size_t ambient, std::size_t begin) {
  std::vector<Vector> out;
  for (std::size_t i = 0; i < u.dim(); ++i) {
    Vector v = zero_vector(ambient);
    for (std::size_t k = 0; k < u.ambient_dim(); ++k) v[begin + k] = u.basis()(i, k);
    out.push_back(v);
  }
  return Subspace::span(ambient, out);
}

// Condition (A_0): the only central L0 in ker rho admitting A0, Z0 with the two identities is 0.
bool explicit_a0(const Pair& pr, const QuadraticCocycle& z) {
  const std::size_t n = pr.l_dim(), m = pr.a_dim();
  const LieAlgebra& l = pr.algebra();
  Subspace zk = center(l);
  {
    // L0 in ker rho: sum_i L0_i rho(e_i) = 0, entrywise
    std::vector<Vector> eqs;
    for (std::size_t r = 0; r < m; ++r)
      for (std::size_t c = 0; c < m; ++c) {
        Vector eq(n);
        for (std::size_t i = 0; i < n; ++i) eq[i] = pr.module().rho(i)(r, c);
        eqs.push_back(eq);
      }
    if (!eqs.empty()) zk = zk.intersect(Subspace::span(n, kernel_basis(Matrix::from_rows(eqs, n))));
  }
  const std::size_t t = zk.dim();
  if (t == 0) return true;
  const std::size_t cols = t + m + n;  // c, A0, Z0
  const Matrix& G = pr.form().gram();
  std::vector<Vector> eqs;
  for (std::size_t i = 0; i < n; ++i) {
    // alpha(e_i, L0) - rho(e_i) A0 = 0
    for (std::size_t e = 0; e < m; ++e) {
      Vector eq = zero_vector(cols);
      for (std::size_t s = 0; s < t; ++s)
        for (std::size_t j = 0; j < n; ++j)
          if (sgn(zk.basis()(s, j)) != 0) eq[s] += zk.basis()(s, j) * z.alpha.value({i, j})[e];
      for (std::size_t f = 0; f < m; ++f) eq[t + f] = -pr.module().rho(i)(e, f);
      eqs.push_back(eq);
    }
    // gamma(e_i, L0, e_j) + <A0, alpha(e_i, e_j)> - Z0([e_i, e_j]) = 0
    for (std::size_t j = 0; j < n; ++j) {
      Vector eq = zero_vector(cols);
      for (std::size_t s = 0; s < t; ++s)
        for (std::size_t u = 0; u < n; ++u)
          if (sgn(zk.basis()(s, u)) != 0) eq[s] += zk.basis()(s, u) * z.gamma.value({i, u, j})[0];
      Vector ga = G.apply(z.alpha.value({i, j}));
      for (std::size_t f = 0; f < m; ++f) eq[t + f] = ga[f];
      for (std::size_t k = 0; k < n; ++k) eq[t + m + k] = -l.constant(i, j, k);
      eqs.push_back(eq);
    }
  }
  Matrix ker = kernel_basis(Matrix::from_rows(eqs, cols));
  for (std::size_t r = 0; r < ker.rows(); ++r)
    for (std::size_t s = 0; s < t; ++s)
      if (sgn(ker(r, s)) != 0) return false;
  return true;
}

struct B0Data {
  Subspace image;       // alpha_0(ker [,]_l)
  Subspace invariants;  // a^l
};

B0Data explicit_b0(const Pair& pr, const QuadraticCocycle& z) {
  const std::size_t n = pr.l_dim(), m = pr.a_dim();
  const LieAlgebra& l = pr.algebra();
  InvariantSplit split = invariant_split(pr.module());
  Matrix basis = vstack(split.invariants.basis(), split.complement.basis());
  const std::size_t k0 = split.invariants.dim();
  Matrix coords = *inverse(basis.transpose());
  const SubsetIndex& s2 = subsets(n, 2);
  Matrix br(n, s2.count());
  for (std::size_t s = 0; s < s2.count(); ++s) br.set_col(s, l.bracket(s2.subset(s)[0], s2.subset(s)[1]));
  Matrix ker = kernel_basis(br);
  std::vector<Vector> img;
  for (std::size_t r = 0; r < ker.rows(); ++r) {
    Vector v = zero_vector(m);
    for (std::size_t s = 0; s < s2.count(); ++s)
      if (sgn(ker(r, s)) != 0) axpy(v, ker(r, s), z.alpha.value(s));
    Vector c = coords.apply(v);
    Vector a0 = zero_vector(m);
    for (std::size_t i = 0; i < k0; ++i) axpy(a0, c[i], basis.row(i));
    img.push_back(a0);
  }
  return {Subspace::span(m, img), split.invariants};
}

}  // namespace

std::string AdmissibilityReport::summary() const {
  std::ostringstream os;
  os << "rho semisimple: " << (rho_semisimple ? "yes" : "no") << "\n";
  for (const auto& s : per_k) {
    os << "k=" << s.k << ": (a_k) " << (s.a_k ? "holds" : "FAILS") << ", (b_k) " << (s.b_k ? "holds" : "FAILS");
    if (s.witness) os << ", witness dim " << s.witness->dim();
    os << "\n";
  }
  os << "(b0'): " << (b0_prime ? "holds" : "fails") << "\n";
  os << "admissible: " << (admissible ? "yes" : "no") << ", regularly admissible: " << (regularly_admissible ? "yes" : "no")
     << "\n";
  return os.str();
}

AdmissibilityReport admissibility(const Pair& pr, const QuadraticCocycle& z) {
  AdmissibilityReport rep;
  rep.rho_semisimple = is_semisimple(pr.module());
  StandardModel model = build_model(pr, z);
  const std::size_t n = pr.l_dim(), m = pr.a_dim(), N = model.dim();
  Representation ad = Representation::adjoint(model.metric.algebra);
  ModuleFiltration lf = filtration(Representation::adjoint(pr.algebra_ptr()));
  const Subspace lstar_a = Subspace::coordinate(N, 0, n + m);
  const Matrix& Ga = pr.form().gram();
  bool all = true;
  for (std::size_t k = 0; !lf.radical(k).is_zero(); ++k) {
    const Subspace rk = lf.radical(k);
    AdmissibilityStep step;
    step.k = k;
    Subspace hk = lstar_a + embed(rk, N, n + m);
    Subspace hperp = embed(rk.annihilator(), N, 0);
    Subspace sdk = subquotient_socle(ad, hk, hperp, hk);
    step.a_k = lstar_a.contains(sdk);
    Subspace smk = subquotient_socle(ad, hk, hperp, lstar_a);
    Subspace pra = project(smk, n, m);
    step.b_k = SymmetricForm(Ga).nondegenerate_on(pra);
    if (k == 0) rep.b0_prime = pra.is_zero();
    if (!step.a_k)
      step.witness = project(sdk, n + m, n);
    else if (!step.b_k)
      step.witness = pra;
    all = all && step.a_k && step.b_k;
    rep.per_k.push_back(step);
  }
  if (n == 0) rep.b0_prime = true;
  rep.admissible = rep.rho_semisimple && all;
  rep.regularly_admissible = rep.admissible && rep.b0_prime;
  rep.balanced_direct = is_balanced(model);
  if (rep.balanced_direct != rep.admissible)
    throw InternalError("admissibility: socle conditions disagree with i(d) = l*");

  if (n > 0) {
    rep.a0_explicit = explicit_a0(pr, z);
    if (rep.rho_semisimple) {
      B0Data b0 = explicit_b0(pr, z);
      rep.b0_explicit = SymmetricForm(Ga).nondegenerate_on(b0.image);
      bool b0p = b0.image == b0.invariants;
      if (rep.a0_explicit != rep.per_k[0].a_k) throw InternalError("admissibility: (a_0) disagrees with (A_0)");
      if (rep.b0_explicit != rep.per_k[0].b_k) throw InternalError("admissibility: (b_0) disagrees with (B_0)");
      if (b0p != rep.b0_prime) throw InternalError("admissibility: (b_0') disagrees with (B_0')");
    }
  }
  return rep;
}

}  // namespace mla
