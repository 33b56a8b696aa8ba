#include <sstream>

#include "mla/errors.hpp"
#include "mla/polynomial.hpp"
#include "mla/quadext.hpp"

namespace mla {

namespace {

Subspace joint_kernel(const Representation& rep) {
  const std::size_t m = rep.module_dim();
  Matrix stacked(0, m);
  for (std::size_t i = 0; i < rep.algebra_dim(); ++i) stacked = vstack(stacked, rep.rho(i));
  return Subspace::span(m, kernel_basis(stacked));
}

Subspace module_image(const Representation& rep) {
  const std::size_t m = rep.module_dim();
  std::vector<Vector> cols;
  for (std::size_t i = 0; i < rep.algebra_dim(); ++i)
    for (std::size_t c = 0; c < m; ++c) cols.push_back(rep.rho(i).col(c));
  return Subspace::span(m, cols);
}

// Invariant vectors A with <A, alpha> exact. A nondegenerate line in here splits off a trivial summand.
Subspace split_candidates(const Pair& pr, const QuadraticCocycle& z) {
  const std::size_t m = pr.a_dim();
  Subspace inv = joint_kernel(pr.module());
  if (inv.is_zero()) return inv;
  CohomologySpace h2(pr.scalar(), 2);
  const Matrix& G = pr.form().gram();
  const std::size_t s2 = z.alpha.coords.size() / std::max<std::size_t>(m, 1);
  // columns: <A_r, alpha> for the basis A_r of a^l
  Matrix pairing(s2, inv.dim());
  for (std::size_t r = 0; r < inv.dim(); ++r) {
    Vector ga = G.apply(inv.basis().row(r));
    for (std::size_t s = 0; s < s2; ++s) pairing(s, r) = dot(ga, z.alpha.value(s));
  }
  Subspace coeffs = h2.coboundaries().preimage(pairing);
  return coeffs.image(inv.basis().transpose());
}

std::optional<Vector> nonisotropic_vector(const SymmetricForm& f, const Subspace& w) {
  for (std::size_t i = 0; i < w.dim(); ++i)
    if (sgn(f(w.basis().row(i), w.basis().row(i))) != 0) return w.basis().row(i);
  for (std::size_t i = 0; i < w.dim(); ++i)
    for (std::size_t j = i + 1; j < w.dim(); ++j)
      if (sgn(f(w.basis().row(i), w.basis().row(j))) != 0) return w.basis().row(i) + w.basis().row(j);
  return std::nullopt;
}

bool lie_decomposable_dim3(const LieAlgebra& l) {
  if (l.is_abelian()) return true;
  Subspace d = derived_algebra(l);
  return d.dim() == 1 && center(l).intersect(d).is_zero();
}

// For l = R^2: does (l, a) split as (R Y', a1) + (R Z', a2) with both lines nonzero?
// Weights of rho on rho(l)a must vanish on at most two real lines.
bool plane_pair_splits(const Pair& pr, std::string& why) {
  const Representation& rep = pr.module();
  Subspace v = module_image(rep);
  const std::size_t k = v.dim();
  if (k == 0) {
    why = "rho = 0";
    return true;
  }
  std::vector<Matrix> restricted;
  for (std::size_t i = 0; i < 2; ++i) {
    Matrix r(k, k);
    for (std::size_t c = 0; c < k; ++c) r.set_col(c, v.coordinates(rep.rho(i).apply(v.basis().row(c))));
    restricted.push_back(r);
  }
  Vector xs, ys;
  for (std::size_t t = 0; t <= k; ++t) {
    xs.push_back(Rational(static_cast<long>(t)));
    ys.push_back(determinant(restricted[0] + Rational(static_cast<long>(t)) * restricted[1]));
  }
  Polynomial p = interpolate(xs, ys);
  if (p.is_zero()) throw InternalError("indecomposability: rho(l)a contains a zero weight");
  std::size_t finite = static_cast<std::size_t>(squarefree_part(p).degree());
  std::size_t real = real_root_count(p);
  std::size_t lines = real + (static_cast<std::size_t>(p.degree()) < k ? 1 : 0);
  std::ostringstream os;
  os << "det(rho(Y) + t rho(Z)) on rho(l)a has " << finite << " distinct finite roots, " << real << " real";
  if (static_cast<std::size_t>(p.degree()) < k) os << ", plus a root at infinity";
  why = os.str();
  return real == finite && lines <= 2;
}

}  // namespace

IndecomposabilityResult is_indecomposable_class(const Pair& pr, const QuadraticCocycle& z) {
  const std::size_t n = pr.l_dim(), m = pr.a_dim();
  IndecomposabilityResult out;
  if (n == 0) {
    out.verdict = m >= 2 ? Decomposability::decomposable : Decomposability::indecomposable;
    out.certificate = m >= 2 ? "l = 0 and a splits into nondegenerate summands" : "l = 0 and dim a <= 1";
    return out;
  }
  Subspace w = split_candidates(pr, z);
  if (auto a = nonisotropic_vector(pr.form(), w)) {
    std::ostringstream os;
    os << "invariant vector " << *a << " with <A,A> != 0 and <A, alpha> exact splits off (0, R A)";
    out.verdict = Decomposability::decomposable;
    out.certificate = os.str();
    return out;
  }
  const LieAlgebra& l = pr.algebra();
  std::string no_a_split = "no invariant A with <A,A> != 0 and <A, alpha> exact";
  bool lie_indecomposable = (n == 1) || (n == 2 && !l.is_abelian()) || (n == 3 && !lie_decomposable_dim3(l));
  if (lie_indecomposable) {
    out.verdict = Decomposability::indecomposable;
    out.certificate = "l is indecomposable as a Lie algebra; " + no_a_split;
    return out;
  }
  if (n == 2 && l.is_abelian()) {
    std::string why;
    bool splits = plane_pair_splits(pr, why);
    bool trivial_class = equivalent_cocycles(pr, z, zero_cocycle(pr)).has_value();
    if (splits && trivial_class) {
      out.verdict = Decomposability::decomposable;
      out.certificate = "class is [0,0] and the pair splits along two lines: " + why;
    } else {
      out.verdict = Decomposability::indecomposable;
      out.certificate = no_a_split + "; " + (trivial_class ? "pair does not split: " + why : "class is not [0,0]");
    }
    return out;
  }
  out.verdict = Decomposability::undecided;
  out.certificate = no_a_split + "; l decomposes as a Lie algebra and splits of l are not enumerated";
  return out;
}

}  // namespace mla
