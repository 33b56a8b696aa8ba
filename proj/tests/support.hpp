#pragma once

#include <algorithm>
#include <numeric>
#include <random>

#include "mla/catalog.hpp"

namespace mla::fixtures {

// Seeded generator for small exact data.
struct Gen {
  std::mt19937_64 eng;
  explicit Gen(std::uint64_t seed) : eng(seed) {}

  long integer(long lo, long hi) { return std::uniform_int_distribution<long>(lo, hi)(eng); }
  bool coin() { return integer(0, 1) == 1; }
  Rational small(long range = 3, long max_den = 2) {
    Rational q(integer(-range, range), integer(1, max_den));
    q.canonicalize();
    return q;
  }
  Rational nonzero(long range = 3, long max_den = 2) {
    Rational q = 0;
    while (sgn(q) == 0) q = small(range, max_den);
    return q;
  }
  Vector vec(std::size_t n, long range = 3) {
    Vector v(n);
    for (auto& x : v) x = small(range);
    return v;
  }
  Matrix mat(std::size_t r, std::size_t c, long range = 3) {
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i) m.set_row(i, vec(c, range));
    return m;
  }
  Matrix invertible(std::size_t n) {
    for (;;) {
      Matrix m = mat(n, n);
      if (sgn(determinant(m)) != 0) return m;
    }
  }
  Cochain cochain(const CochainComplex& cx, std::size_t p) { return cx.from_coords(p, vec(cx.cochain_dim(p))); }
  QuadraticCochain qcochain(const Pair& pr) { return {cochain(pr.coeff(), 1), cochain(pr.scalar(), 2)}; }
};

inline AlgebraPtr base(BaseName b) { return share(base_algebra(b)); }

// rho^+ blocks with the given values on the first basis vector, then `trivial` Euclidean lines.
inline Pair plus_pair(BaseName b, const std::vector<Rational>& lambdas, std::size_t trivial = 0) {
  AlgebraPtr l = base(b);
  RepFamilySpec spec;
  for (const auto& x : lambdas) {
    RepBlock blk;
    blk.kind = RepBlock::Kind::plus;
    blk.weight = zero_vector(l->dim());
    blk.weight[0] = x;
    spec.blocks.push_back(blk);
  }
  if (trivial > 0) {
    RepBlock blk;
    blk.kind = RepBlock::Kind::trivial;
    blk.q = trivial;
    spec.blocks.push_back(blk);
  }
  return Pair(build_rep(spec, l));
}

inline Pair trivial_pair(AlgebraPtr l, std::size_t m) {
  return Pair(Representation::trivial(l, m, SymmetricForm::euclidean(m)));
}

// Random quadratic cocycle: random class representative moved by a random quadratic cochain.
inline QuadraticCocycle random_cocycle(Gen& g, const Pair& pr) {
  CohomologySpace h2(pr.coeff(), 2);
  QuadraticCocycle z = zero_cocycle(pr);
  for (const auto& rep : h2.representatives()) z.alpha = z.alpha + g.small() * rep;
  Cochain rhs = Rational(1, 2) * wedge_pair(pr, z.alpha, z.alpha);
  if (pr.l_dim() >= 4) {
    auto prim = CohomologySpace(pr.scalar(), 4).primitive(rhs);
    if (!prim) {
      z.alpha = Cochain::zero(pr.l_dim(), 2, pr.a_dim());
    } else {
      z.gamma = *prim;
    }
  }
  CohomologySpace h3(pr.scalar(), 3);
  for (std::size_t i = 0; i < h3.cocycles().dim(); ++i)
    z.gamma = z.gamma + g.small() * pr.scalar().from_coords(3, h3.cocycles().basis().row(i));
  return q_action(pr, z, g.qcochain(pr));
}

// c(args) for arbitrary basis index lists, by sorting with an explicit sign.
inline Vector naive_value(const Cochain& c, std::vector<std::size_t> args) {
  int sign = 1;
  for (std::size_t i = 0; i < args.size(); ++i)
    for (std::size_t j = 0; j + 1 < args.size() - i; ++j)
      if (args[j] > args[j + 1]) {
        std::swap(args[j], args[j + 1]);
        sign = -sign;
      }
  for (std::size_t i = 0; i + 1 < args.size(); ++i)
    if (args[i] == args[i + 1]) return zero_vector(c.module_dim);
  const SubsetIndex& idx = subsets(c.l_dim, c.degree);
  for (std::size_t s = 0; s < idx.count(); ++s)
    if (idx.subset(s) == args) {
      Vector v = c.value(s);
      return sign < 0 ? -v : v;
    }
  return zero_vector(c.module_dim);
}

// c(v_1, ..., v_p) for vectors, by multilinear expansion over basis indices.
inline Vector naive_eval(const Cochain& c, const std::vector<Vector>& vs) {
  const std::size_t n = c.l_dim, p = vs.size();
  Vector out = zero_vector(c.module_dim);
  std::vector<std::size_t> idx(p, 0);
  for (;;) {
    Rational coef = 1;
    for (std::size_t k = 0; k < p && sgn(coef) != 0; ++k) coef *= vs[k][idx[k]];
    if (sgn(coef) != 0) axpy(out, coef, naive_value(c, idx));
    std::size_t k = 0;
    while (k < p && ++idx[k] == n) idx[k++] = 0;
    if (k == p) break;
  }
  return out;
}

// Chevalley-Eilenberg differential straight from the alternating-sum formula.
inline Cochain naive_d(const Representation& rep, const Cochain& c) {
  const LieAlgebra& l = rep.algebra();
  const std::size_t n = l.dim(), p = c.degree, m = c.module_dim;
  Cochain out = Cochain::zero(n, p + 1, m);
  if (p + 1 > n) return out;
  const SubsetIndex& idx = subsets(n, p + 1);
  for (std::size_t s = 0; s < idx.count(); ++s) {
    const auto& L = idx.subset(s);
    Vector acc = zero_vector(m);
    for (std::size_t i = 0; i <= p; ++i) {
      std::vector<std::size_t> rest;
      for (std::size_t t = 0; t <= p; ++t)
        if (t != i) rest.push_back(L[t]);
      Vector v = rep.rho(L[i]).apply(naive_value(c, rest));
      axpy(acc, (i % 2 == 0) ? Rational(1) : Rational(-1), v);
    }
    for (std::size_t i = 0; i <= p; ++i)
      for (std::size_t j = i + 1; j <= p; ++j) {
        std::vector<Vector> args{l.bracket(L[i], L[j])};
        for (std::size_t t = 0; t <= p; ++t)
          if (t != i && t != j) args.push_back(unit_vector(n, L[t]));
        axpy(acc, ((i + j) % 2 == 0) ? Rational(1) : Rational(-1), naive_eval(c, args));
      }
    out.add_value(L, acc);
  }
  return out;
}

// Structure constants of g pulled through an invertible map: returns true when phi[x,y]_a = [phi x, phi y]_b.
inline bool is_homomorphism(const Matrix& phi, const LieAlgebra& a, const LieAlgebra& b) {
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = i + 1; j < a.dim(); ++j)
      if (!(phi.apply(a.bracket(i, j)) == b.bracket(phi.col(i), phi.col(j)))) return false;
  return true;
}

inline bool is_isometry(const Matrix& phi, const SymmetricForm& a, const SymmetricForm& b) {
  return phi.transpose() * b.gram() * phi == a.gram();
}

}  // namespace mla::fixtures
