#include "mla/metric.hpp"

#include "mla/errors.hpp"

namespace mla {

std::string MetricViolation::describe() const {
  switch (kind) {
    case Kind::shape:
      return "form dimension differs from algebra dimension";
    case Kind::degenerate:
      return "form is degenerate";
    case Kind::not_invariant:
      return "invariance fails: <[e" + std::to_string(i + 1) + ",e" + std::to_string(k + 1) + "],e" +
             std::to_string(j + 1) + "> != <e" + std::to_string(i + 1) + ",[e" + std::to_string(k + 1) + ",e" +
             std::to_string(j + 1) + "]>";
  }
  return {};
}

std::optional<MetricViolation> check_metric(const LieAlgebra& g, const SymmetricForm& form) {
  if (form.dim() != g.dim()) return MetricViolation{MetricViolation::Kind::shape};
  if (!form.nondegenerate()) return MetricViolation{MetricViolation::Kind::degenerate};
  const Matrix& G = form.gram();
  for (std::size_t k = 0; k < g.dim(); ++k) {
    // <[e_i,e_k],e_j> - <e_i,[e_k,e_j]> = -(ad_k^T G + G ad_k)_{ij}
    Matrix s = g.ad(k).transpose() * G + G * g.ad(k);
    for (std::size_t i = 0; i < g.dim(); ++i)
      for (std::size_t j = 0; j < g.dim(); ++j)
        if (sgn(s(i, j)) != 0) return MetricViolation{MetricViolation::Kind::not_invariant, i, j, k};
  }
  return std::nullopt;
}

MetricLieAlgebra validate_metric(AlgebraPtr g, SymmetricForm form) {
  if (auto v = check_metric(*g, form)) throw InvalidInput(v->describe());
  return MetricLieAlgebra{std::move(g), std::move(form)};
}

MetricLieAlgebra validate_metric(LieAlgebra g, SymmetricForm form) {
  return validate_metric(share(std::move(g)), std::move(form));
}

std::size_t index(const MetricLieAlgebra& g) { return signature(g.form).negatives; }

CanonicalIdeals canonical_ideals(const MetricLieAlgebra& g) {
  const std::size_t n = g.dim();
  CanonicalIdeals out;
  out.filtration = filtration(Representation::adjoint(g.algebra));
  const std::size_t len = out.filtration.length();
  out.i = Subspace::zero(n);
  out.j = Subspace::full(n);
  for (std::size_t k = 0; k <= len; ++k) {
    Subspace r = out.filtration.radical(k), s = out.filtration.socle(k);
    out.i = out.i + r.intersect(s);
    out.j = out.j.intersect(r + s);
  }
  if (!(out.j == orthogonal_complement(out.i, g.form)))
    throw InternalError("canonical_ideals: j(g) differs from i(g)^perp");
  if (!g.form.isotropic(out.i)) throw InternalError("canonical_ideals: i(g) is not isotropic");
  out.simple_part = semisimple_ideal(g.lie());
  if (!out.has_simple_ideals() && !out.i.contains(bracket_span(g.lie(), out.j, out.j)))
    throw InternalError("canonical_ideals: j(g)/i(g) is not abelian");
  return out;
}

namespace {

struct Decomposition {
  Matrix inverse;  // coordinates in [ideal | a | section] column blocks
  std::size_t r = 0, m = 0;
};

Decomposition decompose(const Matrix& ideal, const Matrix& a, const Matrix& section) {
  Matrix t = hstack(hstack(ideal, a), section);
  auto inv = inverse(t);
  if (!inv) throw InvalidInput("extension data: ideal, a-representatives and section are not complementary");
  return {*inv, ideal.cols(), a.cols()};
}

QuadraticCocycle cocycle_from(const MetricLieAlgebra& g, const LieAlgebra& l, const Pair& pair, const Matrix& ideal,
                              const Matrix& a, const Matrix& section) {
  const std::size_t r = section.cols(), m = a.cols();
  Decomposition dec = decompose(ideal, a, section);
  QuadraticCocycle z = zero_cocycle(pair);
  std::vector<Vector> s;
  for (std::size_t b = 0; b < r; ++b) s.push_back(section.col(b));
  for (std::size_t x = 0; x < r; ++x)
    for (std::size_t y = x + 1; y < r; ++y) {
      Vector br = g.lie().bracket(s[x], s[y]);
      Vector w = br;
      for (std::size_t k = 0; k < r; ++k) axpy(w, -l.constant(x, y, k), s[k]);
      Vector c = dec.inverse.apply(w);
      for (std::size_t k = 0; k < r; ++k)
        if (sgn(c[r + m + k]) != 0) throw InternalError("extract_cocycle: section part of alpha does not vanish");
      Vector alpha(c.begin() + r, c.begin() + r + m);
      z.alpha.add_value({x, y}, alpha);
      for (std::size_t t = y + 1; t < r; ++t) z.gamma.add_value({x, y, t}, Vector{g.form(br, s[t])});
    }
  return z;
}

}  // namespace

ExtensionData canonical_extension(const MetricLieAlgebra& g) {
  CanonicalIdeals ci = canonical_ideals(g);
  if (ci.has_simple_ideals())
    throw InvalidInput("metric Lie algebra has simple ideals (dimension " + std::to_string(ci.simple_part.dim()) +
                       "); no canonical extension");
  const std::size_t n = g.dim();
  const Matrix& G = g.form.gram();
  const std::size_t r = ci.i.dim();
  Matrix u = ci.i.basis();                             // r x n
  Matrix c = complement_basis(ci.j, Subspace::full(n));  // r x n
  Matrix p = u * G * c.transpose();
  auto pinv = inverse(p);
  if (!pinv) throw InternalError("canonical_extension: i(g) does not pair with a complement of j(g)");
  Matrix v = pinv->transpose() * c;
  Matrix vv = v * G * v.transpose();
  v -= Rational(1, 2) * (vv * u);
  Subspace il = ci.i + Subspace::span(n, v);
  Subspace va = orthogonal_complement(il, g.form);
  Matrix e = va.basis();
  const std::size_t m = e.rows();

  Matrix ideal_cols = u.transpose(), a_cols = e.transpose(), sec = v.transpose();
  Decomposition dec = decompose(ideal_cols, a_cols, sec);

  StructureTable t(r);
  for (std::size_t x = 0; x < r; ++x)
    for (std::size_t y = x + 1; y < r; ++y) {
      Vector cc = dec.inverse.apply(g.lie().bracket(v.row(x), v.row(y)));
      t.set(x, y, Vector(cc.begin() + r + m, cc.end()));
    }
  AlgebraPtr l = share(LieAlgebra::make(t));
  std::vector<Matrix> act;
  for (std::size_t x = 0; x < r; ++x) {
    Matrix rho(m, m);
    for (std::size_t f = 0; f < m; ++f) {
      Vector cc = dec.inverse.apply(g.lie().bracket(v.row(x), e.row(f)));
      for (std::size_t k = 0; k < m; ++k) rho(k, f) = cc[r + k];
    }
    act.push_back(rho);
  }
  Representation a(l, m, std::move(act), SymmetricForm(g.form.restricted_gram(e)));
  if (auto w = check_representation(a)) throw InternalError("canonical_extension: induced module invalid: " + w->describe());
  ExtensionData d{g, l, Pair(a), ci.i, ci.j, sec, ideal_cols, a_cols, {}};
  d.cocycle = extract_cocycle(d);
  return d;
}

QuadraticCocycle extract_cocycle(const ExtensionData& d) {
  QuadraticCocycle z = cocycle_from(d.source, *d.base, d.pair, d.ideal_basis, d.a_basis, d.section);
  if (!is_quadratic_cocycle(d.pair, z)) throw InternalError("extract_cocycle: result is not a quadratic cocycle");
  return z;
}

ExtensionData with_section(const ExtensionData& d, const Matrix& section) {
  if (section.rows() != d.section.rows() || section.cols() != d.section.cols())
    throw UsageError("with_section: shape mismatch");
  const Matrix& G = d.source.form.gram();
  if (!(section.transpose() * G * section).is_zero()) throw InvalidInput("with_section: section is not isotropic");
  for (std::size_t b = 0; b < section.cols(); ++b)
    if (!d.perp.contains(section.col(b) - d.section.col(b)))
      throw InvalidInput("with_section: section is not a lift of the quotient map");
  ExtensionData out = d;
  out.section = section;
  out.cocycle = extract_cocycle(out);
  return out;
}

}  // namespace mla
