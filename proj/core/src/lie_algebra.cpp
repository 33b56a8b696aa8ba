#include "mla/lie_algebra.hpp"

#include <mutex>

#include "mla/errors.hpp"

namespace mla {

StructureTable::StructureTable(std::size_t dim) : n_(dim), ad_(dim, Matrix(dim, dim)) {}

void StructureTable::set(std::size_t i, std::size_t j, const Vector& v) {
  if (i >= n_ || j >= n_ || v.size() != n_) throw UsageError("StructureTable::set out of range");
  if (i == j) {
    if (!is_zero(v)) throw InvalidInput("bracket [e_i, e_i] must vanish");
    return;
  }
  ad_[i].set_col(j, v);
  ad_[j].set_col(i, -v);
}

void StructureTable::add(std::size_t i, std::size_t j, std::size_t k, const Rational& c) {
  if (i >= n_ || j >= n_ || k >= n_) throw UsageError("StructureTable::add out of range");
  if (i == j) throw InvalidInput("bracket [e_i, e_i] must vanish");
  ad_[i](k, j) += c;
  ad_[j](k, i) -= c;
}

Vector StructureTable::get(std::size_t i, std::size_t j) const { return ad_.at(i).col(j); }

struct LieAlgebra::Cache {
  std::once_flag once;
  ReductiveData data;
};

LieAlgebra::LieAlgebra() : cache_(std::make_shared<Cache>()) {}

LieAlgebra LieAlgebra::unchecked(const StructureTable& t) {
  LieAlgebra g;
  g.n_ = t.n_;
  g.ad_ = t.ad_;
  g.labels_ = t.labels;
  if (!g.labels_.empty() && g.labels_.size() != g.n_) throw UsageError("label count differs from dimension");
  return g;
}

LieAlgebra LieAlgebra::make(const StructureTable& t) {
  LieAlgebra g = unchecked(t);
  if (auto w = jacobi_check(g)) {
    throw InvalidInput("Jacobi identity fails on basis triple (" + std::to_string(w->i) + "," +
                       std::to_string(w->j) + "," + std::to_string(w->k) + ")");
  }
  return g;
}

LieAlgebra LieAlgebra::abelian(std::size_t n) { return unchecked(StructureTable(n)); }

std::string LieAlgebra::label(std::size_t i) const {
  if (i < labels_.size()) return labels_[i];
  return "e" + std::to_string(i + 1);
}

Matrix LieAlgebra::ad(const Vector& x) const {
  if (x.size() != n_) throw UsageError("ad: vector size mismatch");
  Matrix m(n_, n_);
  for (std::size_t i = 0; i < n_; ++i)
    if (sgn(x[i]) != 0) m += x[i] * ad_[i];
  return m;
}

Vector LieAlgebra::bracket(const Vector& x, const Vector& y) const { return ad(x).apply(y); }

StructureTable LieAlgebra::table() const {
  StructureTable t(n_);
  t.ad_ = ad_;
  t.labels = labels_;
  return t;
}

bool LieAlgebra::is_abelian() const {
  for (const auto& m : ad_)
    if (!m.is_zero()) return false;
  return true;
}

const ReductiveData& LieAlgebra::reductive() const {
  std::call_once(cache_->once, [this] {
    ReductiveData d;
    d.nilpotency_radical = nilpotency_radical(*this);
    QuotientMap q(Subspace::full(n_), d.nilpotency_radical);
    LieAlgebra red = quotient_algebra(*this, q);
    Subspace z = center(red);
    for (std::size_t i = 0; i < z.dim(); ++i) d.central_lifts.push_back(q.lift(z.basis().row(i)));
    cache_->data = std::move(d);
  });
  return cache_->data;
}

std::optional<JacobiWitness> jacobi_check(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = j + 1; k < n; ++k) {
        Vector s = g.ad(i).apply(g.bracket(j, k));
        s += g.ad(j).apply(g.bracket(k, i));
        s += g.ad(k).apply(g.bracket(i, j));
        if (!is_zero(s)) return JacobiWitness{i, j, k, s};
      }
  return std::nullopt;
}

Subspace bracket_span(const LieAlgebra& g, const Subspace& u, const Subspace& v) {
  std::vector<Vector> out;
  std::vector<Matrix> adu;
  for (std::size_t a = 0; a < u.dim(); ++a) adu.push_back(g.ad(u.basis().row(a)));
  for (const auto& m : adu)
    for (std::size_t b = 0; b < v.dim(); ++b) out.push_back(m.apply(v.basis().row(b)));
  return Subspace::span(g.dim(), out);
}

Subspace derived_algebra(const LieAlgebra& g) {
  std::vector<Vector> out;
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = i + 1; j < g.dim(); ++j) out.push_back(g.bracket(i, j));
  return Subspace::span(g.dim(), out);
}

Subspace centralizer(const LieAlgebra& g, const Subspace& u) {
  const std::size_t n = g.dim();
  Matrix stacked(0, n);
  for (std::size_t a = 0; a < u.dim(); ++a) stacked = vstack(stacked, g.ad(u.basis().row(a)));
  if (stacked.rows() == 0) return Subspace::full(n);
  return Subspace::span(n, kernel_basis(stacked));
}

Subspace center(const LieAlgebra& g) { return centralizer(g, Subspace::full(g.dim())); }

bool is_ideal(const LieAlgebra& g, const Subspace& u) {
  return u.contains(bracket_span(g, Subspace::full(g.dim()), u));
}

bool is_subalgebra(const LieAlgebra& g, const Subspace& u) { return u.contains(bracket_span(g, u, u)); }

StructureReport structure_report(const LieAlgebra& g) {
  StructureReport r;
  const std::size_t n = g.dim();
  const Subspace all = Subspace::full(n);
  r.derived = derived_algebra(g);
  r.center = center(g);
  Subspace cur = all;
  r.lower_central.entries.push_back(cur);
  while (true) {
    Subspace next = bracket_span(g, all, cur);
    if (next == cur) break;
    r.lower_central.entries.push_back(next);
    cur = next;
  }
  r.is_nilpotent = cur.is_zero();
  cur = all;
  r.derived_series.entries.push_back(cur);
  while (true) {
    Subspace next = bracket_span(g, cur, cur);
    if (next == cur) break;
    r.derived_series.entries.push_back(next);
    cur = next;
  }
  r.is_solvable = cur.is_zero();
  return r;
}

SymmetricForm killing_form(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  Matrix b(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i; j < n; ++j) {
      Rational t = 0;
      const Matrix& x = g.ad(i);
      const Matrix& y = g.ad(j);
      for (std::size_t k = 0; k < n; ++k)
        for (std::size_t l = 0; l < n; ++l)
          if (sgn(x(k, l)) != 0 && sgn(y(l, k)) != 0) t += x(k, l) * y(l, k);
      b(i, j) = t;
      b(j, i) = t;
    }
  return SymmetricForm(b);
}

KillingRadical killing_and_radical(const LieAlgebra& g) {
  KillingRadical kr{killing_form(g), {}};
  kr.radical = orthogonal_complement(derived_algebra(g), kr.killing);
  return kr;
}

Subspace nilpotency_radical(const LieAlgebra& g) {
  Subspace r = killing_and_radical(g).radical;
  Subspace gp = derived_algebra(g);
  Subspace a = bracket_span(g, Subspace::full(g.dim()), r);
  if (!(a == r.intersect(gp))) throw InternalError("nilpotency radical: [g, r] differs from r ∩ g'");
  return a;
}

LieAlgebra direct_sum(const LieAlgebra& a, const LieAlgebra& b) {
  const std::size_t n = a.dim() + b.dim();
  StructureTable t(n);
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = i + 1; j < a.dim(); ++j) {
      Vector v = concat(a.bracket(i, j), zero_vector(b.dim()));
      t.set(i, j, v);
    }
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = i + 1; j < b.dim(); ++j) {
      Vector v = concat(zero_vector(a.dim()), b.bracket(i, j));
      t.set(a.dim() + i, a.dim() + j, v);
    }
  if (!a.labels().empty() || !b.labels().empty()) {
    for (std::size_t i = 0; i < a.dim(); ++i) t.labels.push_back(a.label(i));
    for (std::size_t i = 0; i < b.dim(); ++i) t.labels.push_back(b.label(i));
  }
  return LieAlgebra::unchecked(t);
}

Subspace semisimple_ideal(const LieAlgebra& g) {
  Subspace c = centralizer(g, killing_and_radical(g).radical);
  return bracket_span(g, c, c);
}

LieAlgebra restrict_to(const LieAlgebra& g, const Matrix& basis) {
  const std::size_t k = basis.rows();
  if (k == 0) return LieAlgebra::abelian(0);
  Matrix coords = left_inverse(basis.transpose());
  StructureTable t(k);
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a + 1; b < k; ++b) {
      Vector v = g.bracket(basis.row(a), basis.row(b));
      Vector c = coords.apply(v);
      if (basis.transpose().apply(c) != v) throw UsageError("restrict_to: basis does not span a subalgebra");
      t.set(a, b, c);
    }
  return LieAlgebra::unchecked(t);
}

LieAlgebra quotient_algebra(const LieAlgebra& g, const QuotientMap& q) {
  const std::size_t k = q.dim();
  StructureTable t(k);
  const Matrix& c = q.complement();
  for (std::size_t a = 0; a < k; ++a)
    for (std::size_t b = a + 1; b < k; ++b) t.set(a, b, q.coords(g.bracket(c.row(a), c.row(b))));
  return LieAlgebra::unchecked(t);
}

}  // namespace mla
