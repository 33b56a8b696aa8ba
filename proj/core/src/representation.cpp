#include "mla/representation.hpp"

#include "mla/errors.hpp"
#include "mla/polynomial.hpp"

namespace mla {

Representation::Representation(AlgebraPtr algebra, std::size_t module_dim, std::vector<Matrix> action,
                               std::optional<SymmetricForm> form)
    : algebra_(std::move(algebra)), m_(module_dim), action_(std::move(action)), form_(std::move(form)) {
  if (!algebra_) throw UsageError("representation without algebra");
  if (action_.size() != algebra_->dim()) throw UsageError("one action matrix per basis element required");
  for (const auto& a : action_)
    if (a.rows() != m_ || a.cols() != m_) throw UsageError("action matrix has wrong shape");
  if (form_ && form_->dim() != m_) throw UsageError("module form has wrong dimension");
}

Representation Representation::trivial(AlgebraPtr algebra, std::size_t module_dim,
                                       std::optional<SymmetricForm> form) {
  std::size_t n = algebra->dim();
  return Representation(std::move(algebra), module_dim, std::vector<Matrix>(n, Matrix(module_dim, module_dim)),
                        std::move(form));
}

Representation Representation::adjoint(AlgebraPtr algebra) {
  std::vector<Matrix> act;
  for (std::size_t i = 0; i < algebra->dim(); ++i) act.push_back(algebra->ad(i));
  std::size_t n = algebra->dim();
  return Representation(std::move(algebra), n, std::move(act));
}

Matrix Representation::rho(const Vector& x) const {
  if (x.size() != action_.size()) throw UsageError("rho: vector size mismatch");
  Matrix m(m_, m_);
  for (std::size_t i = 0; i < x.size(); ++i)
    if (sgn(x[i]) != 0) m += x[i] * action_[i];
  return m;
}

const SymmetricForm& Representation::metric() const {
  if (!form_) throw UsageError("module carries no form");
  return *form_;
}

Representation Representation::with_form(std::optional<SymmetricForm> f) const {
  return Representation(algebra_, m_, action_, std::move(f));
}

std::string RepresentationWitness::describe() const {
  switch (kind) {
    case Kind::homomorphism:
      return "rho([e" + std::to_string(i + 1) + ",e" + std::to_string(j + 1) + "]) != [rho(e" +
             std::to_string(i + 1) + "),rho(e" + std::to_string(j + 1) + ")]";
    case Kind::skew_adjoint:
      return "rho(e" + std::to_string(i + 1) + ") is not skew-adjoint for the module form";
    case Kind::form_degenerate:
      return "module form is degenerate";
  }
  return {};
}

std::optional<RepresentationWitness> check_representation(const Representation& rep) {
  const LieAlgebra& g = rep.algebra();
  for (std::size_t i = 0; i < g.dim(); ++i)
    for (std::size_t j = i + 1; j < g.dim(); ++j)
      if (!(rep.rho(g.bracket(i, j)) == commutator(rep.rho(i), rep.rho(j))))
        return RepresentationWitness{RepresentationWitness::Kind::homomorphism, i, j};
  if (rep.has_form()) {
    const Matrix& gram = rep.metric().gram();
    if (!rep.metric().nondegenerate()) return RepresentationWitness{RepresentationWitness::Kind::form_degenerate, 0, 0};
    for (std::size_t i = 0; i < g.dim(); ++i) {
      Matrix s = rep.rho(i).transpose() * gram + gram * rep.rho(i);
      if (!s.is_zero()) return RepresentationWitness{RepresentationWitness::Kind::skew_adjoint, i, i};
    }
  }
  return std::nullopt;
}

bool is_submodule(const Representation& rep, const Subspace& w) {
  for (std::size_t i = 0; i < rep.algebra_dim(); ++i)
    if (!w.contains(w.image(rep.rho(i)))) return false;
  return true;
}

Subspace ModuleFiltration::socle(std::size_t k) const {
  if (k < socles.entries.size()) return socles.entries[k];
  return socles.entries.back();
}

Subspace ModuleFiltration::radical(std::size_t k) const {
  if (k < radicals.entries.size()) return radicals.entries[k];
  return radicals.entries.back();
}

std::size_t ModuleFiltration::length() const {
  return std::max(socles.entries.size(), radicals.entries.size()) - 1;
}

namespace {

// Matrix of x acting on the quotient top/bottom, where x preserves both.
Matrix induced_action(const Matrix& x, const QuotientMap& q) {
  const std::size_t k = q.dim();
  Matrix m(k, k);
  for (std::size_t c = 0; c < k; ++c) m.set_col(c, q.coords(x.apply(q.complement().row(c))));
  return m;
}

}  // namespace

Subspace module_radical(const Representation& rep, const Subspace& w) {
  if (!is_submodule(rep, w)) throw UsageError("module_radical: W is not a submodule");
  const std::size_t n = rep.module_dim();
  if (w.is_zero()) return w;
  const ReductiveData& red = rep.algebra().reductive();
  std::vector<Vector> gens;
  for (std::size_t a = 0; a < red.nilpotency_radical.dim(); ++a) {
    Matrix x = rep.rho(red.nilpotency_radical.basis().row(a));
    for (std::size_t b = 0; b < w.dim(); ++b) gens.push_back(x.apply(w.basis().row(b)));
  }
  const Subspace u0 = Subspace::span(n, gens);
  std::vector<Matrix> zs;
  for (const auto& z : red.central_lifts) zs.push_back(rep.rho(z));

  auto squarefree_images = [&](const Subspace& base) {
    Subspace out = base;
    QuotientMap q(w, base);
    if (q.dim() == 0) return out;
    for (const auto& z : zs) {
      Polynomial s = squarefree_part(minimal_polynomial(induced_action(z, q)));
      Matrix sz = s(z);
      std::vector<Vector> img;
      for (std::size_t b = 0; b < w.dim(); ++b) img.push_back(sz.apply(w.basis().row(b)));
      out = out + Subspace::span(n, img);
    }
    return out;
  };

  Subspace r = squarefree_images(u0);
  // the quotient must be semisimple: each central element acts with squarefree minimal polynomial
  for (int guard = 0; guard < static_cast<int>(n) + 1; ++guard) {
    QuotientMap q(w, r);
    bool ok = true;
    for (const auto& z : zs) {
      if (q.dim() == 0) break;
      Polynomial p = minimal_polynomial(induced_action(z, q));
      if (!(squarefree_part(p) == p)) ok = false;
    }
    if (ok) return r;
    r = squarefree_images(r);
  }
  throw InternalError("module_radical: iteration did not stabilise");
}

Subspace module_radical(const Representation& rep) {
  return module_radical(rep, Subspace::full(rep.module_dim()));
}

Subspace module_socle(const Representation& rep, const Subspace& w) {
  if (!is_submodule(rep, w)) throw UsageError("module_socle: W is not a submodule");
  if (w.is_zero()) return w;
  SubModule s = submodule(rep, w);
  Representation d = dual(s.rep);
  Subspace ann = module_radical(d).annihilator();
  std::vector<Vector> out;
  Matrix bt = s.embedding.transpose();
  for (std::size_t i = 0; i < ann.dim(); ++i) out.push_back(bt.apply(ann.basis().row(i)));
  return Subspace::span(rep.module_dim(), out);
}

Subspace module_socle(const Representation& rep) { return module_socle(rep, Subspace::full(rep.module_dim())); }

ModuleFiltration filtration(const Representation& rep) {
  const std::size_t n = rep.module_dim();
  ModuleFiltration f;
  Subspace s = Subspace::zero(n);
  f.socles.entries.push_back(s);
  while (!s.is_full()) {
    QuotientModule q = quotient_module(rep, s);
    Subspace top = module_socle(q.rep);
    std::vector<Vector> lifts;
    for (std::size_t i = 0; i < top.dim(); ++i) lifts.push_back(q.map.lift(top.basis().row(i)));
    Subspace next = s + Subspace::span(n, lifts);
    if (next == s) throw InternalError("socle filtration stalled");
    s = next;
    f.socles.entries.push_back(s);
  }
  Subspace r = Subspace::full(n);
  f.radicals.entries.push_back(r);
  while (!r.is_zero()) {
    Subspace next = module_radical(rep, r);
    if (next == r) throw InternalError("radical filtration stalled");
    r = next;
    f.radicals.entries.push_back(r);
  }
  return f;
}

bool is_semisimple(const Representation& rep) { return module_radical(rep).is_zero(); }

InvariantSplit invariant_split(const Representation& rep) {
  const std::size_t n = rep.module_dim();
  Matrix stacked(0, n);
  std::vector<Vector> images;
  for (std::size_t i = 0; i < rep.algebra_dim(); ++i) {
    stacked = vstack(stacked, rep.rho(i));
    for (std::size_t c = 0; c < n; ++c) images.push_back(rep.rho(i).col(c));
  }
  InvariantSplit s;
  s.invariants = stacked.rows() ? Subspace::span(n, kernel_basis(stacked)) : Subspace::full(n);
  s.complement = Subspace::span(n, images);
  return s;
}

Representation dual(const Representation& rep) {
  std::vector<Matrix> act;
  for (const auto& a : rep.action()) act.push_back(-a.transpose());
  return Representation(rep.algebra_ptr(), rep.module_dim(), std::move(act));
}

SubModule submodule(const Representation& rep, const Subspace& u) {
  const std::size_t k = u.dim();
  Matrix b = u.basis();
  std::vector<Matrix> act;
  if (k == 0) {
    act.assign(rep.algebra_dim(), Matrix(0, 0));
  } else {
    Matrix l = left_inverse(b.transpose());
    for (const auto& a : rep.action()) {
      Matrix img = a * b.transpose();
      if (!u.contains(Subspace::span(rep.module_dim(), img.transpose())))
        throw UsageError("submodule: subspace is not invariant");
      act.push_back(l * img);
    }
  }
  std::optional<SymmetricForm> f;
  if (rep.has_form()) f = SymmetricForm(rep.metric().restricted_gram(b));
  return SubModule{Representation(rep.algebra_ptr(), k, std::move(act), std::move(f)), b};
}

QuotientModule quotient_module(const Representation& rep, const Subspace& u) {
  QuotientMap q(Subspace::full(rep.module_dim()), u);
  std::vector<Matrix> act;
  for (const auto& a : rep.action()) act.push_back(induced_action(a, q));
  return QuotientModule{Representation(rep.algebra_ptr(), q.dim(), std::move(act)), q};
}

DualSubQuotient dual_and_sub_quotient(const Representation& rep, const Subspace& u) {
  return DualSubQuotient{dual(rep), submodule(rep, u), quotient_module(rep, u)};
}

Representation direct_sum(const Representation& a, const Representation& b) {
  if (!(a.algebra() == b.algebra())) throw UsageError("direct_sum: modules over different algebras");
  std::vector<Matrix> act;
  for (std::size_t i = 0; i < a.algebra_dim(); ++i) act.push_back(block_diagonal(a.rho(i), b.rho(i)));
  std::optional<SymmetricForm> f;
  if (a.has_form() && b.has_form()) f = direct_sum(a.metric(), b.metric());
  return Representation(a.algebra_ptr(), a.module_dim() + b.module_dim(), std::move(act), std::move(f));
}

Representation external_sum(const Representation& a, const Representation& b, AlgebraPtr sum_algebra) {
  const std::size_t ma = a.module_dim(), mb = b.module_dim();
  if (sum_algebra->dim() != a.algebra_dim() + b.algebra_dim()) throw UsageError("external_sum: algebra size");
  std::vector<Matrix> act;
  for (std::size_t i = 0; i < a.algebra_dim(); ++i) act.push_back(block_diagonal(a.rho(i), Matrix(mb, mb)));
  for (std::size_t i = 0; i < b.algebra_dim(); ++i) act.push_back(block_diagonal(Matrix(ma, ma), b.rho(i)));
  std::optional<SymmetricForm> f;
  if (a.has_form() && b.has_form()) f = direct_sum(a.metric(), b.metric());
  return Representation(std::move(sum_algebra), ma + mb, std::move(act), std::move(f));
}

}  // namespace mla
