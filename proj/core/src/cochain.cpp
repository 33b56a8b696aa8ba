#include "mla/cochain.hpp"

#include <algorithm>
#include <map>

#include "mla/errors.hpp"

namespace mla {

namespace {

void enumerate(std::size_t n, std::size_t p, std::size_t start, std::vector<std::size_t>& cur,
               std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == p) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i + (p - cur.size()) <= n; ++i) {
    cur.push_back(i);
    enumerate(n, p, i + 1, cur, out);
    cur.pop_back();
  }
}

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

}  // namespace

SubsetIndex::SubsetIndex(std::size_t n, std::size_t p) : n_(n), p_(p) {
  if (n > 24) throw UsageError("SubsetIndex: algebra dimension too large");
  std::vector<std::size_t> cur;
  if (p <= n) enumerate(n, p, 0, cur, subsets_);
  by_mask_.assign(std::size_t(1) << n, kNone);
  for (std::size_t i = 0; i < subsets_.size(); ++i) {
    std::size_t mask = 0;
    for (auto k : subsets_[i]) mask |= std::size_t(1) << k;
    by_mask_[mask] = i;
  }
}

std::size_t SubsetIndex::index(const std::vector<std::size_t>& sorted) const {
  std::size_t mask = 0;
  for (auto k : sorted) mask |= std::size_t(1) << k;
  std::size_t idx = by_mask_.at(mask);
  if (idx == kNone) throw UsageError("SubsetIndex: not a subset of the right size");
  return idx;
}

std::optional<std::pair<std::size_t, int>> SubsetIndex::locate(std::vector<std::size_t> args) const {
  int sign = 1;
  for (std::size_t i = 1; i < args.size(); ++i)
    for (std::size_t j = i; j > 0 && args[j - 1] >= args[j]; --j) {
      if (args[j - 1] == args[j]) return std::nullopt;
      std::swap(args[j - 1], args[j]);
      sign = -sign;
    }
  return std::make_pair(index(args), sign);
}

const SubsetIndex& subsets(std::size_t n, std::size_t p) {
  static std::mutex m;
  static std::map<std::pair<std::size_t, std::size_t>, std::unique_ptr<SubsetIndex>> cache;
  std::lock_guard<std::mutex> lock(m);
  auto& slot = cache[{n, p}];
  if (!slot) slot = std::make_unique<SubsetIndex>(n, p);
  return *slot;
}

Cochain Cochain::zero(std::size_t l_dim, std::size_t degree, std::size_t module_dim) {
  Cochain c;
  c.l_dim = l_dim;
  c.degree = degree;
  c.module_dim = module_dim;
  c.coords = zero_vector(subsets(l_dim, degree).count() * module_dim);
  return c;
}

Vector Cochain::value(std::size_t s) const {
  return Vector(coords.begin() + s * module_dim, coords.begin() + (s + 1) * module_dim);
}

Vector Cochain::value(const std::vector<std::size_t>& args) const {
  if (args.size() != degree) throw UsageError("cochain evaluated on wrong number of arguments");
  auto loc = subsets(l_dim, degree).locate(args);
  if (!loc) return zero_vector(module_dim);
  Vector v = value(loc->first);
  if (loc->second < 0) v = -v;
  return v;
}

void Cochain::add_value(const std::vector<std::size_t>& sorted_args, const Vector& v) {
  std::size_t s = subsets(l_dim, degree).index(sorted_args);
  for (std::size_t a = 0; a < module_dim; ++a) coords[s * module_dim + a] += v.at(a);
}

static void check_compatible(const Cochain& a, const Cochain& b) {
  if (a.l_dim != b.l_dim || a.degree != b.degree || a.module_dim != b.module_dim)
    throw UsageError("incompatible cochains");
}

Cochain operator+(const Cochain& a, const Cochain& b) {
  check_compatible(a, b);
  Cochain c = a;
  c.coords += b.coords;
  return c;
}

Cochain operator-(const Cochain& a, const Cochain& b) {
  check_compatible(a, b);
  Cochain c = a;
  c.coords -= b.coords;
  return c;
}

Cochain operator-(const Cochain& a) {
  Cochain c = a;
  c.coords = -c.coords;
  return c;
}

Cochain operator*(const Rational& s, const Cochain& a) {
  Cochain c = a;
  c.coords = s * c.coords;
  return c;
}

CochainComplex::CochainComplex(Representation rep) : rep_(std::move(rep)) {}

std::size_t CochainComplex::cochain_dim(std::size_t p) const { return subsets(l_dim(), p).count() * module_dim(); }

Cochain CochainComplex::from_coords(std::size_t p, Vector coords) const {
  if (coords.size() != cochain_dim(p)) throw UsageError("cochain coordinate count mismatch");
  Cochain c = zero(p);
  c.coords = std::move(coords);
  return c;
}

Cochain CochainComplex::differential(const Cochain& c) const {
  const std::size_t n = l_dim(), m = module_dim(), p = c.degree;
  if (c.l_dim != n || c.module_dim != m) throw UsageError("differential: cochain does not match complex");
  Cochain out = zero(p + 1);
  if (p + 1 > n) return out;
  const SubsetIndex& s1 = subsets(n, p + 1);
  const SubsetIndex& s0 = subsets(n, p);
  const LieAlgebra& g = algebra();
  std::vector<std::size_t> rest;
  for (std::size_t s = 0; s < s1.count(); ++s) {
    const auto& S = s1.subset(s);
    Vector acc = zero_vector(m);
    for (std::size_t i = 0; i <= p; ++i) {
      rest.clear();
      for (std::size_t t = 0; t <= p; ++t)
        if (t != i) rest.push_back(S[t]);
      Vector v = c.value(s0.index(rest));
      if (is_zero(v)) continue;
      Vector w = rep_.rho(S[i]).apply(v);
      axpy(acc, (i % 2 == 0) ? Rational(1) : Rational(-1), w);
    }
    for (std::size_t i = 0; i <= p; ++i)
      for (std::size_t j = i + 1; j <= p; ++j) {
        const Matrix& adi = g.ad(S[i]);
        const int sign0 = ((i + j) % 2 == 0) ? 1 : -1;
        for (std::size_t k = 0; k < n; ++k) {
          const Rational& ck = adi(k, S[j]);
          if (sgn(ck) == 0) continue;
          std::vector<std::size_t> args{k};
          for (std::size_t t = 0; t <= p; ++t)
            if (t != i && t != j) args.push_back(S[t]);
          auto loc = s0.locate(args);
          if (!loc) continue;
          axpy(acc, Rational(sign0 * loc->second) * ck, c.value(loc->first));
        }
      }
    for (std::size_t a = 0; a < m; ++a) out.coords[s * m + a] = acc[a];
  }
  return out;
}

const Matrix& CochainComplex::differential_matrix(std::size_t p) const {
  std::lock_guard<std::mutex> lock(mutex_);
  if (d_cache_.size() <= p) d_cache_.resize(p + 1);
  if (!d_cache_[p]) {
    const std::size_t cols = cochain_dim(p), rows = cochain_dim(p + 1);
    auto mat = std::make_unique<Matrix>(rows, cols);
    for (std::size_t c = 0; c < cols; ++c) {
      Cochain e = zero(p);
      e.coords[c] = 1;
      mat->set_col(c, differential(e).coords);
    }
    d_cache_[p] = std::move(mat);
  }
  return *d_cache_[p];
}

Vector CochainComplex::evaluate(const Cochain& c, const std::vector<Vector>& args) const {
  const std::size_t n = l_dim(), p = c.degree;
  if (args.size() != p) throw UsageError("evaluate: wrong number of arguments");
  const SubsetIndex& si = subsets(n, p);
  Vector out = zero_vector(c.module_dim);
  for (std::size_t s = 0; s < si.count(); ++s) {
    Vector v = c.value(s);
    if (is_zero(v)) continue;
    Matrix minor(p, p);
    for (std::size_t r = 0; r < p; ++r)
      for (std::size_t k = 0; k < p; ++k) minor(r, k) = args[k].at(si.subset(s)[r]);
    Rational d = determinant(minor);
    if (sgn(d) != 0) axpy(out, d, v);
  }
  return out;
}

Pair::Pair(Representation rep) {
  if (!rep.has_form()) throw UsageError("Pair requires a module form");
  AlgebraPtr g = rep.algebra_ptr();
  coeff_ = std::make_shared<const CochainComplex>(std::move(rep));
  scalar_ = std::make_shared<const CochainComplex>(
      Representation::trivial(g, 1, SymmetricForm::euclidean(1)));
}

Cochain wedge_pair(const SymmetricForm& form, const Cochain& alpha, const Cochain& tau) {
  if (alpha.l_dim != tau.l_dim || alpha.module_dim != tau.module_dim || form.dim() != alpha.module_dim)
    throw UsageError("wedge_pair: incompatible cochains");
  const std::size_t n = alpha.l_dim, p = alpha.degree, q = tau.degree;
  Cochain out = Cochain::zero(n, p + q, 1);
  if (p + q > n) return out;
  const SubsetIndex& sk = subsets(n, p + q);
  const SubsetIndex& shuf = subsets(p + q, p);
  const SubsetIndex& sa = subsets(n, p);
  const SubsetIndex& st = subsets(n, q);
  std::vector<Vector> galpha;  // G * alpha value, per subset
  for (std::size_t s = 0; s < sa.count(); ++s) galpha.push_back(form.gram().apply(alpha.value(s)));
  std::vector<std::size_t> a_args, b_args;
  for (std::size_t s = 0; s < sk.count(); ++s) {
    const auto& S = sk.subset(s);
    Rational acc = 0;
    for (std::size_t h = 0; h < shuf.count(); ++h) {
      const auto& A = shuf.subset(h);
      a_args.clear();
      b_args.clear();
      std::size_t possum = 0, ai = 0;
      for (std::size_t t = 0; t < p + q; ++t) {
        if (ai < A.size() && A[ai] == t) {
          a_args.push_back(S[t]);
          possum += t;
          ++ai;
        } else {
          b_args.push_back(S[t]);
        }
      }
      const std::size_t inv = possum - p * (p - (p ? 1 : 0)) / 2;
      Rational v = dot(galpha[sa.index(a_args)], tau.value(st.index(b_args)));
      if (sgn(v) == 0) continue;
      if (inv % 2 == 0)
        acc += v;
      else
        acc -= v;
    }
    out.coords[s] = acc;
  }
  return out;
}

CohomologySpace::CohomologySpace(const CochainComplex& cx, std::size_t p) : cx_(&cx), p_(p) {
  const std::size_t dim = cx.cochain_dim(p);
  const Matrix& dp = cx.differential_matrix(p);
  z_ = dp.rows() ? Subspace::span(dim, kernel_basis(dp)) : Subspace::full(dim);
  if (p == 0) {
    b_ = Subspace::zero(dim);
  } else {
    b_ = Subspace::span(dim, cx.differential_matrix(p - 1).transpose());
  }
  Matrix comp = complement_basis(b_, z_);
  for (std::size_t i = 0; i < comp.rows(); ++i) reps_.push_back(cx.from_coords(p, comp.row(i)));
  if (z_.dim() > 0) solver_ = left_inverse(vstack(comp, b_.basis()).transpose());
}

std::optional<Cochain> CohomologySpace::primitive(const Cochain& c) const {
  if (p_ == 0) {
    if (c.is_zero()) return cx_->zero(0);
    return std::nullopt;
  }
  auto sol = solve_affine(cx_->differential_matrix(p_ - 1), c.coords);
  if (!sol) return std::nullopt;
  return cx_->from_coords(p_ - 1, sol->particular);
}

Vector CohomologySpace::class_coords(const Cochain& c) const {
  if (!z_.contains(c.coords)) throw UsageError("class_coords: cochain is not a cocycle");
  if (reps_.empty()) return {};
  Vector all = solver_.apply(c.coords);
  all.resize(reps_.size());
  return all;
}

Vector cup(const Pair& pr, const Cochain& a, const Cochain& b) {
  Cochain w = wedge_pair(pr, a, b);
  CohomologySpace h(pr.scalar(), w.degree);
  return h.class_coords(w);
}

}  // namespace mla
