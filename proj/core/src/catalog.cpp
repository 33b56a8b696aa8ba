#include "mla/catalog.hpp"

#include <algorithm>
#include <chrono>
#include <numeric>
#include <sstream>

#include "mla/errors.hpp"

namespace mla {

namespace {

struct BaseInfo {
  BaseName base;
  const char* name;
  std::size_t l0_dim;  // generators of l/R(l) carrying the weights
};

const BaseInfo kBases[] = {
    {BaseName::n2, "n2", 1},   {BaseName::r3m1, "r3m1", 1}, {BaseName::r3m2, "r3m2", 1},
    {BaseName::h1, "h1", 2},   {BaseName::sl2, "sl2r", 0},   {BaseName::su2, "su2", 0},
    {BaseName::R1, "R1", 1},   {BaseName::R2, "R2", 2},     {BaseName::R3, "R3", 3},
};

const BaseInfo& info(BaseName b) {
  for (const auto& i : kBases)
    if (i.base == b) return i;
  throw UsageError("unknown base algebra");
}

Vector e(std::size_t n, std::size_t i) { return unit_vector(n, i); }

[[noreturn]] void reject(const RowKey& key, const std::string& clause) {
  throw InvalidInput(key.name() + ": " + clause);
}

// Functional on the basis of l from its values on the generators of l/R(l).
Vector functional(BaseName b, const Vector& values) {
  const std::size_t n = b == BaseName::R1 ? 1 : b == BaseName::R2 ? 2 : 3;
  Vector out = zero_vector(n);
  for (std::size_t i = 0; i < values.size(); ++i) out[i] = values[i];
  return out;
}

Matrix block_matrix(const RepBlock& blk, std::size_t i) {
  auto w = [&](const Vector& f) { return i < f.size() ? f[i] : Rational(0); };
  switch (blk.kind) {
    case RepBlock::Kind::plus:
    case RepBlock::Kind::minus: {
      Rational l = w(blk.weight);
      return Matrix{{0, -l}, {l, 0}};
    }
    case RepBlock::Kind::prime: {
      Rational l = w(blk.weight);
      return Matrix{{0, l}, {l, 0}};
    }
    case RepBlock::Kind::doubleprime: {
      Rational mu = w(blk.weight), nu = w(blk.second);
      return Matrix{{0, -nu, mu, 0}, {nu, 0, 0, mu}, {mu, 0, 0, -nu}, {0, mu, nu, 0}};
    }
    case RepBlock::Kind::trivial:
      return Matrix(blk.p + blk.q, blk.p + blk.q);
    case RepBlock::Kind::su2_odd:
      return su2_sigma(blk.k).action.at(i);
    case RepBlock::Kind::su2_quat:
      return su2_sigma_quat(blk.k).action.at(i);
  }
  return {};
}

Matrix block_gram(const RepBlock& blk) {
  switch (blk.kind) {
    case RepBlock::Kind::plus:
      return Matrix::identity(2);
    case RepBlock::Kind::minus:
      return -Matrix::identity(2);
    case RepBlock::Kind::prime:
      return Matrix::diagonal({-1, 1});
    case RepBlock::Kind::doubleprime:
      return Matrix::diagonal({-1, -1, 1, 1});
    case RepBlock::Kind::trivial: {
      Vector d;
      for (std::size_t i = 0; i < blk.p; ++i) d.push_back(-1);
      for (std::size_t i = 0; i < blk.q; ++i) d.push_back(1);
      return Matrix::diagonal(d);
    }
    case RepBlock::Kind::su2_odd:
      return su2_sigma(blk.k).gram;
    case RepBlock::Kind::su2_quat:
      return su2_sigma_quat(blk.k).gram;
  }
  return {};
}

RepBlock plus(const Vector& w) { return {RepBlock::Kind::plus, w, {}, 0, 0, 0}; }
RepBlock minus(const Vector& w) { return {RepBlock::Kind::minus, w, {}, 0, 0, 0}; }
RepBlock prime(const Vector& w) { return {RepBlock::Kind::prime, w, {}, 0, 0, 0}; }
RepBlock doubleprime(const Vector& mu, const Vector& nu) { return {RepBlock::Kind::doubleprime, mu, nu, 0, 0, 0}; }
RepBlock trivial(std::size_t p, std::size_t q) { return {RepBlock::Kind::trivial, {}, {}, p, q, 0}; }

void check_scalar_lambda(const RowKey& key) {
  const auto& lam = key.params.lambda;
  for (std::size_t i = 0; i < lam.size(); ++i) {
    if (lam[i].size() != 1) reject(key, "each lambda^i is a single value lambda^i(X)");
    if (sgn(lam[i][0]) <= 0) reject(key, "requires 0 < lambda^1 <= ... <= lambda^m");
    if (i > 0 && lam[i][0] < lam[i - 1][0]) reject(key, "requires 0 < lambda^1 <= ... <= lambda^m");
  }
}

void check_vector_lambda(const RowKey& key, std::size_t dim) {
  for (const auto& l : key.params.lambda) {
    if (l.size() != dim) reject(key, "each lambda^i needs " + std::to_string(dim) + " values");
    if (is_zero(l)) reject(key, "lambda^i must be nonzero on l/R(l)");
  }
}

std::vector<RepBlock> plus_blocks(BaseName b, const std::vector<Vector>& lambda) {
  std::vector<RepBlock> out;
  for (const auto& l : lambda) out.push_back(plus(functional(b, l)));
  return out;
}

QuadraticCocycle cocycle_with(const Pair& pr, const std::vector<std::pair<std::pair<std::size_t, std::size_t>, Vector>>& alpha,
                              const Rational& gamma012) {
  QuadraticCocycle z = zero_cocycle(pr);
  for (const auto& [ij, v] : alpha) {
    if (ij.first < ij.second)
      z.alpha.add_value({ij.first, ij.second}, v);
    else
      z.alpha.add_value({ij.second, ij.first}, -v);
  }
  if (sgn(gamma012) != 0) z.gamma.add_value({0, 1, 2}, Vector{gamma012});
  return z;
}

// {(1,0)} together with the lambda^i is not contained in two lines through 0.
bool spans_three_lines(const std::vector<Vector>& lambda) {
  std::vector<Vector> dirs{Vector{1, 0}};
  for (const auto& l : lambda) {
    bool found = false;
    for (const auto& d : dirs)
      if (sgn(d[0] * l[1] - d[1] * l[0]) == 0) found = true;
    if (!found) dirs.push_back(l);
  }
  return dirs.size() > 2;
}

int lex_compare(const Vector& a, const Vector& b) {
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i) {
    int c = cmp(a[i], b[i]);
    if (c != 0) return c < 0 ? -1 : 1;
  }
  return a.size() < b.size() ? -1 : a.size() > b.size() ? 1 : 0;
}

// Lexicographically smallest key over the action of S_m x (Z_2)^m on the pair (u, v) of m-vectors.
template <class Key>
Vector canonical_signed(const Vector& u, const Vector& v, Key key) {
  const std::size_t m = u.size();
  std::vector<std::size_t> perm(m);
  std::iota(perm.begin(), perm.end(), 0);
  std::optional<Vector> best;
  do {
    for (std::size_t mask = 0; mask < (std::size_t{1} << m); ++mask) {
      Vector gu(m), gv(m);
      for (std::size_t i = 0; i < m; ++i) {
        Rational s = (mask >> i) & 1 ? -1 : 1;
        gu[i] = s * u[perm[i]];
        gv[i] = s * v[perm[i]];
      }
      Vector k = key(gu, gv);
      if (!best || lex_compare(k, *best) < 0) best = k;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best ? *best : Vector{};
}

Vector wedge(const Vector& u, const Vector& v) {
  Vector w;
  for (std::size_t i = 0; i < u.size(); ++i)
    for (std::size_t j = i + 1; j < u.size(); ++j) w.push_back(u[i] * v[j] - u[j] * v[i]);
  return w;
}

Vector scaled_first_one(const Vector& v) {
  for (const auto& x : v)
    if (sgn(x) != 0) return (Rational(1) / x) * v;
  return v;
}

Vector sign_normalized(const Vector& v) {
  for (const auto& x : v)
    if (sgn(x) != 0) return sgn(x) < 0 ? -v : v;
  return v;
}

std::size_t span_dim(const Vector& u, const Vector& v) {
  return rank(Matrix::from_rows({u, v}, u.size()));
}

Vector sorted_abs(const std::vector<Vector>& lambda) {
  Vector out;
  for (const auto& l : lambda) out.push_back(abs(l.at(0)));
  std::sort(out.begin(), out.end());
  return out;
}

std::pair<Vector, Vector> columns(const std::vector<Vector>& lambda) {
  Vector u, v;
  for (const auto& l : lambda) {
    u.push_back(l.at(0));
    v.push_back(l.at(1));
  }
  return {u, v};
}

}  // namespace

std::string to_string(BaseName b) { return info(b).name; }

std::optional<BaseName> parse_base(const std::string& s) {
  for (const auto& i : kBases)
    if (s == i.name) return i.base;
  if (s == "sl2") return BaseName::sl2;
  return std::nullopt;
}

LieAlgebra base_algebra(BaseName b) {
  switch (b) {
    case BaseName::n2: {
      StructureTable t(3);
      t.set(0, 1, e(3, 2));
      t.set(0, 2, -e(3, 1));
      t.labels = {"X", "Y", "Z"};
      return LieAlgebra::make(t);
    }
    case BaseName::r3m1: {
      StructureTable t(3);
      t.set(0, 1, e(3, 1));
      t.set(0, 2, -e(3, 2));
      t.labels = {"X", "Y", "Z"};
      return LieAlgebra::make(t);
    }
    case BaseName::r3m2: {
      StructureTable t(3);
      t.set(0, 1, Rational(-2) * e(3, 1));
      t.set(0, 2, e(3, 2));
      t.labels = {"X", "Y", "Z"};
      return LieAlgebra::make(t);
    }
    case BaseName::h1: {
      StructureTable t(3);
      t.set(0, 1, e(3, 2));
      t.labels = {"X", "Y", "Z"};
      return LieAlgebra::make(t);
    }
    case BaseName::sl2: {
      StructureTable t(3);
      t.set(0, 1, Rational(2) * e(3, 1));
      t.set(0, 2, Rational(-2) * e(3, 2));
      t.set(1, 2, e(3, 0));
      t.labels = {"H", "E", "F"};
      return LieAlgebra::make(t);
    }
    case BaseName::su2: {
      StructureTable t(3);
      t.set(0, 1, e(3, 2));
      t.set(1, 2, e(3, 0));
      t.set(0, 2, -e(3, 1));
      t.labels = {"e1", "e2", "e3"};
      return LieAlgebra::make(t);
    }
    case BaseName::R1: {
      StructureTable t(1);
      t.labels = {"X"};
      return LieAlgebra::make(t);
    }
    case BaseName::R2: {
      StructureTable t(2);
      t.labels = {"Y", "Z"};
      return LieAlgebra::make(t);
    }
    case BaseName::R3: {
      StructureTable t(3);
      t.labels = {"X", "Y", "Z"};
      return LieAlgebra::make(t);
    }
  }
  throw UsageError("unknown base algebra");
}

std::size_t RepBlock::dim() const {
  switch (kind) {
    case Kind::plus:
    case Kind::minus:
    case Kind::prime:
      return 2;
    case Kind::doubleprime:
      return 4;
    case Kind::trivial:
      return p + q;
    case Kind::su2_odd:
      return 2 * k + 1;
    case Kind::su2_quat:
      return 4 * k;
  }
  return 0;
}

std::size_t RepFamilySpec::dim() const {
  std::size_t d = 0;
  for (const auto& b : blocks) d += b.dim();
  return d;
}

std::pair<std::size_t, std::size_t> RepFamilySpec::target_signature() const {
  std::size_t neg = 0, pos = 0;
  for (const auto& b : blocks) switch (b.kind) {
      case RepBlock::Kind::plus:
      case RepBlock::Kind::su2_odd:
      case RepBlock::Kind::su2_quat:
        pos += b.dim();
        break;
      case RepBlock::Kind::minus:
        neg += 2;
        break;
      case RepBlock::Kind::prime:
        neg += 1;
        pos += 1;
        break;
      case RepBlock::Kind::doubleprime:
        neg += 2;
        pos += 2;
        break;
      case RepBlock::Kind::trivial:
        neg += b.p;
        pos += b.q;
        break;
    }
  return {neg, pos};
}

Representation build_rep(const RepFamilySpec& spec, AlgebraPtr l) {
  const std::size_t n = l->dim(), m = spec.dim();
  Subspace rad = nilpotency_radical(*l);
  for (const auto& b : spec.blocks) {
    bool su2_block = b.kind == RepBlock::Kind::su2_odd || b.kind == RepBlock::Kind::su2_quat;
    if (su2_block) {
      if (n != 3 || !(*l == base_algebra(BaseName::su2))) throw InvalidInput("sigma_k blocks need l = su(2)");
      if (b.k == 0) throw InvalidInput("sigma_k blocks need k >= 1");
      continue;
    }
    for (const Vector* f : {&b.weight, &b.second}) {
      if (f->empty()) continue;
      if (f->size() != n) throw InvalidInput("weight has " + std::to_string(f->size()) + " entries, l has dimension " + std::to_string(n));
      for (std::size_t r = 0; r < rad.dim(); ++r)
        if (sgn(dot(*f, rad.basis().row(r))) != 0)
          throw InvalidInput("weight does not vanish on the nilpotency radical of l");
    }
  }
  std::vector<Matrix> action(n, Matrix(m, m));
  Matrix gram(m, m);
  std::size_t off = 0;
  for (const auto& b : spec.blocks) {
    for (std::size_t i = 0; i < n; ++i) action[i].set_block(off, off, block_matrix(b, i));
    gram.set_block(off, off, block_gram(b));
    off += b.dim();
  }
  Representation rep(l, m, std::move(action), SymmetricForm(gram));
  if (auto w = check_representation(rep)) throw InvalidInput("representation family: " + w->describe());
  return rep;
}

std::string RowKey::name() const { return to_string(base) + "-" + variant; }

std::vector<std::string> catalog_variants(BaseName b) {
  switch (b) {
    case BaseName::n2:
      return {"Ia", "Ib", "II", "III", "IV"};
    case BaseName::r3m1:
    case BaseName::h1:
      return {"I", "II"};
    case BaseName::sl2:
    case BaseName::su2:
      return {"I"};
    case BaseName::R1:
    case BaseName::R2:
      return {"I", "II", "III"};
    case BaseName::R3:
      return {"zero", "gamma", "alpha1", "alpha2", "alpha3"};
    case BaseName::r3m2:
      return {};
  }
  return {};
}

CatalogRow catalog_row(const RowKey& key) {
  auto variants = catalog_variants(key.base);
  if (std::find(variants.begin(), variants.end(), key.variant) == variants.end())
    throw InvalidInput(key.name() + ": unknown catalog row");
  const RowParams& p = key.params;
  const std::string& v = key.variant;
  const std::size_t m = p.lambda.size();
  AlgebraPtr l = share(base_algebra(key.base));
  RepFamilySpec spec;
  std::vector<std::pair<std::pair<std::size_t, std::size_t>, Vector>> alpha;
  Rational gamma = 0;
  std::optional<SymmetricForm> ip_l;
  bool conditional = false;
  const std::size_t X = 0, Y = 1, Z = 2;

  switch (key.base) {
    case BaseName::n2: {
      check_scalar_lambda(key);
      std::vector<Vector> lam = p.lambda;
      if (v == "III" || v == "IV") lam.push_back(Vector{1});
      spec.blocks = plus_blocks(key.base, lam);
      const std::size_t a = 2 * lam.size();
      if (v == "Ia" || v == "Ib") {
        gamma = v == "Ia" ? 1 : -1;
      } else if (v == "II") {
        spec.blocks.push_back(trivial(0, 1));
        alpha.push_back({{Y, Z}, e(a + 1, a)});
      } else if (v == "III") {
        if (sgn(p.r) <= 0) reject(key, "requires r > 0");
        spec.blocks.push_back(trivial(0, 1));
        alpha.push_back({{Y, Z}, e(a + 1, a)});
        alpha.push_back({{X, Y}, p.r * e(a + 1, a - 2)});
        alpha.push_back({{X, Z}, p.r * e(a + 1, a - 1)});
      } else {
        alpha.push_back({{X, Y}, e(a, a - 2)});
        alpha.push_back({{X, Z}, e(a, a - 1)});
      }
      break;
    }
    case BaseName::r3m1: {
      check_scalar_lambda(key);
      spec.blocks = plus_blocks(key.base, p.lambda);
      if (v == "I") {
        spec.blocks.push_back(trivial(0, 1));
        alpha.push_back({{Y, Z}, e(2 * m + 1, 2 * m)});
      } else {
        gamma = 1;
      }
      break;
    }
    case BaseName::h1: {
      check_vector_lambda(key, 2);
      spec.blocks = plus_blocks(key.base, p.lambda);
      if (v == "I") {
        spec.blocks.push_back(trivial(0, 1));
        alpha.push_back({{X, Z}, e(2 * m + 1, 2 * m)});
      } else {
        spec.blocks.push_back(trivial(0, 2));
        alpha.push_back({{X, Z}, e(2 * m + 2, 2 * m)});
        alpha.push_back({{Y, Z}, e(2 * m + 2, 2 * m + 1)});
      }
      break;
    }
    case BaseName::sl2:
    case BaseName::su2: {
      if (!p.lambda.empty()) reject(key, "takes no lambda");
      if (key.base == BaseName::su2) {
        auto sorted_positive = [](const std::vector<std::size_t>& k) {
          return std::is_sorted(k.begin(), k.end()) && std::find(k.begin(), k.end(), 0) == k.end();
        };
        if (!sorted_positive(p.k_odd) || !sorted_positive(p.k_quat))
          reject(key, "requires 0 < k^1 <= ... <= k^r and 0 < k_1 <= ... <= k_s");
        for (auto k : p.k_odd) spec.blocks.push_back({RepBlock::Kind::su2_odd, {}, {}, 0, 0, k});
        for (auto k : p.k_quat) spec.blocks.push_back({RepBlock::Kind::su2_quat, {}, {}, 0, 0, k});
      } else if (!p.k_odd.empty() || !p.k_quat.empty()) {
        reject(key, "takes no su(2) indices");
      }
      ip_l = SymmetricForm(p.c * killing_form(*l).gram());
      break;
    }
    case BaseName::R1: {
      check_scalar_lambda(key);
      spec.blocks = plus_blocks(key.base, p.lambda);
      if (v == "I") {
        if (sgn(p.nu) == 0) reject(key, "requires nu != 0");
        spec.blocks.push_back(doubleprime(Vector{1}, Vector{p.nu}));
      } else if (v == "II") {
        spec.blocks.push_back(minus(Vector{1}));
      } else {
        if (p.mu < 1) reject(key, "requires 1 = mu^1 <= mu^2");
        spec.blocks.push_back(prime(Vector{1}));
        spec.blocks.push_back(prime(Vector{p.mu}));
      }
      break;
    }
    case BaseName::R2: {
      check_vector_lambda(key, 2);
      spec.blocks = plus_blocks(key.base, p.lambda);
      const Vector mu{1, 0};
      if (v == "I") {
        spec.blocks.push_back(trivial(1, 0));
        alpha.push_back({{0, 1}, e(2 * m + 1, 2 * m)});
      } else if (v == "II") {
        spec.blocks.push_back(prime(mu));
        spec.blocks.push_back(trivial(0, 1));
        alpha.push_back({{0, 1}, e(2 * m + 3, 2 * m + 2)});
      } else {
        if (m < 2) reject(key, "requires m >= 2");
        if (!spans_three_lines(p.lambda))
          reject(key, "{(1,0)} and the lambda^i must not lie in the union of two lines");
        spec.blocks.push_back(prime(mu));
      }
      break;
    }
    case BaseName::R3: {
      check_vector_lambda(key, 3);
      conditional = true;
      spec.blocks = plus_blocks(key.base, p.lambda);
      if (v == "zero") {
        if (m < 4) reject(key, "requires m >= 4");
      } else if (v == "gamma") {
        if (sgn(p.gamma) == 0) reject(key, "requires gamma != 0");
        gamma = p.gamma;
      } else {
        std::size_t k = v == "alpha1" ? 1 : v == "alpha2" ? 2 : 3;
        if (k == 1 && m < 2) reject(key, "requires m >= 2");
        spec.blocks.push_back(trivial(0, k));
        const std::size_t a = 2 * m + k;
        const std::pair<std::size_t, std::size_t> planes[3] = {{1, 2}, {2, 0}, {0, 1}};
        if (k == 1)
          alpha.push_back({{0, 1}, e(a, 2 * m)});
        else
          for (std::size_t i = 0; i < k; ++i) alpha.push_back({planes[i], e(a, 2 * m + i)});
      }
      break;
    }
    case BaseName::r3m2:
      reject(key, "r3m2 has no index-3 rows");
  }

  Representation rep = build_rep(spec, l);
  Pair pair(rep);
  QuadraticCocycle z = cocycle_with(pair, alpha, gamma);
  CatalogRow row{key, pair, z, {}, conditional};
  if (ip_l) {
    ModifiedModel mm = build_modified(pair, *ip_l, z);
    row.model = mm.model;
    row.cocycle = mm.target;
  } else {
    row.model = build_model(pair, z);
  }
  return row;
}

RowVerdict verify_row(const CatalogRow& row) {
  RowVerdict v;
  v.index = index(row.model.metric);
  v.balanced = is_balanced(row.model);
  v.simple_ideal_free = semisimple_ideal(row.model.metric.lie()).is_zero();
  v.admissibility = admissibility(row.pair, row.cocycle);
  v.indecomposability = is_indecomposable_class(row.pair, row.cocycle);
  if (v.index != 3) v.failures.push_back("index is " + std::to_string(v.index) + ", not 3");
  if (!v.balanced) v.failures.push_back("model is not balanced");
  if (!v.admissibility.admissible) v.failures.push_back("class is not admissible");
  if (!v.simple_ideal_free) v.failures.push_back("model has a simple ideal");
  switch (v.indecomposability.verdict) {
    case Decomposability::indecomposable:
      break;
    case Decomposability::decomposable:
      v.failures.push_back("class is decomposable: " + v.indecomposability.certificate);
      break;
    case Decomposability::undecided:
      if (!row.conditional) v.failures.push_back("indecomposability undecided");
      break;
  }
  return v;
}

Certificate certificate(const CatalogRow& row) {
  const RowKey& key = row.key;
  const RowParams& p = key.params;
  Certificate c;
  c.family = key.name();
  c.m = p.lambda.size();
  c.complete = true;
  std::ostringstream os;
  auto append = [&](const Vector& v) { c.invariant.insert(c.invariant.end(), v.begin(), v.end()); };
  auto describe = [&](const std::string& what, const Vector& v) {
    os << what << " = (";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << to_string(v[i]);
    os << ") ";
  };
  switch (key.base) {
    case BaseName::n2:
    case BaseName::r3m1:
    case BaseName::R1: {
      Vector lam = sorted_abs(p.lambda);
      append(lam);
      describe("sorted |lambda|", lam);
      if (key.base == BaseName::n2 && (key.variant == "Ia" || key.variant == "Ib")) {
        c.family = "n2-I";
        Vector s{key.variant == "Ia" ? 1 : -1};
        append(s);
        describe("sign gamma(X,Y,Z)", s);
      }
      if (key.base == BaseName::n2 && key.variant == "III") {
        append({p.r});
        describe("r = |alpha(X,Y)|", {p.r});
      }
      if (key.base == BaseName::R1 && key.variant == "I") {
        append({abs(p.nu)});
        describe("|nu|", {abs(p.nu)});
      }
      if (key.base == BaseName::R1 && key.variant == "III") {
        append({p.mu});
        describe("mu", {p.mu});
      }
      break;
    }
    case BaseName::h1: {
      auto [u, v] = columns(p.lambda);
      if (key.variant == "II") {
        Vector inv = canonical_signed(u, v, [](const Vector& gu, const Vector& gv) {
          const std::size_t m = gu.size();
          Vector out;
          for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < m; ++j) out.push_back(gu[i] * gu[j] + gv[i] * gv[j]);
          return out;
        });
        append(inv);
        describe("M M^T up to signed permutation", inv);
      } else {
        std::size_t d = p.lambda.empty() ? 0 : span_dim(u, v);
        append({Rational(static_cast<long>(d))});
        Vector inv;
        if (d == 1) {
          bool y_nonzero = !is_zero(v);
          append({Rational(y_nonzero ? 1 : 0)});
          inv = canonical_signed(u, v, [](const Vector& gu, const Vector& gv) {
            return scaled_first_one(is_zero(gu) ? gv : gu);
          });
          describe("span{lambda(X),lambda(Y)} with R lambda(Y)", inv);
        } else if (d == 2) {
          inv = canonical_signed(u, v, [](const Vector& gu, const Vector& gv) {
            Vector w = wedge(gu, gv);
            Rational f;
            for (const auto& x : w)
              if (sgn(x) != 0) {
                f = x;
                break;
              }
            return concat((Rational(1) / f) * w, (Rational(1) / (f * f)) * gv);
          });
          describe("(lambda(X) ^ lambda(Y), lambda(Y)) up to (r, r^2)", inv);
        }
        append(inv);
      }
      break;
    }
    case BaseName::R2: {
      auto [u, v] = columns(p.lambda);
      std::size_t d = p.lambda.empty() ? 0 : span_dim(u, v);
      append({Rational(static_cast<long>(d))});
      Vector inv;
      if (key.variant == "I") {
        inv = canonical_signed(u, v, [d](const Vector& gu, const Vector& gv) {
          if (d == 2) return sign_normalized(wedge(gu, gv));
          return scaled_first_one(is_zero(gu) ? gv : gu);
        });
        describe(d == 2 ? "+-lambda(Y) ^ lambda(Z)" : "span{lambda(Y),lambda(Z)}", inv);
      } else if (key.variant == "II") {
        bool z_nonzero = !is_zero(v);
        append({Rational(z_nonzero ? 1 : 0)});
        inv = canonical_signed(u, v, [d, z_nonzero](const Vector& gu, const Vector& gv) {
          if (d <= 1) return z_nonzero ? gv : gu;
          Vector w = wedge(gu, gv);
          Vector a = concat(w, gv), b = concat(-w, gv);
          return lex_compare(a, b) <= 0 ? a : b;
        });
        describe(d == 2 ? "(+-lambda(Y) ^ lambda(Z), lambda(Z))" : "lambda(Z), or lambda(Y) if lambda(Z) = 0", inv);
      } else {
        inv = canonical_signed(u, v, [](const Vector& gu, const Vector& gv) {
          Rational t = dot(gu, gv) / dot(gv, gv);
          Vector foot = gu;
          axpy(foot, -t, gv);
          return concat(foot, scaled_first_one(gv));
        });
        describe("affine line lambda(Y) + R lambda(Z)", inv);
      }
      append(inv);
      break;
    }
    case BaseName::sl2:
      append({p.c});
      describe("c", {p.c});
      break;
    case BaseName::su2: {
      Vector ks;
      for (auto k : p.k_odd) ks.push_back(static_cast<long>(k));
      ks.push_back(-1);
      for (auto k : p.k_quat) ks.push_back(static_cast<long>(k));
      append(ks);
      append({p.c});
      describe("k", ks);
      describe("c", {p.c});
      c.m = row.pair.a_dim();
      break;
    }
    case BaseName::R3:
    case BaseName::r3m2:
      c.complete = false;
      os << "no uniqueness invariant for this family";
      break;
  }
  c.description = os.str();
  return c;
}

std::string to_string(Comparison c) {
  switch (c) {
    case Comparison::equal:
      return "equal";
    case Comparison::distinct:
      return "distinct";
    case Comparison::incomparable:
      return "incomparable";
    case Comparison::undetermined:
      return "undetermined";
  }
  return "";
}

namespace {

std::vector<long> lie_invariants(const LieAlgebra& l) {
  StructureReport r = structure_report(l);
  Inertia k = signature(killing_form(l));
  return {static_cast<long>(l.dim()),
          static_cast<long>(nilpotency_radical(l).dim()),
          static_cast<long>(r.derived.dim()),
          static_cast<long>(r.center.dim()),
          static_cast<long>(k.negatives),
          static_cast<long>(k.positives)};
}

}  // namespace

CertificateVerdict non_isomorphism_certificate(const CatalogRow& a, const CatalogRow& b) {
  CertificateVerdict out;
  if (a.key.base != b.key.base) {
    out.verdict = Comparison::incomparable;
    out.l_invariant_distinct = lie_invariants(a.pair.algebra()) != lie_invariants(b.pair.algebra());
    out.reason = "different base algebras";
    if (out.l_invariant_distinct) out.reason += "; distinct by l = g/j(g) invariants (dims, Killing signature)";
    return out;
  }
  Certificate ca = certificate(a), cb = certificate(b);
  if (ca.family != cb.family) {
    out.verdict = Comparison::incomparable;
    out.reason = "different variants " + ca.family + " and " + cb.family;
    return out;
  }
  if (a.pair.a_dim() != b.pair.a_dim()) {
    out.verdict = Comparison::distinct;
    out.reason = "dim a differs";
    return out;
  }
  if (!ca.complete) {
    out.verdict = Comparison::undetermined;
    out.reason = "no isomorphism invariant implemented for " + ca.family;
    return out;
  }
  out.verdict = ca.invariant == cb.invariant ? Comparison::equal : Comparison::distinct;
  out.reason = ca.description + (out.verdict == Comparison::equal ? "coincide" : "differ: " + cb.description);
  return out;
}

std::vector<Control> controls() {
  std::vector<Control> out;
  {
    AlgebraPtr l = share(base_algebra(BaseName::n2));
    Pair pr(Representation::trivial(l, 0, SymmetricForm::euclidean(0)));
    out.push_back({"n2 with (0,0)", pr, zero_cocycle(pr), false, false});
  }
  {
    AlgebraPtr l = share(base_algebra(BaseName::h1));
    Pair pr(Representation::trivial(l, 0, SymmetricForm::euclidean(0)));
    QuadraticCocycle z = zero_cocycle(pr);
    z.gamma.add_value({0, 1, 2}, Vector{1});
    out.push_back({"h1 with (0,gamma)", pr, z, false, false});
  }
  {
    AlgebraPtr l = share(base_algebra(BaseName::r3m2));
    // e+, e- hyperbolic, rho(X) e+- = +-e+-
    Matrix rx{{1, 0}, {0, -1}};
    Representation rep(l, 2, {rx, Matrix(2, 2), Matrix(2, 2)}, SymmetricForm(Matrix{{0, 1}, {1, 0}}));
    Pair pr(rep);
    QuadraticCocycle z = zero_cocycle(pr);
    z.alpha.add_value({1, 2}, Vector{0, 1});
    z.alpha.add_value({0, 2}, Vector{1, 0});
    out.push_back({"r3m2 on R^{1,1}", pr, z, true, true});
  }
  return out;
}

bool SweepReport::ok() const {
  for (const auto& r : rows)
    if (!r.verdict.passes() && r.key.base != BaseName::R3) return false;
  for (const auto& c : controls)
    if (!c.as_expected) return false;
  return collisions.empty();
}

namespace {

std::vector<Rational> scalar_weights(std::size_t den) {
  std::vector<Rational> w;
  for (std::size_t q = 1; q <= std::max<std::size_t>(den, 1); ++q)
    for (std::size_t p = 1; p <= 2 * q; ++p) {
      Rational x(static_cast<long>(p), static_cast<long>(q));
      x.canonicalize();
      if (std::find(w.begin(), w.end(), x) == w.end()) w.push_back(x);
    }
  std::sort(w.begin(), w.end());
  return w;
}

std::vector<Vector> pair_weights(std::size_t den) {
  std::vector<Vector> w{{1, 0}, {0, 1}, {1, 1}};
  for (std::size_t q = 2; q <= den; ++q) w.push_back({Rational(1, static_cast<long>(q)), 1});
  return w;
}

// Multisets of size m drawn in nondecreasing index order.
void multisets(std::size_t count, std::size_t m, std::size_t start, std::vector<std::size_t>& cur,
               std::vector<std::vector<std::size_t>>& out) {
  if (cur.size() == m) {
    out.push_back(cur);
    return;
  }
  for (std::size_t i = start; i < count; ++i) {
    cur.push_back(i);
    multisets(count, m, i, cur, out);
    cur.pop_back();
  }
}

template <class T>
std::vector<std::vector<T>> lambda_lists(const std::vector<T>& pool, std::size_t max_m, std::size_t min_m = 0) {
  std::vector<std::vector<T>> out;
  for (std::size_t m = min_m; m <= max_m; ++m) {
    std::vector<std::vector<std::size_t>> idx;
    std::vector<std::size_t> cur;
    multisets(pool.size(), m, 0, cur, idx);
    for (const auto& ix : idx) {
      std::vector<T> l;
      for (auto i : ix) l.push_back(pool[i]);
      out.push_back(l);
    }
  }
  return out;
}

std::vector<Vector> as_vectors(const std::vector<Rational>& xs) {
  std::vector<Vector> out;
  for (const auto& x : xs) out.push_back(Vector{x});
  return out;
}

// su(2) index pairs with sum (2k+1) + sum 4k <= max_dim.
std::vector<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> su2_indices(std::size_t max_dim) {
  std::vector<std::pair<std::vector<std::size_t>, std::vector<std::size_t>>> out;
  std::vector<std::size_t> odd, quat;
  std::function<void(std::size_t, std::size_t, bool)> rec = [&](std::size_t used, std::size_t min_k, bool in_quat) {
    out.push_back({odd, quat});
    if (!in_quat)
      for (std::size_t k = min_k; used + 2 * k + 1 <= max_dim; ++k) {
        odd.push_back(k);
        rec(used + 2 * k + 1, k, false);
        odd.pop_back();
      }
    for (std::size_t k = in_quat ? min_k : 1; used + 4 * k <= max_dim; ++k) {
      quat.push_back(k);
      rec(used + 4 * k, k, true);
      quat.pop_back();
    }
  };
  rec(0, 1, false);
  return out;
}

RowParams of(const std::vector<Vector>& lambda) {
  RowParams p;
  p.lambda = lambda;
  return p;
}

}  // namespace

std::vector<RowKey> sweep_keys(const SweepBounds& bounds) {
  std::vector<RowKey> keys;
  auto scalars = lambda_lists(as_vectors(scalar_weights(bounds.max_den)), bounds.max_m);
  auto pairs = lambda_lists(pair_weights(bounds.max_den), bounds.max_m);
  std::vector<Rational> extra{1, 2};
  if (bounds.max_den >= 2) extra.insert(extra.begin(), Rational(1, 2));
  for (const auto& lam : scalars) {
    for (const char* v : {"Ia", "Ib", "II", "IV"}) keys.push_back({BaseName::n2, v, of(lam)});
    for (const auto& r : extra) {
      RowParams p = of(lam);
      p.r = r;
      keys.push_back({BaseName::n2, "III", p});
    }
    for (const char* v : {"I", "II"}) keys.push_back({BaseName::r3m1, v, of(lam)});
    for (const auto& nu : extra) {
      RowParams p = of(lam);
      p.nu = nu;
      keys.push_back({BaseName::R1, "I", p});
    }
    keys.push_back({BaseName::R1, "II", of(lam)});
    for (const auto& mu : extra) {
      if (mu < 1) continue;
      RowParams p = of(lam);
      p.mu = mu;
      keys.push_back({BaseName::R1, "III", p});
    }
  }
  for (const auto& lam : pairs) {
    for (const char* v : {"I", "II"}) keys.push_back({BaseName::h1, v, of(lam)});
    for (const char* v : {"I", "II"}) keys.push_back({BaseName::R2, v, of(lam)});
    if (lam.size() >= 2 && spans_three_lines(lam)) keys.push_back({BaseName::R2, "III", of(lam)});
  }
  for (const auto& c : {Rational(-1), Rational(0), Rational(1)}) {
    RowParams p;
    p.c = c;
    keys.push_back({BaseName::sl2, "I", p});
  }
  for (const auto& [odd, quat] : su2_indices(std::max<std::size_t>(4, 2 * bounds.max_m + 1)))
    for (const auto& c : {Rational(0), Rational(1)}) {
      RowParams p;
      p.k_odd = odd;
      p.k_quat = quat;
      p.c = c;
      keys.push_back({BaseName::su2, "I", p});
    }
  std::vector<Vector> axes{{1, 0, 0}, {0, 1, 0}, {0, 0, 1}};
  for (const auto& lam : lambda_lists(axes, bounds.max_m)) {
    RowParams p = of(lam);
    p.gamma = 1;
    keys.push_back({BaseName::R3, "gamma", p});
    for (const char* v : {"alpha2", "alpha3"}) keys.push_back({BaseName::R3, v, of(lam)});
    if (lam.size() >= 2) keys.push_back({BaseName::R3, "alpha1", of(lam)});
  }
  return keys;
}

SweepReport sweep(const SweepBounds& bounds) {
  SweepReport rep;
  std::vector<CatalogRow> built;
  for (const auto& key : sweep_keys(bounds)) {
    auto t0 = std::chrono::steady_clock::now();
    CatalogRow row = catalog_row(key);
    SweepEntry entry{key, verify_row(row), certificate(row), 0};
    entry.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    rep.rows.push_back(std::move(entry));
    built.push_back(std::move(row));
  }
  std::vector<std::string> fams;
  for (std::size_t i = 0; i < rep.rows.size(); ++i) {
    const Certificate& ci = rep.rows[i].certificate;
    if (std::find(fams.begin(), fams.end(), ci.family) == fams.end()) fams.push_back(ci.family);
    for (std::size_t j = i + 1; j < rep.rows.size(); ++j) {
      const Certificate& cj = rep.rows[j].certificate;
      if (ci.family != cj.family || !ci.complete) continue;
      if (non_isomorphism_certificate(built[i], built[j]).verdict != Comparison::equal) continue;
      BaseName b = rep.rows[i].key.base;
      if (b == BaseName::h1 || b == BaseName::R2)
        rep.isomorphic_pairs.push_back({i, j});
      else
        rep.collisions.push_back({i, j});
    }
  }
  rep.families = fams.size();
  for (const auto& c : controls()) {
    ControlOutcome o;
    o.name = c.name;
    AdmissibilityReport a = admissibility(c.pair, c.cocycle);
    StandardModel model = build_model(c.pair, c.cocycle);
    o.admissible = a.admissible;
    o.balanced = is_balanced(model);
    o.index = index(model.metric);
    o.as_expected = o.admissible == c.expected_admissible && o.balanced == o.admissible &&
                    (c.excluded_from_index3 ? o.index != 3 : true);
    rep.controls.push_back(o);
  }
  return rep;
}

}  // namespace mla
