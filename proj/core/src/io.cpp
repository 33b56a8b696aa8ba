#include "mla/io.hpp"

#include <fstream>
#include <sstream>

#include "json.hpp"

#include "mla/errors.hpp"

namespace mla::io {

using json = nlohmann::ordered_json;

namespace {

const char* const kKinds[] = {"lie", "metric", "representation", "cocycle", "extension", "catalog_row"};

// ---- writing

json rational(const Rational& q) { return mla::to_string(q); }

json vector_json(const Vector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(rational(x));
  return a;
}

json matrix_json(const Matrix& m) {
  json a = json::array();
  for (std::size_t r = 0; r < m.rows(); ++r) a.push_back(vector_json(m.row(r)));
  return a;
}

json lie_json(const LieAlgebra& g) {
  json brackets = json::array();
  const std::size_t n = g.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j)
      for (std::size_t k = 0; k < n; ++k)
        if (sgn(g.constant(i, j, k)) != 0) brackets.push_back(json::array({i, j, k, rational(g.constant(i, j, k))}));
  json out;
  out["dim"] = n;
  out["labels"] = g.labels();
  out["brackets"] = brackets;
  return out;
}

json metric_json(const MetricLieAlgebra& g) {
  json out;
  out["lie"] = lie_json(g.lie());
  out["form"] = matrix_json(g.form.gram());
  return out;
}

json representation_json(const Representation& rep) {
  json out;
  out["lie"] = lie_json(rep.algebra());
  out["dim"] = rep.module_dim();
  json action = json::array();
  for (const auto& a : rep.action()) action.push_back(matrix_json(a));
  out["action"] = action;
  out["form"] = rep.has_form() ? matrix_json(rep.metric().gram()) : json(nullptr);
  return out;
}

json cochain_entries(const Cochain& c, bool with_module_index) {
  json out = json::array();
  const SubsetIndex& idx = subsets(c.l_dim, c.degree);
  for (std::size_t s = 0; s < idx.count(); ++s)
    for (std::size_t a = 0; a < c.module_dim; ++a) {
      const Rational& v = c.coords[s * c.module_dim + a];
      if (sgn(v) == 0) continue;
      json e = json::array();
      for (auto i : idx.subset(s)) e.push_back(i);
      if (with_module_index) e.push_back(a);
      e.push_back(rational(v));
      out.push_back(e);
    }
  return out;
}

json cocycle_json(const Pair& pr, const QuadraticCocycle& z) {
  json out;
  out["representation"] = representation_json(pr.module());
  out["degree"] = z.p();
  out["alpha"] = cochain_entries(z.alpha, true);
  out["gamma"] = cochain_entries(z.gamma, false);
  return out;
}

json extension_json(const StandardModel& m) {
  json out;
  out["cocycle"] = cocycle_json(m.pair, m.cocycle);
  out["ip_l"] = m.ip_l ? matrix_json(m.ip_l->gram()) : json(nullptr);
  out["metric"] = metric_json(m.metric);
  return out;
}

json row_json(const RowKey& key) {
  const RowParams& p = key.params;
  json params;
  json lambda = json::array();
  for (const auto& l : p.lambda) lambda.push_back(vector_json(l));
  params["lambda"] = lambda;
  params["r"] = rational(p.r);
  params["nu"] = rational(p.nu);
  params["mu"] = rational(p.mu);
  params["c"] = rational(p.c);
  params["gamma"] = rational(p.gamma);
  params["k_odd"] = p.k_odd;
  params["k_quat"] = p.k_quat;
  json out;
  out["base"] = mla::to_string(key.base);
  out["variant"] = key.variant;
  out["params"] = params;
  return out;
}

// ---- reading

struct Cursor {
  const json& j;
  std::string path;

  Cursor at(const std::string& key) const {
    if (!j.is_object()) fail("expected an object");
    auto it = j.find(key);
    if (it == j.end()) throw ParseError(path, "missing field '" + key + "'");
    return {*it, path + "." + key};
  }
  bool has(const std::string& key) const { return j.is_object() && j.contains(key) && !j.at(key).is_null(); }
  Cursor at(std::size_t i) const { return {j.at(i), path + "[" + std::to_string(i) + "]"}; }
  std::size_t size() const {
    if (!j.is_array()) fail("expected an array");
    return j.size();
  }
  [[noreturn]] void fail(const std::string& what) const { throw ParseError(path, what); }

  std::string str() const {
    if (!j.is_string()) fail("expected a string");
    return j.get<std::string>();
  }
  std::size_t index() const {
    if (!j.is_number_unsigned() && !(j.is_number_integer() && j.get<long long>() >= 0)) fail("expected a nonnegative integer");
    return j.get<std::size_t>();
  }
  Rational rat() const {
    if (j.is_number_integer()) return Rational(j.get<long>());
    try {
      return parse_rational(str());
    } catch (const ParseError& e) {
      fail(std::string("not a rational: ") + e.what());
    }
  }
  Vector vec(std::size_t expected = SIZE_MAX) const {
    std::size_t n = size();
    if (expected != SIZE_MAX && n != expected) fail("expected " + std::to_string(expected) + " entries, got " + std::to_string(n));
    Vector v;
    for (std::size_t i = 0; i < n; ++i) v.push_back(at(i).rat());
    return v;
  }
  Matrix mat(std::size_t rows, std::size_t cols) const {
    if (size() != rows) fail("expected " + std::to_string(rows) + " rows, got " + std::to_string(size()));
    Matrix m(rows, cols);
    for (std::size_t r = 0; r < rows; ++r) m.set_row(r, at(r).vec(cols));
    return m;
  }
};

std::size_t bounded(const Cursor& c, std::size_t limit) {
  std::size_t v = c.index();
  if (v >= limit) c.fail("index " + std::to_string(v) + " out of range (< " + std::to_string(limit) + ")");
  return v;
}

LieAlgebra read_lie(const Cursor& c) {
  const std::size_t n = c.at("dim").index();
  StructureTable t(n);
  if (c.has("labels")) {
    Cursor lab = c.at("labels");
    for (std::size_t i = 0; i < lab.size(); ++i) t.labels.push_back(lab.at(i).str());
    if (!t.labels.empty() && t.labels.size() != n) lab.fail("label count differs from dim");
  }
  Cursor br = c.at("brackets");
  for (std::size_t e = 0; e < br.size(); ++e) {
    Cursor q = br.at(e);
    if (q.size() != 4) q.fail("expected [i, j, k, value]");
    std::size_t i = bounded(q.at(0), n), j = bounded(q.at(1), n), k = bounded(q.at(2), n);
    if (i >= j) q.fail("bracket entries need i < j");
    t.add(i, j, k, q.at(3).rat());
  }
  if (auto w = jacobi_check(LieAlgebra::unchecked(t)))
    c.fail("Jacobi identity fails on (" + std::to_string(w->i) + "," + std::to_string(w->j) + "," + std::to_string(w->k) + ")");
  return LieAlgebra::make(t);
}

SymmetricForm read_form(const Cursor& c, std::size_t n) {
  Matrix g = c.mat(n, n);
  if (!(g == g.transpose())) c.fail("form is not symmetric");
  return SymmetricForm(g);
}

MetricLieAlgebra read_metric(const Cursor& c) {
  AlgebraPtr g = share(read_lie(c.at("lie")));
  SymmetricForm f = read_form(c.at("form"), g->dim());
  if (auto v = check_metric(*g, f)) c.at("form").fail(v->describe());
  return MetricLieAlgebra{g, f};
}

Representation read_representation(const Cursor& c) {
  AlgebraPtr g = share(read_lie(c.at("lie")));
  const std::size_t m = c.at("dim").index();
  Cursor act = c.at("action");
  if (act.size() != g->dim()) act.fail("expected one matrix per basis vector of l");
  std::vector<Matrix> action;
  for (std::size_t i = 0; i < g->dim(); ++i) action.push_back(act.at(i).mat(m, m));
  std::optional<SymmetricForm> form;
  if (c.has("form")) form = read_form(c.at("form"), m);
  Representation rep(g, m, action, form);
  if (auto w = check_representation(rep)) c.fail(w->describe());
  return rep;
}

Cochain read_cochain(const Cursor& c, std::size_t n, std::size_t degree, std::size_t m, bool with_module_index) {
  Cochain out = Cochain::zero(n, degree, m);
  const std::size_t width = degree + (with_module_index ? 1 : 0) + 1;
  for (std::size_t e = 0; e < c.size(); ++e) {
    Cursor q = c.at(e);
    if (q.size() != width) q.fail("expected " + std::to_string(width) + " entries");
    std::vector<std::size_t> args;
    for (std::size_t i = 0; i < degree; ++i) {
      args.push_back(bounded(q.at(i), n));
      if (i > 0 && args[i - 1] >= args[i]) q.fail("arguments must be strictly increasing");
    }
    std::size_t a = with_module_index ? bounded(q.at(degree), m) : 0;
    Vector v = zero_vector(m);
    v[a] = q.at(width - 1).rat();
    out.add_value(args, v);
  }
  return out;
}

CocycleDocument read_cocycle(const Cursor& c) {
  Representation rep = read_representation(c.at("representation"));
  if (!rep.has_form()) c.at("representation").fail("a cocycle needs an orthogonal module (form)");
  Pair pr(rep);
  std::size_t p = c.has("degree") ? c.at("degree").index() : 2;
  if (p != 2) c.at("degree").fail("only degree 2 is supported");
  QuadraticCocycle z{read_cochain(c.at("alpha"), pr.l_dim(), 2, pr.a_dim(), true),
                     read_cochain(c.at("gamma"), pr.l_dim(), 3, 1, false)};
  return {pr, z};
}

StandardModel read_extension(const Cursor& c) {
  CocycleDocument cd = read_cocycle(c.at("cocycle"));
  StandardModel model;
  if (c.has("ip_l"))
    model = build_modified(cd.pair, read_form(c.at("ip_l"), cd.pair.l_dim()), cd.cocycle).model;
  else
    model = build_model(cd.pair, cd.cocycle);
  if (c.has("metric")) {
    MetricLieAlgebra stored = read_metric(c.at("metric"));
    if (!(stored.lie() == model.metric.lie()) || !(stored.form == model.metric.form))
      c.at("metric").fail("does not match the model built from the cocycle");
  }
  return model;
}

RowKey read_row(const Cursor& c) {
  RowKey key;
  std::string base = c.at("base").str();
  if (auto b = parse_base(base))
    key.base = *b;
  else
    c.at("base").fail("unknown base '" + base + "'");
  key.variant = c.at("variant").str();
  if (!c.has("params")) return key;
  Cursor p = c.at("params");
  RowParams& r = key.params;
  if (p.has("lambda")) {
    Cursor l = p.at("lambda");
    for (std::size_t i = 0; i < l.size(); ++i) r.lambda.push_back(l.at(i).vec());
  }
  if (p.has("r")) r.r = p.at("r").rat();
  if (p.has("nu")) r.nu = p.at("nu").rat();
  if (p.has("mu")) r.mu = p.at("mu").rat();
  if (p.has("c")) r.c = p.at("c").rat();
  if (p.has("gamma")) r.gamma = p.at("gamma").rat();
  for (auto [name, dst] : {std::pair{"k_odd", &r.k_odd}, std::pair{"k_quat", &r.k_quat}})
    if (p.has(name)) {
      Cursor k = p.at(name);
      for (std::size_t i = 0; i < k.size(); ++i) dst->push_back(k.at(i).index());
    }
  return key;
}

}  // namespace

std::string to_string(Kind k) { return kKinds[static_cast<int>(k)]; }

Kind kind_of(const Document& d) { return static_cast<Kind>(d.index()); }

std::string serialize(const Document& d) {
  json payload = std::visit(
      [](const auto& x) -> json {
        using T = std::decay_t<decltype(x)>;
        if constexpr (std::is_same_v<T, LieAlgebra>) return lie_json(x);
        else if constexpr (std::is_same_v<T, MetricLieAlgebra>) return metric_json(x);
        else if constexpr (std::is_same_v<T, Representation>) return representation_json(x);
        else if constexpr (std::is_same_v<T, CocycleDocument>) return cocycle_json(x.pair, x.cocycle);
        else if constexpr (std::is_same_v<T, StandardModel>) return extension_json(x);
        else return row_json(x);
      },
      d);
  json doc;
  doc["format_version"] = kFormatVersion;
  doc["kind"] = to_string(kind_of(d));
  doc["payload"] = payload;
  return doc.dump(2) + "\n";
}

Document parse_document(const std::string& text) {
  json doc;
  try {
    doc = json::parse(text);
  } catch (const json::parse_error& e) {
    throw ParseError("byte " + std::to_string(e.byte), "malformed JSON");
  }
  Cursor root{doc, "$"};
  std::string version = root.at("format_version").str();
  if (version != kFormatVersion) root.at("format_version").fail("unsupported version '" + version + "'");
  std::string kind = root.at("kind").str();
  Cursor payload = root.at("payload");
  try {
    if (kind == "lie") return read_lie(payload);
    if (kind == "metric") return read_metric(payload);
    if (kind == "representation") return read_representation(payload);
    if (kind == "cocycle") return read_cocycle(payload);
    if (kind == "extension") return read_extension(payload);
    if (kind == "catalog_row") return read_row(payload);
  } catch (const json::exception& e) {
    throw ParseError(payload.path, e.what());
  }
  root.at("kind").fail("unknown kind '" + kind + "'");
}

Document read_document(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError(path, "cannot open file");
  std::stringstream ss;
  ss << in.rdbuf();
  try {
    return parse_document(ss.str());
  } catch (const ParseError& e) {
    throw ParseError(path + ": " + e.location, std::string(e.what()).substr(e.location.size() + 2));
  }
}

}  // namespace mla::io
