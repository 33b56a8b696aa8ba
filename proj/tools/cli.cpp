#include "cli.hpp"

#include <fstream>
#include <iomanip>
#include <ostream>
#include <sstream>

#include "CLI11.hpp"
#include "json.hpp"
#include "mla/io.hpp"

namespace mla::cli {

namespace {

using json = nlohmann::ordered_json;

struct Options {
  bool json_out = false;
  std::optional<std::size_t> degree;
  std::optional<std::size_t> max_degree;
  std::vector<std::string> files;
  std::string output;
  std::string bounds;
  // catalog row
  std::string base, variant, lambda, r, nu, mu, c, gamma, k_odd, k_quat;
};

std::string q(const Rational& x) { return to_string(x); }

json vec_json(const Vector& v) {
  json a = json::array();
  for (const auto& x : v) a.push_back(q(x));
  return a;
}

json subspace_json(const Subspace& s) {
  json a = json::array();
  for (const auto& v : s.vectors()) a.push_back(vec_json(v));
  return a;
}

json cochain_json(const Cochain& c) {
  json out = json::array();
  const SubsetIndex& idx = subsets(c.l_dim, c.degree);
  for (std::size_t s = 0; s < idx.count(); ++s) {
    Vector v = c.value(s);
    if (is_zero(v)) continue;
    out.push_back({{"args", idx.subset(s)}, {"value", vec_json(v)}});
  }
  return out;
}

std::string cochain_text(const Cochain& c, const LieAlgebra& l) {
  std::ostringstream os;
  const SubsetIndex& idx = subsets(c.l_dim, c.degree);
  bool any = false;
  for (std::size_t s = 0; s < idx.count(); ++s) {
    Vector v = c.value(s);
    if (is_zero(v)) continue;
    os << (any ? ", " : "") << "(";
    for (std::size_t i = 0; i < idx.subset(s).size(); ++i) os << (i ? "," : "") << l.label(idx.subset(s)[i]);
    os << ") -> " << v;
    any = true;
  }
  return any ? os.str() : "0";
}

void emit(const Options& o, std::ostream& out, const std::string& doc) {
  if (o.output.empty()) {
    out << doc;
    return;
  }
  std::ofstream f(o.output);
  if (!f) throw ParseError(o.output, "cannot write file");
  f << doc;
}

void print_json(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

MetricLieAlgebra metric_of(const io::Document& d) {
  if (auto m = std::get_if<MetricLieAlgebra>(&d)) return *m;
  if (auto e = std::get_if<StandardModel>(&d)) return e->metric;
  if (auto r = std::get_if<RowKey>(&d)) return catalog_row(*r).model.metric;
  if (auto c = std::get_if<io::CocycleDocument>(&d)) return build_model(c->pair, c->cocycle).metric;
  throw ParseError("kind", "expected a metric, extension, cocycle or catalog_row document, got " +
                               io::to_string(io::kind_of(d)));
}

// Pair and cocycle for documents that carry one.
io::CocycleDocument cocycle_of(const io::Document& d) {
  if (auto c = std::get_if<io::CocycleDocument>(&d)) return *c;
  if (auto e = std::get_if<StandardModel>(&d)) return {e->pair, e->ip_l ? build_modified(e->pair, *e->ip_l, e->cocycle).target : e->cocycle};
  if (auto r = std::get_if<RowKey>(&d)) {
    CatalogRow row = catalog_row(*r);
    return {row.pair, row.cocycle};
  }
  if (auto m = std::get_if<MetricLieAlgebra>(&d)) {
    ExtensionData ext = canonical_extension(*m);
    return {ext.pair, extract_cocycle(ext)};
  }
  throw ParseError("kind", "expected a cocycle, extension, catalog_row or metric document, got " +
                               io::to_string(io::kind_of(d)));
}

Representation module_of(const io::Document& d) {
  if (auto r = std::get_if<Representation>(&d)) return *r;
  if (auto l = std::get_if<LieAlgebra>(&d)) return Representation::trivial(share(*l), 1);
  if (auto c = std::get_if<io::CocycleDocument>(&d)) return c->pair.module();
  throw ParseError("kind", "expected a lie, representation or cocycle document, got " + io::to_string(io::kind_of(d)));
}

// ---- subcommands

int cmd_validate(const Options& o, std::ostream& out) {
  io::Document d = io::read_document(o.files.at(0));
  std::string detail = "well-formed";
  bool valid = true;
  if (auto c = std::get_if<io::CocycleDocument>(&d)) {
    CocycleDefect defect = check_cocycle(c->pair, c->cocycle);
    valid = defect == CocycleDefect::none;
    const char* names[] = {"quadratic cocycle", "shape mismatch", "d alpha != 0", "d gamma != 1/2 <alpha ^ alpha>"};
    detail = names[static_cast<int>(defect)];
  } else if (auto r = std::get_if<RowKey>(&d)) {
    catalog_row(*r);
    detail = "row parameters satisfy the constraints of " + r->name();
  }
  if (o.json_out)
    print_json(out, {{"kind", io::to_string(io::kind_of(d))}, {"valid", valid}, {"detail", detail}});
  else
    out << io::to_string(io::kind_of(d)) << ": " << (valid ? "valid" : "INVALID") << " (" << detail << ")\n";
  return valid ? ok : negative;
}

int cmd_analyze(const Options& o, std::ostream& out) {
  io::Document d = io::read_document(o.files.at(0));
  MetricLieAlgebra g = metric_of(d);
  const LieAlgebra& l = g.lie();
  StructureReport sr = structure_report(l);
  Inertia in = signature(g.form);
  CanonicalIdeals ci = canonical_ideals(g);
  std::optional<bool> balanced;
  std::string balanced_note;
  if (ci.has_simple_ideals()) {
    balanced_note = "not applicable: simple ideals present";
  } else {
    ExtensionData ext = canonical_extension(g);
    balanced = is_balanced(build_model(ext.pair, extract_cocycle(ext)));
  }
  std::vector<std::size_t> socles, radicals;
  for (const auto& s : ci.filtration.socles.entries) socles.push_back(s.dim());
  for (const auto& r : ci.filtration.radicals.entries) radicals.push_back(r.dim());
  if (o.json_out) {
    json j;
    j["dim"] = l.dim();
    j["index"] = in.negatives;
    j["signature"] = {in.negatives, in.positives};
    j["derived_dim"] = sr.derived.dim();
    j["center_dim"] = sr.center.dim();
    j["nilpotency_radical_dim"] = nilpotency_radical(l).dim();
    j["nilpotent"] = sr.is_nilpotent;
    j["solvable"] = sr.is_solvable;
    j["socle_dims"] = socles;
    j["radical_dims"] = radicals;
    j["i"] = subspace_json(ci.i);
    j["j"] = subspace_json(ci.j);
    j["simple_part_dim"] = ci.simple_part.dim();
    j["balanced"] = balanced ? json(*balanced) : json(nullptr);
    print_json(out, j);
    return ok;
  }
  auto list = [](const std::vector<std::size_t>& v) {
    std::ostringstream os;
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? " " : "") << v[i];
    return os.str();
  };
  out << std::left;
  auto row = [&](const std::string& k, const std::string& v) { out << "  " << std::setw(24) << k << v << "\n"; };
  out << "metric Lie algebra\n";
  row("dimension", std::to_string(l.dim()));
  row("index", std::to_string(in.negatives));
  row("signature (-,+)", "(" + std::to_string(in.negatives) + "," + std::to_string(in.positives) + ")");
  row("dim [g,g]", std::to_string(sr.derived.dim()));
  row("dim center", std::to_string(sr.center.dim()));
  row("dim R(g)", std::to_string(nilpotency_radical(l).dim()));
  row("nilpotent / solvable", std::string(sr.is_nilpotent ? "yes" : "no") + " / " + (sr.is_solvable ? "yes" : "no"));
  row("socle dims S_k", list(socles));
  row("radical dims R_k", list(radicals));
  row("dim i(g)", std::to_string(ci.i.dim()));
  row("dim j(g)", std::to_string(ci.j.dim()));
  row("dim simple part", std::to_string(ci.simple_part.dim()));
  row("balanced", balanced ? (*balanced ? "yes" : "no") : balanced_note);
  return ok;
}

int cmd_cohomology(const Options& o, std::ostream& out) {
  Representation rep = module_of(io::read_document(o.files.at(0)));
  CochainComplex cx(rep);
  const std::size_t n = rep.algebra_dim();
  std::size_t lo = 0, hi = std::min(n, o.max_degree.value_or(n));
  if (o.degree) {
    if (*o.degree > n) throw UsageError("degree exceeds dim l");
    lo = hi = *o.degree;
  }
  json dims = json::object();
  for (std::size_t p = lo; p <= hi; ++p) {
    CohomologySpace h(cx, p);
    if (o.json_out)
      dims[std::to_string(p)] = h.dim();
    else
      out << "H^" << p << " = " << h.dim() << "   (cochains " << cx.cochain_dim(p) << ", cocycles " << h.cocycles().dim()
          << ", coboundaries " << h.coboundaries().dim() << ")\n";
  }
  if (o.json_out) print_json(out, {{"module_dim", rep.module_dim()}, {"dims", dims}});
  return ok;
}

int cmd_build(const Options& o, std::ostream& out) {
  io::Document d = io::read_document(o.files.at(0));
  StandardModel model;
  if (auto r = std::get_if<RowKey>(&d))
    model = catalog_row(*r).model;
  else {
    const auto& c = io::expect<io::CocycleDocument>(d, "cocycle");
    model = build_model(c.pair, c.cocycle);
  }
  emit(o, out, io::serialize(model));
  return ok;
}

int cmd_extract(const Options& o, std::ostream& out) {
  io::Document d = io::read_document(o.files.at(0));
  MetricLieAlgebra g = metric_of(d);
  ExtensionData ext = canonical_extension(g);
  emit(o, out, io::serialize(io::CocycleDocument{ext.pair, extract_cocycle(ext)}));
  return ok;
}

int cmd_check_balanced(const Options& o, std::ostream& out) {
  io::Document d = io::read_document(o.files.at(0));
  io::CocycleDocument c = cocycle_of(d);
  StandardModel model = build_model(c.pair, c.cocycle);
  bool b = is_balanced(model);
  CanonicalIdeals ci = canonical_ideals(model.metric);
  if (o.json_out)
    print_json(out, {{"balanced", b}, {"dim_i", ci.i.dim()}, {"dim_lstar", model.l_dim()}});
  else
    out << "balanced: " << (b ? "yes" : "no") << " (dim i(d) = " << ci.i.dim() << ", dim l* = " << model.l_dim() << ")\n";
  return b ? ok : negative;
}

int cmd_check_admissible(const Options& o, std::ostream& out) {
  io::CocycleDocument c = cocycle_of(io::read_document(o.files.at(0)));
  AdmissibilityReport rep = admissibility(c.pair, c.cocycle);
  if (o.json_out) {
    json steps = json::array();
    for (const auto& s : rep.per_k) {
      json j{{"k", s.k}, {"a_k", s.a_k}, {"b_k", s.b_k}};
      if (s.witness) j["witness"] = subspace_json(*s.witness);
      steps.push_back(j);
    }
    print_json(out, {{"admissible", rep.admissible},
                     {"regularly_admissible", rep.regularly_admissible},
                     {"rho_semisimple", rep.rho_semisimple},
                     {"b0_prime", rep.b0_prime},
                     {"balanced", rep.balanced_direct},
                     {"steps", steps}});
  } else {
    out << rep.summary();
    for (const auto& s : rep.per_k)
      if (!s.a_k || !s.b_k) out << "failing condition at k = " << s.k << ": " << (!s.a_k ? "(a_k)" : "(b_k)") << "\n";
  }
  return rep.admissible ? ok : negative;
}

bool same_pair(const Pair& a, const Pair& b) {
  const Representation &ra = a.module(), &rb = b.module();
  return ra.algebra() == rb.algebra() && ra.module_dim() == rb.module_dim() && ra.action() == rb.action() &&
         a.form() == b.form();
}

int cmd_equivalent(const Options& o, std::ostream& out) {
  if (o.files.size() != 2) throw UsageError("equivalent needs two cocycle documents");
  io::CocycleDocument a = cocycle_of(io::read_document(o.files[0]));
  io::CocycleDocument b = cocycle_of(io::read_document(o.files[1]));
  if (!same_pair(a.pair, b.pair)) throw InvalidInput("the two cocycles live on different pairs (l, a, rho, <,>)");
  for (const auto* z : {&a, &b})
    if (!is_quadratic_cocycle(z->pair, z->cocycle)) throw InvalidInput("input is not a quadratic cocycle");
  auto w = equivalent_cocycles(a.pair, a.cocycle, b.cocycle);
  if (o.json_out) {
    json j{{"equivalent", w.has_value()}};
    if (w) j["witness"] = {{"tau", cochain_json(w->tau)}, {"sigma", cochain_json(w->sigma)}};
    print_json(out, j);
  } else if (w) {
    out << "equivalent: yes, first = second . (tau, sigma) with\n";
    out << "  tau   = " << cochain_text(w->tau, a.pair.algebra()) << "\n";
    out << "  sigma = " << cochain_text(w->sigma, a.pair.algebra()) << "\n";
  } else {
    out << "equivalent: no\n";
  }
  return w ? ok : negative;
}

std::vector<Vector> parse_lambda(const std::string& text) {
  std::vector<Vector> out;
  if (text.empty()) return out;
  std::stringstream blocks(text);
  std::string block;
  while (std::getline(blocks, block, ';')) {
    Vector v;
    std::stringstream comps(block);
    std::string comp;
    while (std::getline(comps, comp, ':')) v.push_back(parse_rational(comp));
    out.push_back(v);
  }
  return out;
}

std::vector<std::size_t> parse_indices(const std::string& text) {
  std::vector<std::size_t> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    if (item.empty() || item.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError("--k", "expected a comma separated list of positive integers");
    out.push_back(std::stoul(item));
  }
  return out;
}

std::string params_text(const RowKey& k) {
  std::ostringstream os;
  const RowParams& p = k.params;
  if (!p.lambda.empty()) {
    os << "lambda=";
    for (std::size_t i = 0; i < p.lambda.size(); ++i) {
      os << (i ? ";" : "");
      for (std::size_t j = 0; j < p.lambda[i].size(); ++j) os << (j ? ":" : "") << q(p.lambda[i][j]);
    }
    os << " ";
  }
  if (sgn(p.r) != 0) os << "r=" << q(p.r) << " ";
  if (sgn(p.nu) != 0) os << "nu=" << q(p.nu) << " ";
  if (sgn(p.mu) != 0) os << "mu=" << q(p.mu) << " ";
  if (k.base == BaseName::sl2 || k.base == BaseName::su2) os << "c=" << q(p.c) << " ";
  if (sgn(p.gamma) != 0) os << "gamma=" << q(p.gamma) << " ";
  auto ks = [&](const char* name, const std::vector<std::size_t>& v) {
    if (v.empty()) return;
    os << name << "=";
    for (std::size_t i = 0; i < v.size(); ++i) os << (i ? "," : "") << v[i];
    os << " ";
  };
  ks("k_odd", p.k_odd);
  ks("k_quat", p.k_quat);
  std::string s = os.str();
  if (!s.empty()) s.pop_back();
  return s;
}

const char* verdict_name(Decomposability d) {
  switch (d) {
    case Decomposability::indecomposable:
      return "indecomposable";
    case Decomposability::decomposable:
      return "decomposable";
    case Decomposability::undecided:
      return "undecided";
  }
  return "";
}

json verdict_json(const RowVerdict& v) {
  return {{"index", v.index},
          {"balanced", v.balanced},
          {"admissible", v.admissibility.admissible},
          {"regularly_admissible", v.admissibility.regularly_admissible},
          {"simple_ideal_free", v.simple_ideal_free},
          {"indecomposability", verdict_name(v.indecomposability.verdict)},
          {"indecomposability_reason", v.indecomposability.certificate},
          {"failures", v.failures},
          {"passes", v.passes()}};
}

json certificate_json(const Certificate& c) {
  return {{"family", c.family}, {"complete", c.complete}, {"invariant", vec_json(c.invariant)}, {"description", c.description}};
}

RowKey row_key(const Options& o) {
  RowKey key;
  auto b = parse_base(o.base);
  if (!b) throw ParseError("--base", "unknown base '" + o.base + "'");
  key.base = *b;
  key.variant = o.variant;
  if (key.variant.empty()) {
    auto v = catalog_variants(key.base);
    if (v.size() != 1) throw ParseError("--variant", "required for " + o.base);
    key.variant = v[0];
  }
  RowParams& p = key.params;
  p.lambda = parse_lambda(o.lambda);
  if (!o.r.empty()) p.r = parse_rational(o.r);
  if (!o.nu.empty()) p.nu = parse_rational(o.nu);
  if (!o.mu.empty()) p.mu = parse_rational(o.mu);
  if (!o.c.empty()) p.c = parse_rational(o.c);
  if (!o.gamma.empty()) p.gamma = parse_rational(o.gamma);
  if (!o.k_odd.empty()) p.k_odd = parse_indices(o.k_odd);
  if (!o.k_quat.empty()) p.k_quat = parse_indices(o.k_quat);
  return key;
}

int cmd_catalog(const Options& o, std::ostream& out) {
  RowKey key = o.files.empty() ? row_key(o) : io::expect<RowKey>(io::read_document(o.files[0]), "catalog_row");
  CatalogRow row = catalog_row(key);
  RowVerdict v = verify_row(row);
  Certificate c = certificate(row);
  if (!o.output.empty()) emit(o, out, io::serialize(key));
  if (o.json_out) {
    print_json(out, {{"row", key.name()},
                     {"params", params_text(key)},
                     {"dim", row.model.dim()},
                     {"a_dim", row.pair.a_dim()},
                     {"conditional", row.conditional},
                     {"verdict", verdict_json(v)},
                     {"certificate", certificate_json(c)}});
  } else {
    out << key.name() << "  " << params_text(key) << "\n";
    out << "  dim " << row.model.dim() << " (dim a = " << row.pair.a_dim() << "), index " << v.index << ", balanced "
        << (v.balanced ? "yes" : "no") << ", admissible " << (v.admissibility.admissible ? "yes" : "no") << "\n";
    out << "  " << verdict_name(v.indecomposability.verdict) << ": " << v.indecomposability.certificate << "\n";
    out << "  certificate [" << c.family << "]: " << c.description << "\n";
    if (row.conditional) out << "  conditional row: parameter domain is an open set the pipeline tests pointwise\n";
    for (const auto& f : v.failures) out << "  FAIL: " << f << "\n";
  }
  return v.passes() ? ok : negative;
}

SweepBounds parse_bounds(const std::string& text) {
  SweepBounds b;
  if (text.empty()) return b;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) {
    auto eq = item.find('=');
    if (eq == std::string::npos) throw ParseError("--bounds", "expected key=value, got '" + item + "'");
    std::string k = item.substr(0, eq), v = item.substr(eq + 1);
    if (v.empty() || v.find_first_not_of("0123456789") != std::string::npos)
      throw ParseError("--bounds", "value of " + k + " must be a nonnegative integer");
    if (k == "m")
      b.max_m = std::stoul(v);
    else if (k == "den")
      b.max_den = std::stoul(v);
    else
      throw ParseError("--bounds", "unknown key '" + k + "' (use m, den)");
  }
  if (b.max_den == 0) throw ParseError("--bounds", "den must be positive");
  return b;
}

int cmd_sweep(const Options& o, std::ostream& out) {
  SweepBounds b = parse_bounds(o.bounds);
  SweepReport rep = sweep(b);
  double total = 0;
  for (const auto& r : rep.rows) total += r.seconds;
  if (o.json_out) {
    json rows = json::array();
    for (const auto& r : rep.rows)
      rows.push_back({{"row", r.key.name()},
                      {"params", params_text(r.key)},
                      {"verdict", verdict_json(r.verdict)},
                      {"certificate", certificate_json(r.certificate)},
                      {"seconds", r.seconds}});
    json controls = json::array();
    for (const auto& c : rep.controls)
      controls.push_back({{"name", c.name}, {"admissible", c.admissible}, {"balanced", c.balanced}, {"index", c.index}, {"as_expected", c.as_expected}});
    auto pairs = [&](const auto& v) {
      json a = json::array();
      for (const auto& [i, j] : v) a.push_back({{"first", rep.rows[i].key.name() + " " + params_text(rep.rows[i].key)},
                                                {"second", rep.rows[j].key.name() + " " + params_text(rep.rows[j].key)}});
      return a;
    };
    print_json(out, {{"bounds", {{"m", b.max_m}, {"den", b.max_den}}},
                     {"rows", rows},
                     {"controls", controls},
                     {"collisions", pairs(rep.collisions)},
                     {"isomorphic_pairs", pairs(rep.isomorphic_pairs)},
                     {"families", rep.families},
                     {"seconds", total},
                     {"ok", rep.ok()}});
  } else {
    out << std::left << std::setw(12) << "row" << std::setw(28) << "params" << std::setw(6) << "idx" << std::setw(5) << "bal"
        << std::setw(5) << "adm" << std::setw(16) << "indecomposable" << "result\n";
    std::size_t failed = 0;
    for (const auto& r : rep.rows) {
      const RowVerdict& v = r.verdict;
      bool conditional = r.key.base == BaseName::R3;
      std::string result = v.passes() ? "pass" : conditional ? "conditional: " + v.failures.front() : "FAIL: " + v.failures.front();
      if (!v.passes() && !conditional) ++failed;
      out << std::setw(12) << r.key.name() << std::setw(28) << params_text(r.key) << std::setw(6) << v.index << std::setw(5)
          << (v.balanced ? "y" : "n") << std::setw(5) << (v.admissibility.admissible ? "y" : "n") << std::setw(16)
          << verdict_name(v.indecomposability.verdict) << result << "\n";
    }
    out << "\ncontrols\n";
    for (const auto& c : rep.controls)
      out << "  " << std::setw(22) << c.name << "admissible " << (c.admissible ? "yes" : "no") << ", balanced "
          << (c.balanced ? "yes" : "no") << ", index " << c.index << (c.as_expected ? "  (as expected)" : "  UNEXPECTED") << "\n";
    for (const auto& [i, j] : rep.collisions)
      out << "collision: " << rep.rows[i].key.name() << " " << params_text(rep.rows[i].key) << " ~ " << params_text(rep.rows[j].key) << "\n";
    out << "\n" << rep.rows.size() << " rows in " << rep.families << " families, " << failed << " failed, "
        << rep.collisions.size() << " certificate collisions, " << rep.isomorphic_pairs.size()
        << " isomorphic parameter pairs (h1, R2), " << std::fixed << std::setprecision(2) << total << " s\n";
    out << (rep.ok() ? "sweep ok\n" : "sweep FAILED\n");
  }
  return rep.ok() ? ok : negative;
}

int cmd_certify(const Options& o, std::ostream& out) {
  if (o.files.size() != 2) throw UsageError("certify needs two catalog_row documents");
  CatalogRow a = catalog_row(io::expect<RowKey>(io::read_document(o.files[0]), "catalog_row"));
  CatalogRow b = catalog_row(io::expect<RowKey>(io::read_document(o.files[1]), "catalog_row"));
  CertificateVerdict v = non_isomorphism_certificate(a, b);
  bool distinct = v.verdict == Comparison::distinct || (v.verdict == Comparison::incomparable && v.l_invariant_distinct);
  if (o.json_out)
    print_json(out, {{"verdict", to_string(v.verdict)},
                     {"l_invariant_distinct", v.l_invariant_distinct},
                     {"non_isomorphic", distinct},
                     {"reason", v.reason}});
  else
    out << to_string(v.verdict) << ": " << v.reason << "\n";
  return distinct ? ok : negative;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"exact computations with metric Lie algebras as quadratic extensions", "mla"};
  app.require_subcommand(1);
  Options o;
  app.add_flag("--json", o.json_out, "machine readable output");

  auto file_cmd = [&](const std::string& name, const std::string& help, std::size_t nfiles = 1) {
    CLI::App* s = app.add_subcommand(name, help);
    s->fallthrough();
    s->add_option("files", o.files, "input document(s)")->required()->expected(static_cast<int>(nfiles));
    return s;
  };
  std::map<std::string, std::function<int(const Options&, std::ostream&)>> handlers;

  file_cmd("validate", "parse a document and check its invariants");
  handlers["validate"] = cmd_validate;
  file_cmd("analyze", "filtrations, i(g), j(g), index and balancedness of a metric Lie algebra");
  handlers["analyze"] = cmd_analyze;
  CLI::App* coh = file_cmd("cohomology", "dimensions of H^p(l, a)");
  coh->add_option("--degree", o.degree, "single degree p");
  coh->add_option("--max-degree", o.max_degree, "highest degree to report");
  handlers["cohomology"] = cmd_cohomology;
  file_cmd("build", "standard model of a cocycle document")->add_option("-o,--output", o.output, "write the document here");
  handlers["build"] = cmd_build;
  file_cmd("extract", "canonical cocycle of a metric document")->add_option("-o,--output", o.output, "write the document here");
  handlers["extract"] = cmd_extract;
  file_cmd("check-balanced", "is i(d) = l* for the standard model");
  handlers["check-balanced"] = cmd_check_balanced;
  file_cmd("check-admissible", "socle conditions for admissibility");
  handlers["check-admissible"] = cmd_check_admissible;
  file_cmd("equivalent", "are two cocycles in the same quadratic class", 2);
  handlers["equivalent"] = cmd_equivalent;

  CLI::App* cat = app.add_subcommand("catalog", "construct and verify an index-3 catalog row");
  cat->fallthrough();
  cat->add_option("files", o.files, "catalog_row document (instead of --base ...)")->expected(0, 1);
  cat->add_option("--base", o.base, "n2, r3m1, h1, sl2r, su2, R1, R2, R3");
  cat->add_option("--variant", o.variant, "row label, e.g. III");
  cat->add_option("--lambda", o.lambda, "weights: blocks separated by ';', components by ':'");
  cat->add_option("--r", o.r);
  cat->add_option("--nu", o.nu);
  cat->add_option("--mu", o.mu);
  cat->add_option("--c", o.c, "multiple of the Killing form (sl2r, su2)");
  cat->add_option("--gamma", o.gamma);
  cat->add_option("--k-odd", o.k_odd, "su2 sigma_k indices, comma separated");
  cat->add_option("--k-quat", o.k_quat, "su2 sigma'_k indices, comma separated");
  cat->add_option("-o,--output", o.output, "write the catalog_row document here");
  handlers["catalog"] = cmd_catalog;

  CLI::App* sw = app.add_subcommand("sweep", "enumerate and verify catalog rows within bounds");
  sw->fallthrough();
  sw->add_option("--bounds", o.bounds, "m=<max dim index>,den=<max denominator>");
  handlers["sweep"] = cmd_sweep;

  file_cmd("certify", "non-isomorphism certificate for two catalog rows", 2);
  handlers["certify"] = cmd_certify;

  std::vector<std::string> rev(args.rbegin(), args.rend());
  try {
    app.parse(rev);
  } catch (const CLI::CallForHelp& e) {
    out << app.help();
    return ok;
  } catch (const CLI::ParseError& e) {
    std::ostringstream os;
    app.exit(e, os, os);
    err << os.str();
    return input_error;
  }
  try {
    for (CLI::App* s : app.get_subcommands()) return handlers.at(s->get_name())(o, out);
  } catch (const InternalError& e) {
    err << "internal error: " << e.what() << "\n";
    return internal_error;
  } catch (const ParseError& e) {
    err << "input error at " << e.location << ": " << std::string(e.what()).substr(e.location.size() + 2) << "\n";
    return input_error;
  } catch (const InvalidInput& e) {
    err << "invalid input: " << e.what() << "\n";
    return input_error;
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << "\n";
    return input_error;
  }
  return input_error;
}

}  // namespace mla::cli
