#include "commands.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "bounds.hpp"
#include "corpus.hpp"
#include "grouporbit.hpp"
#include "resultant.hpp"
#include "tangent.hpp"

#ifndef CIBOUND_DEFAULT_CORPUS
#define CIBOUND_DEFAULT_CORPUS "data/corpus.txt"
#endif

namespace cibound {

using nlohmann::json;

namespace {

using Clock = std::chrono::steady_clock;

template <class T>
T get_or(const json& req, const char* key, T fallback) {
  if (!req.contains(key) || req[key].is_null()) return fallback;
  try {
    return req[key].get<T>();
  } catch (const json::exception&) {
    throw Error(Errc::InvalidInput, std::string("bad value for '") + key + "'");
  }
}

template <class T>
T require(const json& req, const char* key) {
  if (!req.contains(key) || req[key].is_null()) throw Error(Errc::InvalidInput, std::string("missing '") + key + "'");
  return get_or<T>(req, key, T{});
}

json matrix_json(const Matrix& a) {
  json rows = json::array();
  for (std::size_t i = 0; i < a.rows(); ++i) {
    json row = json::array();
    for (std::size_t j = 0; j < a.cols(); ++j) row.push_back(a(i, j).to_string());
    rows.push_back(std::move(row));
  }
  return rows;
}

json tuple_json(const FormTuple& t) {
  json forms = json::array();
  for (const auto& f : t.forms()) forms.push_back(format_form(f));
  return forms;
}

std::string corpus_path(const json& req) {
  if (auto p = get_or<std::string>(req, "corpus", ""); !p.empty()) return p;
  if (const char* env = std::getenv("CIBOUND_CORPUS"); env && *env) return env;
  return CIBOUND_DEFAULT_CORPUS;
}

struct FormInput {
  std::string entry;
  Field field;
  FormTuple tuple;
};

// Resolves "entry" (with optional "corpus") or "field" + "form"/"tuple" + "n".
FormInput read_forms(const json& req, std::optional<Field> field_override = std::nullopt) {
  FormInput in;
  if (auto name = get_or<std::string>(req, "entry", ""); !name.empty()) {
    const auto corpus = load_corpus(corpus_path(req));
    const CorpusEntry& e = find_entry(corpus, name);
    in.entry = e.name;
    in.field = parse_field(e.field);
    if (field_override && *field_override != in.field)
      throw Error(Errc::FieldMismatch, "entry " + e.name + " is over " + in.field.spec() + ", not " + field_override->spec());
    in.tuple = e.tuple();
    return in;
  }
  std::string text = get_or<std::string>(req, "tuple", "");
  if (text.empty()) text = get_or<std::string>(req, "form", "");
  if (text.empty()) throw Error(Errc::InvalidInput, "need a form (--form / --tuple) or a corpus entry (--entry)");
  in.field = field_override ? *field_override : parse_field(require<std::string>(req, "field"));
  int n = get_or<int>(req, "n", -1);
  if (n < 0) n = max_variable_index(text);
  if (n < 1) throw Error(Errc::InvalidInput, "cannot infer n from the input; pass --n");
  std::vector<HomogeneousForm> forms;
  for (const auto& part : split_forms(text)) forms.push_back(parse_form(part, n, in.field));
  in.tuple = FormTuple(std::move(forms));
  return in;
}

json witness_json(const PointWitness& w) {
  json pt = json::array();
  for (const auto& c : w.point) pt.push_back(c.to_string());
  return {{"point", pt}, {"extension_degree", w.extension_degree}, {"field", w.point.front().field().spec()}};
}

json verdict_json(const SmoothnessVerdict& v) {
  json out = {{"verdict", smoothness_name(v.status)}, {"method", v.method}};
  if (v.witness) out["witness"] = witness_json(*v.witness);
  if (v.discriminant) out["discriminant"] = v.discriminant->to_string();
  return out;
}

json divisibility_json(const DivisibilityReport& r) {
  return {{"observed", r.observed.get_str()}, {"prime_to_p", r.prime_to_p.get_str()}, {"bound", r.bound.get_str()},
          {"divides", r.divides}, {"quotient", r.quotient.get_str()}};
}

json stabilizer_json(const StabilizerReport& r) {
  json gens = json::array();
  for (const auto& g : r.generators_found) gens.push_back(matrix_json(g));
  return {{"group", r.group.to_string()},
          {"group_order", r.group_order.get_str()},
          {"orbit_size", r.orbit_size.get_str()},
          {"stabilizer_order", r.stabilizer_order.get_str()},
          {"method", stab_method_name(r.method)},
          {"generators_found", gens}};
}

BoundKind bound_kind(const std::string& s) {
  if (s == "vector") return BoundKind::VectorGL;
  if (s == "projective") return BoundKind::ProjectivePGL;
  if (s == "curve") return BoundKind::SpecializedCurve;
  if (s == "surface") return BoundKind::SpecializedSurface;
  if (s == "threefold") return BoundKind::SpecializedThreefold;
  throw Error(Errc::InvalidInput, "unknown bound kind '" + s + "'");
}

int specialized_n(BoundKind k) {
  switch (k) {
    case BoundKind::SpecializedCurve: return 2;
    case BoundKind::SpecializedSurface: return 3;
    case BoundKind::SpecializedThreefold: return 4;
    default: return -1;
  }
}

CommandResult cmd_bound(const json& req) {
  const int d = require<int>(req, "d");
  const std::string kind_text = get_or<std::string>(req, "kind", "all");
  std::vector<BoundKind> kinds;
  if (kind_text == "all")
    kinds = {BoundKind::VectorGL, BoundKind::ProjectivePGL};
  else
    kinds = {bound_kind(kind_text)};
  int n = get_or<int>(req, "n", -1);
  const int implied = specialized_n(kinds.front());
  if (implied > 0) {
    if (n >= 0 && n != implied) throw Error(Errc::InvalidInput, kind_text + " bound is for n = " + std::to_string(implied));
    n = implied;
  }
  if (n < 0) throw Error(Errc::InvalidInput, "missing 'n'");

  json bounds = json::array();
  for (BoundKind k : kinds) {
    const BoundValue v = evaluate_bound(k, n, d);
    bounds.push_back({{"kind", bound_kind_name(v.provenance)}, {"value", v.value.get_str()}});
  }
  json outputs = {{"bounds", bounds}};
  if (get_or<bool>(req, "all_checks", false)) {
    json checks = json::array();
    const Rational exact = projective_bound_rational(n, d);
    checks.push_back({{"name", "integrality"}, {"passed", exact.get_den() == 1}});
    for (BoundKind k : {BoundKind::SpecializedCurve, BoundKind::SpecializedSurface, BoundKind::SpecializedThreefold}) {
      if (specialized_n(k) != n) continue;
      const bool ok = projective_bound(n, d) == evaluate_bound(k, n, d).value;
      checks.push_back({{"name", std::string("specialization-") + bound_kind_name(k)}, {"passed", ok}});
    }
    for (const auto& c : checks)
      if (!c["passed"].get<bool>()) throw Error(Errc::Internal, "check " + c["name"].get<std::string>() + " failed");
    outputs["checks"] = checks;
  }
  return {{{"inputs", {{"n", n}, {"d", d}, {"kind", kind_text}}}, {"outputs", outputs}}, Outcome::Ok};
}

CommandResult cmd_smooth(const json& req) {
  const FormInput in = read_forms(req);
  const unsigned max_ext = get_or<unsigned>(req, "max_ext", 4);
  const SmoothnessVerdict v = is_singular(in.tuple, max_ext);
  json inputs = {{"field", in.field.spec()}, {"n", in.tuple.n()}, {"forms", tuple_json(in.tuple)}, {"max_ext", max_ext}};
  if (!in.entry.empty()) inputs["entry"] = in.entry;
  CommandResult r{{{"inputs", inputs}, {"outputs", verdict_json(v)}}, Outcome::Ok};
  if (v.status == Smoothness::Inconclusive && get_or<bool>(req, "strict", false)) r.outcome = Outcome::Inconclusive;
  return r;
}

GroupKind group_kind(const std::string& s) {
  if (s == "gl") return GroupKind::GL;
  if (s == "sl") return GroupKind::SL;
  if (s == "pgl") return GroupKind::PGL;
  throw Error(Errc::InvalidInput, "unknown group '" + s + "' (want gl, sl or pgl)");
}

CommandResult cmd_stab(const json& req) {
  const GroupKind kind = group_kind(get_or<std::string>(req, "group", "pgl"));
  std::optional<Field> base;
  if (const auto q = get_or<std::uint64_t>(req, "q", 0); q != 0) base = field_of_order(q);
  const FormInput in = read_forms(req, base);
  if (in.tuple.size() != 1) throw Error(Errc::InvalidInput, "stab takes a single form");
  if (!in.field.is_finite()) throw Error(Errc::UnsupportedField, "stabilizers are computed over finite fields");
  const unsigned ext = get_or<unsigned>(req, "field_ext", 1);
  if (ext < 1) throw Error(Errc::InvalidInput, "field_ext must be >= 1");
  const HomogeneousForm& f = in.tuple[0];

  const SmoothnessVerdict sv = is_singular(in.tuple, get_or<unsigned>(req, "max_ext", 4));
  const bool allow_singular = get_or<bool>(req, "allow_singular", false);
  if (!allow_singular && sv.status == Smoothness::Singular)
    throw Error(Errc::InvalidInput, "form is singular (pass --allow-singular to continue)");
  if (!allow_singular && sv.status == Smoothness::Inconclusive) {
    json inputs = {{"field", in.field.spec()}, {"form", format_form(f)}};
    return {{{"inputs", inputs}, {"outputs", {{"smoothness", verdict_json(sv)}}}}, Outcome::Inconclusive};
  }

  const Field field = extension_of(in.field, ext);
  const GroupSpec g = make_group(kind, f.nvars(), field);
  StabilizerOptions opts;
  const std::string method = get_or<std::string>(req, "method", "bfs");
  if (method == "exhaustive")
    opts.method = StabMethod::Exhaustive;
  else if (method != "bfs")
    throw Error(Errc::InvalidInput, "unknown method '" + method + "' (want bfs or exhaustive)");
  opts.orbit_budget = get_or<std::uint64_t>(req, "budget", opts.orbit_budget);
  const StabilizerReport rep = stabilizer(lift(f, field), g, opts);

  json outputs = stabilizer_json(rep);
  outputs["smoothness"] = verdict_json(sv);
  CommandResult r{{}, Outcome::Ok};
  const std::uint64_t p = field.characteristic();
  outputs["prime_to_p"] = prime_to_p_part(rep.stabilizer_order, p).get_str();
  if (f.degree() >= 3) {
    const BoundKind bk = kind == GroupKind::PGL ? BoundKind::ProjectivePGL : BoundKind::VectorGL;
    const BoundValue b = evaluate_bound(bk, f.n(), f.degree());
    const DivisibilityReport dv = divisibility_verdict(rep.stabilizer_order, p, b.value);
    json bj = divisibility_json(dv);
    bj["kind"] = bound_kind_name(bk);
    outputs["bound"] = bj;
    // Only a smooth form is covered by the theorems.
    if (!dv.divides && sv.status == Smoothness::Smooth) r.outcome = Outcome::Violation;
  }
  json inputs = {{"group", get_or<std::string>(req, "group", "pgl")}, {"field", field.spec()}, {"base_field", in.field.spec()},
                 {"field_ext", ext}, {"form", format_form(f)}, {"method", method}};
  if (!in.entry.empty()) inputs["entry"] = in.entry;
  r.report = {{"inputs", inputs}, {"outputs", outputs}, {"timings", {{"stabilizer_seconds", rep.elapsed_seconds}}}};
  return r;
}

CommandResult cmd_verify(const json& req) {
  const int n = require<int>(req, "n");
  const int d = require<int>(req, "d");
  const std::uint64_t q = require<std::uint64_t>(req, "q");
  const std::size_t samples = get_or<std::size_t>(req, "samples", 20);
  const std::uint64_t seed = get_or<std::uint64_t>(req, "seed", 1);
  // Validate the bound inputs before any sampling.
  vector_bound(n, d);
  const Field field = field_of_order(q);
  VerifyOptions opts;
  opts.throw_on_violation = false;
  opts.stabilizer.orbit_budget = get_or<std::uint64_t>(req, "budget", opts.stabilizer.orbit_budget);
  const VerifyReport rep = verify_divisibility(n, d, field, samples, seed, opts);

  json list = json::array(), times = json::array();
  for (const auto& s : rep.reports) {
    json item = {{"index", s.index}, {"form", format_form(s.form)}, {"smoothness", smoothness_name(s.smoothness)}};
    if (s.linear) {
      item["gl"] = stabilizer_json(*s.linear);
      item["gl"]["verdict"] = divisibility_json(*s.linear_verdict);
      item["pgl"] = stabilizer_json(*s.projective);
      item["pgl"]["verdict"] = divisibility_json(*s.projective_verdict);
      times.push_back({{"index", s.index}, {"gl_seconds", s.linear->elapsed_seconds}, {"pgl_seconds", s.projective->elapsed_seconds}});
    }
    list.push_back(std::move(item));
  }
  json outputs = {{"vector_bound", rep.vector_bound.get_str()},
                  {"projective_bound", rep.projective_bound.get_str()},
                  {"draws", rep.reports.size()},
                  {"tested", rep.tested},
                  {"skipped_singular", rep.skipped_singular},
                  {"skipped_inconclusive", rep.skipped_inconclusive},
                  {"all_divide", rep.all_divide},
                  {"samples", list}};
  if (rep.counterexample) outputs["counterexample"] = list[*rep.counterexample];
  json inputs = {{"n", n}, {"d", d}, {"q", q}, {"field", field.spec()}, {"samples", samples}};
  return {{{"inputs", inputs}, {"outputs", outputs}, {"seed", seed}, {"timings", {{"samples", times}}}},
          rep.all_divide ? Outcome::Ok : Outcome::Violation};
}

CommandResult cmd_tangent(const json& req) {
  const FormInput in = read_forms(req);
  const TangentReport t = infinitesimal_symmetries(in.tuple);
  json basis = json::array();
  for (const auto& a : t.basis) basis.push_back(matrix_json(a));
  json inputs = {{"field", in.field.spec()}, {"n", in.tuple.n()}, {"forms", tuple_json(in.tuple)}};
  if (!in.entry.empty()) inputs["entry"] = in.entry;
  return {{{"inputs", inputs},
           {"outputs", {{"solution_dimension", t.solution_dimension}, {"projective_dimension", t.projective_dimension}, {"basis", basis}}}},
          Outcome::Ok};
}

json polynomial_terms(const IntegerPolynomial& p) {
  json terms = json::array();
  for (const auto& [e, c] : p.terms()) terms.push_back({{"exponents", e}, {"coefficient", c.get_str()}});
  return terms;
}

CommandResult cmd_disc(const json& req) {
  const bool numeric = req.contains("form") || req.contains("entry") || req.contains("tuple");
  if (numeric) {
    const FormInput in = read_forms(req);
    if (in.tuple.size() != 1) throw Error(Errc::InvalidInput, "disc takes a single form");
    const HomogeneousForm& f = in.tuple[0];
    json outputs = {{"value", discriminant_value(f).to_string()}};
    if (in.field.is_finite()) outputs["smoothness"] = verdict_json(is_singular(in.tuple, get_or<unsigned>(req, "max_ext", 4)));
    json inputs = {{"field", in.field.spec()}, {"n", f.n()}, {"form", format_form(f)}};
    if (!in.entry.empty()) inputs["entry"] = in.entry;
    return {{{"inputs", inputs}, {"outputs", outputs}}, Outcome::Ok};
  }
  const int n = require<int>(req, "n");
  const int d = require<int>(req, "d");
  const IntegerPolynomial p = discriminant_polynomial(n, d);
  const std::filesystem::path dir = cache_directory();
  const std::filesystem::path path = dir / discriminant_cache_name(n, d);
  std::string status = "written";
  if (std::filesystem::exists(path)) {
    try {
      status = load_discriminant_cache(path) == p ? "verified" : "refreshed";
    } catch (const Error& e) {
      if (e.code() != Errc::CacheCorrupt) throw;
      status = "refreshed";
    }
  }
  if (status != "verified") write_discriminant_cache(dir, n, d, p);
  json variables = json::array();
  for (const auto& e : monomial_basis(n, d)) variables.push_back(format_form(monomial_form(n, e, FieldElement::one(Field::rationals()))));
  json outputs = {{"polynomial", p.to_string()},
                  {"variables", variables},
                  {"terms", polynomial_terms(p)},
                  {"content", p.content().get_str()},
                  {"cache", {{"file", discriminant_cache_name(n, d)}, {"status", status}}}};
  return {{{"inputs", {{"n", n}, {"d", d}}}, {"outputs", outputs}}, Outcome::Ok};
}

CommandResult cmd_corpus(const json& req) {
  json entries = json::array();
  for (const auto& e : load_corpus(corpus_path(req))) {
    json forms = json::array();
    for (const auto& f : e.forms) forms.push_back(f);
    entries.push_back({{"name", e.name}, {"field", e.field}, {"n", e.n}, {"forms", forms}});
  }
  return {{{"inputs", json::object()}, {"outputs", {{"entries", entries}}}}, Outcome::Ok};
}

}  // namespace

std::string cache_directory() {
  if (const char* env = std::getenv("CIBOUND_CACHE_DIR"); env && *env) return env;
  return "./.cibound-cache";
}

CommandResult run_command(std::string_view name, const json& request) {
  if (!request.is_object()) throw Error(Errc::InvalidInput, "request must be a JSON object");
  const auto t0 = Clock::now();
  CommandResult r;
  if (name == "bound")
    r = cmd_bound(request);
  else if (name == "smooth")
    r = cmd_smooth(request);
  else if (name == "stab")
    r = cmd_stab(request);
  else if (name == "verify")
    r = cmd_verify(request);
  else if (name == "tangent")
    r = cmd_tangent(request);
  else if (name == "disc")
    r = cmd_disc(request);
  else if (name == "corpus")
    r = cmd_corpus(request);
  else
    throw Error(Errc::InvalidInput, "unknown command '" + std::string(name) + "'");
  r.report["schema"] = 1;
  r.report["command"] = std::string(name);
  r.report["timings"]["total_seconds"] = std::chrono::duration<double>(Clock::now() - t0).count();
  return r;
}

}  // namespace cibound
