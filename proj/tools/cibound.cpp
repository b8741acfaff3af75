// Command-line front end; all work goes through the C API.

#include <cibound/cibound.h>

#include <CLI11.hpp>
#include <cstdio>
#include <iostream>
#include <json.hpp>
#include <optional>
#include <string>

using nlohmann::json;

namespace {

int exit_code(cib_status s) {
  switch (s) {
    case CIB_OK: return 0;
    case CIB_ERR_INVALID_INPUT:
    case CIB_ERR_FIELD_MISMATCH:
    case CIB_ERR_SYNTAX:
    case CIB_ERR_INHOMOGENEOUS:
    case CIB_ERR_UNSUPPORTED_FIELD:
    case CIB_ERR_UNSUPPORTED_SIZE:
    case CIB_ERR_CHAR_MISMATCH: return 2;
    case CIB_INCONCLUSIVE: return 3;
    case CIB_ERR_ORBIT_BUDGET_EXCEEDED: return 4;
    case CIB_ERR_DIVISIBILITY_VIOLATION: return 5;
    default: return 1;
  }
}

void print_text(const std::string& command, const json& r) {
  const json& out = r["outputs"];
  if (command == "bound") {
    if (out["bounds"].size() == 1) {
      std::cout << out["bounds"][0]["value"].get<std::string>() << "\n";
    } else {
      for (const auto& b : out["bounds"]) std::cout << b["kind"].get<std::string>() << ": " << b["value"].get<std::string>() << "\n";
    }
    if (out.contains("checks"))
      for (const auto& c : out["checks"]) std::cout << "check " << c["name"].get<std::string>() << ": " << (c["passed"].get<bool>() ? "ok" : "FAILED") << "\n";
  } else if (command == "smooth") {
    std::cout << out["verdict"].get<std::string>() << " (" << out["method"].get<std::string>() << ")";
    if (out.contains("witness")) {
      const auto& w = out["witness"];
      std::cout << " at (";
      for (std::size_t i = 0; i < w["point"].size(); ++i) std::cout << (i ? ":" : "") << w["point"][i].get<std::string>();
      std::cout << ") over " << w["field"].get<std::string>();
    }
    std::cout << "\n";
  } else if (command == "stab") {
    if (!out.contains("stabilizer_order")) {
      std::cout << "smoothness " << out["smoothness"]["verdict"].get<std::string>() << "; not computed\n";
      return;
    }
    std::cout << out["group"].get<std::string>() << ": stabilizer order " << out["stabilizer_order"].get<std::string>() << ", orbit "
              << out["orbit_size"].get<std::string>() << ", group order " << out["group_order"].get<std::string>() << "\n";
    std::cout << "prime-to-p part " << out["prime_to_p"].get<std::string>();
    if (out.contains("bound"))
      std::cout << (out["bound"]["divides"].get<bool>() ? " divides " : " does NOT divide ") << out["bound"]["kind"].get<std::string>() << " bound "
                << out["bound"]["bound"].get<std::string>();
    std::cout << "\n";
  } else if (command == "verify") {
    for (const auto& s : out["samples"]) {
      std::cout << "#" << s["index"].get<std::size_t>() << " " << s["smoothness"].get<std::string>();
      if (s.contains("gl"))
        std::cout << "  GL " << s["gl"]["stabilizer_order"].get<std::string>() << (s["gl"]["verdict"]["divides"].get<bool>() ? " ok" : " FAIL") << "  PGL "
                  << s["pgl"]["stabilizer_order"].get<std::string>() << (s["pgl"]["verdict"]["divides"].get<bool>() ? " ok" : " FAIL");
      std::cout << "  " << s["form"].get<std::string>() << "\n";
    }
    std::cout << "tested " << out["tested"].get<std::size_t>() << ", skipped " << out["skipped_singular"].get<std::size_t>() << " singular and "
              << out["skipped_inconclusive"].get<std::size_t>() << " inconclusive; vector bound " << out["vector_bound"].get<std::string>()
              << ", projective bound " << out["projective_bound"].get<std::string>() << ": "
              << (out["all_divide"].get<bool>() ? "all divide" : "VIOLATION") << "\n";
  } else if (command == "tangent") {
    std::cout << "projective_dimension " << out["projective_dimension"].get<int>() << " (solution dimension "
              << out["solution_dimension"].get<int>() << ")\n";
  } else if (command == "disc") {
    if (out.contains("value")) {
      std::cout << out["value"].get<std::string>();
      if (out.contains("smoothness")) std::cout << "  [" << out["smoothness"]["verdict"].get<std::string>() << " via " << out["smoothness"]["method"].get<std::string>() << "]";
      std::cout << "\n";
    } else {
      std::cout << out["polynomial"].get<std::string>() << "\n";
      std::cout << "variables:";
      for (std::size_t i = 0; i < out["variables"].size(); ++i) std::cout << " c" << i << "=" << out["variables"][i].get<std::string>();
      std::cout << "\ncache " << out["cache"]["file"].get<std::string>() << " " << out["cache"]["status"].get<std::string>() << "\n";
    }
  } else if (command == "corpus") {
    for (const auto& e : out["entries"]) {
      std::cout << e["name"].get<std::string>() << "  " << e["field"].get<std::string>() << "  n=" << e["n"].get<int>() << "  ";
      for (std::size_t i = 0; i < e["forms"].size(); ++i) std::cout << (i ? "; " : "") << e["forms"][i].get<std::string>();
      std::cout << "\n";
    }
  }
}

int run(const std::string& command, const json& request, bool as_json) {
  char* report = nullptr;
  const cib_status s = cib_run(command.c_str(), request.dump().c_str(), &report);
  if (report) {
    const json r = json::parse(report);
    cib_string_free(report);
    if (as_json)
      std::cout << r.dump(2) << "\n";
    else
      print_text(command, r);
  }
  if (s != CIB_OK && s != CIB_INCONCLUSIVE) std::cerr << "cibound: " << cib_last_error() << "\n";
  return exit_code(s);
}

template <class T>
void put(json& req, const char* key, const std::optional<T>& v) {
  if (v) req[key] = *v;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Automorphism-order bounds, smoothness and stabilizers of forms over finite fields"};
  app.require_subcommand(1);
  app.fallthrough();
  bool as_json = false;
  app.add_flag("--json", as_json, "Print the JSON report");

  struct FormArgs {
    std::optional<std::string> field, form, tuple, entry, corpus;
    std::optional<int> n;
  };
  auto add_form_args = [](CLI::App* sub, FormArgs& a, bool tuples) {
    sub->add_option("--field", a.field, "QQ, GF(q) or GF(p^m)");
    sub->add_option("--form", a.form, "Homogeneous form, e.g. \"x0^3 + x1^3 + x2^3\"");
    if (tuples) sub->add_option("--tuple", a.tuple, "Forms separated by ';'");
    sub->add_option("--n", a.n, "Projective dimension (default: largest variable index)");
    sub->add_option("--entry", a.entry, "Named corpus entry");
    sub->add_option("--corpus", a.corpus, "Corpus file");
  };
  auto form_request = [](const FormArgs& a) {
    json req = json::object();
    put(req, "field", a.field);
    put(req, "form", a.form);
    put(req, "tuple", a.tuple);
    put(req, "entry", a.entry);
    put(req, "corpus", a.corpus);
    put(req, "n", a.n);
    return req;
  };

  // bound
  auto* bound = app.add_subcommand("bound", "Evaluate a divisibility bound");
  std::optional<int> bound_n;
  int bound_d = 0;
  bool projective = false, vector = false, all_checks = false;
  std::optional<std::string> specialized;
  bound->add_option("--n", bound_n, "Dimension of the ambient projective space");
  bound->add_option("--d", bound_d, "Degree (> 2)")->required();
  auto* pflag = bound->add_flag("--projective", projective, "PGL bound");
  auto* vflag = bound->add_flag("--vector", vector, "GL bound");
  auto* sopt = bound->add_option("--specialized", specialized, "curve, surface or threefold")->check(CLI::IsMember({"curve", "surface", "threefold"}));
  pflag->excludes(vflag)->excludes(sopt);
  vflag->excludes(sopt);
  bound->add_flag("--all-checks", all_checks, "Also assert integrality and specialization identities");

  // smooth
  auto* smooth = app.add_subcommand("smooth", "Decide smoothness of a hypersurface or complete intersection");
  FormArgs smooth_args;
  add_form_args(smooth, smooth_args, true);
  unsigned max_ext = 4;
  bool strict = false;
  smooth->add_option("--max-ext", max_ext, "Largest extension degree for point searches");
  smooth->add_flag("--strict", strict, "Exit 3 on an Inconclusive verdict");

  // stab
  auto* stab = app.add_subcommand("stab", "Stabilizer order of a form in GL, SL or PGL");
  FormArgs stab_args;
  add_form_args(stab, stab_args, false);
  std::string group = "pgl", method = "bfs";
  std::optional<std::uint64_t> stab_q, budget;
  unsigned field_ext = 1;
  bool allow_singular = false;
  stab->add_option("--group", group, "gl, sl or pgl")->check(CLI::IsMember({"gl", "sl", "pgl"}));
  stab->add_option("--q", stab_q, "Order of the base field (prime power)");
  stab->add_option("--field-ext", field_ext, "Compute over GF(q^m)");
  stab->add_option("--method", method, "bfs or exhaustive")->check(CLI::IsMember({"bfs", "exhaustive"}));
  stab->add_flag("--allow-singular", allow_singular, "Skip the smoothness precondition");
  stab->add_option("--budget", budget, "Largest orbit to store");

  // verify
  auto* verify = app.add_subcommand("verify", "Check the bounds on random smooth forms");
  int vn = 0, vd = 0;
  std::uint64_t vq = 0, vseed = 1;
  std::size_t vsamples = 20;
  std::optional<std::uint64_t> vbudget;
  verify->add_option("--n", vn, "Projective dimension")->required();
  verify->add_option("--d", vd, "Degree (> 2)")->required();
  verify->add_option("--q", vq, "Field order (prime power)")->required();
  verify->add_option("--samples", vsamples, "Random forms to draw");
  verify->add_option("--seed", vseed, "Random seed");
  verify->add_option("--budget", vbudget, "Largest orbit to store");

  // tangent
  auto* tangent = app.add_subcommand("tangent", "Infinitesimal projective symmetries");
  FormArgs tangent_args;
  add_form_args(tangent, tangent_args, true);

  // disc
  auto* disc = app.add_subcommand("disc", "Discriminants: symbolic (--n --d) or of one form (--field --form)");
  FormArgs disc_args;
  add_form_args(disc, disc_args, false);
  std::optional<int> disc_d;
  disc->add_option("--d", disc_d, "Degree, for the symbolic discriminant");

  // corpus
  auto* corpus = app.add_subcommand("corpus", "List the named inputs");
  std::optional<std::string> corpus_file;
  corpus->add_option("--corpus", corpus_file, "Corpus file");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 2;
  }

  json req = json::object();
  std::string command;
  if (*bound) {
    command = "bound";
    put(req, "n", bound_n);
    req["d"] = bound_d;
    req["kind"] = specialized ? *specialized : projective ? "projective" : vector ? "vector" : "all";
    req["all_checks"] = all_checks;
  } else if (*smooth) {
    command = "smooth";
    req = form_request(smooth_args);
    req["max_ext"] = max_ext;
    req["strict"] = strict;
  } else if (*stab) {
    command = "stab";
    req = form_request(stab_args);
    req["group"] = group;
    req["method"] = method;
    req["field_ext"] = field_ext;
    req["allow_singular"] = allow_singular;
    put(req, "q", stab_q);
    put(req, "budget", budget);
  } else if (*verify) {
    command = "verify";
    req = {{"n", vn}, {"d", vd}, {"q", vq}, {"samples", vsamples}, {"seed", vseed}};
    put(req, "budget", vbudget);
  } else if (*tangent) {
    command = "tangent";
    req = form_request(tangent_args);
  } else if (*disc) {
    command = "disc";
    req = form_request(disc_args);
    put(req, "d", disc_d);
  } else {
    command = "corpus";
    put(req, "corpus", corpus_file);
  }
  return run(command, req, as_json);
}
