#include <cibound/cibound.h>

#include <cstdlib>
#include <cstring>
#include <string>

#include "commands.hpp"
#include "grouporbit.hpp"
#include "resultant.hpp"

struct cib_field {
  cibound::Field field;
};

struct cib_form {
  cibound::HomogeneousForm form;
};

namespace {

thread_local std::string last_error;

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p) std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

cib_status fail(cib_status s, const std::string& msg) {
  last_error = msg;
  return s;
}

// Runs f, translating exceptions into status codes.
template <class F>
cib_status guarded(F&& f) {
  last_error.clear();
  try {
    return f();
  } catch (const cibound::Error& e) {
    return fail(static_cast<cib_status>(e.code()), e.what());
  } catch (const std::bad_alloc&) {
    return fail(CIB_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(CIB_ERR_INTERNAL, e.what());
  }
}

#define CIB_REQUIRE(ptr) \
  if (!(ptr)) return fail(CIB_ERR_INVALID_INPUT, "null argument: " #ptr)

}  // namespace

extern "C" {

const char* cib_last_error(void) { return last_error.c_str(); }

const char* cib_status_name(cib_status status) {
  if (status == CIB_OK) return "Ok";
  if (status == CIB_INCONCLUSIVE) return "Inconclusive";
  if (status >= 1 && status <= 15) return cibound::errc_name(static_cast<cibound::Errc>(status));
  return "Unknown";
}

void cib_string_free(char* s) { std::free(s); }

cib_status cib_field_parse(const char* spec, cib_field** out) {
  CIB_REQUIRE(spec);
  CIB_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    *out = new cib_field{cibound::parse_field(spec)};
    return CIB_OK;
  });
}

cib_status cib_field_spec(const cib_field* field, char** out) {
  CIB_REQUIRE(field);
  CIB_REQUIRE(out);
  *out = dup(field->field.spec());
  return CIB_OK;
}

void cib_field_free(cib_field* field) { delete field; }

cib_status cib_form_parse(const cib_field* field, int n, const char* text, cib_form** out) {
  CIB_REQUIRE(field);
  CIB_REQUIRE(text);
  CIB_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    *out = new cib_form{cibound::parse_form(text, n, field->field)};
    return CIB_OK;
  });
}

cib_status cib_form_format(const cib_form* form, char** out) {
  CIB_REQUIRE(form);
  CIB_REQUIRE(out);
  return guarded([&] {
    *out = dup(cibound::format_form(form->form));
    return CIB_OK;
  });
}

int cib_form_degree(const cib_form* form) { return form ? form->form.degree() : -1; }

void cib_form_free(cib_form* form) { delete form; }

cib_status cib_bound(cib_bound_kind kind, int n, int d, char** out) {
  CIB_REQUIRE(out);
  *out = nullptr;
  if (kind < CIB_BOUND_VECTOR || kind > CIB_BOUND_THREEFOLD) return fail(CIB_ERR_INVALID_INPUT, "unknown bound kind");
  return guarded([&] {
    *out = dup(cibound::evaluate_bound(static_cast<cibound::BoundKind>(kind), n, d).value.get_str());
    return CIB_OK;
  });
}

cib_status cib_prime_to_p_part(const char* decimal_n, uint64_t p, char** out) {
  CIB_REQUIRE(decimal_n);
  CIB_REQUIRE(out);
  *out = nullptr;
  return guarded([&] {
    *out = dup(cibound::prime_to_p_part(cibound::parse_bigint(decimal_n), p).get_str());
    return CIB_OK;
  });
}

cib_status cib_check_smoothness(const cib_form* const* forms, size_t k, unsigned max_ext, cib_smoothness* out) {
  CIB_REQUIRE(forms);
  CIB_REQUIRE(out);
  if (k == 0) return fail(CIB_ERR_INVALID_INPUT, "no forms");
  return guarded([&] {
    std::vector<cibound::HomogeneousForm> list;
    for (size_t i = 0; i < k; ++i) {
      if (!forms[i]) throw cibound::Error(cibound::Errc::InvalidInput, "null form");
      list.push_back(forms[i]->form);
    }
    const auto v = cibound::is_singular(cibound::FormTuple(std::move(list)), max_ext);
    *out = v.status == cibound::Smoothness::Smooth     ? CIB_SMOOTH
           : v.status == cibound::Smoothness::Singular ? CIB_SINGULAR
                                                       : CIB_SMOOTHNESS_INCONCLUSIVE;
    return CIB_OK;
  });
}

cib_status cib_stabilizer_order(const cib_form* form, cib_group_kind kind, char** out) {
  CIB_REQUIRE(form);
  CIB_REQUIRE(out);
  *out = nullptr;
  if (kind < CIB_GROUP_GL || kind > CIB_GROUP_PGL) return fail(CIB_ERR_INVALID_INPUT, "unknown group kind");
  return guarded([&] {
    const auto g = cibound::make_group(static_cast<cibound::GroupKind>(kind), form->form.nvars(), form->form.field());
    *out = dup(cibound::stabilizer(form->form, g).stabilizer_order.get_str());
    return CIB_OK;
  });
}

cib_status cib_run(const char* command, const char* request_json, char** report) {
  CIB_REQUIRE(command);
  CIB_REQUIRE(request_json);
  CIB_REQUIRE(report);
  *report = nullptr;
  return guarded([&] {
    nlohmann::json request;
    try {
      request = nlohmann::json::parse(request_json);
    } catch (const nlohmann::json::exception& e) {
      throw cibound::Error(cibound::Errc::InvalidInput, std::string("request is not valid JSON: ") + e.what());
    }
    const cibound::CommandResult r = cibound::run_command(command, request);
    *report = dup(r.report.dump(2));
    if (r.outcome == cibound::Outcome::Inconclusive) return fail(CIB_INCONCLUSIVE, "smoothness verdict is Inconclusive");
    if (r.outcome == cibound::Outcome::Violation)
      return fail(CIB_ERR_DIVISIBILITY_VIOLATION, "a stabilizer order does not divide its bound");
    return CIB_OK;
  });
}

}  // extern "C"
