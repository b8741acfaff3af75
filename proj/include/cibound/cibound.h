#ifndef CIBOUND_CIBOUND_H
#define CIBOUND_CIBOUND_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define CIB_API __declspec(dllexport)
#else
#define CIB_API __attribute__((visibility("default")))
#endif

/* Status codes. Values 1..15 mirror the library's error kinds. */
typedef enum cib_status {
  CIB_OK = 0,
  CIB_ERR_INVALID_INPUT = 1,
  CIB_ERR_DIVISION_BY_ZERO = 2,
  CIB_ERR_FIELD_MISMATCH = 3,
  CIB_ERR_SYNTAX = 4,
  CIB_ERR_INHOMOGENEOUS = 5,
  CIB_ERR_UNSUPPORTED_FIELD = 6,
  CIB_ERR_UNSUPPORTED_SIZE = 7,
  CIB_ERR_DEGENERATE_DENOMINATOR = 8,
  CIB_ERR_INTEGRALITY_VIOLATION = 9,
  CIB_ERR_ORBIT_BUDGET_EXCEEDED = 10,
  CIB_ERR_INSUFFICIENT_SMOOTH_SAMPLES = 11,
  CIB_ERR_CHAR_MISMATCH = 12,
  CIB_ERR_DIVISIBILITY_VIOLATION = 13,
  CIB_ERR_CACHE_CORRUPT = 14,
  CIB_ERR_INTERNAL = 15,
  /* Not an error: a smoothness verdict could not be reached. */
  CIB_INCONCLUSIVE = 64
} cib_status;

typedef struct cib_field cib_field;
typedef struct cib_form cib_form;

typedef enum cib_bound_kind {
  CIB_BOUND_VECTOR = 0,
  CIB_BOUND_PROJECTIVE = 1,
  CIB_BOUND_CURVE = 2,
  CIB_BOUND_SURFACE = 3,
  CIB_BOUND_THREEFOLD = 4
} cib_bound_kind;

typedef enum cib_smoothness { CIB_SMOOTH = 0, CIB_SINGULAR = 1, CIB_SMOOTHNESS_INCONCLUSIVE = 2 } cib_smoothness;

typedef enum cib_group_kind { CIB_GROUP_GL = 0, CIB_GROUP_SL = 1, CIB_GROUP_PGL = 2 } cib_group_kind;

/* Message of the last failure on the calling thread ("" if none). */
CIB_API const char* cib_last_error(void);
CIB_API const char* cib_status_name(cib_status status);

/* Strings returned through char** parameters are owned by the caller. */
CIB_API void cib_string_free(char* s);

/* "QQ", "GF(7)", "GF(9)" or "GF(3^2)". */
CIB_API cib_status cib_field_parse(const char* spec, cib_field** out);
CIB_API cib_status cib_field_spec(const cib_field* field, char** out);
CIB_API void cib_field_free(cib_field* field);

/* Parses a homogeneous form in x0..xn over `field`. */
CIB_API cib_status cib_form_parse(const cib_field* field, int n, const char* text, cib_form** out);
CIB_API cib_status cib_form_format(const cib_form* form, char** out);
CIB_API int cib_form_degree(const cib_form* form);
CIB_API void cib_form_free(cib_form* form);

/* Bound value as a decimal string. */
CIB_API cib_status cib_bound(cib_bound_kind kind, int n, int d, char** out);
/* decimal_n with every factor p removed. */
CIB_API cib_status cib_prime_to_p_part(const char* decimal_n, uint64_t p, char** out);

/* Smoothness of V(forms[0], ..., forms[k-1]) with point searches over
   extensions of degree <= max_ext. */
CIB_API cib_status cib_check_smoothness(const cib_form* const* forms, size_t k, unsigned max_ext, cib_smoothness* out);

/* Stabilizer order (decimal) of `form` in GL/SL/PGL_{n+1} over the form's
   field, by orbit enumeration. */
CIB_API cib_status cib_stabilizer_order(const cib_form* form, cib_group_kind kind, char** out);

/* Runs a command ("bound", "smooth", "stab", "verify", "tangent", "disc",
   "corpus") on a JSON request object and returns its JSON report. On
   CIB_INCONCLUSIVE and CIB_ERR_DIVISIBILITY_VIOLATION the report is still
   produced; on other errors *report is set to NULL. */
CIB_API cib_status cib_run(const char* command, const char* request_json, char** report);

#ifdef __cplusplus
}
#endif

#endif
