#pragma once

// GL, SL and PGL over finite fields acting on forms by f -> f o A, and the
// stabilizer computations built on that action.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "bounds.hpp"
#include "forms.hpp"
#include "resultant.hpp"

namespace cibound {

enum class GroupKind { GL, SL, PGL };
const char* group_kind_name(GroupKind k) noexcept;

struct GroupSpec {
  GroupKind kind = GroupKind::GL;
  int rank = 2;
  Field field;

  std::string to_string() const;  // e.g. "PGL_3(GF(3^2))"
};

// Validates rank >= 2 and a finite field.
GroupSpec make_group(GroupKind kind, int rank, const Field& field);

// |GL_m(q)| = prod_{i<m} (q^m - q^i); SL and PGL divide by q - 1.
BigInt group_order(const GroupSpec& g);

/// Transvections E_ij(w^k) for i != j and 0 <= k < deg(GF(q)/GF(p)), where w is
/// the field's primitive element, plus diag(w, 1, ..., 1) for GL and PGL.
/// The powers of w span GF(q) over GF(p), so the transvections generate SL.
std::vector<Matrix> generators(const GroupSpec& g);

// PGL representatives have their first nonzero entry (row-major) equal to 1;
// GL and SL elements are returned unchanged.
Matrix canonical_element(const GroupSpec& g, const Matrix& a);

// Closure of `gens` under multiplication; UnsupportedSize past `limit` elements.
std::vector<Matrix> group_closure(const GroupSpec& g, const std::vector<Matrix>& gens, std::size_t limit = 1000000);

// Every element once (PGL: canonical representatives). UnsupportedSize if the
// group order exceeds `ceiling`.
std::vector<Matrix> enumerate_group(const GroupSpec& g, std::uint64_t ceiling = 1000000);

enum class StabMethod { OrbitBFS, Exhaustive };
const char* stab_method_name(StabMethod m) noexcept;

struct StabilizerOptions {
  StabMethod method = StabMethod::OrbitBFS;
  // Largest orbit the BFS may store before OrbitBudgetExceeded.
  std::uint64_t orbit_budget = std::uint64_t(1) << 24;
  // Largest group the exhaustive method will enumerate.
  std::uint64_t exhaustive_ceiling = 1000000;
  // Nontrivial stabilizer elements to report.
  std::size_t max_generators = 8;
};

struct StabilizerReport {
  GroupSpec group;
  HomogeneousForm form;
  BigInt group_order;
  BigInt orbit_size;
  BigInt stabilizer_order;
  // Nontrivial elements of the stabilizer met during the computation
  // (Schreier generators for the BFS); not necessarily a generating set.
  std::vector<Matrix> generators_found;
  double elapsed_seconds = 0;
  StabMethod method = StabMethod::OrbitBFS;
};

/// Order of {A in G : f o A = f} for G = GL or SL, or of
/// {[A] in PGL : f o A = c f for some c} for PGL. f must be a nonzero form
/// over the group's field. orbit_size * stabilizer_order = |G| is checked.
StabilizerReport stabilizer(const HomogeneousForm& f, const GroupSpec& g, const StabilizerOptions& opts = {});
StabilizerReport linear_stabilizer(const HomogeneousForm& f, const GroupSpec& g, const StabilizerOptions& opts = {});
StabilizerReport projective_stabilizer(const HomogeneousForm& f, const GroupSpec& g, const StabilizerOptions& opts = {});

// True if f o A = f (GL, SL) or f o A is proportional to f (PGL).
bool fixes(const GroupSpec& g, const Matrix& a, const HomogeneousForm& f);

struct SampleReport {
  std::size_t index = 0;
  HomogeneousForm form;
  Smoothness smoothness = Smoothness::Inconclusive;
  std::optional<StabilizerReport> linear, projective;
  std::optional<DivisibilityReport> linear_verdict, projective_verdict;
};

struct VerifyReport {
  int n = 0, d = 0;
  Field field;
  std::size_t samples = 0;
  std::uint64_t seed = 0;
  BigInt vector_bound, projective_bound;
  std::vector<SampleReport> reports;
  std::size_t tested = 0, skipped_singular = 0, skipped_inconclusive = 0;
  bool all_divide = true;
  // Index into reports of the first violation, if any.
  std::optional<std::size_t> counterexample;
};

struct VerifyOptions {
  StabilizerOptions stabilizer;
  unsigned max_ext_degree = 4;
  // Throw DivisibilityViolation on the first failing sample instead of
  // recording it.
  bool throw_on_violation = true;
  // Forms drawn per requested sample before giving up.
  std::size_t draws_per_sample = 4;
};

/// Draws random degree-d forms in n+1 variables over `field` (seeded),
/// rejecting those not certified smooth, until `samples` forms have been
/// tested or draws_per_sample * samples forms drawn. For each tested form the
/// prime-to-p parts of its GL and PGL stabilizer orders must divide
/// vector_bound(n, d) and projective_bound(n, d). InsufficientSmoothSamples if
/// fewer than samples/2 forms were tested. Every draw gets a SampleReport.
VerifyReport verify_divisibility(int n, int d, const Field& field, std::size_t samples, std::uint64_t seed,
                                 const VerifyOptions& opts = {});

}  // namespace cibound
