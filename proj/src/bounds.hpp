#pragma once

// Divisibility bounds for the orders of linear and projective automorphism
// groups of smooth hypersurfaces of degree d > 2 in P^n.

#include <optional>
#include <string>

#include "exactnum.hpp"

namespace cibound {

enum class BoundKind { VectorGL, ProjectivePGL, SpecializedCurve, SpecializedSurface, SpecializedThreefold };
const char* bound_kind_name(BoundKind k) noexcept;

struct BoundValue {
  BigInt value;
  BoundKind provenance;
};

// prod_{i=0}^{n} ((-1)^{n-i} + (d-1)^{n-i+1}) (d-1)^i
BigInt vector_bound(int n, int d);

/// (1/(n+1)) prod_{i=0}^{n-1} (1/C(n+1,i)) ((-1)^{n-i} + (d-1)^{n-i+1})
///   * lcm(C(n+1,i) (d-1)^i, (n+1)(d-1)^n)
/// with C the binomial coefficient. Evaluated over QQ; IntegralityViolation
/// if the result is not an integer.
BigInt projective_bound(int n, int d);
// Same product without the integrality check, for the property tests.
Rational projective_bound_rational(int n, int d);

BigInt curve_bound(int d);
BigInt surface_bound(int d);
BigInt threefold_bound(int d);

BoundValue evaluate_bound(BoundKind kind, int n, int d);

struct DivisibilityReport {
  BigInt observed;
  // observed with all factors of p removed (equal to observed without p).
  BigInt prime_to_p;
  BigInt bound;
  bool divides = false;
  // bound / prime_to_p when it divides, else 0.
  BigInt quotient;
};

DivisibilityReport divisibility_verdict(const BigInt& observed_order, std::optional<std::uint64_t> p, const BigInt& bound);

BigInt binomial(int n, int k);

}  // namespace cibound
