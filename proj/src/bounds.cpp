#include "bounds.hpp"

namespace cibound {

namespace {

void check_input(int n, int d) {
  if (n < 1) throw Error(Errc::InvalidInput, "n must be >= 1, got " + std::to_string(n));
  if (d <= 2) throw Error(Errc::InvalidInput, "degree must be > 2, got " + std::to_string(d));
}

void check_degree(int d) {
  if (d <= 2) throw Error(Errc::InvalidInput, "degree must be > 2, got " + std::to_string(d));
}

BigInt ipow(const BigInt& b, unsigned long e) {
  BigInt r;
  mpz_pow_ui(r.get_mpz_t(), b.get_mpz_t(), e);
  return r;
}

BigInt lcm(const BigInt& a, const BigInt& b) {
  BigInt r;
  mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
  return r;
}

// (-1)^{n-i} + (d-1)^{n-i+1}
BigInt alternating_factor(int n, int i, int d) {
  BigInt f = ipow(d - 1, static_cast<unsigned long>(n - i + 1)) + ((n - i) % 2 == 0 ? 1 : -1);
  if (f <= 0) throw Error(Errc::Internal, "non-positive bound factor at i = " + std::to_string(i));
  return f;
}

}  // namespace

const char* bound_kind_name(BoundKind k) noexcept {
  switch (k) {
    case BoundKind::VectorGL: return "VectorGL";
    case BoundKind::ProjectivePGL: return "ProjectivePGL";
    case BoundKind::SpecializedCurve: return "SpecializedCurve";
    case BoundKind::SpecializedSurface: return "SpecializedSurface";
    case BoundKind::SpecializedThreefold: return "SpecializedThreefold";
  }
  return "Unknown";
}

BigInt binomial(int n, int k) {
  BigInt r;
  mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(n), static_cast<unsigned long>(k));
  return r;
}

BigInt vector_bound(int n, int d) {
  check_input(n, d);
  BigInt r = 1;
  for (int i = 0; i <= n; ++i) r *= alternating_factor(n, i, d) * ipow(d - 1, static_cast<unsigned long>(i));
  return r;
}

Rational projective_bound_rational(int n, int d) {
  check_input(n, d);
  const BigInt top = BigInt(n + 1) * ipow(d - 1, static_cast<unsigned long>(n));
  Rational r(1, n + 1);
  for (int i = 0; i < n; ++i) {
    const BigInt c = binomial(n + 1, i);
    r *= Rational(alternating_factor(n, i, d) * lcm(BigInt(c * ipow(d - 1, static_cast<unsigned long>(i))), top), c);
    r.canonicalize();
  }
  return r;
}

BigInt projective_bound(int n, int d) {
  Rational r = projective_bound_rational(n, d);
  if (r.get_den() != 1)
    throw Error(Errc::IntegralityViolation, "projective bound for (n, d) = (" + std::to_string(n) + ", " + std::to_string(d) + ") is " + format_rational(r));
  return r.get_num();
}

BigInt curve_bound(int d) {
  check_degree(d);
  const BigInt D = d;
  return D * D * ipow(D - 1, 4) * (D * D - 3 * D + 3) * (D - 2);
}

BigInt surface_bound(int d) {
  check_degree(d);
  const BigInt D = d;
  BigInt r = ipow(D, 3) * ipow(D - 1, 8) * (ipow(D, 3) - 4 * D * D + 6 * D - 4) * (D * D - 3 * D + 3) * (D - 2) * lcm(BigInt(3), BigInt(2 * (D - 1)));
  if (r % 3 != 0) throw Error(Errc::IntegralityViolation, "surface bound not divisible by 3 at d = " + std::to_string(d));
  return r / 3;
}

BigInt threefold_bound(int d) {
  check_degree(d);
  const BigInt D = d;
  BigInt r = ipow(D, 4) * ipow(D - 1, 13) * (ipow(D, 4) - 5 * ipow(D, 3) + 10 * D * D - 10 * D + 5) *
             (ipow(D, 3) - 4 * D * D + 6 * D - 4) * (D * D - 3 * D + 3) * (D - 2) * lcm(BigInt(2), ipow(D - 1, 2)) *
             lcm(BigInt(2), BigInt(D - 1));
  if (r % 4 != 0) throw Error(Errc::IntegralityViolation, "threefold bound not divisible by 4 at d = " + std::to_string(d));
  return r / 4;
}

BoundValue evaluate_bound(BoundKind kind, int n, int d) {
  switch (kind) {
    case BoundKind::VectorGL: return {vector_bound(n, d), kind};
    case BoundKind::ProjectivePGL: return {projective_bound(n, d), kind};
    case BoundKind::SpecializedCurve: return {curve_bound(d), kind};
    case BoundKind::SpecializedSurface: return {surface_bound(d), kind};
    case BoundKind::SpecializedThreefold: return {threefold_bound(d), kind};
  }
  throw Error(Errc::InvalidInput, "unknown bound kind");
}

DivisibilityReport divisibility_verdict(const BigInt& observed_order, std::optional<std::uint64_t> p, const BigInt& bound) {
  if (observed_order < 1) throw Error(Errc::InvalidInput, "observed order must be >= 1");
  DivisibilityReport r;
  r.observed = observed_order;
  r.prime_to_p = p ? prime_to_p_part(observed_order, *p) : observed_order;
  r.bound = bound;
  r.divides = bound % r.prime_to_p == 0;
  r.quotient = r.divides ? BigInt(bound / r.prime_to_p) : BigInt(0);
  return r;
}

}  // namespace cibound
