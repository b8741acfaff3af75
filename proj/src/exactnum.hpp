#pragma once

// Exact scalars: big integers and rationals (GMP), prime fields GF(p) and
// extension fields GF(p^m) with a deterministic modulus per (p, m).

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "errors.hpp"

namespace cibound {

using BigInt = mpz_class;
using Rational = mpq_class;

BigInt parse_bigint(std::string_view text);
Rational parse_rational(std::string_view text);
std::string format_rational(const Rational& x);

bool is_prime(std::uint64_t n);

// N / p^v with p^v the exact power of p dividing N. Repeated exact division only.
BigInt prime_to_p_part(const BigInt& n, std::uint64_t p);

// p-adic valuation of a positive integer.
unsigned p_valuation(const BigInt& n, std::uint64_t p);

/// Monic irreducible polynomial of degree m over GF(p), coefficients listed
/// from the constant term up (size m + 1, last entry 1). The first hit when
/// candidates are enumerated by increasing code sum_k c_k p^k of the lower
/// coefficients, so the result is a pure function of (p, m).
std::vector<std::uint64_t> find_irreducible(std::uint64_t p, unsigned m);

/// Residue code of a finite field element. In GF(p^m) the element
/// sum_k c_k a^k (a a root of the modulus, 0 <= c_k < p) has code
/// sum_k c_k p^k; in particular the prime subfield occupies codes 0..p-1.
using Code = std::uint64_t;

class FiniteField {
 public:
  // Shared instance for (p, m); there is exactly one per process.
  static const FiniteField& get(std::uint64_t p, unsigned m);

  FiniteField(const FiniteField&) = delete;
  FiniteField& operator=(const FiniteField&) = delete;

  std::uint64_t characteristic() const noexcept { return p_; }
  unsigned degree() const noexcept { return m_; }
  std::uint64_t order() const noexcept { return q_; }
  const std::vector<std::uint64_t>& modulus() const noexcept { return modulus_; }

  Code add(Code a, Code b) const noexcept {
    if (m_ == 1) {
      Code s = a + b;
      return s >= p_ ? s - p_ : s;
    }
    return add_ext(a, b);
  }
  Code neg(Code a) const noexcept {
    if (m_ == 1) return a == 0 ? 0 : p_ - a;
    return neg_ext(a);
  }
  Code sub(Code a, Code b) const noexcept { return add(a, neg(b)); }
  Code mul(Code a, Code b) const noexcept {
    if (m_ == 1) return (a * b) % p_;
    if (a == 0 || b == 0) return 0;
    if (!log_.empty()) {
      std::uint64_t k = std::uint64_t(log_[a]) + log_[b];
      if (k >= q_ - 1) k -= q_ - 1;
      return exp_[k];
    }
    return mul_slow(a, b);
  }
  Code inv(Code a) const;
  Code div(Code a, Code b) const { return mul(a, inv(b)); }
  Code pow(Code a, std::uint64_t e) const noexcept;

  Code from_integer(const BigInt& v) const;
  Code from_int(std::int64_t v) const;

  // Generator of the multiplicative group (smallest code that works).
  Code primitive() const noexcept { return primitive_; }

  std::vector<std::uint64_t> digits(Code c) const;
  Code from_digits(const std::vector<std::uint64_t>& digits) const;

  // "3" in GF(p); "2*a^2+a+1" style in GF(p^m).
  std::string format(Code c) const;
  // "GF(7)" or "GF(3^2)".
  std::string spec() const;

 private:
  FiniteField(std::uint64_t p, unsigned m);

  Code add_ext(Code a, Code b) const noexcept;
  Code neg_ext(Code a) const noexcept;
  Code mul_slow(Code a, Code b) const noexcept;
  void build_tables();

  std::uint64_t p_;
  unsigned m_;
  std::uint64_t q_;
  std::vector<std::uint64_t> modulus_;
  Code primitive_ = 1;
  // Discrete log tables, present for extension fields with q <= kTableLimit.
  // zech_[k] = log(1 + w^k), or kNoLog when 1 + w^k = 0.
  std::vector<std::uint32_t> exp_, log_, zech_;
};

// Canonical map GF(p^m) -> GF(p^{m e}) sending the modulus root a to the
// smallest root of the same modulus in the target.
class FieldEmbedding {
 public:
  static const FieldEmbedding& get(const FiniteField& from, const FiniteField& to);

  const FiniteField& from() const noexcept { return *from_; }
  const FiniteField& to() const noexcept { return *to_; }
  Code map(Code c) const;

 private:
  FieldEmbedding(const FiniteField& from, const FiniteField& to);

  const FiniteField* from_;
  const FiniteField* to_;
  Code root_ = 0;
  std::vector<Code> table_;
};

// QQ or a finite field. Cheap to copy; finite fields are process-lifetime singletons.
class Field {
 public:
  Field() = default;
  explicit Field(const FiniteField& ff) : ff_(&ff) {}

  static Field rationals() { return Field(); }
  static Field finite(std::uint64_t p, unsigned m = 1) { return Field(FiniteField::get(p, m)); }

  bool is_rational() const noexcept { return ff_ == nullptr; }
  bool is_finite() const noexcept { return ff_ != nullptr; }
  const FiniteField& ff() const;
  std::uint64_t characteristic() const noexcept { return ff_ ? ff_->characteristic() : 0; }

  std::string spec() const { return ff_ ? ff_->spec() : "QQ"; }

  bool operator==(const Field& o) const noexcept { return ff_ == o.ff_; }
  bool operator!=(const Field& o) const noexcept { return ff_ != o.ff_; }

 private:
  const FiniteField* ff_ = nullptr;
};

// Grammar: QQ | GF(q) | GF(p^m), q a prime power.
Field parse_field(std::string_view spec);

// GF(q) for a prime power q; InvalidInput otherwise.
Field field_of_order(std::uint64_t q);

// Extension of degree e over a finite base field.
Field extension_of(const Field& base, unsigned e);

class FieldElement {
 public:
  FieldElement() : value_(Rational(0)) {}
  FieldElement(const Field& field, Code code);
  // q need not be canonical.
  explicit FieldElement(const Rational& q) : value_(q) { std::get<Rational>(value_).canonicalize(); }

  static FieldElement zero(const Field& field);
  static FieldElement one(const Field& field);
  static FieldElement from_integer(const Field& field, const BigInt& v);
  static FieldElement from_int(const Field& field, std::int64_t v);

  const Field& field() const noexcept { return field_; }
  bool is_zero() const noexcept;
  bool is_one() const noexcept;
  Code code() const;
  const Rational& rational() const;

  FieldElement operator+(const FieldElement& o) const;
  FieldElement operator-(const FieldElement& o) const;
  FieldElement operator*(const FieldElement& o) const;
  FieldElement operator/(const FieldElement& o) const;
  FieldElement operator-() const;
  FieldElement& operator+=(const FieldElement& o) { return *this = *this + o; }
  FieldElement& operator-=(const FieldElement& o) { return *this = *this - o; }
  FieldElement& operator*=(const FieldElement& o) { return *this = *this * o; }

  FieldElement inverse() const;
  FieldElement pow(std::uint64_t e) const;

  bool operator==(const FieldElement& o) const;
  bool operator!=(const FieldElement& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  void check_same_field(const FieldElement& o) const;

  Field field_;
  std::variant<Rational, Code> value_;
};

FieldElement field_inverse(const FieldElement& a);

// Image of a finite field element under the canonical embedding into `to`.
FieldElement embed(const FieldElement& x, const Field& to);

}  // namespace cibound
