#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <random>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "exactnum.hpp"
#include "linalg.hpp"

namespace cibound {

using Exponents = std::vector<std::uint16_t>;

// Graded-lexicographic order with x0 > x1 > ... > xn, larger first.
struct GrlexGreater {
  bool operator()(const Exponents& a, const Exponents& b) const noexcept;
};

unsigned total_degree(const Exponents& e) noexcept;

// All exponent vectors of total degree d in n+1 variables, grlex descending.
std::vector<Exponents> monomial_basis(int n, int d);
std::size_t monomial_count(int n, int d);

// Sparse homogeneous form of degree d in x0..xn. Stored coefficients are
// always nonzero; iteration runs from the grlex-leading monomial down.
class HomogeneousForm {
 public:
  using Terms = std::map<Exponents, FieldElement, GrlexGreater>;

  HomogeneousForm() = default;
  HomogeneousForm(int n, int d, const Field& field);

  int n() const noexcept { return n_; }
  int nvars() const noexcept { return n_ + 1; }
  int degree() const noexcept { return d_; }
  const Field& field() const noexcept { return field_; }
  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }

  FieldElement coefficient(const Exponents& e) const;
  // Accumulates into the existing coefficient; drops the term if it cancels.
  void add_term(const Exponents& e, const FieldElement& c);
  void set_coefficient(const Exponents& e, const FieldElement& c);

  const Exponents& leading_monomial() const;
  const FieldElement& leading_coefficient() const;

  HomogeneousForm operator+(const HomogeneousForm& o) const;
  HomogeneousForm operator-(const HomogeneousForm& o) const;
  HomogeneousForm operator*(const HomogeneousForm& o) const;
  HomogeneousForm scaled(const FieldElement& c) const;
  // Multiply by the monomial x^e.
  HomogeneousForm shifted(const Exponents& e) const;
  // Scale so the leading coefficient is 1 (zero form unchanged).
  HomogeneousForm monic() const;

  bool operator==(const HomogeneousForm& o) const;
  bool operator!=(const HomogeneousForm& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  void check_compatible(const HomogeneousForm& o) const;

  int n_ = 0;
  int d_ = 0;
  Field field_;
  Terms terms_;
};

HomogeneousForm linear_form(int n, const std::vector<FieldElement>& coeffs);
HomogeneousForm monomial_form(int n, const Exponents& e, const FieldElement& c);

// A point may live in an extension of the form's field; coefficients are
// mapped through the canonical embedding.
FieldElement evaluate(const HomogeneousForm& f, std::span<const FieldElement> point);
HomogeneousForm partial_derivative(const HomogeneousForm& f, int i);
// f o A, i.e. x -> f(A x) with A acting on column vectors. Right action:
// (f o A) o B = f o (A B).
HomogeneousForm substitute_linear(const HomogeneousForm& f, const Matrix& a);
// Image under the canonical embedding of the coefficient field.
HomogeneousForm lift(const HomogeneousForm& f, const Field& to);

// k forms sharing n and field, 1 <= k <= n+1.
class FormTuple {
 public:
  FormTuple() = default;
  explicit FormTuple(std::vector<HomogeneousForm> forms);

  std::size_t size() const noexcept { return forms_.size(); }
  int n() const noexcept { return forms_.front().n(); }
  const Field& field() const noexcept { return forms_.front().field(); }
  const std::vector<HomogeneousForm>& forms() const noexcept { return forms_; }
  const HomogeneousForm& operator[](std::size_t i) const { return forms_[i]; }
  std::vector<int> multidegree() const;

  FormTuple substituted(const Matrix& a) const;
  FormTuple lifted(const Field& to) const;
  std::string to_string() const;

 private:
  std::vector<HomogeneousForm> forms_;
};

// Rank of the k x (n+1) Jacobian at a nonzero point.
std::size_t jacobian_rank_at(const FormTuple& t, std::span<const FieldElement> point);

/// Parses terms joined by `+`/`-`. A term is a product of factors: integer
/// or `p/q` coefficients, variables `x<i>` (i <= n), the extension generator
/// `a` (GF(p^m) only) and parenthesized sums, each optionally raised to
/// `^<int>`. `*` may be omitted between factors. The expanded polynomial must
/// be homogeneous; `degree` is required only to type the zero form.
HomogeneousForm parse_form(std::string_view text, int n, const Field& field,
                           std::optional<int> degree = std::nullopt);
std::string format_form(const HomogeneousForm& f);

// Largest variable index mentioned, or -1 if none.
int max_variable_index(std::string_view text);

HomogeneousForm random_form(int n, int d, const Field& field, std::uint64_t seed);
HomogeneousForm random_form(int n, int d, const Field& field, std::mt19937_64& rng);

}  // namespace cibound
