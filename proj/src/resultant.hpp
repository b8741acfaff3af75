#pragma once

#include <cstdint>
#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "forms.hpp"

namespace cibound {

// Macaulay's matrix for n+1 forms in n+1 variables. Rows and columns are
// both indexed by the degree-D monomials (D = sum d_i - n); the row of x^a
// holds (x^a / x_i^{d_i}) * F_i for the least i with x_i^{d_i} | x^a.
struct MacaulayMatrix {
  int n = 0;
  std::vector<int> degrees;
  int critical_degree = 0;
  std::vector<Exponents> monomials;
  std::vector<int> row_form;
  // Monomials divisible by x_i^{d_i} for at least two i; they index M'.
  std::vector<std::size_t> non_reduced;
  Matrix numerator;

  Matrix denominator() const;
};

MacaulayMatrix build_macaulay(const std::vector<HomogeneousForm>& forms);

/// Res(F_0, ..., F_n) = det(M) / det(M'), normalized so Res(x_0^{d_0}, ...,
/// x_n^{d_n}) = 1. If det(M') vanishes the forms are replaced by F o A for
/// random invertible A (seeded deterministically) and det(A)^{d_0...d_n} is
/// divided out. If 8 retries fail, the value is 0 when the ideal misses
/// some monomial of degree sum (d_i - 1) + 1; otherwise A is
/// drawn over GF(q^e), e <= 4, and the value pulled back to GF(q).
/// DegenerateDenominator if every retry fails.
FieldElement macaulay_resultant(const std::vector<HomogeneousForm>& forms);

// Res(df/dx_0, ..., df/dx_n); not normalized by the classical constant.
FieldElement discriminant_value(const HomogeneousForm& f);

struct PointWitness {
  std::vector<FieldElement> point;
  unsigned extension_degree = 1;
};

struct SearchLimits {
  // Projective point count above which an extension degree is skipped.
  std::uint64_t max_points_per_degree = std::uint64_t(1) << 26;
};

// First projective point over GF(q^e), e = 1, 2, ..., where every form
// vanishes. Points are normalized (first nonzero coordinate 1) and visited
// in increasing lexicographic order of their coordinate codes.
std::optional<PointWitness> common_zero_search(const FormTuple& t, unsigned max_ext_degree,
                                               const SearchLimits& limits = {});

// Same enumeration, looking for a point where all forms vanish and the
// Jacobian has rank < k.
std::optional<PointWitness> singular_point_search(const FormTuple& t, unsigned max_ext_degree,
                                                  const SearchLimits& limits = {},
                                                  bool* complete = nullptr);

enum class Smoothness { Smooth, Singular, Inconclusive };
const char* smoothness_name(Smoothness s) noexcept;

struct SmoothnessVerdict {
  Smoothness status = Smoothness::Inconclusive;
  std::optional<PointWitness> witness;
  // "discriminant", "point-search" or "ideal-resultant".
  std::string method;
  std::optional<FieldElement> discriminant;
};

/// Decides whether V(f_1, ..., f_k) is singular.
///
/// k = 1 with char 0 or char not dividing d uses the discriminant (Euler's
/// identity makes its vanishing equivalent to a singular point). Otherwise a
/// singular point is searched for over GF(q^e), e <= max_ext_degree. Without a
/// witness the verdict is Smooth if either (a) some n+1 random members of the
/// degree-delta part of the ideal (f_i, k x k Jacobian minors) have nonzero
/// resultant, or (b) the search covered every extension degree up to the
/// Bezout number prod d_i * (sum (d_i - 1))^{n-k}. Else Inconclusive.
SmoothnessVerdict is_singular(const FormTuple& t, unsigned max_ext_degree, const SearchLimits& limits = {});

// Sparse integer polynomial in the coefficient-space variables c_0..c_{N-1}.
class IntegerPolynomial {
 public:
  using Terms = std::map<Exponents, BigInt, GrlexGreater>;

  IntegerPolynomial() = default;
  explicit IntegerPolynomial(std::size_t nvars) : nvars_(nvars) {}

  std::size_t nvars() const noexcept { return nvars_; }
  const Terms& terms() const noexcept { return terms_; }
  void add_term(const Exponents& e, const BigInt& c);

  BigInt content() const;
  // Divide by the content and make the grlex-leading coefficient positive.
  void normalize();
  bool is_normalized() const;

  BigInt evaluate(const std::vector<BigInt>& values) const;
  FieldElement evaluate(const std::vector<FieldElement>& values) const;

  bool operator==(const IntegerPolynomial& o) const { return nvars_ == o.nvars_ && terms_ == o.terms_; }
  std::string to_string() const;

 private:
  std::size_t nvars_ = 0;
  Terms terms_;
};

/// Integral discriminant of degree-d forms in n+1 variables, by evaluation of
/// discriminant_value at integer coefficient vectors and exact interpolation,
/// content- and sign-normalized. Variable c_j is the coefficient of the j-th
/// monomial of monomial_basis(n, d). Supported: n = 1 with 2 <= d <= 4, and
/// (n, d) = (2, 2).
IntegerPolynomial discriminant_polynomial(int n, int d);

// Form with the given coefficient vector (ordered like monomial_basis).
HomogeneousForm form_from_coefficients(int n, int d, const std::vector<FieldElement>& coeffs);

std::string discriminant_cache_name(int n, int d);
std::string format_discriminant_cache(const IntegerPolynomial& p);
IntegerPolynomial parse_discriminant_cache(const std::string& text);
// Writes dir/disc_n{n}_d{d}.txt (creating dir) and returns the path.
std::filesystem::path write_discriminant_cache(const std::filesystem::path& dir, int n, int d, const IntegerPolynomial& p);
IntegerPolynomial load_discriminant_cache(const std::filesystem::path& path);

}  // namespace cibound
