#include "resultant.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <functional>
#include <limits>
#include <numeric>
#include <sstream>

namespace cibound {

// ---------------------------------------------------------------------------
// Macaulay matrices

MacaulayMatrix build_macaulay(const std::vector<HomogeneousForm>& forms) {
  if (forms.empty()) throw Error(Errc::InvalidInput, "resultant of no forms");
  const int n = forms.front().n();
  const Field field = forms.front().field();
  if (forms.size() != static_cast<std::size_t>(n + 1))
    throw Error(Errc::InvalidInput, "resultant needs n+1 = " + std::to_string(n + 1) + " forms, got " + std::to_string(forms.size()));
  MacaulayMatrix mm;
  mm.n = n;
  int sum = 0;
  for (const auto& f : forms) {
    if (f.field() != field) throw Error(Errc::FieldMismatch, "resultant forms over different fields");
    if (f.n() != n) throw Error(Errc::InvalidInput, "resultant forms in different numbers of variables");
    if (f.degree() < 1) throw Error(Errc::InvalidInput, "resultant needs forms of degree >= 1");
    mm.degrees.push_back(f.degree());
    sum += f.degree();
  }
  mm.critical_degree = sum - n;
  mm.monomials = monomial_basis(n, mm.critical_degree);
  std::map<Exponents, std::size_t> index;
  for (std::size_t i = 0; i < mm.monomials.size(); ++i) index.emplace(mm.monomials[i], i);

  const std::size_t size = mm.monomials.size();
  mm.numerator = Matrix(size, size, field);
  for (std::size_t r = 0; r < size; ++r) {
    const Exponents& alpha = mm.monomials[r];
    int assigned = -1, divisible = 0;
    for (int i = 0; i <= n; ++i) {
      if (alpha[i] >= mm.degrees[i]) {
        ++divisible;
        if (assigned < 0) assigned = i;
      }
    }
    mm.row_form.push_back(assigned);
    if (divisible >= 2) mm.non_reduced.push_back(r);
    Exponents quotient = alpha;
    quotient[assigned] = static_cast<std::uint16_t>(quotient[assigned] - mm.degrees[assigned]);
    for (const auto& [e, c] : forms[assigned].terms()) {
      Exponents beta = e;
      for (int i = 0; i <= n; ++i) beta[i] = static_cast<std::uint16_t>(beta[i] + quotient[i]);
      mm.numerator(r, index.at(beta)) = c;
    }
  }
  return mm;
}

Matrix MacaulayMatrix::denominator() const {
  const std::size_t k = non_reduced.size();
  Matrix m(k, k, numerator.field());
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) m(i, j) = numerator(non_reduced[i], non_reduced[j]);
  return m;
}

namespace {

std::optional<FieldElement> macaulay_ratio(const std::vector<HomogeneousForm>& forms) {
  MacaulayMatrix mm = build_macaulay(forms);
  FieldElement den = determinant(mm.denominator());
  if (den.is_zero()) return std::nullopt;
  return determinant(mm.numerator) / den;
}

constexpr std::uint64_t kRetrySeed = 0x6d616361756c6179ULL;
constexpr int kMaxRetries = 8;

}  // namespace

namespace {

std::optional<FieldElement> retry_in(const std::vector<HomogeneousForm>& forms, const Field& field, std::mt19937_64& rng) {
  std::uint64_t degree_product = 1;
  for (const auto& f : forms) degree_product *= static_cast<std::uint64_t>(f.degree());
  std::vector<HomogeneousForm> lifted;
  for (const auto& f : forms) lifted.push_back(field == f.field() ? f : lift(f, field));
  for (int attempt = 0; attempt < kMaxRetries; ++attempt) {
    Matrix a = random_invertible(forms.size(), field, rng);
    std::vector<HomogeneousForm> moved;
    for (const auto& f : lifted) moved.push_back(substitute_linear(f, a));
    if (auto r = macaulay_ratio(moved)) return *r / determinant(a).pow(degree_product);
  }
  return std::nullopt;
}

// The forms have no common zero iff their ideal contains every monomial of
// degree sum (d_i - 1) + 1.
bool spans_critical_degree(const std::vector<HomogeneousForm>& forms) {
  const int n = forms.front().n();
  int top = 1;
  for (const auto& f : forms) top += f.degree() - 1;
  const auto cols = monomial_basis(n, top);
  std::map<Exponents, std::size_t> index;
  for (std::size_t i = 0; i < cols.size(); ++i) index.emplace(cols[i], i);
  std::size_t rows = 0;
  for (const auto& f : forms) rows += monomial_count(n, top - f.degree());
  Matrix m(rows, cols.size(), forms.front().field());
  std::size_t r = 0;
  for (const auto& f : forms)
    for (const auto& beta : monomial_basis(n, top - f.degree())) {
      for (const auto& [e, c] : f.terms()) {
        Exponents sum = e;
        for (std::size_t k = 0; k < sum.size(); ++k) sum[k] = static_cast<std::uint16_t>(sum[k] + beta[k]);
        m(r, index.at(sum)) = c;
      }
      ++r;
    }
  return rank(m) == cols.size();
}

// Preimage of x under the canonical embedding base -> x.field().
FieldElement restrict_to(const FieldElement& x, const Field& base) {
  const FiniteField& b = base.ff();
  const FieldEmbedding& emb = FieldEmbedding::get(b, x.field().ff());
  for (Code c = 0; c < b.order(); ++c)
    if (emb.map(c) == x.code()) return FieldElement(base, c);
  throw Error(Errc::Internal, "resultant computed in an extension does not lie in " + base.spec());
}

}  // namespace

FieldElement macaulay_resultant(const std::vector<HomogeneousForm>& forms) {
  if (auto r = macaulay_ratio(forms)) return *r;
  const Field field = forms.front().field();
  // A zero form vanishes everywhere, so the forms have a common zero.
  for (const auto& f : forms)
    if (f.is_zero()) return FieldElement::zero(field);
  std::mt19937_64 rng(kRetrySeed);
  if (auto r = retry_in(forms, field, rng)) return *r;
  // det(M') can vanish at every change of coordinates when the resultant
  // itself is zero; settle that case by the rank of the critical-degree part.
  if (!spans_critical_degree(forms)) return FieldElement::zero(field);
  // Over a small field det(M') can vanish at every rational change of
  // coordinates; the resultant has coefficients in the base field, so it may
  // be computed over an extension and pulled back.
  if (field.is_finite() && field.ff().order() <= (1u << 16)) {
    for (unsigned e = 2; e <= 4 && std::pow(double(field.ff().order()), e) <= double(1u << 20); ++e)
      if (auto r = retry_in(forms, extension_of(field, e), rng)) return restrict_to(*r, field);
  }
  throw Error(Errc::DegenerateDenominator, "det(M') vanished after repeated random changes of coordinates");
}

FieldElement discriminant_value(const HomogeneousForm& f) {
  if (f.degree() < 2) throw Error(Errc::InvalidInput, "discriminant needs degree >= 2");
  std::vector<HomogeneousForm> partials;
  for (int i = 0; i <= f.n(); ++i) partials.push_back(partial_derivative(f, i));
  return macaulay_resultant(partials);
}

// ---------------------------------------------------------------------------
// Point searches

namespace {

struct CodeForm {
  int degree = 0;
  std::vector<std::uint16_t> exps;  // term-major
  std::vector<Code> coeffs;
};

CodeForm to_code_form(const HomogeneousForm& f, const Field& target) {
  CodeForm cf;
  cf.degree = f.degree();
  const FieldEmbedding& emb = FieldEmbedding::get(f.field().ff(), target.ff());
  for (const auto& [e, c] : f.terms()) {
    cf.exps.insert(cf.exps.end(), e.begin(), e.end());
    cf.coeffs.push_back(emb.map(c.code()));
  }
  return cf;
}

class PowerTable {
 public:
  PowerTable(std::size_t nvars, int max_degree) : nvars_(nvars), stride_(static_cast<std::size_t>(max_degree) + 1), data_(nvars * stride_, 1) {}

  void load(const FiniteField& f, const Code* point) {
    for (std::size_t j = 0; j < nvars_; ++j) {
      Code* row = &data_[j * stride_];
      row[0] = 1;
      for (std::size_t e = 1; e < stride_; ++e) row[e] = f.mul(row[e - 1], point[j]);
    }
  }
  Code get(std::size_t var, std::size_t e) const { return data_[var * stride_ + e]; }

 private:
  std::size_t nvars_, stride_;
  std::vector<Code> data_;
};

Code eval_code_form(const FiniteField& f, const CodeForm& cf, const PowerTable& pw, std::size_t nvars) {
  Code acc = 0;
  for (std::size_t t = 0; t < cf.coeffs.size(); ++t) {
    Code v = cf.coeffs[t];
    const std::uint16_t* e = &cf.exps[t * nvars];
    for (std::size_t j = 0; j < nvars && v != 0; ++j)
      if (e[j]) v = f.mul(v, pw.get(j, e[j]));
    acc = f.add(acc, v);
  }
  return acc;
}

// Number of points of P^{nvars-1}(GF(Q)), saturating.
std::uint64_t projective_point_count(std::uint64_t q, std::size_t nvars) {
  long double total = 0, power = 1;
  for (std::size_t i = 0; i < nvars; ++i) {
    total += power;
    power *= static_cast<long double>(q);
  }
  if (total > 1.8e19L) return std::numeric_limits<std::uint64_t>::max();
  return static_cast<std::uint64_t>(total);
}

std::uint64_t saturating_pow(std::uint64_t base, unsigned e) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < e; ++i) {
    if (r > std::numeric_limits<std::uint64_t>::max() / base) return std::numeric_limits<std::uint64_t>::max();
    r *= base;
  }
  return r;
}

// Visits normalized points in increasing lexicographic order; stops when the
// visitor returns true.
bool for_each_projective_point(std::uint64_t q, std::size_t nvars, const std::function<bool(const Code*)>& visit) {
  std::vector<Code> pt(nvars, 0);
  for (std::size_t lead = nvars; lead-- > 0;) {
    std::fill(pt.begin(), pt.end(), 0);
    pt[lead] = 1;
    while (true) {
      if (visit(pt.data())) return true;
      std::size_t j = nvars;
      while (j-- > lead + 1) {
        if (++pt[j] < q) break;
        pt[j] = 0;
      }
      if (j == lead) break;
    }
  }
  return false;
}

enum class SearchKind { CommonZero, Singular };

std::optional<PointWitness> search(const FormTuple& t, unsigned max_ext, const SearchLimits& limits, SearchKind kind, bool* complete) {
  if (!t.field().is_finite()) throw Error(Errc::UnsupportedField, "point search needs a finite field");
  const std::size_t nvars = static_cast<std::size_t>(t.n() + 1);
  const std::size_t k = t.size();
  const std::uint64_t q = t.field().ff().order();
  if (complete) *complete = true;
  for (unsigned e = 1; e <= max_ext; ++e) {
    std::uint64_t big_q = saturating_pow(q, e);
    if (big_q > (std::uint64_t(1) << 32) || projective_point_count(big_q, nvars) > limits.max_points_per_degree) {
      if (complete) *complete = false;
      continue;
    }
    Field ext = extension_of(t.field(), e);
    const FiniteField& f = ext.ff();
    std::vector<CodeForm> forms;
    int max_degree = 0;
    for (const auto& g : t.forms()) {
      forms.push_back(to_code_form(g, ext));
      max_degree = std::max(max_degree, g.degree());
    }
    std::vector<CodeForm> partials;  // row-major k x nvars
    if (kind == SearchKind::Singular)
      for (const auto& g : t.forms())
        for (std::size_t c = 0; c < nvars; ++c) partials.push_back(to_code_form(partial_derivative(g, static_cast<int>(c)), ext));
    PowerTable pw(nvars, max_degree);
    std::vector<Code> jac(k * nvars);
    std::vector<Code> found;
    for_each_projective_point(big_q, nvars, [&](const Code* pt) {
      pw.load(f, pt);
      for (const auto& cf : forms)
        if (eval_code_form(f, cf, pw, nvars) != 0) return false;
      if (kind == SearchKind::Singular) {
        for (std::size_t i = 0; i < partials.size(); ++i) jac[i] = eval_code_form(f, partials[i], pw, nvars);
        if (rank_codes(f, jac, k, nvars) == k) return false;
      }
      found.assign(pt, pt + nvars);
      return true;
    });
    if (!found.empty()) {
      PointWitness w;
      w.extension_degree = e;
      for (Code c : found) w.point.emplace_back(ext, c);
      return w;
    }
  }
  return std::nullopt;
}

}  // namespace

std::optional<PointWitness> common_zero_search(const FormTuple& t, unsigned max_ext_degree, const SearchLimits& limits) {
  return search(t, max_ext_degree, limits, SearchKind::CommonZero, nullptr);
}

std::optional<PointWitness> singular_point_search(const FormTuple& t, unsigned max_ext_degree, const SearchLimits& limits, bool* complete) {
  return search(t, max_ext_degree, limits, SearchKind::Singular, complete);
}

// ---------------------------------------------------------------------------
// Smoothness

const char* smoothness_name(Smoothness s) noexcept {
  switch (s) {
    case Smoothness::Smooth: return "Smooth";
    case Smoothness::Singular: return "Singular";
    case Smoothness::Inconclusive: return "Inconclusive";
  }
  return "Unknown";
}

namespace {

HomogeneousForm form_determinant(const std::vector<std::vector<HomogeneousForm>>& m, std::vector<std::size_t>& cols, std::size_t row) {
  const std::size_t k = m.size();
  if (row + 1 == k) return m[row][cols[0]];
  HomogeneousForm acc;
  bool first = true;
  for (std::size_t i = 0; i < cols.size(); ++i) {
    std::vector<std::size_t> rest;
    for (std::size_t j = 0; j < cols.size(); ++j)
      if (j != i) rest.push_back(cols[j]);
    HomogeneousForm term = m[row][cols[i]] * form_determinant(m, rest, row + 1);
    if (i % 2 == 1) term = term.scaled(-FieldElement::one(term.field()));
    acc = first ? term : acc + term;
    first = false;
  }
  return acc;
}

// Generators of the ideal whose zero set is Sing(t): the forms and all
// k x k minors of the Jacobian.
std::vector<HomogeneousForm> singular_locus_generators(const FormTuple& t) {
  const std::size_t k = t.size();
  const int nvars = t.n() + 1;
  std::vector<std::vector<HomogeneousForm>> jac(k);
  for (std::size_t r = 0; r < k; ++r)
    for (int c = 0; c < nvars; ++c) jac[r].push_back(partial_derivative(t[r], c));
  std::vector<HomogeneousForm> gens(t.forms());
  std::vector<std::size_t> cols(k);
  std::function<void(std::size_t, std::size_t)> choose = [&](std::size_t start, std::size_t depth) {
    if (depth == k) {
      std::vector<std::size_t> c = cols;
      HomogeneousForm minor = form_determinant(jac, c, 0);
      if (!minor.is_zero()) gens.push_back(std::move(minor));
      return;
    }
    for (std::size_t j = start; j < static_cast<std::size_t>(nvars); ++j) {
      cols[depth] = j;
      choose(j + 1, depth + 1);
    }
  };
  choose(0, 0);
  return gens;
}

bool ideal_resultant_certificate(const FormTuple& t, std::mt19937_64& rng) {
  const int n = t.n();
  auto gens = singular_locus_generators(t);
  int delta = 0;
  for (const auto& g : gens) {
    if (g.degree() == 0) return true;  // a nonzero constant minor
    delta = std::max(delta, g.degree());
  }
  std::vector<HomogeneousForm> span;
  for (const auto& g : gens)
    for (const auto& beta : monomial_basis(n, delta - g.degree())) span.push_back(g.shifted(beta));
  // Macaulay size grows as binomial((n+1)(delta-1)+1+n, n); keep it tractable.
  if (monomial_count(n, (n + 1) * (delta - 1) + 1) > 1500) return false;
  const std::uint64_t q = t.field().ff().order();
  for (unsigned e = 1; e <= 4; ++e) {
    if (saturating_pow(q, e) > (std::uint64_t(1) << 20)) break;
    Field ext = extension_of(t.field(), e);
    const std::uint64_t big_q = ext.ff().order();
    std::vector<HomogeneousForm> lifted;
    for (const auto& s : span) lifted.push_back(lift(s, ext));
    for (int attempt = 0; attempt < 3; ++attempt) {
      std::vector<HomogeneousForm> combos;
      for (int j = 0; j <= n; ++j) {
        HomogeneousForm c(n, delta, ext);
        for (const auto& s : lifted) c = c + s.scaled(FieldElement(ext, rng() % big_q));
        combos.push_back(std::move(c));
      }
      try {
        if (!macaulay_resultant(combos).is_zero()) return true;
      } catch (const Error& err) {
        if (err.code() != Errc::DegenerateDenominator) throw;
      }
    }
  }
  return false;
}

std::uint64_t bezout_bound(const FormTuple& t) {
  std::uint64_t prod = 1, minor_degree = 0;
  for (int d : t.multidegree()) {
    prod *= static_cast<std::uint64_t>(d);
    minor_degree += static_cast<std::uint64_t>(d - 1);
  }
  const unsigned rest = static_cast<unsigned>(t.n() + 1 - static_cast<int>(t.size()));
  std::uint64_t extra = minor_degree == 0 ? 1 : saturating_pow(minor_degree, rest);
  if (extra != 0 && prod > std::numeric_limits<std::uint64_t>::max() / extra) return std::numeric_limits<std::uint64_t>::max();
  return prod * extra;
}

}  // namespace

SmoothnessVerdict is_singular(const FormTuple& t, unsigned max_ext_degree, const SearchLimits& limits) {
  for (const auto& f : t.forms()) {
    if (f.is_zero()) throw Error(Errc::InvalidInput, "zero form in a smoothness query");
    if (f.degree() < 1) throw Error(Errc::InvalidInput, "forms must have degree >= 1");
  }
  SmoothnessVerdict v;
  const std::uint64_t p = t.field().characteristic();
  if (t.size() == 1 && t[0].degree() >= 2 && (p == 0 || t[0].degree() % p != 0)) {
    try {
      FieldElement disc = discriminant_value(t[0]);
      v.method = "discriminant";
      v.discriminant = disc;
      v.status = disc.is_zero() ? Smoothness::Singular : Smoothness::Smooth;
      // Witness search for reporting only, kept to small extensions.
      if (v.status == Smoothness::Singular && p != 0) v.witness = singular_point_search(t, std::min(max_ext_degree, 2u), limits);
      return v;
    } catch (const Error& err) {
      if (err.code() != Errc::DegenerateDenominator || p == 0) throw;
    }
  }
  if (p == 0) throw Error(Errc::UnsupportedField, "smoothness of tuples over QQ needs point search over a finite field");
  bool complete = true;
  if (auto w = singular_point_search(t, max_ext_degree, limits, &complete)) {
    v.status = Smoothness::Singular;
    v.witness = std::move(w);
    v.method = "point-search";
    return v;
  }
  std::mt19937_64 rng(kRetrySeed ^ 0x5151);
  if (ideal_resultant_certificate(t, rng)) {
    v.status = Smoothness::Smooth;
    v.method = "ideal-resultant";
    return v;
  }
  v.method = "point-search";
  v.status = complete && bezout_bound(t) <= max_ext_degree ? Smoothness::Smooth : Smoothness::Inconclusive;
  return v;
}

// ---------------------------------------------------------------------------
// Symbolic discriminants

void IntegerPolynomial::add_term(const Exponents& e, const BigInt& c) {
  if (c == 0) return;
  if (e.size() != nvars_) throw Error(Errc::InvalidInput, "exponent vector length mismatch");
  auto [it, ins] = terms_.try_emplace(e, c);
  if (ins) return;
  it->second += c;
  if (it->second == 0) terms_.erase(it);
}

BigInt IntegerPolynomial::content() const {
  BigInt g = 0;
  for (const auto& [e, c] : terms_) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), c.get_mpz_t());
  return g;
}

void IntegerPolynomial::normalize() {
  if (terms_.empty()) return;
  BigInt g = content();
  if (terms_.begin()->second < 0) g = -g;
  for (auto& [e, c] : terms_) mpz_divexact(c.get_mpz_t(), c.get_mpz_t(), g.get_mpz_t());
}

bool IntegerPolynomial::is_normalized() const {
  return !terms_.empty() && content() == 1 && terms_.begin()->second > 0;
}

BigInt IntegerPolynomial::evaluate(const std::vector<BigInt>& values) const {
  if (values.size() != nvars_) throw Error(Errc::InvalidInput, "wrong number of values");
  BigInt acc = 0;
  for (const auto& [e, c] : terms_) {
    BigInt t = c;
    for (std::size_t j = 0; j < nvars_; ++j) {
      BigInt pw;
      mpz_pow_ui(pw.get_mpz_t(), values[j].get_mpz_t(), e[j]);
      t *= pw;
    }
    acc += t;
  }
  return acc;
}

FieldElement IntegerPolynomial::evaluate(const std::vector<FieldElement>& values) const {
  if (values.size() != nvars_) throw Error(Errc::InvalidInput, "wrong number of values");
  const Field& field = values.front().field();
  FieldElement acc = FieldElement::zero(field);
  for (const auto& [e, c] : terms_) {
    FieldElement t = FieldElement::from_integer(field, c);
    for (std::size_t j = 0; j < nvars_; ++j)
      if (e[j]) t *= values[j].pow(e[j]);
    acc += t;
  }
  return acc;
}

std::string IntegerPolynomial::to_string() const {
  if (terms_.empty()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : terms_) {
    BigInt mag = abs(c);
    std::string mono;
    for (std::size_t j = 0; j < nvars_; ++j) {
      if (!e[j]) continue;
      if (!mono.empty()) mono += "*";
      mono += "c" + std::to_string(j);
      if (e[j] > 1) mono += "^" + std::to_string(e[j]);
    }
    std::string t = mono.empty() ? mag.get_str() : (mag == 1 ? mono : mag.get_str() + "*" + mono);
    out += first ? (c < 0 ? "-" : "") + t : (c < 0 ? " - " : " + ") + t;
    first = false;
  }
  return out;
}

HomogeneousForm form_from_coefficients(int n, int d, const std::vector<FieldElement>& coeffs) {
  auto basis = monomial_basis(n, d);
  if (coeffs.size() != basis.size()) throw Error(Errc::InvalidInput, "coefficient vector has wrong length");
  HomogeneousForm f(n, d, coeffs.front().field());
  for (std::size_t i = 0; i < basis.size(); ++i) f.add_term(basis[i], coeffs[i]);
  return f;
}

IntegerPolynomial discriminant_polynomial(int n, int d) {
  const bool supported = (n == 1 && d >= 2 && d <= 4) || (n == 2 && d == 2);
  if (!supported)
    throw Error(Errc::UnsupportedSize, "symbolic discriminant only for n = 1, d <= 4 or (n, d) = (2, 2); got (" + std::to_string(n) + ", " + std::to_string(d) + ")");
  const int nvars = static_cast<int>(monomial_count(n, d));
  // The discriminant has degree (n+1)(d-1)^n in the coefficients.
  int total = n + 1;
  for (int i = 0; i < n; ++i) total *= d - 1;
  const auto unknowns = monomial_basis(nvars - 1, total);
  const std::size_t u = unknowns.size();
  const std::size_t rows = u + 8;
  const Field qq = Field::rationals();
  std::mt19937_64 rng(0xd15c0ULL + static_cast<std::uint64_t>(n * 16 + d));
  for (int attempt = 0; attempt < 6; ++attempt) {
    Matrix sys(rows, u + 1, qq);
    for (std::size_t r = 0; r < rows; ++r) {
      std::vector<BigInt> pt(nvars);
      std::vector<FieldElement> coeffs;
      for (int j = 0; j < nvars; ++j) {
        pt[j] = static_cast<long>(rng() % 9) - 4;
        coeffs.push_back(FieldElement::from_integer(qq, pt[j]));
      }
      for (std::size_t c = 0; c < u; ++c) {
        BigInt v = 1;
        for (int j = 0; j < nvars; ++j) {
          BigInt pw;
          mpz_pow_ui(pw.get_mpz_t(), pt[j].get_mpz_t(), unknowns[c][j]);
          v *= pw;
        }
        sys(r, c) = FieldElement(Rational(v));
      }
      HomogeneousForm f = form_from_coefficients(n, d, coeffs);
      sys(r, u) = f.is_zero() ? FieldElement(Rational(0)) : discriminant_value(f);
    }
    auto pivots = row_reduce(sys);
    if (pivots.size() != u || pivots.back() != u - 1) continue;  // underdetermined or inconsistent
    IntegerPolynomial poly(static_cast<std::size_t>(nvars));
    for (std::size_t i = 0; i < u; ++i) {
      const Rational& c = sys(i, u).rational();
      if (c.get_den() != 1) throw Error(Errc::Internal, "non-integral discriminant coefficient " + format_rational(c));
      poly.add_term(unknowns[pivots[i]], c.get_num());
    }
    poly.normalize();
    return poly;
  }
  throw Error(Errc::Internal, "discriminant interpolation failed to find a nonsingular sample set");
}

std::string discriminant_cache_name(int n, int d) {
  return "disc_n" + std::to_string(n) + "_d" + std::to_string(d) + ".txt";
}

std::string format_discriminant_cache(const IntegerPolynomial& p) {
  std::string out;
  for (const auto& [e, c] : p.terms()) {
    for (auto x : e) out += std::to_string(x) + " ";
    out += c.get_str() + "\n";
  }
  return out;
}

IntegerPolynomial parse_discriminant_cache(const std::string& text) {
  std::istringstream in(text);
  std::string line;
  std::vector<std::pair<Exponents, BigInt>> rows;
  std::size_t width = 0, lineno = 0;
  while (std::getline(in, line)) {
    ++lineno;
    if (line.empty()) continue;
    std::istringstream ls(line);
    std::vector<std::string> tokens;
    for (std::string tok; ls >> tok;) tokens.push_back(tok);
    if (tokens.size() < 2) throw Error(Errc::CacheCorrupt, "line " + std::to_string(lineno) + " has too few fields");
    if (width == 0) width = tokens.size() - 1;
    if (tokens.size() - 1 != width) throw Error(Errc::CacheCorrupt, "line " + std::to_string(lineno) + " has the wrong number of exponents");
    Exponents e;
    for (std::size_t i = 0; i < width; ++i) {
      BigInt v = parse_bigint(tokens[i]);
      if (v < 0 || v > 60000) throw Error(Errc::CacheCorrupt, "bad exponent on line " + std::to_string(lineno));
      e.push_back(static_cast<std::uint16_t>(v.get_ui()));
    }
    rows.emplace_back(std::move(e), parse_bigint(tokens.back()));
  }
  if (rows.empty()) throw Error(Errc::CacheCorrupt, "empty discriminant cache");
  GrlexGreater greater;
  for (std::size_t i = 1; i < rows.size(); ++i)
    if (!greater(rows[i - 1].first, rows[i].first)) throw Error(Errc::CacheCorrupt, "rows not in graded-lex order at row " + std::to_string(i + 1));
  IntegerPolynomial p(width);
  for (const auto& [e, c] : rows) {
    if (c == 0) throw Error(Errc::CacheCorrupt, "zero coefficient stored");
    p.add_term(e, c);
  }
  if (p.content() != 1) throw Error(Errc::CacheCorrupt, "content is " + p.content().get_str() + ", expected 1");
  if (!p.is_normalized()) throw Error(Errc::CacheCorrupt, "leading coefficient is not positive");
  return p;
}

std::filesystem::path write_discriminant_cache(const std::filesystem::path& dir, int n, int d, const IntegerPolynomial& p) {
  std::filesystem::create_directories(dir);
  auto path = dir / discriminant_cache_name(n, d);
  std::ofstream out(path, std::ios::binary | std::ios::trunc);
  if (!out) throw Error(Errc::InvalidInput, "cannot write " + path.string());
  out << format_discriminant_cache(p);
  return path;
}

IntegerPolynomial load_discriminant_cache(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error(Errc::InvalidInput, "cannot read " + path.string());
  std::stringstream ss;
  ss << in.rdbuf();
  return parse_discriminant_cache(ss.str());
}

}  // namespace cibound
