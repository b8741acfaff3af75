#include "forms.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <set>

namespace cibound {

bool GrlexGreater::operator()(const Exponents& a, const Exponents& b) const noexcept {
  unsigned da = total_degree(a), db = total_degree(b);
  if (da != db) return da > db;
  return std::lexicographical_compare(b.begin(), b.end(), a.begin(), a.end());
}

unsigned total_degree(const Exponents& e) noexcept { return std::accumulate(e.begin(), e.end(), 0u); }

namespace {

void fill_basis(int var, int nvars, int remaining, Exponents& cur, std::vector<Exponents>& out) {
  if (var == nvars - 1) {
    cur[var] = static_cast<std::uint16_t>(remaining);
    out.push_back(cur);
    return;
  }
  for (int e = remaining; e >= 0; --e) {
    cur[var] = static_cast<std::uint16_t>(e);
    fill_basis(var + 1, nvars, remaining - e, cur, out);
  }
  cur[var] = 0;
}

}  // namespace

std::vector<Exponents> monomial_basis(int n, int d) {
  if (n < 0 || d < 0) throw Error(Errc::InvalidInput, "monomial_basis needs n, d >= 0");
  std::vector<Exponents> out;
  Exponents cur(n + 1, 0);
  fill_basis(0, n + 1, d, cur, out);
  return out;
}

std::size_t monomial_count(int n, int d) {
  // binomial(n + d, n)
  std::size_t r = 1;
  for (int i = 1; i <= n; ++i) r = r * static_cast<std::size_t>(d + i) / static_cast<std::size_t>(i);
  return r;
}

// ---------------------------------------------------------------------------

HomogeneousForm::HomogeneousForm(int n, int d, const Field& field) : n_(n), d_(d), field_(field) {
  if (n < 0 || d < 0) throw Error(Errc::InvalidInput, "form needs n >= 0 and d >= 0");
}

FieldElement HomogeneousForm::coefficient(const Exponents& e) const {
  auto it = terms_.find(e);
  return it == terms_.end() ? FieldElement::zero(field_) : it->second;
}

void HomogeneousForm::add_term(const Exponents& e, const FieldElement& c) {
  if (c.is_zero()) return;
  if (e.size() != static_cast<std::size_t>(n_ + 1) || total_degree(e) != static_cast<unsigned>(d_))
    throw Error(Errc::InhomogeneousError, "monomial of degree " + std::to_string(total_degree(e)) + " in a degree " + std::to_string(d_) + " form");
  auto [it, inserted] = terms_.try_emplace(e, c);
  if (inserted) return;
  it->second += c;
  if (it->second.is_zero()) terms_.erase(it);
}

void HomogeneousForm::set_coefficient(const Exponents& e, const FieldElement& c) {
  terms_.erase(e);
  add_term(e, c);
}

const Exponents& HomogeneousForm::leading_monomial() const {
  if (terms_.empty()) throw Error(Errc::InvalidInput, "zero form has no leading monomial");
  return terms_.begin()->first;
}

const FieldElement& HomogeneousForm::leading_coefficient() const {
  if (terms_.empty()) throw Error(Errc::InvalidInput, "zero form has no leading coefficient");
  return terms_.begin()->second;
}

void HomogeneousForm::check_compatible(const HomogeneousForm& o) const {
  if (field_ != o.field_) throw Error(Errc::FieldMismatch, "forms over " + field_.spec() + " and " + o.field_.spec());
  if (n_ != o.n_) throw Error(Errc::InvalidInput, "forms in different numbers of variables");
}

HomogeneousForm HomogeneousForm::operator+(const HomogeneousForm& o) const {
  check_compatible(o);
  if (d_ != o.d_) throw Error(Errc::InhomogeneousError, "sum of forms of degrees " + std::to_string(d_) + " and " + std::to_string(o.d_));
  HomogeneousForm r = *this;
  for (const auto& [e, c] : o.terms_) r.add_term(e, c);
  return r;
}

HomogeneousForm HomogeneousForm::operator-(const HomogeneousForm& o) const { return *this + o.scaled(-FieldElement::one(field_)); }

HomogeneousForm HomogeneousForm::operator*(const HomogeneousForm& o) const {
  check_compatible(o);
  HomogeneousForm r(n_, d_ + o.d_, field_);
  Exponents e(n_ + 1);
  for (const auto& [ea, ca] : terms_)
    for (const auto& [eb, cb] : o.terms_) {
      for (int i = 0; i <= n_; ++i) e[i] = static_cast<std::uint16_t>(ea[i] + eb[i]);
      r.add_term(e, ca * cb);
    }
  return r;
}

HomogeneousForm HomogeneousForm::scaled(const FieldElement& c) const {
  HomogeneousForm r(n_, d_, field_);
  if (c.is_zero()) return r;
  for (const auto& [e, v] : terms_) r.terms_.emplace(e, v * c);
  return r;
}

HomogeneousForm HomogeneousForm::shifted(const Exponents& s) const {
  if (s.size() != static_cast<std::size_t>(n_ + 1)) throw Error(Errc::InvalidInput, "shift monomial has wrong length");
  HomogeneousForm r(n_, d_ + static_cast<int>(total_degree(s)), field_);
  for (const auto& [e, v] : terms_) {
    Exponents t = e;
    for (int i = 0; i <= n_; ++i) t[i] = static_cast<std::uint16_t>(t[i] + s[i]);
    r.terms_.emplace(std::move(t), v);
  }
  return r;
}

HomogeneousForm HomogeneousForm::monic() const {
  if (terms_.empty()) return *this;
  return scaled(leading_coefficient().inverse());
}

bool HomogeneousForm::operator==(const HomogeneousForm& o) const {
  return n_ == o.n_ && d_ == o.d_ && field_ == o.field_ && terms_ == o.terms_;
}

std::string HomogeneousForm::to_string() const { return format_form(*this); }

HomogeneousForm linear_form(int n, const std::vector<FieldElement>& coeffs) {
  if (coeffs.size() != static_cast<std::size_t>(n + 1)) throw Error(Errc::InvalidInput, "linear form needs n+1 coefficients");
  HomogeneousForm f(n, 1, coeffs.front().field());
  for (int i = 0; i <= n; ++i) {
    Exponents e(n + 1, 0);
    e[i] = 1;
    f.add_term(e, coeffs[i]);
  }
  return f;
}

HomogeneousForm monomial_form(int n, const Exponents& e, const FieldElement& c) {
  HomogeneousForm f(n, static_cast<int>(total_degree(e)), c.field());
  f.add_term(e, c);
  return f;
}

// ---------------------------------------------------------------------------

FieldElement evaluate(const HomogeneousForm& f, std::span<const FieldElement> point) {
  if (point.size() != static_cast<std::size_t>(f.nvars()))
    throw Error(Errc::InvalidInput, "point has " + std::to_string(point.size()) + " coordinates, form has " + std::to_string(f.nvars()) + " variables");
  const Field& pf = point.front().field();
  for (const auto& x : point)
    if (x.field() != pf) throw Error(Errc::FieldMismatch, "point coordinates in different fields");
  // powers[j][e] = x_j^e
  std::vector<std::vector<FieldElement>> powers(point.size());
  for (std::size_t j = 0; j < point.size(); ++j) {
    powers[j].push_back(FieldElement::one(pf));
    for (int e = 1; e <= f.degree(); ++e) powers[j].push_back(powers[j].back() * point[j]);
  }
  FieldElement acc = FieldElement::zero(pf);
  for (const auto& [e, c] : f.terms()) {
    FieldElement t = embed(c, pf);
    for (std::size_t j = 0; j < e.size(); ++j)
      if (e[j]) t *= powers[j][e[j]];
    acc += t;
  }
  return acc;
}

HomogeneousForm partial_derivative(const HomogeneousForm& f, int i) {
  if (i < 0 || i > f.n()) throw Error(Errc::InvalidInput, "variable index " + std::to_string(i) + " out of range");
  if (f.degree() == 0) throw Error(Errc::InvalidInput, "derivative of a constant form");
  HomogeneousForm r(f.n(), f.degree() - 1, f.field());
  for (const auto& [e, c] : f.terms()) {
    if (e[i] == 0) continue;
    Exponents t = e;
    --t[i];
    r.add_term(t, c * FieldElement::from_int(f.field(), e[i]));
  }
  return r;
}

HomogeneousForm substitute_linear(const HomogeneousForm& f, const Matrix& a) {
  const int m = f.nvars();
  if (a.rows() != static_cast<std::size_t>(m) || a.cols() != static_cast<std::size_t>(m))
    throw Error(Errc::InvalidInput, "substitution matrix must be " + std::to_string(m) + "x" + std::to_string(m));
  if (a.field() != f.field()) throw Error(Errc::FieldMismatch, "matrix over " + a.field().spec() + ", form over " + f.field().spec());
  // powers[j][e] = (sum_k a(j,k) x_k)^e
  std::vector<std::vector<HomogeneousForm>> powers(m);
  for (int j = 0; j < m; ++j) {
    std::vector<FieldElement> row;
    for (int k = 0; k < m; ++k) row.push_back(a(j, k));
    HomogeneousForm lin = linear_form(f.n(), row);
    powers[j].push_back(monomial_form(f.n(), Exponents(m, 0), FieldElement::one(f.field())));
    for (int e = 1; e <= f.degree(); ++e) powers[j].push_back(powers[j].back() * lin);
  }
  HomogeneousForm r(f.n(), f.degree(), f.field());
  for (const auto& [e, c] : f.terms()) {
    HomogeneousForm t = monomial_form(f.n(), Exponents(m, 0), c);
    for (int j = 0; j < m; ++j)
      if (e[j]) t = t * powers[j][e[j]];
    for (const auto& [te, tc] : t.terms()) r.add_term(te, tc);
  }
  return r;
}

HomogeneousForm lift(const HomogeneousForm& f, const Field& to) {
  if (f.field() == to) return f;
  HomogeneousForm r(f.n(), f.degree(), to);
  for (const auto& [e, c] : f.terms()) r.add_term(e, embed(c, to));
  return r;
}

// ---------------------------------------------------------------------------

FormTuple::FormTuple(std::vector<HomogeneousForm> forms) : forms_(std::move(forms)) {
  if (forms_.empty()) throw Error(Errc::InvalidInput, "empty form tuple");
  for (const auto& f : forms_) {
    if (f.field() != forms_.front().field()) throw Error(Errc::FieldMismatch, "tuple forms over different fields");
    if (f.n() != forms_.front().n()) throw Error(Errc::InvalidInput, "tuple forms in different numbers of variables");
  }
  if (forms_.size() > static_cast<std::size_t>(forms_.front().n() + 1))
    throw Error(Errc::InvalidInput, "tuple has more than n+1 forms");
}

std::vector<int> FormTuple::multidegree() const {
  std::vector<int> out;
  for (const auto& f : forms_) out.push_back(f.degree());
  return out;
}

FormTuple FormTuple::substituted(const Matrix& a) const {
  std::vector<HomogeneousForm> out;
  for (const auto& f : forms_) out.push_back(substitute_linear(f, a));
  return FormTuple(std::move(out));
}

FormTuple FormTuple::lifted(const Field& to) const {
  std::vector<HomogeneousForm> out;
  for (const auto& f : forms_) out.push_back(lift(f, to));
  return FormTuple(std::move(out));
}

std::string FormTuple::to_string() const {
  std::string s;
  for (std::size_t i = 0; i < forms_.size(); ++i) s += (i ? "; " : "") + format_form(forms_[i]);
  return s;
}

std::size_t jacobian_rank_at(const FormTuple& t, std::span<const FieldElement> point) {
  if (std::all_of(point.begin(), point.end(), [](const FieldElement& x) { return x.is_zero(); }))
    throw Error(Errc::InvalidInput, "jacobian rank at the origin");
  const Field& pf = point.front().field();
  Matrix jac(t.size(), t.n() + 1, pf);
  for (std::size_t r = 0; r < t.size(); ++r)
    for (int c = 0; c <= t.n(); ++c) jac(r, c) = evaluate(partial_derivative(t[r], c), point);
  return rank(jac);
}

// ---------------------------------------------------------------------------
// Parsing

namespace {

using Poly = std::map<Exponents, FieldElement, GrlexGreater>;

class Parser {
 public:
  Parser(std::string_view text, int n, const Field& field) : s_(text), n_(n), field_(field) {}

  Poly parse() {
    Poly p = expr();
    skip_ws();
    if (pos_ != s_.size()) throw SyntaxError(pos_, std::string("unexpected '") + s_[pos_] + "'");
    return p;
  }

 private:
  void skip_ws() {
    while (pos_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[pos_]))) ++pos_;
  }
  char peek() {
    skip_ws();
    return pos_ < s_.size() ? s_[pos_] : '\0';
  }

  Poly constant(const FieldElement& c) {
    Poly p;
    if (!c.is_zero()) p.emplace(Exponents(n_ + 1, 0), c);
    return p;
  }

  static void add_into(Poly& acc, const Poly& b, bool negate) {
    for (const auto& [e, c] : b) {
      FieldElement v = negate ? -c : c;
      auto [it, ins] = acc.try_emplace(e, v);
      if (ins) continue;
      it->second += v;
      if (it->second.is_zero()) acc.erase(it);
    }
  }

  Poly mul(const Poly& a, const Poly& b) {
    Poly r;
    Exponents e(n_ + 1);
    for (const auto& [ea, ca] : a)
      for (const auto& [eb, cb] : b) {
        for (int i = 0; i <= n_; ++i) {
          unsigned v = unsigned(ea[i]) + eb[i];
          if (v > 60000) throw SyntaxError(pos_, "exponent overflow");
          e[i] = static_cast<std::uint16_t>(v);
        }
        add_into(r, Poly{{e, ca * cb}}, false);
      }
    return r;
  }

  Poly expr() {
    Poly acc;
    bool negate = false;
    char c = peek();
    if (c == '+' || c == '-') {
      negate = c == '-';
      ++pos_;
    }
    add_into(acc, term(), negate);
    while (true) {
      c = peek();
      if (c != '+' && c != '-') break;
      ++pos_;
      add_into(acc, term(), c == '-');
    }
    return acc;
  }

  bool starts_factor(char c) { return std::isdigit(static_cast<unsigned char>(c)) || c == 'x' || c == 'a' || c == '('; }

  Poly term() {
    Poly acc = factor();
    while (true) {
      char c = peek();
      if (c == '*') {
        ++pos_;
        acc = mul(acc, factor());
      } else if (starts_factor(c)) {
        acc = mul(acc, factor());
      } else {
        break;
      }
    }
    return acc;
  }

  std::string digits() {
    skip_ws();
    std::size_t start = pos_;
    while (pos_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[pos_]))) ++pos_;
    if (start == pos_) throw SyntaxError(pos_, "expected a number");
    return std::string(s_.substr(start, pos_ - start));
  }

  Poly factor() {
    Poly base = atom();
    if (peek() == '^') {
      ++pos_;
      std::size_t at = pos_;
      std::string e = digits();
      if (e.size() > 5) throw SyntaxError(at, "exponent too large");
      unsigned long k = std::stoul(e);
      Poly r = constant(FieldElement::one(field_));
      for (unsigned long i = 0; i < k; ++i) r = mul(r, base);
      return r;
    }
    return base;
  }

  Poly atom() {
    char c = peek();
    std::size_t at = pos_;
    if (std::isdigit(static_cast<unsigned char>(c))) {
      BigInt num(digits(), 10);
      FieldElement v = FieldElement::from_integer(field_, num);
      if (peek() == '/') {
        ++pos_;
        std::size_t den_at = pos_;
        BigInt den(digits(), 10);
        FieldElement dv = FieldElement::from_integer(field_, den);
        if (dv.is_zero()) throw SyntaxError(den_at, "denominator vanishes in " + field_.spec());
        v = v / dv;
      }
      return constant(v);
    }
    if (c == 'x') {
      ++pos_;
      if (pos_ >= s_.size() || !std::isdigit(static_cast<unsigned char>(s_[pos_]))) throw SyntaxError(pos_, "expected variable index after 'x'");
      std::string idx = digits();
      if (idx.size() > 4 || std::stoi(idx) > n_)
        throw SyntaxError(at, "variable x" + idx + " out of range x0..x" + std::to_string(n_));
      Exponents e(n_ + 1, 0);
      e[std::stoi(idx)] = 1;
      return Poly{{e, FieldElement::one(field_)}};
    }
    if (c == 'a') {
      ++pos_;
      if (!field_.is_finite() || field_.ff().degree() < 2)
        throw SyntaxError(at, "generator 'a' is only defined in GF(p^m), m > 1");
      return constant(FieldElement(field_, field_.ff().characteristic()));
    }
    if (c == '(') {
      ++pos_;
      Poly inner = expr();
      if (peek() != ')') throw SyntaxError(pos_, "expected ')'");
      ++pos_;
      return inner;
    }
    if (c == '\0') throw SyntaxError(pos_, "unexpected end of input");
    throw SyntaxError(pos_, std::string("unexpected '") + c + "'");
  }

  std::string_view s_;
  std::size_t pos_ = 0;
  int n_;
  Field field_;
};

}  // namespace

HomogeneousForm parse_form(std::string_view text, int n, const Field& field, std::optional<int> degree) {
  if (n < 0) throw Error(Errc::InvalidInput, "n must be >= 0");
  Poly p = Parser(text, n, field).parse();
  std::set<unsigned> degrees;
  for (const auto& [e, c] : p) degrees.insert(total_degree(e));
  if (degrees.size() > 1 || (degree && !degrees.empty() && *degrees.begin() != static_cast<unsigned>(*degree))) {
    std::string list;
    for (const auto& [e, c] : p) {
      if (!list.empty()) list += ", ";
      list += monomial_form(n, e, c).to_string() + " (degree " + std::to_string(total_degree(e)) + ")";
    }
    std::string want = degree ? " (expected degree " + std::to_string(*degree) + ")" : "";
    throw Error(Errc::InhomogeneousError, "terms of mixed degree" + want + ": " + list);
  }
  int d;
  if (!degrees.empty()) {
    d = static_cast<int>(*degrees.begin());
  } else if (degree) {
    d = *degree;
  } else {
    throw Error(Errc::InvalidInput, "zero form needs an explicit degree");
  }
  HomogeneousForm f(n, d, field);
  for (const auto& [e, c] : p) f.add_term(e, c);
  return f;
}

std::string format_form(const HomogeneousForm& f) {
  if (f.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& [e, c] : f.terms()) {
    bool negative = false;
    std::string mag;
    if (f.field().is_rational()) {
      Rational q = c.rational();
      negative = q < 0;
      mag = format_rational(abs(q));
    } else {
      const auto& ff = f.field().ff();
      mag = ff.format(c.code());
      if (mag.find('+') != std::string::npos) mag = "(" + mag + ")";
    }
    std::string mono;
    for (std::size_t i = 0; i < e.size(); ++i) {
      if (e[i] == 0) continue;
      if (!mono.empty()) mono += "*";
      mono += "x" + std::to_string(i);
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    std::string t = mono.empty() ? mag : (mag == "1" ? mono : mag + "*" + mono);
    if (first)
      out += (negative ? "-" : "") + t;
    else
      out += (negative ? " - " : " + ") + t;
    first = false;
  }
  return out;
}

int max_variable_index(std::string_view text) {
  int best = -1;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != 'x') continue;
    std::size_t j = i + 1;
    int v = 0;
    bool any = false;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j])) && v < 100000) {
      v = v * 10 + (text[j] - '0');
      any = true;
      ++j;
    }
    if (any) best = std::max(best, v);
  }
  return best;
}

HomogeneousForm random_form(int n, int d, const Field& field, std::mt19937_64& rng) {
  if (!field.is_finite()) throw Error(Errc::UnsupportedField, "random forms need a finite field");
  HomogeneousForm f(n, d, field);
  const std::uint64_t q = field.ff().order();
  for (const auto& e : monomial_basis(n, d)) f.add_term(e, FieldElement(field, rng() % q));
  return f;
}

HomogeneousForm random_form(int n, int d, const Field& field, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  return random_form(n, d, field, rng);
}

}  // namespace cibound
