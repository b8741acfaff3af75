#include "exactnum.hpp"

#include <algorithm>
#include <cctype>
#include <limits>
#include <map>
#include <memory>
#include <mutex>

namespace cibound {

const char* errc_name(Errc code) noexcept {
  switch (code) {
    case Errc::InvalidInput: return "InvalidInput";
    case Errc::DivisionByZero: return "DivisionByZero";
    case Errc::FieldMismatch: return "FieldMismatch";
    case Errc::SyntaxError: return "SyntaxError";
    case Errc::InhomogeneousError: return "InhomogeneousError";
    case Errc::UnsupportedField: return "UnsupportedField";
    case Errc::UnsupportedSize: return "UnsupportedSize";
    case Errc::DegenerateDenominator: return "DegenerateDenominator";
    case Errc::IntegralityViolation: return "IntegralityViolation";
    case Errc::OrbitBudgetExceeded: return "OrbitBudgetExceeded";
    case Errc::InsufficientSmoothSamples: return "InsufficientSmoothSamples";
    case Errc::CharMismatch: return "CharMismatch";
    case Errc::DivisibilityViolation: return "DivisibilityViolation";
    case Errc::CacheCorrupt: return "CacheCorrupt";
    case Errc::Internal: return "Internal";
  }
  return "Unknown";
}

// ---------------------------------------------------------------------------
// Integers and rationals

namespace {

std::string_view trim(std::string_view s) {
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
  while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
  return s;
}

bool is_integer_literal(std::string_view s) {
  if (!s.empty() && (s.front() == '-' || s.front() == '+')) s.remove_prefix(1);
  return !s.empty() && std::all_of(s.begin(), s.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
}

}  // namespace

BigInt parse_bigint(std::string_view text) {
  text = trim(text);
  if (!is_integer_literal(text)) throw Error(Errc::InvalidInput, "not an integer: '" + std::string(text) + "'");
  if (text.front() == '+') text.remove_prefix(1);
  return BigInt(std::string(text), 10);
}

Rational parse_rational(std::string_view text) {
  text = trim(text);
  auto slash = text.find('/');
  if (slash == std::string_view::npos) return Rational(parse_bigint(text));
  BigInt num = parse_bigint(text.substr(0, slash));
  std::string_view den_text = trim(text.substr(slash + 1));
  if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+'))
    throw Error(Errc::InvalidInput, "signed denominator in '" + std::string(text) + "'");
  BigInt den = parse_bigint(den_text);
  if (den == 0) throw Error(Errc::DivisionByZero, "zero denominator in '" + std::string(text) + "'");
  Rational r(num, den);
  r.canonicalize();
  return r;
}

std::string format_rational(const Rational& x) {
  if (x.get_den() == 1) return x.get_num().get_str();
  return x.get_num().get_str() + "/" + x.get_den().get_str();
}

namespace {

using u128 = unsigned __int128;

std::uint64_t mulmod64(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(u128(a) * b % m);
}

std::uint64_t powmod64(std::uint64_t a, std::uint64_t e, std::uint64_t m) {
  std::uint64_t r = 1 % m;
  a %= m;
  while (e) {
    if (e & 1) r = mulmod64(r, a, m);
    a = mulmod64(a, a, m);
    e >>= 1;
  }
  return r;
}

std::vector<std::uint64_t> distinct_prime_factors(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t f = 2; f * f <= n; ++f) {
    if (n % f == 0) {
      out.push_back(f);
      while (n % f == 0) n /= f;
    }
  }
  if (n > 1) out.push_back(n);
  return out;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t small : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % small == 0) return n == small;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    std::uint64_t x = powmod64(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (unsigned r = 1; r < s; ++r) {
      x = mulmod64(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

BigInt prime_to_p_part(const BigInt& n, std::uint64_t p) {
  if (n <= 0) throw Error(Errc::InvalidInput, "prime_to_p_part needs N >= 1, got " + n.get_str());
  if (!is_prime(p)) throw Error(Errc::InvalidInput, "not a prime: " + std::to_string(p));
  BigInt r = n;
  BigInt bp(static_cast<unsigned long>(p));
  while (mpz_divisible_p(r.get_mpz_t(), bp.get_mpz_t())) mpz_divexact(r.get_mpz_t(), r.get_mpz_t(), bp.get_mpz_t());
  return r;
}

unsigned p_valuation(const BigInt& n, std::uint64_t p) {
  if (n <= 0) throw Error(Errc::InvalidInput, "p_valuation needs N >= 1");
  BigInt r = n;
  BigInt bp(static_cast<unsigned long>(p));
  unsigned v = 0;
  while (mpz_divisible_p(r.get_mpz_t(), bp.get_mpz_t())) {
    mpz_divexact(r.get_mpz_t(), r.get_mpz_t(), bp.get_mpz_t());
    ++v;
  }
  return v;
}

// ---------------------------------------------------------------------------
// Polynomials over GF(p), dense, constant term first.

namespace {

using Poly = std::vector<std::uint64_t>;

void trim_poly(Poly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

Poly poly_mod(Poly a, const Poly& m, std::uint64_t p) {
  trim_poly(a);
  const std::size_t dm = m.size() - 1;
  std::uint64_t lead_inv = powmod64(m.back(), p - 2, p);
  while (a.size() >= m.size()) {
    std::uint64_t c = mulmod64(a.back(), lead_inv, p);
    std::size_t shift = a.size() - 1 - dm;
    for (std::size_t i = 0; i <= dm; ++i) {
      a[shift + i] = (a[shift + i] + p - mulmod64(c, m[i], p)) % p;
    }
    trim_poly(a);
  }
  return a;
}

Poly poly_mulmod(const Poly& a, const Poly& b, const Poly& m, std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  Poly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = (r[i + j] + mulmod64(a[i], b[j], p)) % p;
  return poly_mod(std::move(r), m, p);
}

Poly poly_powmod(Poly base, std::uint64_t e, const Poly& m, std::uint64_t p) {
  Poly r{1};
  base = poly_mod(std::move(base), m, p);
  while (e) {
    if (e & 1) r = poly_mulmod(r, base, m, p);
    base = poly_mulmod(base, base, m, p);
    e >>= 1;
  }
  return r;
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
  trim_poly(a);
  trim_poly(b);
  while (!b.empty()) {
    Poly r = poly_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

bool is_irreducible(const Poly& f, std::uint64_t p) {
  const std::size_t m = f.size() - 1;
  Poly x{0, 1};
  Poly xp = x;
  for (std::size_t i = 1; i <= m / 2; ++i) {
    xp = poly_powmod(xp, p, f, p);
    Poly diff = xp;
    diff.resize(std::max<std::size_t>(diff.size(), 2), 0);
    diff[1] = (diff[1] + p - 1) % p;
    trim_poly(diff);
    Poly g = poly_gcd(f, diff, p);
    if (g.size() != 1) return false;
  }
  return true;
}

}  // namespace

std::vector<std::uint64_t> find_irreducible(std::uint64_t p, unsigned m) {
  if (!is_prime(p)) throw Error(Errc::InvalidInput, "characteristic must be prime, got " + std::to_string(p));
  if (m < 1) throw Error(Errc::InvalidInput, "extension degree must be >= 1");
  Poly f(m + 1, 0);
  f[m] = 1;
  if (m == 1) return f;  // x
  // Odometer over (c_0, ..., c_{m-1}) with c_0 the fastest digit.
  while (true) {
    if (f[0] != 0 && is_irreducible(f, p)) return f;
    std::size_t i = 0;
    while (i < m && ++f[i] == p) f[i++] = 0;
    if (i == m) throw Error(Errc::Internal, "no irreducible polynomial found");
  }
}

// ---------------------------------------------------------------------------
// Finite fields

namespace {

constexpr std::uint64_t kTableLimit = std::uint64_t(1) << 21;
constexpr std::uint32_t kNoLog = std::numeric_limits<std::uint32_t>::max();

}  // namespace

const FiniteField& FiniteField::get(std::uint64_t p, unsigned m) {
  static std::mutex mutex;
  static std::map<std::pair<std::uint64_t, unsigned>, std::unique_ptr<FiniteField>> registry;
  std::lock_guard<std::mutex> lock(mutex);
  auto key = std::make_pair(p, m);
  auto it = registry.find(key);
  if (it != registry.end()) return *it->second;
  std::unique_ptr<FiniteField> field(new FiniteField(p, m));
  return *registry.emplace(key, std::move(field)).first->second;
}

FiniteField::FiniteField(std::uint64_t p, unsigned m) : p_(p), m_(m) {
  if (!is_prime(p)) throw Error(Errc::InvalidInput, "characteristic must be prime, got " + std::to_string(p));
  if (m < 1) throw Error(Errc::InvalidInput, "extension degree must be >= 1");
  if (p >= (std::uint64_t(1) << 31)) throw Error(Errc::UnsupportedField, "characteristic must be below 2^31");
  q_ = 1;
  for (unsigned i = 0; i < m; ++i) {
    if (q_ > (std::uint64_t(1) << 32) / p) throw Error(Errc::UnsupportedField, "extension field order must be at most 2^32");
    q_ *= p;
  }
  modulus_ = find_irreducible(p, m);
  if (m > 1 && q_ <= kTableLimit) {
    build_tables();
    return;
  }
  const std::uint64_t group = q_ - 1;
  auto factors = distinct_prime_factors(group);
  for (Code g = (m == 1 ? 1 : p); g < q_; ++g) {
    bool ok = g != 0;
    for (auto r : factors) {
      if (!ok) break;
      if (pow(g, group / r) == 1) ok = false;
    }
    if (ok) {
      primitive_ = g;
      break;
    }
  }
}

void FiniteField::build_tables() {
  exp_.assign(q_ - 1, 0);
  log_.assign(q_, kNoLog);
  for (Code g = p_; g < q_; ++g) {
    Code x = 1;
    std::uint64_t k = 0;
    bool ok = true;
    do {
      if (k >= q_ - 1) {
        ok = false;
        break;
      }
      exp_[k++] = static_cast<std::uint32_t>(x);
      x = mul_slow(x, g);
    } while (x != 1);
    if (ok && k == q_ - 1) {
      primitive_ = g;
      break;
    }
  }
  for (std::uint64_t k = 0; k + 1 < q_; ++k) log_[exp_[k]] = static_cast<std::uint32_t>(k);
  zech_.assign(q_ - 1, kNoLog);
  for (std::uint64_t k = 0; k + 1 < q_; ++k) {
    // 1 + w^k computed digitwise: only the constant digit changes.
    Code v = exp_[k];
    Code c0 = v % p_;
    Code s = v - c0 + (c0 + 1) % p_;
    zech_[k] = s == 0 ? kNoLog : log_[s];
  }
}

Code FiniteField::add_ext(Code a, Code b) const noexcept {
  if (!zech_.empty()) {
    if (a == 0) return b;
    if (b == 0) return a;
    std::uint64_t la = log_[a], lb = log_[b];
    std::uint64_t k = lb >= la ? lb - la : lb + (q_ - 1) - la;
    std::uint32_t z = zech_[k];
    if (z == kNoLog) return 0;
    std::uint64_t r = la + z;
    if (r >= q_ - 1) r -= q_ - 1;
    return exp_[r];
  }
  if (p_ == 2) return a ^ b;
  Code out = 0, scale = 1;
  for (unsigned i = 0; i < m_; ++i) {
    out += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return out;
}

Code FiniteField::neg_ext(Code a) const noexcept {
  if (p_ == 2) return a;
  Code out = 0, scale = 1;
  for (unsigned i = 0; i < m_; ++i) {
    out += ((p_ - a % p_) % p_) * scale;
    a /= p_;
    scale *= p_;
  }
  return out;
}

Code FiniteField::mul_slow(Code a, Code b) const noexcept {
  Poly pa = digits(a), pb = digits(b);
  return from_digits(poly_mulmod(pa, pb, modulus_, p_));
}

Code FiniteField::inv(Code a) const {
  if (a == 0) throw Error(Errc::DivisionByZero, "inverse of zero in " + spec());
  if (m_ == 1) {
    // Extended Euclid on signed values.
    std::int64_t t = 0, new_t = 1;
    std::int64_t r = static_cast<std::int64_t>(p_), new_r = static_cast<std::int64_t>(a);
    while (new_r != 0) {
      std::int64_t quot = r / new_r;
      std::int64_t tmp = t - quot * new_t;
      t = new_t;
      new_t = tmp;
      tmp = r - quot * new_r;
      r = new_r;
      new_r = tmp;
    }
    if (t < 0) t += static_cast<std::int64_t>(p_);
    return static_cast<Code>(t);
  }
  if (!log_.empty()) {
    std::uint64_t l = log_[a];
    return exp_[l == 0 ? 0 : (q_ - 1) - l];
  }
  return pow(a, q_ - 2);
}

Code FiniteField::pow(Code a, std::uint64_t e) const noexcept {
  Code r = 1;
  while (e) {
    if (e & 1) r = mul(r, a);
    a = mul(a, a);
    e >>= 1;
  }
  return r;
}

Code FiniteField::from_integer(const BigInt& v) const {
  BigInt r;
  mpz_fdiv_r_ui(r.get_mpz_t(), v.get_mpz_t(), static_cast<unsigned long>(p_));
  return r.get_ui();
}

Code FiniteField::from_int(std::int64_t v) const {
  std::int64_t r = v % static_cast<std::int64_t>(p_);
  if (r < 0) r += static_cast<std::int64_t>(p_);
  return static_cast<Code>(r);
}

std::vector<std::uint64_t> FiniteField::digits(Code c) const {
  std::vector<std::uint64_t> d(m_, 0);
  for (unsigned i = 0; i < m_; ++i) {
    d[i] = c % p_;
    c /= p_;
  }
  trim_poly(d);
  return d;
}

Code FiniteField::from_digits(const std::vector<std::uint64_t>& d) const {
  Code c = 0;
  for (std::size_t i = d.size(); i-- > 0;) c = c * p_ + d[i] % p_;
  return c;
}

std::string FiniteField::format(Code c) const {
  if (m_ == 1) return std::to_string(c);
  if (c == 0) return "0";
  auto d = digits(c);
  std::string out;
  for (std::size_t k = d.size(); k-- > 0;) {
    if (d[k] == 0) continue;
    if (!out.empty()) out += "+";
    if (k == 0) {
      out += std::to_string(d[k]);
      continue;
    }
    if (d[k] != 1) out += std::to_string(d[k]) + "*";
    out += k == 1 ? "a" : "a^" + std::to_string(k);
  }
  return out;
}

std::string FiniteField::spec() const {
  if (m_ == 1) return "GF(" + std::to_string(p_) + ")";
  return "GF(" + std::to_string(p_) + "^" + std::to_string(m_) + ")";
}

// ---------------------------------------------------------------------------
// Embeddings

const FieldEmbedding& FieldEmbedding::get(const FiniteField& from, const FiniteField& to) {
  static std::mutex mutex;
  static std::map<std::pair<const FiniteField*, const FiniteField*>, std::unique_ptr<FieldEmbedding>> registry;
  std::lock_guard<std::mutex> lock(mutex);
  auto key = std::make_pair(&from, &to);
  auto it = registry.find(key);
  if (it != registry.end()) return *it->second;
  std::unique_ptr<FieldEmbedding> e(new FieldEmbedding(from, to));
  return *registry.emplace(key, std::move(e)).first->second;
}

FieldEmbedding::FieldEmbedding(const FiniteField& from, const FiniteField& to) : from_(&from), to_(&to) {
  if (from.characteristic() != to.characteristic() || to.degree() % from.degree() != 0)
    throw Error(Errc::FieldMismatch, "no embedding " + from.spec() + " -> " + to.spec());
  if (from.degree() == 1) return;
  if (to.order() > kTableLimit * 16) throw Error(Errc::UnsupportedField, "embedding target too large: " + to.spec());
  const auto& mod = from.modulus();
  bool found = false;
  for (Code c = 0; c < to.order() && !found; ++c) {
    Code acc = 0;
    for (std::size_t k = mod.size(); k-- > 0;) acc = to.add(to.mul(acc, c), mod[k]);
    if (acc == 0) {
      root_ = c;
      found = true;
    }
  }
  if (!found) throw Error(Errc::Internal, "modulus has no root in " + to.spec());
  if (from.order() <= kTableLimit) {
    table_.resize(from.order());
    for (Code c = 0; c < from.order(); ++c) {
      auto d = from.digits(c);
      Code acc = 0;
      for (std::size_t k = d.size(); k-- > 0;) acc = to.add(to.mul(acc, root_), d[k]);
      table_[c] = acc;
    }
  }
}

Code FieldEmbedding::map(Code c) const {
  if (from_->degree() == 1) return c;
  if (!table_.empty()) return table_[c];
  auto d = from_->digits(c);
  Code acc = 0;
  for (std::size_t k = d.size(); k-- > 0;) acc = to_->add(to_->mul(acc, root_), d[k]);
  return acc;
}

// ---------------------------------------------------------------------------
// Field handles and elements

const FiniteField& Field::ff() const {
  if (!ff_) throw Error(Errc::UnsupportedField, "QQ is not a finite field");
  return *ff_;
}

Field field_of_order(std::uint64_t q) {
  auto bad = [&]() { return Error(Errc::InvalidInput, "field order must be a prime power, got " + std::to_string(q)); };
  if (q < 2) throw bad();
  std::uint64_t p = q;
  for (std::uint64_t c = 2; c * c <= q; ++c)
    if (q % c == 0) {
      p = c;
      break;
    }
  unsigned m = 0;
  for (std::uint64_t r = q; r > 1; r /= p, ++m)
    if (r % p != 0) throw bad();
  return Field::finite(p, m);
}

Field parse_field(std::string_view spec) {
  std::string_view s = trim(spec);
  if (s == "QQ") return Field::rationals();
  auto bad = [&]() { return Error(Errc::InvalidInput, "bad field spec '" + std::string(spec) + "' (want QQ, GF(q) or GF(p^m))"); };
  if (s.size() < 5 || s.substr(0, 3) != "GF(" || s.back() != ')') throw bad();
  std::string_view inner = trim(s.substr(3, s.size() - 4));
  std::string_view p_text = inner, m_text;
  auto caret = inner.find('^');
  if (caret != std::string_view::npos) {
    p_text = trim(inner.substr(0, caret));
    m_text = trim(inner.substr(caret + 1));
  }
  auto all_digits = [](std::string_view t) {
    return !t.empty() && t.size() <= 18 && std::all_of(t.begin(), t.end(), [](char c) { return std::isdigit(static_cast<unsigned char>(c)); });
  };
  if (!all_digits(p_text) || (caret != std::string_view::npos && !all_digits(m_text))) throw bad();
  std::uint64_t p = std::stoull(std::string(p_text));
  unsigned long long m = caret == std::string_view::npos ? 1 : std::stoull(std::string(m_text));
  if (caret == std::string_view::npos && !is_prime(p)) return field_of_order(p);
  if (!is_prime(p)) throw Error(Errc::InvalidInput, "field characteristic " + std::to_string(p) + " is not prime");
  if (m < 1 || m > 64) throw Error(Errc::InvalidInput, "extension degree out of range in '" + std::string(spec) + "'");
  return Field::finite(p, static_cast<unsigned>(m));
}

Field extension_of(const Field& base, unsigned e) {
  const auto& ff = base.ff();
  return Field::finite(ff.characteristic(), ff.degree() * e);
}

FieldElement::FieldElement(const Field& field, Code code) : field_(field), value_(code) {
  if (field.is_rational()) value_ = Rational(static_cast<unsigned long>(code));
}

FieldElement FieldElement::zero(const Field& field) { return field.is_rational() ? FieldElement(Rational(0)) : FieldElement(field, 0); }
FieldElement FieldElement::one(const Field& field) { return field.is_rational() ? FieldElement(Rational(1)) : FieldElement(field, 1); }

FieldElement FieldElement::from_integer(const Field& field, const BigInt& v) {
  if (field.is_rational()) return FieldElement(Rational(v));
  return FieldElement(field, field.ff().from_integer(v));
}

FieldElement FieldElement::from_int(const Field& field, std::int64_t v) {
  if (field.is_rational()) return FieldElement(Rational(static_cast<long>(v)));
  return FieldElement(field, field.ff().from_int(v));
}

bool FieldElement::is_zero() const noexcept {
  if (auto c = std::get_if<Code>(&value_)) return *c == 0;
  return std::get<Rational>(value_) == 0;
}

bool FieldElement::is_one() const noexcept {
  if (auto c = std::get_if<Code>(&value_)) return *c == 1;
  return std::get<Rational>(value_) == 1;
}

Code FieldElement::code() const {
  if (auto c = std::get_if<Code>(&value_)) return *c;
  throw Error(Errc::UnsupportedField, "rational element has no residue code");
}

const Rational& FieldElement::rational() const {
  if (auto r = std::get_if<Rational>(&value_)) return *r;
  throw Error(Errc::UnsupportedField, "finite field element is not rational");
}

void FieldElement::check_same_field(const FieldElement& o) const {
  if (field_ != o.field_) throw Error(Errc::FieldMismatch, "cannot combine " + field_.spec() + " and " + o.field_.spec());
}

FieldElement FieldElement::operator+(const FieldElement& o) const {
  check_same_field(o);
  if (field_.is_rational()) return FieldElement(Rational(rational() + o.rational()));
  return FieldElement(field_, field_.ff().add(code(), o.code()));
}

FieldElement FieldElement::operator-(const FieldElement& o) const {
  check_same_field(o);
  if (field_.is_rational()) return FieldElement(Rational(rational() - o.rational()));
  return FieldElement(field_, field_.ff().sub(code(), o.code()));
}

FieldElement FieldElement::operator*(const FieldElement& o) const {
  check_same_field(o);
  if (field_.is_rational()) return FieldElement(Rational(rational() * o.rational()));
  return FieldElement(field_, field_.ff().mul(code(), o.code()));
}

FieldElement FieldElement::operator/(const FieldElement& o) const {
  check_same_field(o);
  return *this * o.inverse();
}

FieldElement FieldElement::operator-() const {
  if (field_.is_rational()) return FieldElement(Rational(-rational()));
  return FieldElement(field_, field_.ff().neg(code()));
}

FieldElement FieldElement::inverse() const {
  if (is_zero()) throw Error(Errc::DivisionByZero, "inverse of zero in " + field_.spec());
  if (field_.is_rational()) return FieldElement(Rational(1 / rational()));
  return FieldElement(field_, field_.ff().inv(code()));
}

FieldElement FieldElement::pow(std::uint64_t e) const {
  if (field_.is_finite()) return FieldElement(field_, field_.ff().pow(code(), e));
  Rational r = 1, b = rational();
  while (e) {
    if (e & 1) r *= b;
    b *= b;
    e >>= 1;
  }
  return FieldElement(r);
}

bool FieldElement::operator==(const FieldElement& o) const {
  if (field_ != o.field_) return false;
  return value_ == o.value_;
}

std::string FieldElement::to_string() const {
  if (field_.is_rational()) return format_rational(rational());
  return field_.ff().format(code());
}

FieldElement field_inverse(const FieldElement& a) { return a.inverse(); }

FieldElement embed(const FieldElement& x, const Field& to) {
  if (x.field() == to) return x;
  if (x.field().is_rational() || to.is_rational())
    throw Error(Errc::FieldMismatch, "cannot embed " + x.field().spec() + " into " + to.spec());
  return FieldElement(to, FieldEmbedding::get(x.field().ff(), to.ff()).map(x.code()));
}

}  // namespace cibound
