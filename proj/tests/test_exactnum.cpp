#include <doctest.h>

#include <random>

#include "exactnum.hpp"

using namespace cibound;

namespace {

// Independent arithmetic in GF(p)[t]/(modulus) on coefficient vectors, used as
// the oracle for the code-level field operations.
std::vector<std::uint64_t> poly_mul_mod(const std::vector<std::uint64_t>& a, const std::vector<std::uint64_t>& b,
                                        const std::vector<std::uint64_t>& modulus, std::uint64_t p) {
  const std::size_t m = modulus.size() - 1;
  std::vector<std::uint64_t> prod(2 * m, 0);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < m; ++j) prod[i + j] = (prod[i + j] + a[i] * b[j]) % p;
  for (std::size_t k = 2 * m - 1; k >= m; --k) {
    const std::uint64_t c = prod[k];
    if (c == 0) continue;
    for (std::size_t i = 0; i <= m; ++i) prod[k - m + i] = (prod[k - m + i] + (p - c) * modulus[i]) % p;
  }
  prod.resize(m);
  return prod;
}

bool irreducible_by_search(const std::vector<std::uint64_t>& f, std::uint64_t p) {
  // No monic factor of degree 1..deg/2, by trial division over all candidates.
  const std::size_t m = f.size() - 1;
  for (std::size_t k = 1; k <= m / 2; ++k) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < k; ++i) count *= p;
    for (std::uint64_t code = 0; code < count; ++code) {
      std::vector<std::uint64_t> g(k + 1);
      std::uint64_t c = code;
      for (std::size_t i = 0; i < k; ++i, c /= p) g[i] = c % p;
      g[k] = 1;
      std::vector<std::uint64_t> r = f;
      for (std::size_t top = m; top >= k; --top) {
        const std::uint64_t lead = r[top];
        if (lead)
          for (std::size_t i = 0; i <= k; ++i) r[top - k + i] = (r[top - k + i] + (p - lead) * g[i]) % p;
        if (top == k) break;
      }
      bool zero = true;
      for (std::size_t i = 0; i < k; ++i) zero = zero && r[i] == 0;
      if (zero) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("field inverse examples") {
  const Field f7 = Field::finite(7);
  CHECK(field_inverse(FieldElement(f7, 1)) == FieldElement(f7, 1));
  CHECK(field_inverse(FieldElement(f7, 3)) == FieldElement(f7, 5));
  CHECK(field_inverse(FieldElement(Rational(2, 3))) == FieldElement(Rational(3, 2)));
  CHECK_THROWS_AS(field_inverse(FieldElement(f7, 0)), Error);
  try {
    field_inverse(FieldElement::zero(Field::rationals()));
  } catch (const Error& e) {
    CHECK(e.code() == Errc::DivisionByZero);
  }
}

TEST_CASE("find_irreducible examples and determinism") {
  CHECK(find_irreducible(2, 1) == std::vector<std::uint64_t>{0, 1});
  CHECK(find_irreducible(3, 2) == std::vector<std::uint64_t>{1, 0, 1});
  CHECK(find_irreducible(2, 3) == std::vector<std::uint64_t>{1, 1, 0, 1});
  for (auto [p, m] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 2}, {2, 4}, {2, 5}, {3, 3}, {5, 2}, {7, 3}, {3, 4}}) {
    const auto f = find_irreducible(p, m);
    CHECK(f == find_irreducible(p, m));
    REQUIRE(f.size() == m + 1);
    CHECK(f.back() == 1);
    CHECK(irreducible_by_search(f, p));
  }
}

TEST_CASE("prime_to_p_part") {
  CHECK(prime_to_p_part(35, 2) == 35);
  CHECK(prime_to_p_part(18144, 3) == 224);
  CHECK(prime_to_p_part(6048, 3) == 224);
  CHECK(prime_to_p_part(1, 2) == 1);
  CHECK_THROWS_AS(prime_to_p_part(0, 2), Error);
  CHECK_THROWS_AS(prime_to_p_part(-4, 2), Error);
  CHECK_THROWS_AS(prime_to_p_part(12, 4), Error);

  std::mt19937_64 rng(11);
  for (int i = 0; i < 200; ++i) {
    BigInt n = 0;
    for (int w = 0; w < 2; ++w) n = (n << 64) + BigInt(static_cast<unsigned long>(rng()));
    n += 1;
    for (std::uint64_t p : {2, 3, 5, 7, 101}) {
      const BigInt r = prime_to_p_part(n, p);
      BigInt pv;
      mpz_ui_pow_ui(pv.get_mpz_t(), p, p_valuation(n, p));
      CHECK(r * pv == n);
      CHECK(r % p != 0);
    }
  }
}

TEST_CASE("rational parse and format round-trip") {
  CHECK(parse_rational("6/4") == Rational(3, 2));
  CHECK(format_rational(Rational(-3, 2)) == "-3/2");
  CHECK(format_rational(Rational(4)) == "4");
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("abc"), Error);
  std::mt19937_64 rng(3);
  for (int i = 0; i < 200; ++i) {
    Rational x(static_cast<long>(rng() % 2001) - 1000, static_cast<long>(rng() % 999) + 1);
    x.canonicalize();
    CHECK(parse_rational(format_rational(x)) == x);
  }
}

TEST_CASE("field specs") {
  CHECK(parse_field("QQ").is_rational());
  CHECK(parse_field("GF(7)") == Field::finite(7));
  CHECK(parse_field("GF(3^2)") == Field::finite(3, 2));
  CHECK(parse_field("GF(9)") == Field::finite(3, 2));
  CHECK(parse_field(" GF( 2 ^ 3 ) ") == Field::finite(2, 3));
  CHECK(Field::finite(3, 2).spec() == "GF(3^2)");
  CHECK_THROWS_AS(parse_field("GF(6)"), Error);
  CHECK_THROWS_AS(parse_field("GF(4^2)"), Error);
  CHECK_THROWS_AS(parse_field("GF(7"), Error);
  CHECK_THROWS_AS(parse_field("ZZ"), Error);
  CHECK(&FiniteField::get(5, 2) == &FiniteField::get(5, 2));
}

TEST_CASE("field mixing is an error") {
  const FieldElement a(Field::finite(3), 1), b(Field::finite(3, 2), 1), c(Rational(1));
  try {
    (void)(a + b);
    FAIL("expected FieldMismatch");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::FieldMismatch);
  }
  CHECK_THROWS_AS((void)(a * c), Error);
}

TEST_CASE("extension field arithmetic matches polynomial arithmetic") {
  std::mt19937_64 rng(5);
  for (auto [p, m] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 3}, {3, 2}, {5, 3}, {2, 8}, {2, 22}, {3, 14}}) {
    const FiniteField& f = FiniteField::get(p, m);
    for (int i = 0; i < 200; ++i) {
      const Code a = rng() % f.order(), b = rng() % f.order();
      const auto da = f.digits(a), db = f.digits(b);
      std::vector<std::uint64_t> sum(m);
      for (unsigned k = 0; k < m; ++k) sum[k] = (da[k] + db[k]) % p;
      CHECK(f.add(a, b) == f.from_digits(sum));
      CHECK(f.mul(a, b) == f.from_digits(poly_mul_mod(da, db, f.modulus(), p)));
      CHECK(f.sub(f.add(a, b), b) == a);
    }
  }
}

TEST_CASE("field properties on random elements") {
  std::mt19937_64 rng(9);
  for (const Field& field : {Field::finite(2), Field::finite(101), Field::finite(2, 4), Field::finite(3, 2), Field::finite(7, 3),
                             Field::finite(2, 22), Field::rationals()}) {
    for (int i = 0; i < 100; ++i) {
      auto draw = [&]() {
        if (field.is_rational()) return FieldElement(Rational(static_cast<long>(rng() % 41) - 20, static_cast<long>(rng() % 9) + 1));
        return FieldElement(field, rng() % field.ff().order());
      };
      const FieldElement a = draw(), b = draw(), c = draw();
      CHECK((a * b) * c == a * (b * c));
      CHECK(a * (b + c) == a * b + a * c);
      if (!b.is_zero()) CHECK((a * b) * b.inverse() == a);
      if (field.is_finite()) CHECK(a.pow(field.ff().order()) == a);
    }
  }
}

TEST_CASE("primitive element generates the multiplicative group") {
  for (auto [p, m] : std::vector<std::pair<std::uint64_t, unsigned>>{{2, 1}, {5, 1}, {3, 2}, {2, 4}, {7, 2}}) {
    const FiniteField& f = FiniteField::get(p, m);
    Code x = 1;
    std::uint64_t order = 0;
    do {
      x = f.mul(x, f.primitive());
      ++order;
    } while (x != 1);
    CHECK(order == f.order() - 1);
  }
}

TEST_CASE("embeddings are ring homomorphisms fixing the prime field") {
  std::mt19937_64 rng(2);
  for (auto [p, m, e] : std::vector<std::tuple<std::uint64_t, unsigned, unsigned>>{{2, 2, 2}, {3, 2, 3}, {2, 1, 5}, {5, 1, 2}, {2, 3, 2}}) {
    const FiniteField& from = FiniteField::get(p, m);
    const FiniteField& to = FiniteField::get(p, m * e);
    const FieldEmbedding& emb = FieldEmbedding::get(from, to);
    for (Code c = 0; c < p; ++c) CHECK(emb.map(c) == c);
    for (int i = 0; i < 100; ++i) {
      const Code a = rng() % from.order(), b = rng() % from.order();
      CHECK(emb.map(from.mul(a, b)) == to.mul(emb.map(a), emb.map(b)));
      CHECK(emb.map(from.add(a, b)) == to.add(emb.map(a), emb.map(b)));
    }
  }
}

TEST_CASE("element formatting") {
  const Field f9 = Field::finite(3, 2);
  CHECK(FieldElement(f9, 0).to_string() == "0");
  CHECK(FieldElement(f9, 2).to_string() == "2");
  CHECK(FieldElement(f9, 3).to_string() == "a");
  CHECK(FieldElement(f9, 7).to_string() == "2*a+1");
  CHECK(FieldElement::from_int(Field::finite(7), -1).to_string() == "6");
}
