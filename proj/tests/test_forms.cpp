#include <doctest.h>

#include <cstdlib>
#include <fstream>
#include <random>
#include <sstream>

#include "forms.hpp"

using namespace cibound;

namespace {

Matrix random_matrix(std::size_t n, const Field& f, std::mt19937_64& rng) {
  Matrix a(n, n, f);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) a(i, j) = FieldElement(f, rng() % f.ff().order());
  return a;
}

std::vector<FieldElement> random_point(std::size_t n, const Field& f, std::mt19937_64& rng) {
  std::vector<FieldElement> x;
  for (std::size_t i = 0; i < n; ++i) x.emplace_back(f, rng() % f.ff().order());
  return x;
}

// Direct evaluation: sum over terms of c * prod x_i^e_i, written without the
// library's evaluate().
FieldElement eval_direct(const HomogeneousForm& f, const std::vector<FieldElement>& x) {
  FieldElement acc = FieldElement::zero(x[0].field());
  for (const auto& [e, c] : f.terms()) {
    FieldElement t = c;
    for (std::size_t i = 0; i < e.size(); ++i)
      for (int k = 0; k < e[i]; ++k) t = t * x[i];
    acc = acc + t;
  }
  return acc;
}

}  // namespace

TEST_CASE("monomial basis is graded-lex descending") {
  const auto b = monomial_basis(2, 2);
  REQUIRE(b.size() == 6);
  CHECK(b[0] == Exponents{2, 0, 0});
  CHECK(b[1] == Exponents{1, 1, 0});
  CHECK(b[2] == Exponents{1, 0, 1});
  CHECK(b[3] == Exponents{0, 2, 0});
  CHECK(b[5] == Exponents{0, 0, 2});
  for (int n = 1; n <= 4; ++n)
    for (int d = 0; d <= 5; ++d) CHECK(monomial_basis(n, d).size() == monomial_count(n, d));
}

TEST_CASE("evaluate examples") {
  const Field f5 = Field::finite(5), f7 = Field::finite(7);
  const HomogeneousForm zero(2, 3, f5);
  std::vector<FieldElement> ones(3, FieldElement::one(f5));
  CHECK(evaluate(zero, ones).is_zero());
  CHECK(evaluate(parse_form("x0*x1 - x2^2", 2, f5), ones).is_zero());
  std::vector<FieldElement> ones7(3, FieldElement::one(f7));
  CHECK(evaluate(parse_form("x0^3 + x1^3 + x2^3", 2, f7), ones7) == FieldElement(f7, 3));
  std::vector<FieldElement> wrong(3, FieldElement::one(f5));
  CHECK_THROWS_AS(evaluate(parse_form("x0^3", 2, f7), wrong), Error);
  CHECK_THROWS_AS(evaluate(parse_form("x0^3", 2, f7), std::vector<FieldElement>(2, FieldElement::one(f7))), Error);
}

TEST_CASE("evaluate accepts points in an extension") {
  const Field f3 = Field::finite(3), f9 = Field::finite(3, 2);
  const HomogeneousForm f = parse_form("x0^2 + x1^2", 1, f3);
  // a^2 = -1 in GF(9) = GF(3)[a]/(a^2+1), so (1 : a) is a zero.
  std::vector<FieldElement> pt{FieldElement::one(f9), FieldElement(f9, 3)};
  CHECK(evaluate(f, pt).is_zero());
}

TEST_CASE("partial derivatives") {
  const Field f5 = Field::finite(5), qq = Field::rationals();
  CHECK(partial_derivative(parse_form("x0^5", 1, f5), 0).is_zero());
  CHECK(partial_derivative(parse_form("x0^2*x1", 1, qq), 1) == parse_form("x0^2", 1, qq));
  CHECK(partial_derivative(parse_form("x0^3*x1", 1, qq), 0) == parse_form("3*x0^2*x1", 1, qq));
  CHECK_THROWS_AS(partial_derivative(parse_form("x0^3*x1", 1, qq), 2), Error);
}

TEST_CASE("substitution examples") {
  const Field qq = Field::rationals();
  const HomogeneousForm f = parse_form("x0*x1", 1, qq);
  CHECK(substitute_linear(f, Matrix::identity(2, qq)) == f);
  CHECK(substitute_linear(parse_form("x0^2", 1, qq), Matrix::from_ints({{0, 1}, {1, 0}}, qq)) == parse_form("x1^2", 1, qq));
  CHECK(substitute_linear(f, Matrix::from_ints({{1, 1}, {0, 1}}, qq)) == parse_form("x0*x1 + x1^2", 1, qq));
  CHECK_THROWS_AS(substitute_linear(f, Matrix::identity(2, Field::finite(5))), Error);
}

TEST_CASE("jacobian rank examples") {
  const Field f7 = Field::finite(7);
  FormTuple lin({parse_form("x0 + 2*x2", 2, f7)});
  CHECK(jacobian_rank_at(lin, std::vector<FieldElement>{FieldElement(f7, 1), FieldElement(f7, 2), FieldElement(f7, 3)}) == 1);
  FormTuple fermat({parse_form("x0^3 + x1^3 + x2^3", 2, f7)});
  CHECK(jacobian_rank_at(fermat, std::vector<FieldElement>{FieldElement(f7, 1), FieldElement(f7, 6), FieldElement(f7, 0)}) == 1);
  FormTuple squares({parse_form("x0^2", 2, f7), parse_form("x1^2", 2, f7)});
  CHECK(jacobian_rank_at(squares, std::vector<FieldElement>{FieldElement(f7, 0), FieldElement(f7, 0), FieldElement(f7, 1)}) == 0);
  CHECK_THROWS_AS(jacobian_rank_at(squares, std::vector<FieldElement>(3, FieldElement(f7, 0))), Error);
}

TEST_CASE("parser accepts the grammar and rejects bad input") {
  const Field f5 = Field::finite(5), qq = Field::rationals();
  const HomogeneousForm conic = parse_form("x0^2 + x1^2 + x2^2", 2, f5);
  CHECK(conic.degree() == 2);
  CHECK(conic.terms().size() == 3);
  const HomogeneousForm klein = parse_form("x0^3*x1 + x1^3*x2 + x2^3*x0", 2, f5);
  CHECK(klein.degree() == 4);
  CHECK(parse_form("  x0 ^ 3 *x1-x1*x0^3 + 2 x2^4", 2, f5) == parse_form("2*x2^4", 2, f5));
  CHECK(parse_form("(x0 + x1)^2", 1, qq) == parse_form("x0^2 + 2*x0*x1 + x1^2", 1, qq));
  CHECK(parse_form("1/2*x0 - 3/4 x1", 1, qq).coefficient({0, 1}) == FieldElement(Rational(-3, 4)));
  CHECK(parse_form("x0 - x0", 1, f5, 1).is_zero());

  try {
    parse_form("x0 + x1^2", 1, f5);
    FAIL("expected InhomogeneousError");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::InhomogeneousError);
    CHECK(std::string(e.what()).find('1') != std::string::npos);
    CHECK(std::string(e.what()).find('2') != std::string::npos);
  }
  try {
    parse_form("x0^2 + * x1^2", 1, f5);
    FAIL("expected SyntaxError");
  } catch (const SyntaxError& e) {
    CHECK(e.code() == Errc::SyntaxError);
    CHECK(e.position() == 7);
  }
  CHECK_THROWS_AS(parse_form("x3^2", 2, f5), Error);
  CHECK_THROWS_AS(parse_form("", 2, f5), Error);
  CHECK_THROWS_AS(parse_form("a*x0", 1, f5), Error);
  CHECK_THROWS_AS(parse_form("x0^2 + x1^2)", 1, f5), Error);
}

TEST_CASE("format examples") {
  const Field f5 = Field::finite(5), qq = Field::rationals(), f9 = Field::finite(3, 2);
  CHECK(format_form(parse_form("x2^2 + x0^2 - x1*x0", 2, f5)) == "x0^2 + 4*x0*x1 + x2^2");
  CHECK(format_form(parse_form("x2^2 - 3/2*x0^2", 2, qq)) == "-3/2*x0^2 + x2^2");
  CHECK(format_form(parse_form("x0 - x1", 1, qq)) == "x0 - x1");
  CHECK(format_form(parse_form("a*x0^2 + x1^2", 1, f9)) == "a*x0^2 + x1^2");
  CHECK(format_form(parse_form("(a+1)*x0^2", 1, f9)) == "(a+1)*x0^2");
  CHECK(format_form(HomogeneousForm(1, 2, f5)) == "0");
}

TEST_CASE("parse(format(f)) = f on random forms") {
  std::mt19937_64 rng(21);
  for (const Field& field : {Field::finite(2), Field::finite(7), Field::finite(3, 2), Field::finite(2, 3)}) {
    for (int i = 0; i < 40; ++i) {
      const int n = 1 + static_cast<int>(rng() % 3), d = 1 + static_cast<int>(rng() % 4);
      const HomogeneousForm f = random_form(n, d, field, rng);
      if (f.is_zero()) continue;
      CHECK(parse_form(format_form(f), n, field) == f);
    }
  }
  std::mt19937_64 r2(4);
  for (int i = 0; i < 30; ++i) {
    HomogeneousForm f(2, 3, Field::rationals());
    for (const auto& e : monomial_basis(2, 3))
      if (r2() % 2) f.add_term(e, FieldElement(Rational(static_cast<long>(r2() % 21) - 10, static_cast<long>(r2() % 5) + 1)));
    if (f.is_zero()) continue;
    CHECK(parse_form(format_form(f), 2, Field::rationals()) == f);
  }
}

TEST_CASE("random_form contract") {
  const Field f5 = Field::finite(5);
  const HomogeneousForm a = random_form(2, 3, f5, 42), b = random_form(2, 3, f5, 42);
  CHECK(a == b);
  CHECK(a.degree() == 3);
  CHECK_THROWS_AS(random_form(2, 3, Field::rationals(), 1), Error);

  const char* dir = std::getenv("CIBOUND_TEST_DATA");
  REQUIRE(dir != nullptr);
  std::ifstream in(std::string(dir) + "/random_form_n2_d3_gf5_seed42.txt");
  REQUIRE(in.good());
  std::string golden;
  std::getline(in, golden);
  CHECK(format_form(a) == golden);
}

TEST_CASE("right action law") {
  std::mt19937_64 rng(7);
  for (const Field& field : {Field::finite(5), Field::finite(2, 2), Field::finite(11)}) {
    for (int i = 0; i < 25; ++i) {
      const int n = 1 + static_cast<int>(rng() % 3);
      const HomogeneousForm f = random_form(n, 1 + static_cast<int>(rng() % 4), field, rng);
      const Matrix a = random_matrix(n + 1, field, rng), b = random_matrix(n + 1, field, rng);
      CHECK(substitute_linear(substitute_linear(f, a), b) == substitute_linear(f, a * b));
    }
  }
}

TEST_CASE("evaluate(f o A, x) = evaluate(f, A x)") {
  std::mt19937_64 rng(8);
  const Field f = Field::finite(13);
  for (int i = 0; i < 50; ++i) {
    const int n = 1 + static_cast<int>(rng() % 3);
    const HomogeneousForm g = random_form(n, 2 + static_cast<int>(rng() % 3), f, rng);
    const Matrix a = random_matrix(n + 1, f, rng);
    const auto x = random_point(n + 1, f, rng);
    CHECK(eval_direct(substitute_linear(g, a), x) == eval_direct(g, a.apply(x)));
    CHECK(evaluate(g, x) == eval_direct(g, x));
  }
}

TEST_CASE("Euler identity when char does not divide d") {
  std::mt19937_64 rng(10);
  for (const Field& field : {Field::finite(7), Field::finite(3, 2), Field::finite(5)}) {
    for (int i = 0; i < 20; ++i) {
      const int n = 1 + static_cast<int>(rng() % 3);
      int d = 2 + static_cast<int>(rng() % 4);
      if (d % static_cast<int>(field.characteristic()) == 0) ++d;
      const HomogeneousForm f = random_form(n, d, field, rng);
      HomogeneousForm sum(n, d, field);
      for (int j = 0; j <= n; ++j) {
        Exponents e(n + 1, 0);
        e[j] = 1;
        sum = sum + partial_derivative(f, j).shifted(e);
      }
      CHECK(sum == f.scaled(FieldElement::from_int(field, d)));
    }
  }
}

TEST_CASE("chain rule") {
  std::mt19937_64 rng(12);
  const Field field = Field::finite(11);
  for (int i = 0; i < 20; ++i) {
    const int n = 1 + static_cast<int>(rng() % 2);
    const HomogeneousForm f = random_form(n, 3, field, rng);
    const Matrix a = random_matrix(n + 1, field, rng);
    for (int j = 0; j <= n; ++j) {
      HomogeneousForm rhs(n, 2, field);
      for (int k = 0; k <= n; ++k) rhs = rhs + substitute_linear(partial_derivative(f, k), a).scaled(a(k, j));
      CHECK(partial_derivative(substitute_linear(f, a), j) == rhs);
    }
  }
}

TEST_CASE("form tuples validate their members") {
  const Field f5 = Field::finite(5);
  CHECK_THROWS_AS(FormTuple(std::vector<HomogeneousForm>{}), Error);
  CHECK_THROWS_AS(FormTuple({parse_form("x0", 1, f5), parse_form("x0^2", 2, f5)}), Error);
  CHECK_THROWS_AS(FormTuple({parse_form("x0", 1, f5), parse_form("x1", 1, Field::finite(7))}), Error);
  CHECK_THROWS_AS(FormTuple({parse_form("x0", 1, f5), parse_form("x1", 1, f5), parse_form("x0+x1", 1, f5)}), Error);
  const FormTuple t({parse_form("x0*x1", 2, f5), parse_form("x2^3", 2, f5)});
  CHECK(t.multidegree() == std::vector<int>{2, 3});
  CHECK(t.to_string() == "x0*x1; x2^3");
}
