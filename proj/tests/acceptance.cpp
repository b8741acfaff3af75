// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit on failure.

#include <chrono>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <random>
#include <sstream>
#include <string>

#include "bounds.hpp"
#include "commands.hpp"
#include "grouporbit.hpp"
#include "resultant.hpp"
#include "tangent.hpp"

using namespace cibound;

namespace {

struct Result {
  bool ok = true;
  std::string detail;
};

HomogeneousForm nonzero_form(int n, int d, const Field& f, std::mt19937_64& rng) {
  while (true) {
    HomogeneousForm h = random_form(n, d, f, rng);
    if (!h.is_zero()) return h;
  }
}

HomogeneousForm smooth_form(int n, int d, const Field& f, std::mt19937_64& rng) {
  while (true) {
    HomogeneousForm h = nonzero_form(n, d, f, rng);
    if (is_singular(FormTuple({h}), 4).status == Smoothness::Smooth) return h;
  }
}

FieldElement sylvester(const HomogeneousForm& f, const HomogeneousForm& g) {
  const int a = f.degree(), b = g.degree(), size = a + b;
  Matrix m(size, size, f.field());
  for (int i = 0; i < b; ++i)
    for (const auto& [e, c] : f.terms()) m(i, i + e[1]) = c;
  for (int i = 0; i < a; ++i)
    for (const auto& [e, c] : g.terms()) m(b + i, i + e[1]) = c;
  return determinant(m);
}

Result specialization() {
  for (int d = 3; d <= 30; ++d)
    if (projective_bound(2, d) != curve_bound(d)) return {false, "curve mismatch at d=" + std::to_string(d)};
  for (int d = 3; d <= 20; ++d) {
    if (projective_bound(3, d) != surface_bound(d)) return {false, "surface mismatch at d=" + std::to_string(d)};
    if (projective_bound(4, d) != threefold_bound(d)) return {false, "threefold mismatch at d=" + std::to_string(d)};
  }
  return {true, "62 identities"};
}

Result integrality() {
  for (int n = 1; n <= 6; ++n)
    for (int d = 3; d <= 20; ++d)
      if (projective_bound_rational(n, d).get_den() != 1) return {false, "denominator at n=" + std::to_string(n) + " d=" + std::to_string(d)};
  return {true, "108 values"};
}

Result covariance() {
  std::mt19937_64 rng(2024);
  const Field f = Field::finite(101);
  for (int i = 0; i < 50; ++i) {
    const int n = 1 + static_cast<int>(rng() % 2);
    std::vector<HomogeneousForm> forms, moved;
    std::uint64_t prod = 1;
    for (int j = 0; j <= n; ++j) {
      forms.push_back(nonzero_form(n, 1 + static_cast<int>(rng() % 3), f, rng));
      prod *= static_cast<std::uint64_t>(forms.back().degree());
    }
    const Matrix a = random_invertible(n + 1, f, rng);
    for (const auto& g : forms) moved.push_back(substitute_linear(g, a));
    if (macaulay_resultant(moved) != determinant(a).pow(prod) * macaulay_resultant(forms))
      return {false, "instance " + std::to_string(i)};
  }
  return {true, "50 instances"};
}

Result binary_oracle() {
  std::mt19937_64 rng(4);
  const Field f = Field::finite(5);
  int zeros = 0;
  for (int i = 0; i < 200; ++i) {
    const HomogeneousForm a = nonzero_form(1, 1 + static_cast<int>(rng() % 3), f, rng);
    const HomogeneousForm b = nonzero_form(1, 1 + static_cast<int>(rng() % 3), f, rng);
    const bool res_zero = macaulay_resultant({a, b}).is_zero();
    const unsigned ext = static_cast<unsigned>(a.degree() * b.degree());
    const bool found = common_zero_search(FormTuple({a, b}), ext).has_value();
    if (res_zero != found) return {false, "pair " + format_form(a) + ", " + format_form(b)};
    zeros += res_zero;
  }
  return {true, "200 pairs, " + std::to_string(zeros) + " with a common zero"};
}

Result smoothness_cross() {
  std::mt19937_64 rng(7);
  const Field f = Field::finite(7);
  int singular = 0;
  for (int i = 0; i < 100; ++i) {
    const HomogeneousForm c = nonzero_form(2, 3, f, rng);
    const bool disc_zero = discriminant_value(c).is_zero();
    const bool found = singular_point_search(FormTuple({c}), 4).has_value();
    if (disc_zero != found) return {false, "cubic " + format_form(c)};
    singular += found;
  }
  return {true, "100 cubics, " + std::to_string(singular) + " singular"};
}

Result desk_verify() {
  std::string detail;
  for (auto [d, q] : {std::pair{3, 5}, std::pair{4, 3}}) {
    const auto r = run_command("verify", {{"n", 2}, {"d", d}, {"q", q}, {"samples", 20}});
    const auto& out = r.report["outputs"];
    if (r.outcome != cibound::Outcome::Ok || !out["all_divide"].get<bool>())
      return {false, "violation for d=" + std::to_string(d) + " q=" + std::to_string(q)};
    detail += "(d=" + std::to_string(d) + ", q=" + std::to_string(q) + ": " + std::to_string(out["tested"].get<int>()) + " tested) ";
  }
  detail.pop_back();
  return {true, detail};
}

Result named_instances() {
  const Field f5 = Field::finite(5);
  const HomogeneousForm three = parse_form("x0*x1*(x0 - x1)", 1, f5);
  const auto a = projective_stabilizer(three, make_group(GroupKind::PGL, 2, f5));
  if (a.stabilizer_order != 6) return {false, "(a) order " + a.stabilizer_order.get_str()};
  if (!divisibility_verdict(a.stabilizer_order, 5, vector_bound(1, 3)).divides ||
      !divisibility_verdict(a.stabilizer_order, 5, projective_bound(1, 3)).divides)
    return {false, "(a) does not divide"};

  const Field f2 = Field::finite(2);
  const auto b = projective_stabilizer(parse_form("x0^3*x1 + x1^3*x2 + x2^3*x0", 2, f2), make_group(GroupKind::PGL, 3, f2));
  if (!divisibility_verdict(b.stabilizer_order, 2, 567).divides) return {false, "(b) order " + b.stabilizer_order.get_str()};

  const Field f9 = Field::finite(3, 2);
  const auto c = projective_stabilizer(parse_form("x0^4 + x1^4 + x2^4", 2, f9), make_group(GroupKind::PGL, 3, f9));
  if (!divisibility_verdict(c.stabilizer_order, 3, 224).divides) return {false, "(c) order " + c.stabilizer_order.get_str()};
  return {true, "orders 6, " + b.stabilizer_order.get_str() + ", " + c.stabilizer_order.get_str()};
}

Result tangent_catalogue() {
  std::mt19937_64 rng(13);
  for (int i = 0; i < 25; ++i) {
    const HomogeneousForm f = smooth_form(2, 4, Field::finite(7), rng);
    if (infinitesimal_symmetries(FormTuple({f})).projective_dimension != 0) return {false, "quartic " + format_form(f)};
  }
  for (int i = 0; i < 25; ++i) {
    const HomogeneousForm f = smooth_form(2, 3, Field::finite(5), rng);
    if (infinitesimal_symmetries(FormTuple({f})).projective_dimension != 0) return {false, "cubic " + format_form(f)};
  }
  if (infinitesimal_symmetries(FormTuple({parse_form("x0^2 + x1^2 + x2^2", 2, Field::finite(5))})).projective_dimension <= 0)
    return {false, "quadric"};
  const FormTuple cubic3({parse_form("x0^3 - x0*x2^2 - x1^2*x2", 2, Field::finite(3))});
  if (is_singular(cubic3, 4).status != Smoothness::Smooth) return {false, "char 3 cubic not smooth"};
  if (infinitesimal_symmetries(cubic3).projective_dimension <= 0) return {false, "char 3 cubic"};
  const Field f2 = Field::finite(2);
  for (int r : {2, 3}) {
    for (int i = 0; i < 10; ++i) {
      std::vector<FieldElement> a, b;
      for (int j = 0; j < r; ++j) a.emplace_back(f2, rng() % 2);
      for (int j = 0; j < 2 * r; ++j) b.emplace_back(f2, rng() % 2);
      const FormTuple t = exceptional_quadric_pair(r, a, b, f2);
      for (const auto& v : quadric_pair_fields(r, f2))
        if (!is_tangent_field(t, v)) return {false, "diagonal field not tangent for " + t.to_string()};
      if (infinitesimal_symmetries(t).projective_dimension < r - 1) return {false, "pair " + t.to_string()};
    }
  }
  return {true, "50 zero-dimensional, 4 positive cases, 20 quadric pairs"};
}

Result symbolic_discriminant() {
  const IntegerPolynomial d2 = discriminant_polynomial(1, 2);
  IntegerPolynomial expected(3);  // b^2 - 4ac with (a, b, c) = (c0, c1, c2)
  expected.add_term({0, 2, 0}, 1);
  expected.add_term({1, 0, 1}, -4);
  IntegerPolynomial negated(3);
  for (const auto& [e, c] : expected.terms()) negated.add_term(e, -c);
  if (!(d2 == expected || d2 == negated)) return {false, "disc(1,2) = " + d2.to_string()};
  if (d2.content() != 1) return {false, "content " + d2.content().get_str()};

  const auto dir = std::filesystem::temp_directory_path() / "cibound-acceptance-cache";
  std::filesystem::remove_all(dir);
  const auto path = write_discriminant_cache(dir, 1, 2, d2);
  std::ifstream in(path, std::ios::binary);
  std::stringstream bytes;
  bytes << in.rdbuf();
  const IntegerPolynomial back = load_discriminant_cache(path);
  const bool same = bytes.str() == format_discriminant_cache(d2) && back == d2 && format_discriminant_cache(back) == bytes.str();
  std::filesystem::remove_all(dir);
  if (!same) return {false, "cache round trip"};

  const IntegerPolynomial d3 = discriminant_polynomial(1, 3);
  std::mt19937_64 rng(99);
  const Field qq = Field::rationals();
  std::optional<Rational> ratio;
  for (int i = 0; i < 10; ++i) {
    HomogeneousForm f(1, 3, qq);
    std::vector<BigInt> coeffs;
    for (const auto& e : monomial_basis(1, 3)) {
      const long v = static_cast<long>(rng() % 19) - 9;
      coeffs.emplace_back(v);
      f.add_term(e, FieldElement(Rational(v)));
    }
    const Rational s = sylvester(partial_derivative(f, 0), partial_derivative(f, 1)).rational();
    const Rational p(d3.evaluate(coeffs));
    if (s == 0) {
      if (p != 0) return {false, "cubic " + format_form(f)};
      continue;
    }
    if (!ratio) ratio = p / s;
    if (p / s != *ratio) return {false, "cubic " + format_form(f)};
  }
  return {true, "disc(1,2) = " + d2.to_string() + ", cubic ratio " + format_rational(*ratio)};
}

}  // namespace

int main() {
  struct Criterion {
    int id;
    const char* name;
    double limit_seconds;
    std::function<Result()> run;
  };
  const std::vector<Criterion> criteria = {
      {1, "specialization identities", 1, specialization},
      {2, "integrality of the projective bound", 1, integrality},
      {3, "resultant covariance over GF(101)", 30, covariance},
      {4, "binary resultant vs common zeros over GF(5)", 30, binary_oracle},
      {5, "discriminant vs singular point search, plane cubics over GF(7)", 300, smoothness_cross},
      {6, "desk-scale verification (n=2; d=3, q=5; d=4, q=3)", 600, desk_verify},
      {7, "named instances", 900, named_instances},
      {8, "tangent-field catalogue", 120, tangent_catalogue},
      {9, "symbolic discriminant", 60, symbolic_discriminant},
  };
  int failures = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Result o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (o.ok && secs > c.limit_seconds) {
      o.ok = false;
      o.detail += "; exceeded " + std::to_string(static_cast<int>(c.limit_seconds)) + " s";
    }
    std::printf("%s criterion %d: %s (%.2f s) %s\n", o.ok ? "PASS" : "FAIL", c.id, c.name, secs, o.detail.c_str());
    std::fflush(stdout);
    failures += !o.ok;
  }
  return failures == 0 ? 0 : 1;
}
