#include <doctest.h>

#include <random>
#include <set>

#include "grouporbit.hpp"

using namespace cibound;

namespace {

// Every m x m matrix over GF(q) via its code vector.
template <class Fn>
void for_each_matrix(int m, const Field& field, Fn&& fn) {
  const std::uint64_t q = field.ff().order();
  const std::size_t cells = static_cast<std::size_t>(m * m);
  std::vector<Code> c(cells, 0);
  while (true) {
    Matrix a(m, m, field);
    for (std::size_t k = 0; k < cells; ++k) a(k / m, k % m) = FieldElement(field, c[k]);
    fn(a);
    std::size_t k = 0;
    while (k < cells && ++c[k] == q) c[k++] = 0;
    if (k == cells) break;
  }
}

// Stabilizer order by scanning all matrices.
BigInt brute_stabilizer(const HomogeneousForm& f, GroupKind kind) {
  const Field& field = f.field();
  const HomogeneousForm fm = f.monic();
  std::uint64_t count = 0;
  for_each_matrix(f.nvars(), field, [&](const Matrix& a) {
    const FieldElement det = determinant(a);
    if (det.is_zero()) return;
    if (kind == GroupKind::SL && !det.is_one()) return;
    const HomogeneousForm g = substitute_linear(f, a);
    if (kind == GroupKind::PGL ? g.monic() == fm : g == f) ++count;
  });
  if (kind == GroupKind::PGL) count /= field.ff().order() - 1;
  return BigInt(static_cast<unsigned long>(count));
}

HomogeneousForm nonzero_form(int n, int d, const Field& f, std::mt19937_64& rng) {
  while (true) {
    HomogeneousForm h = random_form(n, d, f, rng);
    if (!h.is_zero()) return h;
  }
}

}  // namespace

TEST_CASE("group orders") {
  CHECK(group_order(make_group(GroupKind::GL, 2, Field::finite(2))) == 6);
  CHECK(group_order(make_group(GroupKind::SL, 2, Field::finite(5))) == 120);
  CHECK(group_order(make_group(GroupKind::PGL, 3, Field::finite(3))) == 5616);
  CHECK(group_order(make_group(GroupKind::PGL, 3, Field::finite(3, 2))) == BigInt("42456960"));
  CHECK(make_group(GroupKind::PGL, 3, Field::finite(3, 2)).to_string() == "PGL_3(GF(3^2))");
  CHECK_THROWS_AS(make_group(GroupKind::GL, 1, Field::finite(5)), Error);
  CHECK_THROWS_AS(make_group(GroupKind::GL, 2, Field::rationals()), Error);
}

TEST_CASE("generators generate") {
  struct Case {
    GroupKind kind;
    int rank;
    Field field;
  };
  for (const Case& c : {Case{GroupKind::GL, 2, Field::finite(3)}, Case{GroupKind::SL, 2, Field::finite(5)},
                        Case{GroupKind::SL, 2, Field::finite(3, 2)}, Case{GroupKind::PGL, 3, Field::finite(2)},
                        Case{GroupKind::GL, 2, Field::finite(2, 2)}, Case{GroupKind::PGL, 2, Field::finite(7)}}) {
    const GroupSpec g = make_group(c.kind, c.rank, c.field);
    const auto gens = generators(g);
    for (const auto& a : gens) {
      CHECK_FALSE(determinant(a).is_zero());
      if (c.kind == GroupKind::SL) CHECK(determinant(a).is_one());
    }
    CHECK(BigInt(static_cast<unsigned long>(group_closure(g, gens).size())) == group_order(g));
  }
  CHECK_THROWS_AS(group_closure(make_group(GroupKind::GL, 3, Field::finite(3)), generators(make_group(GroupKind::GL, 3, Field::finite(3))), 100),
                  Error);
}

TEST_CASE("enumerate_group lists each element once") {
  for (GroupKind kind : {GroupKind::GL, GroupKind::SL, GroupKind::PGL}) {
    const GroupSpec g = make_group(kind, 2, Field::finite(5));
    const auto elems = enumerate_group(g);
    CHECK(BigInt(static_cast<unsigned long>(elems.size())) == group_order(g));
    std::set<std::string> seen;
    for (const auto& a : elems) {
      CHECK(seen.insert(canonical_element(g, a).to_string()).second);
      if (kind == GroupKind::SL) CHECK(determinant(a).is_one());
    }
  }
  try {
    enumerate_group(make_group(GroupKind::GL, 3, Field::finite(7)), 1000);
    FAIL("expected UnsupportedSize");
  } catch (const Error& e) {
    CHECK(e.code() == Errc::UnsupportedSize);
  }
}

TEST_CASE("stabilizer examples") {
  const Field f5 = Field::finite(5);
  const HomogeneousForm three = parse_form("x0*x1*(x0 - x1)", 1, f5);
  const auto pgl = projective_stabilizer(three, make_group(GroupKind::PGL, 2, f5));
  CHECK(pgl.stabilizer_order == 6);
  CHECK(pgl.orbit_size == 20);
  for (const auto& a : pgl.generators_found) CHECK(fixes(make_group(GroupKind::PGL, 2, f5), a, three));
  const auto gl = linear_stabilizer(three, make_group(GroupKind::GL, 2, f5));
  CHECK(gl.stabilizer_order == 6);
  CHECK(gl.orbit_size * gl.stabilizer_order == gl.group_order);

  const Field f3 = Field::finite(3);
  CHECK(linear_stabilizer(parse_form("x0^2 + x1^2", 1, f3), make_group(GroupKind::GL, 2, f3)).stabilizer_order == 8);

  const HomogeneousForm klein = parse_form("x0^3*x1 + x1^3*x2 + x2^3*x0", 2, Field::finite(2));
  const auto k = projective_stabilizer(klein, make_group(GroupKind::PGL, 3, Field::finite(2)));
  CHECK(k.stabilizer_order == brute_stabilizer(klein, GroupKind::PGL));
  CHECK(k.stabilizer_order % 3 == 0);
}

TEST_CASE("stabilizer argument errors") {
  const Field f5 = Field::finite(5);
  const GroupSpec g = make_group(GroupKind::GL, 2, f5);
  auto code_of = [](auto&& fn) {
    try {
      fn();
    } catch (const Error& e) {
      return e.code();
    }
    return Errc::Internal;
  };
  CHECK(code_of([&] { stabilizer(HomogeneousForm(1, 3, f5), g); }) == Errc::InvalidInput);
  CHECK(code_of([&] { stabilizer(parse_form("x0^3 + x1^3", 1, Field::finite(7)), g); }) == Errc::FieldMismatch);
  CHECK(code_of([&] { stabilizer(parse_form("x0^3 + x2^3", 2, f5), g); }) == Errc::InvalidInput);
  CHECK(code_of([&] { linear_stabilizer(parse_form("x0^3 + x1^3", 1, f5), make_group(GroupKind::PGL, 2, f5)); }) == Errc::InvalidInput);
  CHECK(code_of([&] { projective_stabilizer(parse_form("x0^3 + x1^3", 1, f5), g); }) == Errc::InvalidInput);
  StabilizerOptions tight;
  tight.orbit_budget = 10;
  CHECK(code_of([&] { stabilizer(parse_form("x0^3 + x0*x1^2", 1, f5), g, tight); }) == Errc::OrbitBudgetExceeded);
  StabilizerOptions ex;
  ex.method = StabMethod::Exhaustive;
  ex.exhaustive_ceiling = 100;
  CHECK(code_of([&] { stabilizer(parse_form("x0^3 + x1^3", 1, f5), g, ex); }) == Errc::UnsupportedSize);
}

TEST_CASE("orbit BFS and exhaustive enumeration agree with brute force") {
  std::mt19937_64 rng(8);
  struct Case {
    int n, d;
    Field field;
  };
  StabilizerOptions ex;
  ex.method = StabMethod::Exhaustive;
  for (const Case& c : {Case{1, 3, Field::finite(5)}, Case{1, 4, Field::finite(3)}, Case{1, 3, Field::finite(2, 2)},
                        Case{2, 3, Field::finite(2)}, Case{1, 4, Field::finite(7)}}) {
    for (int i = 0; i < 4; ++i) {
      const HomogeneousForm f = nonzero_form(c.n, c.d, c.field, rng);
      for (GroupKind kind : {GroupKind::GL, GroupKind::SL, GroupKind::PGL}) {
        const GroupSpec g = make_group(kind, c.n + 1, c.field);
        const auto bfs = stabilizer(f, g);
        const auto exh = stabilizer(f, g, ex);
        CHECK(bfs.stabilizer_order == exh.stabilizer_order);
        CHECK(bfs.stabilizer_order == brute_stabilizer(f, kind));
        for (const auto& a : bfs.generators_found) CHECK(fixes(g, a, f));
        for (const auto& a : exh.generators_found) CHECK(fixes(g, a, f));
      }
    }
  }
}

TEST_CASE("stabilizer order is a conjugation invariant") {
  std::mt19937_64 rng(21);
  const Field f = Field::finite(7);
  for (GroupKind kind : {GroupKind::GL, GroupKind::PGL}) {
    const GroupSpec g = make_group(kind, 2, f);
    for (int i = 0; i < 6; ++i) {
      const HomogeneousForm h = nonzero_form(1, 4, f, rng);
      const Matrix b = random_invertible(2, f, rng);
      CHECK(stabilizer(h, g).stabilizer_order == stabilizer(substitute_linear(h, b), g).stabilizer_order);
    }
  }
}

TEST_CASE("Fermat quartic over GF(9)") {
  const Field f9 = Field::finite(3, 2);
  const HomogeneousForm fermat = parse_form("x0^4 + x1^4 + x2^4", 2, f9);
  const GroupSpec g = make_group(GroupKind::PGL, 3, f9);
  // Coordinate permutations and diagonal matrices with fourth roots of unity
  // entries fix the form; modulo scalars they form a group of order 6 * 16.
  const Code w = f9.ff().primitive();
  const Code i4 = f9.ff().pow(w, 2);  // order 4
  for (const auto& perm : std::vector<std::vector<int>>{{0, 1, 2}, {1, 0, 2}, {0, 2, 1}, {2, 1, 0}, {1, 2, 0}, {2, 0, 1}}) {
    Matrix p(3, 3, f9);
    for (int r = 0; r < 3; ++r) p(r, perm[r]) = FieldElement::one(f9);
    CHECK(fixes(g, p, fermat));
  }
  Matrix diag = Matrix::identity(3, f9);
  diag(1, 1) = FieldElement(f9, i4);
  CHECK(fixes(g, diag, fermat));
  const auto rep = projective_stabilizer(fermat, g);
  CHECK(rep.stabilizer_order % 96 == 0);
  const auto verdict = divisibility_verdict(rep.stabilizer_order, 3, 224);
  CHECK(verdict.divides);
}

TEST_CASE("verify_divisibility on binary cubics") {
  const auto rep = verify_divisibility(1, 3, Field::finite(5), 12, 3);
  CHECK(rep.vector_bound == 18);
  CHECK(rep.tested == 12);
  CHECK(rep.tested + rep.skipped_singular + rep.skipped_inconclusive == rep.reports.size());
  CHECK(rep.reports.back().smoothness == Smoothness::Smooth);
  CHECK(rep.all_divide);
  for (const auto& s : rep.reports) {
    if (s.smoothness != Smoothness::Smooth) {
      CHECK_FALSE(s.linear.has_value());
      continue;
    }
    REQUIRE(s.projective.has_value());
    CHECK(s.projective_verdict->divides);
    CHECK(s.linear_verdict->divides);
  }
  const auto again = verify_divisibility(1, 3, Field::finite(5), 12, 3);
  REQUIRE(again.reports.size() == rep.reports.size());
  for (std::size_t i = 0; i < rep.reports.size(); ++i) CHECK(again.reports[i].form == rep.reports[i].form);
  CHECK_THROWS_AS(verify_divisibility(1, 3, Field::rationals(), 5, 1), Error);
  CHECK_THROWS_AS(verify_divisibility(1, 2, Field::finite(5), 5, 1), Error);
}

TEST_CASE("too few smooth samples") {
  // Binary quartics over GF(2) are often singular; whichever way this seed
  // falls, the half-tested rule must be enforced.
  try {
    VerifyOptions opts;
    opts.draws_per_sample = 1;
    const auto rep = verify_divisibility(1, 4, Field::finite(2), 20, 5, opts);
    CHECK(rep.tested * 2 >= 20);
  } catch (const Error& e) {
    CHECK(e.code() == Errc::InsufficientSmoothSamples);
  }
}
