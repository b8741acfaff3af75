#include "tangent.hpp"

#include <map>

namespace cibound {

namespace {

Exponents unit(int n, int m) {
  Exponents e(static_cast<std::size_t>(n + 1), 0);
  e[m] = 1;
  return e;
}

// Coefficient vectors of forms of one degree as the columns of a matrix.
Matrix coefficient_columns(const std::vector<HomogeneousForm>& forms, int n, int d, const Field& field) {
  const auto basis = monomial_basis(n, d);
  Matrix m(basis.size(), forms.size(), field);
  for (std::size_t c = 0; c < forms.size(); ++c)
    for (std::size_t r = 0; r < basis.size(); ++r) m(r, c) = forms[c].coefficient(basis[r]);
  return m;
}

}  // namespace

HomogeneousForm derivation(const Matrix& a, const HomogeneousForm& f) {
  const int nv = f.nvars();
  if (a.rows() != static_cast<std::size_t>(nv) || a.cols() != static_cast<std::size_t>(nv))
    throw Error(Errc::InvalidInput, "matrix size does not match the number of variables");
  if (a.field() != f.field()) throw Error(Errc::FieldMismatch, "matrix and form over different fields");
  HomogeneousForm r(f.n(), f.degree(), f.field());
  if (f.degree() == 0) return r;
  for (int i = 0; i < nv; ++i) {
    const HomogeneousForm di = partial_derivative(f, i);
    for (int m = 0; m < nv; ++m)
      if (!a(i, m).is_zero()) r = r + di.shifted(unit(f.n(), m)).scaled(a(i, m));
  }
  return r;
}

bool is_tangent_field(const FormTuple& t, const Matrix& a) {
  for (std::size_t j = 0; j < t.size(); ++j) {
    std::vector<HomogeneousForm> same;
    for (const auto& f : t.forms())
      if (f.degree() == t[j].degree()) same.push_back(f);
    const std::size_t r0 = rank(coefficient_columns(same, t.n(), t[j].degree(), t.field()));
    same.push_back(derivation(a, t[j]));
    if (rank(coefficient_columns(same, t.n(), t[j].degree(), t.field())) != r0) return false;
  }
  return true;
}

TangentReport infinitesimal_symmetries(const FormTuple& t) {
  for (const auto& f : t.forms())
    if (f.is_zero()) throw Error(Errc::InvalidInput, "zero form in a tangency query");
  const int n = t.n();
  const std::size_t nv = static_cast<std::size_t>(n + 1), na = nv * nv, k = t.size();
  const Field& field = t.field();

  // Unknowns: A row-major, then c_jl for every (j, l) with equal degrees.
  std::vector<std::pair<std::size_t, std::size_t>> lambdas;
  for (std::size_t j = 0; j < k; ++j)
    for (std::size_t l = 0; l < k; ++l)
      if (t[j].degree() == t[l].degree()) lambdas.emplace_back(j, l);

  std::size_t rows = 0;
  std::vector<std::size_t> offset(k);
  for (std::size_t j = 0; j < k; ++j) {
    offset[j] = rows;
    rows += monomial_count(n, t[j].degree());
  }
  Matrix sys(rows, na + lambdas.size(), field);
  for (std::size_t j = 0; j < k; ++j) {
    const auto basis = monomial_basis(n, t[j].degree());
    std::map<Exponents, std::size_t> index;
    for (std::size_t r = 0; r < basis.size(); ++r) index.emplace(basis[r], offset[j] + r);
    if (t[j].degree() > 0)
      for (std::size_t i = 0; i < nv; ++i) {
        const HomogeneousForm di = partial_derivative(t[j], static_cast<int>(i));
        for (std::size_t m = 0; m < nv; ++m) {
          const HomogeneousForm term = di.shifted(unit(n, static_cast<int>(m)));
          for (const auto& [e, c] : term.terms()) sys(index.at(e), i * nv + m) += c;
        }
      }
    for (std::size_t u = 0; u < lambdas.size(); ++u) {
      if (lambdas[u].first != j) continue;
      for (const auto& [e, c] : t[lambdas[u].second].terms()) sys(index.at(e), na + u) -= c;
    }
  }

  // Project the solution space to the A coordinates and reduce.
  const auto null = nullspace(sys);
  Matrix proj(null.size(), na, field);
  for (std::size_t s = 0; s < null.size(); ++s)
    for (std::size_t c = 0; c < na; ++c) proj(s, c) = null[s][c];
  const auto pivots = row_reduce(proj);

  TangentReport rep;
  rep.solution_dimension = static_cast<int>(pivots.size());
  rep.projective_dimension = rep.solution_dimension - 1;
  for (std::size_t s = 0; s < pivots.size(); ++s) {
    Matrix a(nv, nv, field);
    for (std::size_t c = 0; c < na; ++c) a(c / nv, c % nv) = proj(s, c);
    rep.basis.push_back(std::move(a));
  }

  Matrix check(pivots.size() + 1, na, field);
  for (std::size_t s = 0; s < pivots.size(); ++s)
    for (std::size_t c = 0; c < na; ++c) check(s, c) = proj(s, c);
  for (std::size_t i = 0; i < nv; ++i) check(pivots.size(), i * nv + i) = FieldElement::one(field);
  if (rank(check) != pivots.size()) throw Error(Errc::Internal, "identity matrix missing from the tangent solution space");
  return rep;
}

FormTuple exceptional_quadric_pair(int r, const std::vector<FieldElement>& a, const std::vector<FieldElement>& b, const Field& field) {
  if (field.characteristic() != 2) throw Error(Errc::CharMismatch, "the quadric pair family lives in characteristic 2, got " + field.spec());
  if (r < 1) throw Error(Errc::InvalidInput, "r must be >= 1");
  const int n = 2 * r - 1;
  if (a.size() != static_cast<std::size_t>(r) || b.size() != static_cast<std::size_t>(n + 1))
    throw Error(Errc::InvalidInput, "need " + std::to_string(r) + " values of a and " + std::to_string(n + 1) + " values of b");
  HomogeneousForm q1(n, 2, field), q2(n, 2, field);
  for (int i = 0; i < r; ++i) {
    Exponents e(static_cast<std::size_t>(n + 1), 0);
    e[i] = e[i + r] = 1;
    q1.add_term(e, FieldElement::one(field));
    q2.add_term(e, embed(a[i], field));
  }
  for (int i = 0; i <= n; ++i) {
    Exponents e(static_cast<std::size_t>(n + 1), 0);
    e[i] = 2;
    q2.add_term(e, embed(b[i], field));
  }
  return FormTuple({q1, q2});
}

std::vector<Matrix> quadric_pair_fields(int r, const Field& field) {
  std::vector<Matrix> out;
  for (int i = 0; i < r; ++i) {
    Matrix a(2 * r, 2 * r, field);
    a(i, i) = a(i + r, i + r) = FieldElement::one(field);
    out.push_back(std::move(a));
  }
  return out;
}

}  // namespace cibound
