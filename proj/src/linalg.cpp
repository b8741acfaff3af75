#include "linalg.hpp"

#include <utility>

namespace cibound {

Matrix::Matrix(std::size_t rows, std::size_t cols, const Field& field)
    : rows_(rows), cols_(cols), field_(field), data_(rows * cols, FieldElement::zero(field)) {}

Matrix Matrix::identity(std::size_t n, const Field& field) {
  Matrix m(n, n, field);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = FieldElement::one(field);
  return m;
}

Matrix Matrix::from_ints(const std::vector<std::vector<long>>& rows, const Field& field) {
  const std::size_t r = rows.size(), c = r ? rows[0].size() : 0;
  Matrix m(r, c, field);
  for (std::size_t i = 0; i < r; ++i) {
    if (rows[i].size() != c) throw Error(Errc::InvalidInput, "ragged matrix rows");
    for (std::size_t j = 0; j < c; ++j) m(i, j) = FieldElement::from_int(field, rows[i][j]);
  }
  return m;
}

Matrix Matrix::operator*(const Matrix& o) const {
  if (cols_ != o.rows_) throw Error(Errc::InvalidInput, "matrix shape mismatch");
  if (field_ != o.field_) throw Error(Errc::FieldMismatch, "matrix fields differ");
  Matrix r(rows_, o.cols_, field_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t k = 0; k < cols_; ++k) {
      const FieldElement& a = (*this)(i, k);
      if (a.is_zero()) continue;
      for (std::size_t j = 0; j < o.cols_; ++j) r(i, j) += a * o(k, j);
    }
  return r;
}

std::vector<FieldElement> Matrix::apply(const std::vector<FieldElement>& v) const {
  if (v.size() != cols_) throw Error(Errc::InvalidInput, "vector length mismatch");
  std::vector<FieldElement> out(rows_, FieldElement::zero(field_));
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
  return out;
}

Matrix Matrix::transposed() const {
  Matrix t(cols_, rows_, field_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Matrix Matrix::lifted(const Field& to) const {
  Matrix r(rows_, cols_, to);
  for (std::size_t i = 0; i < data_.size(); ++i) r.data_[i] = embed(data_[i], to);
  return r;
}

bool Matrix::operator==(const Matrix& o) const {
  return rows_ == o.rows_ && cols_ == o.cols_ && field_ == o.field_ && data_ == o.data_;
}

std::string Matrix::to_string() const {
  std::string s = "[";
  for (std::size_t i = 0; i < rows_; ++i) {
    s += i ? ",[" : "[";
    for (std::size_t j = 0; j < cols_; ++j) s += (j ? "," : "") + (*this)(i, j).to_string();
    s += "]";
  }
  return s + "]";
}

BigInt bareiss_determinant(std::vector<std::vector<BigInt>> a) {
  const std::size_t n = a.size();
  if (n == 0) return 1;
  BigInt prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a[k][k] == 0) {
      std::size_t piv = k + 1;
      while (piv < n && a[piv][k] == 0) ++piv;
      if (piv == n) return 0;
      std::swap(a[k], a[piv]);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        BigInt t = a[i][j] * a[k][k] - a[i][k] * a[k][j];
        mpz_divexact(a[i][j].get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      a[i][k] = 0;
    }
    prev = a[k][k];
  }
  return sign * a[n - 1][n - 1];
}

Code determinant_codes(const FiniteField& f, std::vector<Code> a, std::size_t n) {
  Code det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t piv = k;
    while (piv < n && a[piv * n + k] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != k) {
      for (std::size_t j = k; j < n; ++j) std::swap(a[k * n + j], a[piv * n + j]);
      det = f.neg(det);
    }
    const Code pivot = a[k * n + k];
    det = f.mul(det, pivot);
    const Code pinv = f.inv(pivot);
    for (std::size_t i = k + 1; i < n; ++i) {
      Code factor = a[i * n + k];
      if (factor == 0) continue;
      factor = f.neg(f.mul(factor, pinv));
      Code* row = &a[i * n];
      const Code* prow = &a[k * n];
      for (std::size_t j = k + 1; j < n; ++j) {
        if (prow[j] != 0) row[j] = f.add(row[j], f.mul(factor, prow[j]));
      }
      row[k] = 0;
    }
  }
  return det;
}

std::size_t rank_codes(const FiniteField& f, std::vector<Code> a, std::size_t rows, std::size_t cols) {
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t piv = r;
    while (piv < rows && a[piv * cols + c] == 0) ++piv;
    if (piv == rows) continue;
    if (piv != r)
      for (std::size_t j = 0; j < cols; ++j) std::swap(a[r * cols + j], a[piv * cols + j]);
    const Code pinv = f.inv(a[r * cols + c]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      Code factor = a[i * cols + c];
      if (factor == 0) continue;
      factor = f.neg(f.mul(factor, pinv));
      for (std::size_t j = c; j < cols; ++j) a[i * cols + j] = f.add(a[i * cols + j], f.mul(factor, a[r * cols + j]));
    }
    ++r;
  }
  return r;
}

namespace {

std::vector<Code> to_codes(const Matrix& m) {
  std::vector<Code> a(m.rows() * m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) a[i * m.cols() + j] = m(i, j).code();
  return a;
}

}  // namespace

std::vector<std::size_t> row_reduce(Matrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols() && r < m.rows(); ++c) {
    std::size_t piv = r;
    while (piv < m.rows() && m(piv, c).is_zero()) ++piv;
    if (piv == m.rows()) continue;
    if (piv != r)
      for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(piv, j));
    const FieldElement inv = m(r, c).inverse();
    for (std::size_t j = c; j < m.cols(); ++j) m(r, j) = m(r, j) * inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == r || m(i, c).is_zero()) continue;
      const FieldElement factor = m(i, c);
      for (std::size_t j = c; j < m.cols(); ++j) m(i, j) = m(i, j) - factor * m(r, j);
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

FieldElement determinant(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error(Errc::InvalidInput, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (m.field().is_finite()) return FieldElement(m.field(), determinant_codes(m.field().ff(), to_codes(m), n));
  // Scale each row to integers; det(original) = det(scaled) / prod(scales).
  std::vector<std::vector<BigInt>> rows(n, std::vector<BigInt>(n));
  BigInt scale_product = 1;
  for (std::size_t i = 0; i < n; ++i) {
    BigInt l = 1;
    for (std::size_t j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).rational().get_den_mpz_t());
    for (std::size_t j = 0; j < n; ++j) {
      const Rational& x = m(i, j).rational();
      rows[i][j] = x.get_num() * (l / x.get_den());
    }
    scale_product *= l;
  }
  Rational det(bareiss_determinant(std::move(rows)), scale_product);
  det.canonicalize();
  return FieldElement(det);
}

Matrix inverse(const Matrix& m) {
  if (m.rows() != m.cols()) throw Error(Errc::InvalidInput, "inverse of a non-square matrix");
  const std::size_t n = m.rows();
  Matrix aug(n, 2 * n, m.field());
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) aug(i, j) = m(i, j);
    aug(i, n + i) = FieldElement::one(m.field());
  }
  auto pivots = row_reduce(aug);
  if (pivots.size() < n || pivots[n - 1] != n - 1) throw Error(Errc::DivisionByZero, "matrix is singular");
  Matrix r(n, n, m.field());
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) r(i, j) = aug(i, n + j);
  return r;
}

std::size_t rank(const Matrix& m) {
  if (m.field().is_finite()) return rank_codes(m.field().ff(), to_codes(m), m.rows(), m.cols());
  Matrix copy = m;
  return row_reduce(copy).size();
}

std::vector<std::vector<FieldElement>> nullspace(const Matrix& m) {
  Matrix r = m;
  auto pivots = row_reduce(r);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<FieldElement>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<FieldElement> v(m.cols(), FieldElement::zero(m.field()));
    v[free] = FieldElement::one(m.field());
    for (std::size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -r(i, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

Matrix random_invertible(std::size_t n, const Field& field, std::mt19937_64& rng) {
  while (true) {
    Matrix a(n, n, field);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        if (field.is_finite())
          a(i, j) = FieldElement(field, rng() % field.ff().order());
        else
          a(i, j) = FieldElement::from_int(field, static_cast<std::int64_t>(rng() % 7) - 3);
      }
    if (!determinant(a).is_zero()) return a;
  }
}

}  // namespace cibound
