#pragma once

#include <cstddef>
#include <random>
#include <vector>

#include "exactnum.hpp"

namespace cibound {

// Dense row-major matrix over one field.
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const Field& field);

  static Matrix identity(std::size_t n, const Field& field);
  // Rows given as integers, reduced into `field`.
  static Matrix from_ints(const std::vector<std::vector<long>>& rows, const Field& field);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  const Field& field() const noexcept { return field_; }

  FieldElement& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const FieldElement& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  Matrix operator*(const Matrix& o) const;
  std::vector<FieldElement> apply(const std::vector<FieldElement>& v) const;
  Matrix transposed() const;
  // Entry-wise image under the canonical embedding into an extension.
  Matrix lifted(const Field& to) const;

  bool operator==(const Matrix& o) const;
  bool operator!=(const Matrix& o) const { return !(*this == o); }

  std::string to_string() const;

 private:
  std::size_t rows_ = 0, cols_ = 0;
  Field field_;
  std::vector<FieldElement> data_;
};

// Exact determinant: fraction-free Bareiss over QQ (rows scaled to integers
// first), Gaussian elimination over finite fields.
FieldElement determinant(const Matrix& m);
std::size_t rank(const Matrix& m);

// Basis of {v : m v = 0}, one vector per free column of the reduced row
// echelon form.
std::vector<std::vector<FieldElement>> nullspace(const Matrix& m);

// DivisionByZero if m is singular.
Matrix inverse(const Matrix& m);

// Reduced row echelon form in place; returns the pivot columns.
std::vector<std::size_t> row_reduce(Matrix& m);

BigInt bareiss_determinant(std::vector<std::vector<BigInt>> rows);

// Residue-level kernels used by the hot paths.
Code determinant_codes(const FiniteField& f, std::vector<Code> a, std::size_t n);
std::size_t rank_codes(const FiniteField& f, std::vector<Code> a, std::size_t rows, std::size_t cols);

// Uniformly random invertible matrix over a finite field; over QQ entries
// are drawn from [-3, 3].
Matrix random_invertible(std::size_t n, const Field& field, std::mt19937_64& rng);

}  // namespace cibound
