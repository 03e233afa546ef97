#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "faithcert/linalg/scalar.hpp"

namespace faithcert {

using Vector = std::vector<Scalar>;

Vector zero_vector(Field field, std::size_t n);
Vector unit_vector(Field field, std::size_t n, std::size_t i);
bool is_zero(std::span<const Scalar> v);

/// Dense row-major matrix over a single scalar backend. A matrix viewed as
/// a linear map acts on column vectors: rows index the target coordinates.
class Matrix {
 public:
  Matrix() = default;
  Matrix(Field field, std::size_t rows, std::size_t cols);

  static Matrix identity(Field field, std::size_t n);
  /// Builds a matrix from equally long rows; an empty list yields 0 x cols.
  static Matrix from_rows(Field field, std::size_t cols, const std::vector<Vector>& rows);
  static Matrix from_columns(Field field, std::size_t rows, const std::vector<Vector>& columns);

  Field field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<Scalar> row(std::size_t r) { return {data_.data() + r * cols_, cols_}; }
  std::span<const Scalar> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }
  Vector row_vector(std::size_t r) const;
  Vector column_vector(std::size_t c) const;

  Matrix transpose() const;
  Vector apply(std::span<const Scalar> v) const;
  bool is_zero() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);

 private:
  Field field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

struct EchelonForm {
  Matrix reduced;  // same shape as the input, zero rows last
  std::vector<std::size_t> pivots;
  std::size_t rank = 0;
};

/// Reduced row-echelon form. Rational input is eliminated fraction-free on
/// primitive integer rows and normalized at the end.
EchelonForm rref(const Matrix& m);

}  // namespace faithcert
