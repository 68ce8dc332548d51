#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include "hopfq/scalar.hpp"

namespace hopfq {

using Vector = std::vector<Scalar>;

Vector zero_vector(const FieldSpec& f, std::size_t n);
Vector unit_vector(const FieldSpec& f, std::size_t n, std::size_t i);
bool is_zero(std::span<const Scalar> v);

/// y += a x
void axpy(Vector& y, const Scalar& a, std::span<const Scalar> x);
Vector scaled(std::span<const Scalar> x, const Scalar& a);
/// Flattened tensor product a ⊗ b (index i * |b| + j).
Vector kron(std::span<const Scalar> a, std::span<const Scalar> b);
/// out += c (a ⊗ b)
void add_kron(Vector& out, const Scalar& c, std::span<const Scalar> a, std::span<const Scalar> b);

/// Dense row-major matrix over a single field.
class Matrix {
 public:
  Matrix() = default;
  Matrix(const FieldSpec& f, std::size_t rows, std::size_t cols);

  static Matrix identity(const FieldSpec& f, std::size_t n);
  /// Builds a matrix from integer entries (row-major).
  static Matrix from_rows(const FieldSpec& f, const std::vector<std::vector<std::int64_t>>& rows);
  /// Matrix whose columns are the given vectors.
  static Matrix from_columns(const FieldSpec& f, std::size_t rows, const std::vector<Vector>& cols);

  const FieldSpec& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return entries_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return entries_[r * cols_ + c]; }

  Vector column(std::size_t c) const;
  Vector row(std::size_t r) const;
  Matrix transpose() const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Vector operator*(const Matrix& a, std::span<const Scalar> v);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend bool operator==(const Matrix& a, const Matrix& b);

  bool is_identity() const;

 private:
  FieldSpec field_;
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> entries_;
};

/// Reduced row echelon form together with the pivot columns.
struct Echelon {
  Matrix reduced;
  std::vector<std::size_t> pivots;
};

Echelon rref(Matrix m);
std::size_t rank(const Matrix& m);

/// Basis of ker(m). Each vector is normalized so that its first nonzero entry
/// is 1; the vectors come out ordered by their leading (free) coordinate.
std::vector<Vector> nullspace(const Matrix& m);

/// Fraction-free (Bareiss) determinant. Throws NonSquare.
Scalar determinant(const Matrix& m);

/// Gauss-Jordan inverse. Throws NonSquare or Singular.
Matrix invert(const Matrix& m);

/// Coordinates against an independent set of columns.
///
/// Given a basis matrix B (n x r, independent columns), `coordinates(v)`
/// returns c with B c = v when v lies in the column span, and `contains(v)`
/// decides membership exactly.
class ColumnBasis {
 public:
  explicit ColumnBasis(Matrix basis);

  const Matrix& basis() const noexcept { return basis_; }
  std::size_t dim() const noexcept { return basis_.cols(); }
  std::size_t ambient() const noexcept { return basis_.rows(); }

  bool contains(std::span<const Scalar> v) const;
  /// Throws DimensionMismatch when v is outside the span.
  Vector coordinates(std::span<const Scalar> v) const;
  /// r x n matrix L with L B = I.
  const Matrix& left_inverse() const noexcept { return left_inverse_; }

 private:
  Matrix basis_;
  Matrix left_inverse_;
};

/// Row-reduced basis of the column span, as columns. Two spans are equal iff
/// their canonical bases are equal.
Matrix canonical_span(const Matrix& columns);

}  // namespace hopfq
