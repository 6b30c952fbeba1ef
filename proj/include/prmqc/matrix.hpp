#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "prmqc/field.hpp"

namespace prmqc {

/// Dense row-major matrix over a small finite field, one byte per entry.
class Matrix {
 public:
  Matrix(FieldPtr field, std::size_t rows, std::size_t cols);
  static Matrix from_rows(FieldPtr field, std::size_t cols, const std::vector<std::vector<Elem>>& rows);
  static Matrix identity(FieldPtr field, std::size_t n);

  const FieldPtr& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0; }

  Elem operator()(std::size_t r, std::size_t c) const noexcept { return data_[r * cols_ + c]; }
  Elem& operator()(std::size_t r, std::size_t c) noexcept { return data_[r * cols_ + c]; }

  std::span<const Elem> row(std::size_t r) const noexcept { return {&data_[r * cols_], cols_}; }
  std::span<Elem> row(std::size_t r) noexcept { return {&data_[r * cols_], cols_}; }
  std::vector<Elem> column(std::size_t c) const;

  void append_row(std::span<const Elem> values);
  void swap_rows(std::size_t a, std::size_t b) noexcept;
  /// Keep the first `count` rows.
  void truncate_rows(std::size_t count);

  /// Entrywise a -> a^q0.
  Matrix frobenius(int q0) const;
  Matrix transpose() const;

  bool operator==(const Matrix& other) const noexcept;

  const std::vector<Elem>& data() const noexcept { return data_; }

 private:
  FieldPtr field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Elem> data_;
};

/// dst[j] += factor * src[j] for j in [from, dst.size()).
void add_scaled_row(const Field& f, std::span<Elem> dst, std::span<const Elem> src, Elem factor,
                    std::size_t from = 0) noexcept;
void scale_row(const Field& f, std::span<Elem> row, Elem factor, std::size_t from = 0) noexcept;
Elem dot(const Field& f, std::span<const Elem> a, std::span<const Elem> b) noexcept;

struct RrefResult {
  Matrix reduced;  ///< reduced row echelon form, zero rows dropped
  std::size_t rank;
  std::vector<std::size_t> pivots;
};

/// Gauss-Jordan elimination; pivot is the topmost nonzero entry of the
/// first column that still has one.
RrefResult rref(Matrix m);
std::size_t rank(Matrix m);

/// Canonical basis of {x : M x^T = 0}.
Matrix null_space(const Matrix& m);

/// Canonical basis of rowspace(A) + rowspace(B).
Matrix sum_row_spaces(const Matrix& a, const Matrix& b);

/// Canonical basis of rowspace(A) intersected with rowspace(B), computed as
/// the null space of null(A) stacked on null(B).
Matrix intersect_row_spaces(const Matrix& a, const Matrix& b);

/// One solution of M x = b with free variables set to zero, or nullopt when
/// the system is inconsistent.
std::optional<std::vector<Elem>> solve(const Matrix& m, std::span<const Elem> b);

Matrix multiply(const Matrix& a, const Matrix& b);
/// A * B^T, the Gram-style product used for hull computations.
Matrix multiply_transposed(const Matrix& a, const Matrix& b);
Matrix vstack(const Matrix& a, const Matrix& b);

}  // namespace prmqc
