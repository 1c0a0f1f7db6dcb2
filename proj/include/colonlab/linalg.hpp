#pragma once

#include <cstddef>
#include <span>
#include <vector>

#include <gmpxx.h>

#include "colonlab/field.hpp"

namespace colonlab {

// Row-major dense matrix with exact entries. Prime-field matrices keep raw
// residues so row operations run through the vector kernels; rational
// matrices hold mpq values.
class DenseMatrix {
 public:
  DenseMatrix(Field field, std::size_t rows, std::size_t cols);
  static DenseMatrix identity(Field field, std::size_t n);

  const Field& field() const noexcept { return field_; }
  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  FieldElement get(std::size_t r, std::size_t c) const;
  void set(std::size_t r, std::size_t c, const FieldElement& value);

  std::vector<FieldElement> row(std::size_t r) const;
  void append_row(std::span<const FieldElement> values);
  // Appends `src` row `r` (same field and width).
  void append_row_from(const DenseMatrix& src, std::size_t r);

  // dst += c * src
  void add_scaled_row(std::size_t dst, std::size_t src, const FieldElement& c);
  void scale_row(std::size_t r, const FieldElement& c);
  void swap_rows(std::size_t a, std::size_t b);
  bool row_is_zero(std::size_t r) const;
  void truncate_rows(std::size_t n);

  // Row i of the result is row i of `lhs` times `rhs` (vector-matrix
  // product), accumulated with the row kernels.
  friend DenseMatrix operator*(const DenseMatrix& lhs, const DenseMatrix& rhs);
  friend DenseMatrix operator+(const DenseMatrix& a, const DenseMatrix& b);
  friend bool operator==(const DenseMatrix& a, const DenseMatrix& b);

  DenseMatrix transposed() const;
  // [this | other] side by side (same row count).
  DenseMatrix hconcat(const DenseMatrix& other) const;
  // Columns [begin, end).
  DenseMatrix column_slice(std::size_t begin, std::size_t end) const;

  bool is_zero() const;

 private:
  std::span<std::uint32_t> residue_row(std::size_t r) {
    return {residues_.data() + r * cols_, cols_};
  }
  std::span<const std::uint32_t> residue_row(std::size_t r) const {
    return {residues_.data() + r * cols_, cols_};
  }

  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<std::uint32_t> residues_;
  std::vector<mpq_class> rationals_;
};

// In-place reduced row echelon form with first-nonzero pivoting. Zero rows
// are removed. Returns the pivot column of each remaining row.
std::vector<std::size_t> row_reduce(DenseMatrix& m);

std::size_t rank(DenseMatrix m);

// Rows spanning {x : x * m = 0}, in reduced row echelon form.
DenseMatrix left_kernel(const DenseMatrix& m);

// Row vector times matrix.
std::vector<FieldElement> vector_times(std::span<const FieldElement> v, const DenseMatrix& m);

}  // namespace colonlab
