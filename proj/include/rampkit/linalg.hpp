#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "rampkit/gf.hpp"

namespace rampkit {

// Codewords longer than this many total cells are not enumerated.
inline constexpr std::uint64_t kDefaultMaxCells = 10'000'000;

// Dense row-major matrix over GF(q).
class Matrix {
 public:
  Matrix(Field field, std::size_t rows, std::size_t cols);
  // Entries given row by row; throws ParameterError on ragged rows or values outside the field.
  Matrix(Field field, const std::vector<std::vector<Repr>>& rows);

  static Matrix identity(Field field, std::size_t n);
  static Matrix zero(Field field, std::size_t rows, std::size_t cols) { return Matrix(std::move(field), rows, cols); }

  const Field& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Repr at(std::size_t r, std::size_t c) const { return cells_[r * cols_ + c]; }
  void set(std::size_t r, std::size_t c, Repr v);
  std::span<const Repr> row(std::size_t r) const { return {cells_.data() + r * cols_, cols_}; }

  Matrix transpose() const;
  // Columns listed in `idx`, in that order.
  Matrix select_columns(std::span<const std::size_t> idx) const;
  // [this | right]; both sides must share field and row count.
  Matrix hconcat(const Matrix& right) const;
  // [this ; below]
  Matrix vconcat(const Matrix& below) const;

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.field_ == b.field_ && a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.cells_ == b.cells_;
  }

 private:
  Field field_;
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Repr> cells_;
};

// Gaussian elimination; pivot is the first nonzero entry scanning down the column.
std::size_t rank(const Matrix& m);

// True iff the listed columns are linearly independent. Empty idx is vacuously independent.
// Throws ParameterError on duplicate or out-of-range indices.
bool columns_independent(const Matrix& m, std::span<const std::size_t> idx);

// All q^rows vectors u*m, u ordered by ascending base-q encoding (u_0 most significant).
// Throws CapExceeded if q^rows * cols > max_cells.
std::vector<std::vector<Repr>> row_space(const Matrix& m, std::uint64_t max_cells = kDefaultMaxCells);

// `MAT rows cols q` header followed by rows of space-separated reprs.
std::string to_text(const Matrix& m);
Matrix matrix_from_text(const std::string& text);

}  // namespace rampkit
