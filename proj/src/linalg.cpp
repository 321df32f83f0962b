#include "rampkit/linalg.hpp"

#include <sstream>

#include "rampkit/combinatorics.hpp"
#include "rampkit/error.hpp"

namespace rampkit {

Matrix::Matrix(Field field, std::size_t rows, std::size_t cols)
    : field_(std::move(field)), rows_(rows), cols_(cols), cells_(rows * cols, 0) {}

Matrix::Matrix(Field field, const std::vector<std::vector<Repr>>& rows)
    : field_(std::move(field)), rows_(rows.size()), cols_(rows.empty() ? 0 : rows.front().size()) {
  cells_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw ParameterError("ragged matrix rows");
    for (Repr v : r) {
      if (!field_.contains(v))
        throw ParameterError("matrix entry " + std::to_string(v) + " is not an element of " + field_.name());
      cells_.push_back(v);
    }
  }
}

Matrix Matrix::identity(Field field, std::size_t n) {
  Matrix m(std::move(field), n, n);
  for (std::size_t i = 0; i < n; ++i) m.cells_[i * n + i] = 1;
  return m;
}

void Matrix::set(std::size_t r, std::size_t c, Repr v) {
  if (r >= rows_ || c >= cols_) throw ParameterError("matrix index out of range");
  if (!field_.contains(v)) throw ParameterError("value is not a field element");
  cells_[r * cols_ + c] = v;
}

Matrix Matrix::transpose() const {
  Matrix t(field_, cols_, rows_);
  for (std::size_t r = 0; r < rows_; ++r)
    for (std::size_t c = 0; c < cols_; ++c) t.cells_[c * rows_ + r] = at(r, c);
  return t;
}

Matrix Matrix::select_columns(std::span<const std::size_t> idx) const {
  Matrix out(field_, rows_, idx.size());
  for (std::size_t j = 0; j < idx.size(); ++j) {
    if (idx[j] >= cols_) throw ParameterError("column index " + std::to_string(idx[j]) + " out of range");
    for (std::size_t r = 0; r < rows_; ++r) out.cells_[r * idx.size() + j] = at(r, idx[j]);
  }
  return out;
}

Matrix Matrix::hconcat(const Matrix& right) const {
  if (!(field_ == right.field_) || rows_ != right.rows_) throw ParameterError("hconcat: shape or field mismatch");
  Matrix out(field_, rows_, cols_ + right.cols_);
  for (std::size_t r = 0; r < rows_; ++r) {
    for (std::size_t c = 0; c < cols_; ++c) out.cells_[r * out.cols_ + c] = at(r, c);
    for (std::size_t c = 0; c < right.cols_; ++c) out.cells_[r * out.cols_ + cols_ + c] = right.at(r, c);
  }
  return out;
}

Matrix Matrix::vconcat(const Matrix& below) const {
  if (!(field_ == below.field_) || cols_ != below.cols_) throw ParameterError("vconcat: shape or field mismatch");
  Matrix out(field_, rows_ + below.rows_, cols_);
  std::copy(cells_.begin(), cells_.end(), out.cells_.begin());
  std::copy(below.cells_.begin(), below.cells_.end(), out.cells_.begin() + static_cast<std::ptrdiff_t>(cells_.size()));
  return out;
}

std::size_t rank(const Matrix& m) {
  const Field& f = m.field();
  const std::size_t rows = m.rows(), cols = m.cols();
  std::vector<Repr> a(rows * cols);
  for (std::size_t r = 0; r < rows; ++r)
    for (std::size_t c = 0; c < cols; ++c) a[r * cols + c] = m.at(r, c);

  std::size_t pivot_row = 0;
  for (std::size_t c = 0; c < cols && pivot_row < rows; ++c) {
    std::size_t p = pivot_row;
    while (p < rows && a[p * cols + c] == 0) ++p;
    if (p == rows) continue;
    if (p != pivot_row)
      for (std::size_t k = 0; k < cols; ++k) std::swap(a[p * cols + k], a[pivot_row * cols + k]);
    const Repr inv = f.inv(a[pivot_row * cols + c]);
    for (std::size_t r = pivot_row + 1; r < rows; ++r) {
      const Repr factor = f.mul(a[r * cols + c], inv);
      if (factor == 0) continue;
      for (std::size_t k = c; k < cols; ++k)
        a[r * cols + k] = f.sub(a[r * cols + k], f.mul(factor, a[pivot_row * cols + k]));
    }
    ++pivot_row;
  }
  return pivot_row;
}

bool columns_independent(const Matrix& m, std::span<const std::size_t> idx) {
  std::vector<bool> seen(m.cols(), false);
  for (std::size_t i : idx) {
    if (i >= m.cols()) throw ParameterError("column index " + std::to_string(i) + " out of range");
    if (seen[i]) throw ParameterError("duplicate column index " + std::to_string(i));
    seen[i] = true;
  }
  if (idx.empty()) return true;
  if (idx.size() > m.rows()) return false;
  return rank(m.select_columns(idx)) == idx.size();
}

std::vector<std::vector<Repr>> row_space(const Matrix& m, std::uint64_t max_cells) {
  const Field& f = m.field();
  const std::uint32_t q = f.order();
  const auto count = checked_pow(q, static_cast<unsigned>(m.rows()));
  if (!count || (m.cols() != 0 && *count > max_cells / m.cols()))
    throw CapExceeded("row space of a " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) + " matrix over " +
                      f.name() + " exceeds the cell cap of " + std::to_string(max_cells));

  std::vector<std::vector<Repr>> out;
  out.reserve(*count);
  std::vector<Repr> u(m.rows(), 0);
  for (std::uint64_t code = 0; code < *count; ++code) {
    std::vector<Repr> word(m.cols(), 0);
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (u[r] == 0) continue;
      for (std::size_t c = 0; c < m.cols(); ++c) word[c] = f.add(word[c], f.mul(u[r], m.at(r, c)));
    }
    out.push_back(std::move(word));
    // Increment u as a base-q counter with u_0 most significant.
    for (std::size_t r = m.rows(); r > 0; --r) {
      if (++u[r - 1] < q) break;
      u[r - 1] = 0;
    }
  }
  return out;
}

std::string to_text(const Matrix& m) {
  std::ostringstream os;
  os << "MAT " << m.rows() << ' ' << m.cols() << ' ' << m.field().order() << '\n';
  for (std::size_t r = 0; r < m.rows(); ++r) {
    for (std::size_t c = 0; c < m.cols(); ++c) os << (c ? " " : "") << m.at(r, c);
    os << '\n';
  }
  return os.str();
}

Matrix matrix_from_text(const std::string& text) {
  std::istringstream is(text);
  std::string tag;
  std::size_t rows = 0, cols = 0;
  std::uint64_t q = 0;
  if (!(is >> tag >> rows >> cols >> q) || tag != "MAT") throw ParseError("expected header `MAT rows cols q`");
  Field f = Field::of_order(q);
  std::vector<std::vector<Repr>> data(rows, std::vector<Repr>(cols));
  for (auto& row : data)
    for (auto& v : row) {
      long long x = 0;
      if (!(is >> x)) throw ParseError("matrix body is shorter than its header says");
      if (x < 0 || static_cast<std::uint64_t>(x) >= q) throw ParseError("matrix entry out of range: " + std::to_string(x));
      v = static_cast<Repr>(x);
    }
  std::string extra;
  if (is >> extra) throw ParseError("trailing data after matrix body");
  if (rows == 0) return Matrix(f, 0, cols);
  return Matrix(f, data);
}

}  // namespace rampkit
