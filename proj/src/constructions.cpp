#include <algorithm>

#include "rampkit/combinatorics.hpp"
#include "rampkit/designs.hpp"

namespace rampkit {

namespace {

std::string describe_columns(const std::vector<std::size_t>& cols) {
  std::string out = "(";
  for (std::size_t i = 0; i < cols.size(); ++i) out += (i ? "," : "") + std::to_string(cols[i] + 1);
  return out + ")";
}

}  // namespace

Matrix rs_generator(const Field& field, unsigned t) {
  const std::uint32_t q = field.order();
  if (t < 2 || t > q)
    throw ParameterError("rs_generator needs 2 <= t <= q, got t = " + std::to_string(t) + ", q = " + std::to_string(q));
  Matrix m(field, t, q + 1);
  m.set(0, 0, 1);
  for (Repr alpha = 1; alpha < q; ++alpha)
    for (unsigned r = 0; r < t; ++r) m.set(r, alpha, field.pow(alpha, r));
  m.set(t - 1, q, 1);
  return m;
}

std::optional<std::vector<std::size_t>> first_dependent_subset(const Matrix& m, std::size_t among, unsigned size,
                                                               std::span<const std::size_t> always,
                                                               std::uint64_t max_subsets) {
  if (binomial(among, size) > max_subsets)
    throw CapExceeded("C(" + std::to_string(among) + "," + std::to_string(size) +
                      ") column subsets exceeds the subset limit of " + std::to_string(max_subsets));
  std::optional<std::vector<std::size_t>> witness;
  for_each_subset(among, size, [&](const std::vector<std::size_t>& subset) {
    std::vector<std::size_t> cols = subset;
    cols.insert(cols.end(), always.begin(), always.end());
    if (columns_independent(m, cols)) return true;
    witness = std::move(cols);
    return false;
  });
  return witness;
}

OrthogonalArray oa_from_generator(const Matrix& m, unsigned t, const Limits& limits) {
  if (m.rows() != t) throw ParameterError("generator must have t = " + std::to_string(t) + " rows");
  if (m.cols() < t) throw ParameterError("generator needs at least t columns");
  if (auto bad = first_dependent_subset(m, m.cols(), t, {}, limits.max_subsets))
    throw DependentColumns("generator columns " + describe_columns(*bad) + " are linearly dependent", *bad);
  OrthogonalArray a(t, m.cols(), m.field().order(), row_space(m, limits.max_cells));
  a.canonicalize();
  return a;
}

AugmentedOA aoa_merge(const OrthogonalArray& a, unsigned s, const Limits& limits) {
  const unsigned t = a.t();
  if (s >= t) throw ParameterError("merge needs s < t");
  if (a.k() < std::size_t{t} + (t - s))
    throw ParameterError("merging " + std::to_string(t - s) + " columns leaves k = " +
                         std::to_string(a.k() - std::min<std::size_t>(a.k(), t - s)) + " < t = " + std::to_string(t));
  if (const auto verdict = verify_oa(a, limits); !verdict)
    throw ParameterError("input is not an orthogonal array: " + verdict.failure->message);

  std::vector<std::vector<Symbol>> rows;
  rows.reserve(a.num_rows());
  for (std::size_t i = 0; i < a.num_rows(); ++i) rows.emplace_back(a.row(i).begin(), a.row(i).end());
  AugmentedOA out(s, t, a.k() - (t - s), a.v(), std::move(rows));
  out.canonicalize();
  return out;
}

SplitResult aoa_split(const AugmentedOA& a, const Limits& limits) {
  std::vector<std::vector<Symbol>> rows;
  rows.reserve(a.num_rows());
  for (std::size_t i = 0; i < a.num_rows(); ++i) rows.emplace_back(a.row(i).begin(), a.row(i).end());
  OrthogonalArray split(a.t(), a.width(), a.v(), std::move(rows));
  split.canonicalize();
  Verdict verdict = verify_oa(split, limits);
  std::optional<ColumnRelation> relation;
  if (!verdict && verdict.failure->kind == Failure::Kind::TupleCount)
    relation = find_column_relation(split, verdict.failure->columns);
  return {std::move(split), std::move(verdict), std::move(relation)};
}

AugmentedOA linear_aoa(const Matrix& m, unsigned s, unsigned t, std::size_t k, const Limits& limits) {
  if (s >= t || t > k) throw ParameterError("linear AOA needs s < t <= k");
  if (m.rows() != t || m.cols() != k + (t - s))
    throw ParameterError("linear AOA needs a " + std::to_string(t) + " x " + std::to_string(k + (t - s)) + " matrix");

  if (auto bad = first_dependent_subset(m, k, t, {}, limits.max_subsets))
    throw DependentColumns("plain columns " + describe_columns(*bad) + " are linearly dependent", *bad);

  std::vector<std::size_t> tail;
  for (std::size_t c = k; c < m.cols(); ++c) tail.push_back(c);
  if (auto bad = first_dependent_subset(m, k, s, tail, limits.max_subsets))
    throw DependentColumns("columns " + describe_columns(*bad) + " (s plain plus the augmented block) are linearly dependent",
                           *bad);

  AugmentedOA out(s, t, k, m.field().order(), row_space(m, limits.max_cells));
  out.canonicalize();
  return out;
}

Matrix shamir_matrix(const Field& field, unsigned s, unsigned t, std::size_t k) {
  if (!(1 <= s && s < t && t <= k && k <= field.order()))
    throw ParameterError("Shamir matrix needs 1 <= s < t <= k <= q; got s=" + std::to_string(s) + " t=" +
                         std::to_string(t) + " k=" + std::to_string(k) + " q=" + std::to_string(field.order()));
  const Matrix m0 = rs_generator(field, t);
  std::vector<std::size_t> keep(k);
  for (std::size_t i = 0; i < k; ++i) keep[i] = i + 1;
  const Matrix m1 = m0.select_columns(keep);
  const Matrix m2 = Matrix::identity(field, t - s).vconcat(Matrix::zero(field, s, t - s));
  return m1.hconcat(m2);
}

AugmentedOA dual_aoa(const Matrix& n, unsigned s, unsigned t, const Limits& limits) {
  if (s >= t) throw ParameterError("dual construction needs s < t");
  if (n.rows() != t - s || n.cols() != t)
    throw ParameterError("dual construction needs a " + std::to_string(t - s) + " x " + std::to_string(t) + " matrix N");
  OrthogonalArray code(t - s, t, n.field().order(), row_space(n, limits.max_cells));
  if (const auto verdict = verify_oa(code, limits); !verdict)
    throw DependentColumns("row space of N is not an OA(" + std::to_string(t - s) + "," + std::to_string(t) + "," +
                               std::to_string(n.field().order()) + "): " + verdict.failure->message,
                           verdict.failure->columns);
  const Matrix m = Matrix::identity(n.field(), t).hconcat(n.transpose());
  return linear_aoa(m, s, t, t, limits);
}

AugmentedOA example_aoa_1333() {
  std::vector<std::vector<Symbol>> rows;
  for (Symbol a = 0; a < 3; ++a)
    for (Symbol b = 0; b < 3; ++b)
      for (Symbol c = 0; c < 3; ++c) rows.push_back({a, b, c, (a + b) % 3, (a + c) % 3});
  AugmentedOA out(1, 3, 3, 3, std::move(rows));
  out.canonicalize();
  return out;
}

NonexistenceReport nonexistence_witness(NonexistenceKind kind, std::uint64_t q, unsigned param, const Limits& limits) {
  const Field field = Field::of_order(q);
  switch (kind) {
    case NonexistenceKind::ShamirOddOrder: {
      const unsigned t = param;
      if (q % 2 == 0) throw ParameterError("this construction requires q odd, got q = " + std::to_string(q));
      if (t < 3 || t > q) throw ParameterError("this construction requires 3 <= t <= q");
      Matrix gen = shamir_matrix(field, 1, t, q);
      AugmentedOA aoa = linear_aoa(gen, 1, t, q, limits);
      Verdict verdict = verify_aoa(aoa, limits);
      return {std::move(gen), std::move(aoa), std::move(verdict), t, q + t - 1, bush_bound(t, q)};
    }
    case NonexistenceKind::DualRs: {
      const unsigned s = param;
      if (s + 1 > q) throw ParameterError("this construction requires s <= q - 1");
      const unsigned t = static_cast<unsigned>(q) + 1;
      // N spans an OA(t-s, t, q): Reed-Solomon when t-s <= q, the full space when s = 0.
      const Matrix n = t - s <= q ? rs_generator(field, t - s) : Matrix::identity(field, t);
      Matrix gen = Matrix::identity(field, t).hconcat(n.transpose());
      AugmentedOA aoa = dual_aoa(n, s, t, limits);
      Verdict verdict = verify_aoa(aoa, limits);
      return {std::move(gen), std::move(aoa), std::move(verdict), t, 2 * std::uint64_t{t} - s, bush_bound(t, q)};
    }
  }
  throw ParameterError("unknown construction kind");
}

}  // namespace rampkit
