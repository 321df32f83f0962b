#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <variant>
#include <vector>

#include "rampkit/error.hpp"
#include "rampkit/linalg.hpp"

namespace rampkit {

using Symbol = std::uint32_t;

// Size limits for exhaustive verification. Exceeding either throws CapExceeded.
struct Limits {
  std::uint64_t max_cells = kDefaultMaxCells;  // v^t * (columns)
  std::uint64_t max_subsets = 100'000;          // column subsets examined per pass
};

// OA(t, k, v): rows of k symbols over [0, v-1]. The row count and the
// orthogonality property are not enforced here; verify_oa checks them.
class OrthogonalArray {
 public:
  OrthogonalArray(unsigned t, std::size_t k, std::uint32_t v, std::vector<std::vector<Symbol>> rows);

  unsigned t() const { return t_; }
  std::size_t k() const { return k_; }
  std::uint32_t v() const { return v_; }
  std::size_t num_rows() const { return k_ ? cells_.size() / k_ : 0; }
  std::span<const Symbol> row(std::size_t i) const { return {cells_.data() + i * k_, k_}; }

  // Sort rows ascending by their base-v encoding.
  void canonicalize();

  friend bool operator==(const OrthogonalArray&, const OrthogonalArray&) = default;

 private:
  unsigned t_;
  std::size_t k_;
  std::uint32_t v_;
  std::vector<Symbol> cells_;
};

// AOA(s, t, k, v): each row holds k plain symbols followed by the augmented
// symbol stored as an explicit (t-s)-tuple over [0, v-1].
class AugmentedOA {
 public:
  // Rows have k + (t - s) entries. Requires 0 <= s < t <= k and v >= 2.
  AugmentedOA(unsigned s, unsigned t, std::size_t k, std::uint32_t v, std::vector<std::vector<Symbol>> rows);

  unsigned s() const { return s_; }
  unsigned t() const { return t_; }
  std::size_t k() const { return k_; }
  std::uint32_t v() const { return v_; }
  std::size_t aug_width() const { return t_ - s_; }
  std::size_t width() const { return k_ + aug_width(); }
  std::size_t num_rows() const { return cells_.size() / width(); }

  std::span<const Symbol> row(std::size_t i) const { return {cells_.data() + i * width(), width()}; }
  std::span<const Symbol> plain(std::size_t i) const { return row(i).first(k_); }
  std::span<const Symbol> augmented(std::size_t i) const { return row(i).subspan(k_); }

  void canonicalize();

  friend bool operator==(const AugmentedOA&, const AugmentedOA&) = default;

 private:
  unsigned s_;
  unsigned t_;
  std::size_t k_;
  std::uint32_t v_;
  std::vector<Symbol> cells_;
};

// Why a verification failed. Column indices are 0-based; for AOA checks the
// index k stands for the augmented column.
struct Failure {
  enum class Kind { Structure, TupleCount, Distance };
  Kind kind = Kind::Structure;
  std::string message;
  std::vector<std::size_t> columns;
  std::vector<Symbol> tuple;       // offending tuple; AOA tuples list plain symbols then the augmented tuple
  std::size_t occurrences = 0;     // 0 = missing, > 1 = repeated
  std::size_t row_a = 0, row_b = 0;  // for Distance
};

struct Verdict {
  bool ok = true;
  std::optional<Failure> failure;

  explicit operator bool() const { return ok; }
  static Verdict pass() { return {}; }
  static Verdict fail(Failure f) { return {false, std::move(f)}; }
};

// Every t-subset of columns, in lexicographic order, must contain each t-tuple
// exactly once. Reports the first failing subset and the smallest bad tuple.
Verdict verify_oa(const OrthogonalArray& a, const Limits& limits = {});
// All pairwise Hamming distances are at least k - t + 1. Throws ParameterError when t == 0.
Verdict verify_mds(const OrthogonalArray& a);
// Plain columns form an OA(t, k, v), and every s plain columns joined with the
// augmented column contain each element of X^s x Y exactly once.
Verdict verify_aoa(const AugmentedOA& a, const Limits& limits = {});

// A linear relation among columns of an array read as vectors over GF(v):
// column `dependent` = sum coefficients[i] * column terms[i].
struct ColumnRelation {
  std::size_t dependent;
  std::vector<std::size_t> terms;
  std::vector<Repr> coefficients;

  // e.g. "column 4 = column 1 + column 2" (1-based).
  std::string describe() const;
};

// Searches GF(v) coefficient vectors for a relation among `columns`; nullopt
// when none exists, v is not a prime power, or the search space is too large.
std::optional<ColumnRelation> find_column_relation(const OrthogonalArray& a, std::span<const std::size_t> columns);

// Thrown when a generator matrix fails an independence condition.
class DependentColumns : public ParameterError {
 public:
  DependentColumns(std::string what, std::vector<std::size_t> witness)
      : ParameterError(std::move(what)), witness_(std::move(witness)) {}
  const std::vector<std::size_t>& witness() const { return witness_; }

 private:
  std::vector<std::size_t> witness_;
};

// t x (q+1) Reed-Solomon generator: e_1, then (1, a, a^2, ..., a^{t-1}) for each
// nonzero a in ascending repr order, then e_t. Requires 2 <= t <= q.
Matrix rs_generator(const Field& field, unsigned t);

// First t-subset of columns (lexicographic) that is dependent, if any.
// `always` columns are appended to every subset. Throws CapExceeded if C(among, size) > max_subsets.
std::optional<std::vector<std::size_t>> first_dependent_subset(const Matrix& m, std::size_t among, unsigned size,
                                                               std::span<const std::size_t> always = {},
                                                               std::uint64_t max_subsets = Limits{}.max_subsets);

// Linear OA whose rows are the row space of m. m must have t rows with every
// t columns independent; otherwise throws DependentColumns.
OrthogonalArray oa_from_generator(const Matrix& m, unsigned t, const Limits& limits = {});

// Merges the last t-s columns of a verified OA(t, k+t-s, v) into the augmented column.
AugmentedOA aoa_merge(const OrthogonalArray& a, unsigned s, const Limits& limits = {});

struct SplitResult {
  OrthogonalArray array;
  Verdict verdict;
  // When the split fails and the symbols can be read as GF(v) elements.
  std::optional<ColumnRelation> relation;
};

// Expands the augmented tuple into t-s plain columns and checks the result as an OA(t, k+t-s, v).
SplitResult aoa_split(const AugmentedOA& a, const Limits& limits = {});

// Linear AOA from a t x (k+t-s) matrix: every t of the first k columns, and
// every s of the first k columns together with the last t-s, must be independent.
AugmentedOA linear_aoa(const Matrix& m, unsigned s, unsigned t, std::size_t k, const Limits& limits = {});

// (M1 | M2) with M1 = columns 2..k+1 of rs_generator(field, t) and M2 = [I_{t-s}; 0].
// Requires 1 <= s < t <= k <= q.
Matrix shamir_matrix(const Field& field, unsigned s, unsigned t, std::size_t k);

// [I_t | N^T] fed to linear_aoa, where N is (t-s) x t and its row space is an OA(t-s, t, q).
AugmentedOA dual_aoa(const Matrix& n, unsigned s, unsigned t, const Limits& limits = {});

// The AOA(1,3,3,3) with rows (a, b, c, (a+b, a+c)) over GF(3).
AugmentedOA example_aoa_1333();

enum class BoundStatus { Proven, Conjectured };

struct BoundVerdict {
  std::uint64_t max_k = 0;
  std::string case_label;
  BoundStatus status = BoundStatus::Proven;
};

// Bush bound on k for an OA(t, k, v). When several branches apply the smallest wins.
BoundVerdict bush_bound(unsigned t, std::uint64_t v);
// M(t, q), the maximum length of a linear MDS code of dimension t over GF(q).
BoundVerdict mds_max(unsigned t, std::uint64_t q);

enum class NonexistenceKind {
  ShamirOddOrder,  // AOA(1, t, q, q) with q odd, 3 <= t <= q; no OA(t, q+t-1, q)
  DualRs,          // AOA(s, q+1, q+1, q), s <= q-1; no OA(q+1, 2(q+1)-s, q)
};

struct NonexistenceReport {
  Matrix generator;
  AugmentedOA aoa;
  Verdict verification;
  unsigned oa_strength = 0;
  std::uint64_t oa_columns = 0;  // k + t - s
  BoundVerdict bound;

  bool certified() const { return verification.ok && oa_columns > bound.max_k; }
};

// `param` is t for ShamirOddOrder and s for DualRs.
NonexistenceReport nonexistence_witness(NonexistenceKind kind, std::uint64_t q, unsigned param,
                                        const Limits& limits = {});

// Array file format: `OA t k v` or `AOA s t k v`, then one row per line; AOA
// rows end with the augmented tuple as comma-separated integers.
std::string to_text(const OrthogonalArray& a);
std::string to_text(const AugmentedOA& a);
std::variant<OrthogonalArray, AugmentedOA> array_from_text(const std::string& text);

}  // namespace rampkit
