#include "rampkit/designs.hpp"

#include <algorithm>
#include <sstream>

#include "rampkit/combinatorics.hpp"

namespace rampkit {

namespace {

std::vector<Symbol> flatten(const std::vector<std::vector<Symbol>>& rows, std::size_t width, std::uint32_t v) {
  std::vector<Symbol> cells;
  cells.reserve(rows.size() * width);
  for (const auto& r : rows) {
    if (r.size() != width)
      throw ParameterError("row has " + std::to_string(r.size()) + " entries, expected " + std::to_string(width));
    for (Symbol x : r) {
      if (x >= v) throw ParameterError("symbol " + std::to_string(x) + " outside [0, " + std::to_string(v - 1) + "]");
      cells.push_back(x);
    }
  }
  return cells;
}

void sort_rows(std::vector<Symbol>& cells, std::size_t width) {
  if (width == 0) return;
  const std::size_t n = cells.size() / width;
  std::vector<std::size_t> order(n);
  for (std::size_t i = 0; i < n; ++i) order[i] = i;
  std::sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    return std::lexicographical_compare(cells.begin() + a * width, cells.begin() + (a + 1) * width,
                                        cells.begin() + b * width, cells.begin() + (b + 1) * width);
  });
  std::vector<Symbol> sorted;
  sorted.reserve(cells.size());
  for (std::size_t i : order) sorted.insert(sorted.end(), cells.begin() + i * width, cells.begin() + (i + 1) * width);
  cells = std::move(sorted);
}

std::string join_columns(const std::vector<std::size_t>& cols, std::size_t aug_index) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < cols.size(); ++i) {
    if (i) os << ',';
    if (cols[i] == aug_index) os << "aug";
    else os << cols[i] + 1;
  }
  os << ')';
  return os.str();
}

std::string join_tuple(const std::vector<Symbol>& tuple) {
  std::ostringstream os;
  os << '(';
  for (std::size_t i = 0; i < tuple.size(); ++i) os << (i ? "," : "") << tuple[i];
  os << ')';
  return os.str();
}

std::uint64_t expected_rows(std::uint32_t v, unsigned t) {
  const auto n = checked_pow(v, t);
  if (!n) throw CapExceeded("v^t overflows");
  return *n;
}

void check_cells(std::uint64_t rows, std::size_t width, const Limits& limits) {
  if (width != 0 && rows > limits.max_cells / width)
    throw CapExceeded("array of " + std::to_string(rows) + " x " + std::to_string(width) +
                      " cells exceeds the max-cells limit of " + std::to_string(limits.max_cells));
}

void check_subsets(std::size_t n, std::size_t k, const Limits& limits) {
  const auto c = binomial(n, k);
  if (c > limits.max_subsets)
    throw CapExceeded("C(" + std::to_string(n) + "," + std::to_string(k) + ") = " + std::to_string(c) +
                      " column subsets exceeds the subset limit of " + std::to_string(limits.max_subsets));
}

// For every `size`-subset S of columns [0, pool), project each row onto S
// followed by the `aug_width` columns starting at `aug_offset`, and require every
// tuple over [0, v-1] to appear exactly once. Codes are base-v, first column most significant.
template <typename RowFn>
Verdict check_projections(std::size_t num_rows, RowFn&& row, std::uint32_t v, std::size_t pool, unsigned size,
                          std::size_t aug_offset, std::size_t aug_width) {
  const std::size_t tuple_len = size + aug_width;
  const std::uint64_t codes = *checked_pow(v, static_cast<unsigned>(tuple_len));
  std::vector<std::uint32_t> counts(codes);
  std::optional<Failure> failure;

  for_each_subset(pool, size, [&](const std::vector<std::size_t>& subset) {
    std::fill(counts.begin(), counts.end(), 0);
    for (std::size_t i = 0; i < num_rows; ++i) {
      const auto r = row(i);
      std::uint64_t code = 0;
      for (std::size_t c : subset) code = code * v + r[c];
      for (std::size_t c = 0; c < aug_width; ++c) code = code * v + r[aug_offset + c];
      ++counts[code];
    }
    for (std::uint64_t code = 0; code < codes; ++code) {
      if (counts[code] == 1) continue;
      Failure f;
      f.kind = Failure::Kind::TupleCount;
      f.columns = subset;
      if (aug_width) f.columns.push_back(aug_offset);
      f.tuple = to_digits(code, v, tuple_len);
      f.occurrences = counts[code];
      f.message = "columns " + join_columns(f.columns, aug_width ? aug_offset : SIZE_MAX) +
                  (f.occurrences == 0 ? " miss tuple " : " repeat tuple ") + join_tuple(f.tuple) +
                  (f.occurrences ? " (" + std::to_string(f.occurrences) + " times)" : "");
      failure = std::move(f);
      return false;
    }
    return true;
  });
  return failure ? Verdict::fail(std::move(*failure)) : Verdict::pass();
}

Verdict structural(std::string message) {
  Failure f;
  f.kind = Failure::Kind::Structure;
  f.message = std::move(message);
  return Verdict::fail(std::move(f));
}

}  // namespace

OrthogonalArray::OrthogonalArray(unsigned t, std::size_t k, std::uint32_t v, std::vector<std::vector<Symbol>> rows)
    : t_(t), k_(k), v_(v) {
  if (t < 1) throw ParameterError("OA strength t must be at least 1");
  if (k < t) throw ParameterError("OA needs k >= t");
  if (v < 2) throw ParameterError("alphabet size v must be at least 2");
  cells_ = flatten(rows, k, v);
}

void OrthogonalArray::canonicalize() { sort_rows(cells_, k_); }

AugmentedOA::AugmentedOA(unsigned s, unsigned t, std::size_t k, std::uint32_t v, std::vector<std::vector<Symbol>> rows)
    : s_(s), t_(t), k_(k), v_(v) {
  if (s >= t) throw ParameterError("AOA needs s < t");
  if (k < t) throw ParameterError("AOA needs t <= k");
  if (v < 2) throw ParameterError("alphabet size v must be at least 2");
  cells_ = flatten(rows, width(), v);
}

void AugmentedOA::canonicalize() { sort_rows(cells_, width()); }

Verdict verify_oa(const OrthogonalArray& a, const Limits& limits) {
  const std::uint64_t n = expected_rows(a.v(), a.t());
  check_cells(n, a.k(), limits);
  check_subsets(a.k(), a.t(), limits);
  if (a.num_rows() != n)
    return structural("expected " + std::to_string(n) + " rows, found " + std::to_string(a.num_rows()));
  return check_projections(
      a.num_rows(), [&](std::size_t i) { return a.row(i); }, a.v(), a.k(), a.t(), 0, 0);
}

Verdict verify_mds(const OrthogonalArray& a) {
  if (a.t() == 0) throw ParameterError("MDS check needs t >= 1");
  const std::uint64_t n = expected_rows(a.v(), a.t());
  if (a.num_rows() != n)
    return structural("expected " + std::to_string(n) + " codewords, found " + std::to_string(a.num_rows()));
  const std::size_t need = a.k() - a.t() + 1;
  for (std::size_t i = 0; i < a.num_rows(); ++i) {
    const auto x = a.row(i);
    for (std::size_t j = i + 1; j < a.num_rows(); ++j) {
      const auto y = a.row(j);
      std::size_t d = 0;
      for (std::size_t c = 0; c < a.k() && d < need; ++c) d += x[c] != y[c];
      if (d < need) {
        Failure f;
        f.kind = Failure::Kind::Distance;
        f.row_a = i;
        f.row_b = j;
        f.message = "rows " + std::to_string(i + 1) + " and " + std::to_string(j + 1) + " are at distance " +
                    std::to_string(d) + " < " + std::to_string(need);
        return Verdict::fail(std::move(f));
      }
    }
  }
  return Verdict::pass();
}

Verdict verify_aoa(const AugmentedOA& a, const Limits& limits) {
  const std::uint64_t n = expected_rows(a.v(), a.t());
  check_cells(n, a.k() + 1, limits);
  check_subsets(a.k(), a.t(), limits);
  check_subsets(a.k(), a.s(), limits);
  if (a.num_rows() != n)
    return structural("expected " + std::to_string(n) + " rows, found " + std::to_string(a.num_rows()));
  auto row = [&](std::size_t i) { return a.row(i); };
  if (auto plain = check_projections(a.num_rows(), row, a.v(), a.k(), a.t(), 0, 0); !plain) {
    plain.failure->message = "plain columns: " + plain.failure->message;
    return plain;
  }
  auto joined = check_projections(a.num_rows(), row, a.v(), a.k(), a.s(), a.k(), a.aug_width());
  if (!joined) joined.failure->message = "augmented: " + joined.failure->message;
  return joined;
}

std::string ColumnRelation::describe() const {
  std::ostringstream os;
  os << "column " << dependent + 1 << " = ";
  bool first = true;
  for (std::size_t i = 0; i < terms.size(); ++i) {
    if (coefficients[i] == 0) continue;
    if (!first) os << " + ";
    first = false;
    if (coefficients[i] != 1) os << coefficients[i] << '*';
    os << "column " << terms[i] + 1;
  }
  if (first) os << '0';
  return os.str();
}

std::optional<ColumnRelation> find_column_relation(const OrthogonalArray& a, std::span<const std::size_t> columns) {
  const auto [p, j] = prime_power_factor(a.v());
  if (p == 0 || columns.empty()) return std::nullopt;
  const Field f = Field::make(p, j);
  const std::size_t m = columns.size();
  const auto space = checked_pow(a.v(), static_cast<unsigned>(m));
  if (!space || *space > 1'000'000) return std::nullopt;

  // Coefficient vectors whose last nonzero entry is 1, i.e. one per projective point.
  for (std::uint64_t code = 1; code < *space; ++code) {
    const auto c = to_digits(code, a.v(), m);
    std::size_t last = m;
    while (last > 0 && c[last - 1] == 0) --last;
    if (c[last - 1] != 1) continue;
    bool holds = true;
    for (std::size_t r = 0; r < a.num_rows() && holds; ++r) {
      const auto row = a.row(r);
      Repr sum = 0;
      for (std::size_t i = 0; i < m; ++i) sum = f.add(sum, f.mul(c[i], row[columns[i]]));
      holds = sum == 0;
    }
    if (!holds) continue;
    ColumnRelation rel;
    rel.dependent = columns[last - 1];
    for (std::size_t i = 0; i + 1 < last; ++i) {
      if (c[i] == 0) continue;
      rel.terms.push_back(columns[i]);
      rel.coefficients.push_back(f.neg(c[i]));
    }
    return rel;
  }
  return std::nullopt;
}

std::string to_text(const OrthogonalArray& a) {
  OrthogonalArray c = a;
  c.canonicalize();
  std::ostringstream os;
  os << "OA " << c.t() << ' ' << c.k() << ' ' << c.v() << '\n';
  for (std::size_t i = 0; i < c.num_rows(); ++i) {
    const auto r = c.row(i);
    for (std::size_t j = 0; j < r.size(); ++j) os << (j ? " " : "") << r[j];
    os << '\n';
  }
  return os.str();
}

std::string to_text(const AugmentedOA& a) {
  AugmentedOA c = a;
  c.canonicalize();
  std::ostringstream os;
  os << "AOA " << c.s() << ' ' << c.t() << ' ' << c.k() << ' ' << c.v() << '\n';
  for (std::size_t i = 0; i < c.num_rows(); ++i) {
    for (Symbol x : c.plain(i)) os << x << ' ';
    const auto aug = c.augmented(i);
    for (std::size_t j = 0; j < aug.size(); ++j) os << (j ? "," : "") << aug[j];
    os << '\n';
  }
  return os.str();
}

namespace {

std::uint64_t parse_uint(const std::string& tok) {
  if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError("expected a non-negative integer, got `" + tok + "`");
  try {
    return std::stoull(tok);
  } catch (const std::exception&) {
    throw ParseError("integer out of range: `" + tok + "`");
  }
}

std::vector<std::string> tokens(const std::string& line) {
  std::istringstream is(line);
  std::vector<std::string> out;
  for (std::string tok; is >> tok;) out.push_back(tok);
  return out;
}

unsigned small(std::uint64_t x, const char* what) {
  if (x > 1'000'000) throw ParseError(std::string(what) + " is implausibly large");
  return static_cast<unsigned>(x);
}

}  // namespace

std::variant<OrthogonalArray, AugmentedOA> array_from_text(const std::string& text) {
  std::istringstream is(text);
  std::vector<std::vector<std::string>> lines;
  for (std::string line; std::getline(is, line);) {
    auto toks = tokens(line);
    if (!toks.empty()) lines.push_back(std::move(toks));
  }
  if (lines.empty()) throw ParseError("empty array file");
  const auto& header = lines.front();

  if (header[0] == "OA") {
    if (header.size() != 4) throw ParseError("expected header `OA t k v`");
    const unsigned t = small(parse_uint(header[1]), "t");
    const std::size_t k = small(parse_uint(header[2]), "k");
    const auto v = small(parse_uint(header[3]), "v");
    std::vector<std::vector<Symbol>> rows;
    for (std::size_t i = 1; i < lines.size(); ++i) {
      if (lines[i].size() != k) throw ParseError("line " + std::to_string(i + 1) + ": expected " + std::to_string(k) + " symbols");
      std::vector<Symbol> row;
      for (const auto& tok : lines[i]) row.push_back(small(parse_uint(tok), "symbol"));
      rows.push_back(std::move(row));
    }
    OrthogonalArray a(t, k, v, std::move(rows));
    a.canonicalize();
    return a;
  }

  if (header[0] == "AOA") {
    if (header.size() != 5) throw ParseError("expected header `AOA s t k v`");
    const unsigned s = small(parse_uint(header[1]), "s");
    const unsigned t = small(parse_uint(header[2]), "t");
    const std::size_t k = small(parse_uint(header[3]), "k");
    const auto v = small(parse_uint(header[4]), "v");
    if (s >= t) throw ParseError("AOA header needs s < t");
    std::vector<std::vector<Symbol>> rows;
    for (std::size_t i = 1; i < lines.size(); ++i) {
      const auto& toks = lines[i];
      if (toks.size() != k + 1)
        throw ParseError("line " + std::to_string(i + 1) + ": expected " + std::to_string(k) + " symbols and a tuple");
      std::vector<Symbol> row;
      for (std::size_t j = 0; j < k; ++j) row.push_back(small(parse_uint(toks[j]), "symbol"));
      std::istringstream tuple(toks[k]);
      std::size_t parts = 0;
      for (std::string part; std::getline(tuple, part, ',');) {
        row.push_back(small(parse_uint(part), "symbol"));
        ++parts;
      }
      if (parts != t - s)
        throw ParseError("line " + std::to_string(i + 1) + ": augmented tuple needs " + std::to_string(t - s) + " entries");
      rows.push_back(std::move(row));
    }
    AugmentedOA a(s, t, k, v, std::move(rows));
    a.canonicalize();
    return a;
  }

  throw ParseError("unknown array header `" + header[0] + "`");
}

}  // namespace rampkit
