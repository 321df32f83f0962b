#pragma once

#include <cstdint>
#include <limits>
#include <optional>
#include <vector>

namespace rampkit {

// base^exp, or nullopt on 64-bit overflow.
inline std::optional<std::uint64_t> checked_pow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  for (unsigned i = 0; i < exp; ++i) {
    if (base != 0 && r > std::numeric_limits<std::uint64_t>::max() / base) return std::nullopt;
    r *= base;
  }
  return r;
}

// C(n, k), saturating at uint64 max.
inline std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  if (k > n - k) k = n - k;
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    const std::uint64_t num = n - k + i;
    if (r > std::numeric_limits<std::uint64_t>::max() / num) return std::numeric_limits<std::uint64_t>::max();
    r = r * num / i;
  }
  return r;
}

// Walks the k-subsets of {0, ..., n-1} in lexicographic order.
//
//   SubsetIterator it(5, 3);
//   do { use(it.current()); } while (it.next());
class SubsetIterator {
 public:
  SubsetIterator(std::size_t n, std::size_t k) : n_(n), idx_(k) {
    for (std::size_t i = 0; i < k; ++i) idx_[i] = i;
    valid_ = k <= n;
  }

  bool valid() const { return valid_; }
  const std::vector<std::size_t>& current() const { return idx_; }

  bool next() {
    const std::size_t k = idx_.size();
    std::size_t i = k;
    while (i > 0) {
      --i;
      if (idx_[i] < n_ - k + i) {
        ++idx_[i];
        for (std::size_t j = i + 1; j < k; ++j) idx_[j] = idx_[j - 1] + 1;
        return true;
      }
    }
    valid_ = false;
    return false;
  }

 private:
  std::size_t n_;
  std::vector<std::size_t> idx_;
  bool valid_;
};

// Calls fn(subset) for every k-subset of {0..n-1} in lexicographic order;
// stops early when fn returns false. Returns false iff stopped early.
template <typename Fn>
bool for_each_subset(std::size_t n, std::size_t k, Fn&& fn) {
  SubsetIterator it(n, k);
  if (!it.valid()) return true;
  do {
    if (!fn(it.current())) return false;
  } while (it.next());
  return true;
}

// Base-`radix` digits of `value`, most significant first, padded to `width`.
inline std::vector<std::uint32_t> to_digits(std::uint64_t value, std::uint32_t radix, std::size_t width) {
  std::vector<std::uint32_t> d(width, 0);
  for (std::size_t i = width; i > 0; --i) {
    d[i - 1] = static_cast<std::uint32_t>(value % radix);
    value /= radix;
  }
  return d;
}

}  // namespace rampkit
