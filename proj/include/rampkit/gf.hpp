#pragma once

#include <cstdint>
#include <memory>
#include <string>
#include <vector>

namespace rampkit {

// Integer encoding of a field element: the coefficient vector (c_0, ..., c_{j-1})
// read as a base-p number, sum c_i p^i. 0 and 1 are the additive and
// multiplicative identities.
using Repr = std::uint32_t;

class Element;

// GF(p^j). Cheap to copy; all copies share one immutable table set.
//
// Extension fields are built over the lexicographically smallest monic
// irreducible polynomial, comparing coefficients from the constant term up.
class Field {
 public:
  static constexpr std::uint64_t kMaxOrder = std::uint64_t{1} << 16;

  // Throws ParameterError if p is not prime, j < 1, or p^j > kMaxOrder.
  static Field make(std::uint32_t p, std::uint32_t j = 1);
  // Factors q as p^j; throws ParameterError if q is not a prime power.
  static Field of_order(std::uint64_t q);

  std::uint32_t characteristic() const;
  std::uint32_t degree() const;
  std::uint32_t order() const;
  // Coefficients c_0..c_j of the monic reducing polynomial; empty for prime fields.
  const std::vector<std::uint32_t>& reducing_poly() const;
  std::string name() const;

  Repr add(Repr a, Repr b) const;
  Repr sub(Repr a, Repr b) const;
  Repr neg(Repr a) const;
  Repr mul(Repr a, Repr b) const;
  // Throws ParameterError for a == 0.
  Repr inv(Repr a) const;
  Repr pow(Repr a, std::uint64_t e) const;

  bool contains(Repr a) const { return a < order(); }

  Element element(Repr r) const;
  Element zero() const;
  Element one() const;
  // All q elements in ascending repr order.
  std::vector<Element> elements() const;

  friend bool operator==(const Field& a, const Field& b);

 private:
  struct Impl;
  explicit Field(std::shared_ptr<const Impl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const Impl> impl_;
};

bool is_prime(std::uint64_t n);
// (p, j) with q = p^j, or (0, 0) when q is not a prime power.
std::pair<std::uint32_t, std::uint32_t> prime_power_factor(std::uint64_t q);

// Polynomials over GF(p), coefficients low degree first.
namespace poly {
std::vector<std::uint32_t> remainder(std::vector<std::uint32_t> f, const std::vector<std::uint32_t>& g, std::uint32_t p);
bool is_irreducible(const std::vector<std::uint32_t>& f, std::uint32_t p);
}  // namespace poly

// A field element bound to its field. Arithmetic across different fields throws.
class Element {
 public:
  Element(Field f, Repr r);

  const Field& field() const { return field_; }
  Repr repr() const { return repr_; }

  Element operator+(const Element& o) const;
  Element operator-(const Element& o) const;
  Element operator*(const Element& o) const;
  Element operator-() const;
  Element inv() const;
  Element pow(std::uint64_t e) const;

  friend bool operator==(const Element& a, const Element& b) {
    return a.field_ == b.field_ && a.repr_ == b.repr_;
  }

 private:
  const Field& same_field(const Element& o) const;

  Field field_;
  Repr repr_;
};

}  // namespace rampkit
