#include "rampkit/gf.hpp"


#include "rampkit/combinatorics.hpp"
#include "rampkit/error.hpp"

namespace rampkit {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

std::pair<std::uint32_t, std::uint32_t> prime_power_factor(std::uint64_t q) {
  if (q < 2) return {0, 0};
  std::uint64_t p = 2;
  while (q % p != 0) ++p;
  std::uint32_t j = 0;
  while (q % p == 0) {
    q /= p;
    ++j;
  }
  if (q != 1) return {0, 0};
  return {static_cast<std::uint32_t>(p), j};
}

namespace poly {

namespace {
void trim(std::vector<std::uint32_t>& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}
std::uint32_t inv_mod(std::uint32_t a, std::uint32_t p) {
  std::uint64_t r = 1, b = a % p;
  for (std::uint32_t e = p - 2; e; e >>= 1, b = b * b % p)
    if (e & 1) r = r * b % p;
  return static_cast<std::uint32_t>(r);
}
}  // namespace

std::vector<std::uint32_t> remainder(std::vector<std::uint32_t> f, const std::vector<std::uint32_t>& g_in, std::uint32_t p) {
  auto g = g_in;
  trim(f);
  trim(g);
  if (g.empty()) throw ParameterError("polynomial division by zero");
  const std::uint32_t lead_inv = inv_mod(g.back(), p);
  while (f.size() >= g.size()) {
    const std::uint64_t factor = std::uint64_t{f.back()} * lead_inv % p;
    const std::size_t shift = f.size() - g.size();
    for (std::size_t i = 0; i < g.size(); ++i) {
      const std::uint64_t sub = factor * g[i] % p;
      f[shift + i] = static_cast<std::uint32_t>((f[shift + i] + p - sub) % p);
    }
    trim(f);
  }
  return f;
}

bool is_irreducible(const std::vector<std::uint32_t>& f_in, std::uint32_t p) {
  auto f = f_in;
  trim(f);
  if (f.size() < 2) return false;
  const std::size_t deg = f.size() - 1;
  // Trial division by every monic polynomial of degree 1..deg/2.
  for (std::size_t m = 1; 2 * m <= deg; ++m) {
    const std::uint64_t count = *checked_pow(p, static_cast<unsigned>(m));
    for (std::uint64_t code = 0; code < count; ++code) {
      std::vector<std::uint32_t> d(m + 1, 0);
      std::uint64_t c = code;
      for (std::size_t i = 0; i < m; ++i, c /= p) d[i] = static_cast<std::uint32_t>(c % p);
      d[m] = 1;
      if (remainder(f, d, p).empty()) return false;
    }
  }
  return true;
}

}  // namespace poly

struct Field::Impl {
  std::uint32_t p = 0;
  std::uint32_t j = 0;
  std::uint32_t q = 0;
  std::vector<std::uint32_t> reducing;
  // Full operation tables, filled for q <= kTableLimit.
  std::vector<std::uint16_t> add_table;
  std::vector<std::uint16_t> mul_table;
  std::vector<std::uint16_t> inv_table;

  static constexpr std::uint32_t kTableLimit = 256;

  bool tabled() const { return !mul_table.empty(); }

  Repr add_slow(Repr a, Repr b) const {
    if (j == 1) return (a + b) % p;
    Repr out = 0, scale = 1;
    for (std::uint32_t i = 0; i < j; ++i, a /= p, b /= p, scale *= p) out += ((a % p + b % p) % p) * scale;
    return out;
  }

  Repr neg_slow(Repr a) const {
    if (j == 1) return (p - a % p) % p;
    Repr out = 0, scale = 1;
    for (std::uint32_t i = 0; i < j; ++i, a /= p, scale *= p) out += ((p - a % p) % p) * scale;
    return out;
  }

  Repr mul_slow(Repr a, Repr b) const {
    if (j == 1) return static_cast<Repr>(std::uint64_t{a} * b % p);
    std::vector<std::uint32_t> x(j), y(j), prod(2 * j - 1, 0);
    for (std::uint32_t i = 0; i < j; ++i, a /= p, b /= p) {
      x[i] = a % p;
      y[i] = b % p;
    }
    for (std::uint32_t i = 0; i < j; ++i)
      for (std::uint32_t k = 0; k < j; ++k)
        prod[i + k] = static_cast<std::uint32_t>((prod[i + k] + std::uint64_t{x[i]} * y[k]) % p);
    const auto r = poly::remainder(std::move(prod), reducing, p);
    Repr out = 0, scale = 1;
    for (std::size_t i = 0; i < r.size(); ++i, scale *= p) out += r[i] * scale;
    return out;
  }

  Repr pow_slow(Repr a, std::uint64_t e) const {
    Repr r = 1;
    for (; e; e >>= 1, a = mul_slow(a, a))
      if (e & 1) r = mul_slow(r, a);
    return r;
  }
};

namespace {

// Smallest monic irreducible of degree j, ordered by (c_0, c_1, ..., c_{j-1})
// lexicographically.
std::vector<std::uint32_t> smallest_irreducible(std::uint32_t p, std::uint32_t j) {
  const std::uint64_t count = *checked_pow(p, j);
  for (std::uint64_t code = 0; code < count; ++code) {
    // Most significant digit of `code` is c_0 so ascending code is lexicographic from c_0.
    const auto digits = to_digits(code, p, j);
    std::vector<std::uint32_t> f(digits.begin(), digits.end());
    f.push_back(1);
    if (poly::is_irreducible(f, p)) return f;
  }
  throw ParameterError("no irreducible polynomial found");  // unreachable for prime p
}

}  // namespace

Field Field::make(std::uint32_t p, std::uint32_t j) {
  if (!is_prime(p)) throw ParameterError("characteristic " + std::to_string(p) + " is not prime");
  if (j < 1) throw ParameterError("extension degree must be at least 1");
  const auto q = checked_pow(p, j);
  if (!q || *q > kMaxOrder)
    throw ParameterError("field order " + std::to_string(p) + "^" + std::to_string(j) + " exceeds the cap of " +
                         std::to_string(kMaxOrder));

  auto impl = std::make_shared<Impl>();
  impl->p = p;
  impl->j = j;
  impl->q = static_cast<std::uint32_t>(*q);
  if (j > 1) impl->reducing = smallest_irreducible(p, j);

  if (impl->q <= Impl::kTableLimit) {
    const std::uint32_t n = impl->q;
    impl->add_table.resize(std::size_t{n} * n);
    impl->mul_table.resize(std::size_t{n} * n);
    impl->inv_table.assign(n, 0);
    for (Repr a = 0; a < n; ++a)
      for (Repr b = 0; b < n; ++b) {
        impl->add_table[a * n + b] = static_cast<std::uint16_t>(impl->add_slow(a, b));
        const Repr m = impl->mul_slow(a, b);
        impl->mul_table[a * n + b] = static_cast<std::uint16_t>(m);
        if (m == 1) impl->inv_table[a] = static_cast<std::uint16_t>(b);
      }
  }
  return Field(std::move(impl));
}

Field Field::of_order(std::uint64_t q) {
  const auto [p, j] = prime_power_factor(q);
  if (p == 0) throw ParameterError(std::to_string(q) + " is not a prime power");
  return make(p, j);
}

std::uint32_t Field::characteristic() const { return impl_->p; }
std::uint32_t Field::degree() const { return impl_->j; }
std::uint32_t Field::order() const { return impl_->q; }
const std::vector<std::uint32_t>& Field::reducing_poly() const { return impl_->reducing; }

std::string Field::name() const { return "GF(" + std::to_string(impl_->q) + ")"; }

Repr Field::add(Repr a, Repr b) const {
  if (impl_->tabled()) return impl_->add_table[a * impl_->q + b];
  return impl_->add_slow(a, b);
}

Repr Field::neg(Repr a) const { return impl_->neg_slow(a); }

Repr Field::sub(Repr a, Repr b) const { return add(a, neg(b)); }

Repr Field::mul(Repr a, Repr b) const {
  if (impl_->tabled()) return impl_->mul_table[a * impl_->q + b];
  return impl_->mul_slow(a, b);
}

Repr Field::inv(Repr a) const {
  if (a == 0) throw ParameterError("inverse of zero in " + name());
  if (impl_->tabled()) return impl_->inv_table[a];
  return impl_->pow_slow(a, impl_->q - 2);
}

Repr Field::pow(Repr a, std::uint64_t e) const {
  Repr r = 1;
  for (; e; e >>= 1, a = mul(a, a))
    if (e & 1) r = mul(r, a);
  return r;
}

Element Field::element(Repr r) const {
  if (!contains(r))
    throw ParameterError("value " + std::to_string(r) + " is not an element of " + name());
  return Element(*this, r);
}

Element Field::zero() const { return Element(*this, 0); }
Element Field::one() const { return Element(*this, 1); }

std::vector<Element> Field::elements() const {
  std::vector<Element> out;
  out.reserve(order());
  for (Repr r = 0; r < order(); ++r) out.emplace_back(*this, r);
  return out;
}

bool operator==(const Field& a, const Field& b) {
  return a.impl_ == b.impl_ || (a.impl_->p == b.impl_->p && a.impl_->j == b.impl_->j);
}

Element::Element(Field f, Repr r) : field_(std::move(f)), repr_(r) {}

const Field& Element::same_field(const Element& o) const {
  if (!(field_ == o.field_))
    throw ParameterError("operands belong to different fields: " + field_.name() + " and " + o.field_.name());
  return field_;
}

Element Element::operator+(const Element& o) const { return Element(field_, same_field(o).add(repr_, o.repr_)); }
Element Element::operator-(const Element& o) const { return Element(field_, same_field(o).sub(repr_, o.repr_)); }
Element Element::operator*(const Element& o) const { return Element(field_, same_field(o).mul(repr_, o.repr_)); }
Element Element::operator-() const { return Element(field_, field_.neg(repr_)); }
Element Element::inv() const { return Element(field_, field_.inv(repr_)); }
Element Element::pow(std::uint64_t e) const { return Element(field_, field_.pow(repr_, e)); }

}  // namespace rampkit
