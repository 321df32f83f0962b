#include "rampkit/designs.hpp"

namespace rampkit {

BoundVerdict bush_bound(unsigned t, std::uint64_t v) {
  if (t < 2 || v < 2) throw ParameterError("Bush bound needs t >= 2 and v >= 2");
  // Each branch is an upper bound whenever its condition holds; take the tightest.
  BoundVerdict best;
  auto consider = [&](std::uint64_t k, const char* label) {
    if (best.case_label.empty() || k < best.max_k) best = {k, label, BoundStatus::Proven};
  };
  if (t == 2) consider(v + t - 1, "t = 2: v + t - 1");
  if (v % 2 == 0 && t >= 3 && t <= v) consider(v + t - 1, "v even, 3 <= t <= v: v + t - 1");
  if (v % 2 == 1 && t >= 3 && t <= v) consider(v + t - 2, "v odd, 3 <= t <= v: v + t - 2");
  if (t >= v) consider(std::uint64_t{t} + 1, "t >= v: t + 1");
  return best;
}

BoundVerdict mds_max(unsigned t, std::uint64_t q) {
  const auto [p, j] = prime_power_factor(q);
  if (p == 0) throw ParameterError(std::to_string(q) + " is not a prime power");
  if (t < 2) throw ParameterError("M(t, q) needs t >= 2");

  BoundVerdict out;
  if (t >= q) {
    out.max_k = std::uint64_t{t} + 1;
    out.case_label = "t >= q: t + 1";
  } else if (p == 2 && (t == 3 || t == q - 1)) {
    out.max_k = q + 2;
    out.case_label = "q a power of 2, t in {3, q-1}: q + 2";
  } else {
    out.max_k = q + 1;
    out.case_label = "q + 1";
  }
  const bool settled = j == 1 || q <= 27 || t <= 5 || std::uint64_t{t} + 3 >= q || t <= p;
  out.status = settled ? BoundStatus::Proven : BoundStatus::Conjectured;
  return out;
}

}  // namespace rampkit
