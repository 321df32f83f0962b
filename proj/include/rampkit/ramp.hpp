#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "rampkit/designs.hpp"

namespace rampkit {

// A secret is a (t-s)-tuple over the share alphabet [0, v-1].
using Secret = std::vector<Symbol>;

struct DistributionRule {
  std::vector<Symbol> shares;  // one share per player, P_1..P_n
  Secret secret;
  std::uint64_t weight = 1;    // relative selection probability, > 0

  friend bool operator==(const DistributionRule&, const DistributionRule&) = default;
};

// An (s, t, n) ramp scheme given by its distribution rules. Immutable; rules
// are kept sorted by (shares, secret).
class RampScheme {
 public:
  // Requires 0 <= s < t <= n, v >= 2, distinct share vectors, positive weights,
  // and secrets of length t - s. Throws ParameterError otherwise.
  RampScheme(unsigned s, unsigned t, std::size_t n, std::uint32_t v, std::vector<DistributionRule> rules);

  unsigned s() const { return s_; }
  unsigned t() const { return t_; }
  std::size_t n() const { return n_; }
  std::uint32_t v() const { return v_; }
  const std::vector<DistributionRule>& rules() const { return rules_; }
  // The secret set K, ascending.
  const std::vector<Secret>& secrets() const { return secrets_; }

  // |K| == v^(t-s).
  bool ideal() const;
  bool uniform_weights() const;
  // Indices into rules() of D_secret.
  std::vector<std::size_t> rules_for(const Secret& secret) const;
  std::optional<std::size_t> secret_index(const Secret& secret) const;

  friend bool operator==(const RampScheme&, const RampScheme&) = default;

 private:
  unsigned s_;
  unsigned t_;
  std::size_t n_;
  std::uint32_t v_;
  std::vector<DistributionRule> rules_;
  std::vector<Secret> secrets_;
};

// Shares held by a subset of players, keyed by 1-based player index.
class ShareBundle {
 public:
  ShareBundle() = default;

  // Throws ParameterError for player 0 or a player already present.
  void add(std::size_t player, Symbol share);
  const std::map<std::size_t, Symbol>& shares() const { return shares_; }
  std::size_t size() const { return shares_.size(); }

  // `player:share` pairs separated by spaces, e.g. "1:0 3:2".
  std::string to_text() const;
  static ShareBundle parse(const std::string& text);

  friend bool operator==(const ShareBundle&, const ShareBundle&) = default;

 private:
  std::map<std::size_t, Symbol> shares_;
};

// One rule per AOA row: the k plain symbols are shares, the augmented tuple is
// the secret; uniform weights. Throws ParameterError unless the AOA verifies.
RampScheme scheme_from_aoa(const AugmentedOA& a, const Limits& limits = {});

// Polynomial ramp scheme: a rule for every a in GF(q)^t; player j holds
// sum a_i x_j^i with x_j the j-th nonzero element; secret (a_0, ..., a_{t-s-1}).
// Requires q >= n + 1 and 1 <= s < t <= n.
RampScheme scheme_shamir(const Field& field, unsigned s, unsigned t, std::size_t n);

// Picks a rule of D_secret with probability proportional to its weight, using
// mt19937_64 seeded with `seed` and rejection sampling, and returns all n shares.
ShareBundle deal(const RampScheme& scheme, const Secret& secret, std::uint64_t seed);

struct Reconstruction {
  enum class Status { Recovered, Inconsistent, Ambiguous };
  Status status = Status::Inconsistent;
  Secret secret;                  // set when Recovered
  std::vector<Secret> candidates; // every secret consistent with the bundle
  std::size_t consistent_rules = 0;
};

// Requires at least t shares (ParameterError otherwise). Ambiguous means the
// scheme itself is corrupt.
Reconstruction reconstruct(const RampScheme& scheme, const ShareBundle& shares);

struct AuditFinding {
  std::string property;
  std::vector<std::size_t> players;  // 1-based
  std::vector<Symbol> projection;
  std::vector<std::uint64_t> secret_weights;  // indexed like RampScheme::secrets()
  std::string message;
};

struct AuditReport {
  bool weak = true;         // every secret stays possible given <= s shares
  bool perfect = true;      // the conditional secret distribution equals the prior
  bool equal_counts = true; // every view leaves the same number of rules per secret
  bool bijection_checked = false;
  bool bijection = true;    // secret -> shares of t-s further players is a bijection onto X^(t-s)
  std::uint64_t views = 0;  // (player subset, projection) pairs examined
  std::optional<AuditFinding> finding;

  bool passed() const { return weak && perfect && (!bijection_checked || bijection); }
};

// Enumerates every player subset of size <= s and each projection the rules
// produce on it. The bijection check runs only for ideal schemes.
AuditReport audit_security(const RampScheme& scheme, std::uint64_t max_work = kDefaultMaxCells);

// One AOA row per rule: shares followed by the secret. Requires an ideal
// scheme with exactly v^t rules. The result is not verified here.
AugmentedOA aoa_from_scheme(const RampScheme& scheme);

struct IdealBound {
  std::uint64_t bound = 0;  // v^(t-s)
  bool ok = false;          // secret_count <= bound
  bool ideal = false;       // secret_count == bound
};

IdealBound ideal_bound_check(unsigned s, unsigned t, std::size_t n, std::uint64_t v, std::uint64_t secret_count);

std::string secret_to_text(const Secret& secret);
Secret secret_from_text(const std::string& text);

}  // namespace rampkit
