#include "rampkit/ramp.hpp"

#include <algorithm>
#include <limits>
#include <random>
#include <set>
#include <sstream>

#include "rampkit/combinatorics.hpp"

namespace rampkit {

RampScheme::RampScheme(unsigned s, unsigned t, std::size_t n, std::uint32_t v, std::vector<DistributionRule> rules)
    : s_(s), t_(t), n_(n), v_(v), rules_(std::move(rules)) {
  if (!(s < t && t <= n)) throw ParameterError("ramp scheme needs 0 <= s < t <= n");
  if (v < 2) throw ParameterError("share alphabet needs v >= 2");
  if (rules_.empty()) throw ParameterError("ramp scheme needs at least one distribution rule");
  for (const auto& r : rules_) {
    if (r.shares.size() != n) throw ParameterError("rule has " + std::to_string(r.shares.size()) + " shares, expected n");
    if (r.secret.size() != t - s) throw ParameterError("secret must be a (t-s)-tuple");
    if (r.weight == 0) throw ParameterError("every rule needs a positive weight");
    for (Symbol x : r.shares)
      if (x >= v) throw ParameterError("share symbol out of range");
    for (Symbol x : r.secret)
      if (x >= v) throw ParameterError("secret symbol out of range");
  }
  std::sort(rules_.begin(), rules_.end(), [](const DistributionRule& a, const DistributionRule& b) {
    return std::tie(a.shares, a.secret) < std::tie(b.shares, b.secret);
  });
  for (std::size_t i = 1; i < rules_.size(); ++i)
    if (rules_[i].shares == rules_[i - 1].shares) throw ParameterError("distribution rules must be distinct");

  std::set<Secret> distinct;
  for (const auto& r : rules_) distinct.insert(r.secret);
  secrets_.assign(distinct.begin(), distinct.end());
}

bool RampScheme::ideal() const {
  const auto bound = checked_pow(v_, t_ - s_);
  return bound && secrets_.size() == *bound;
}

bool RampScheme::uniform_weights() const {
  return std::all_of(rules_.begin(), rules_.end(), [&](const auto& r) { return r.weight == rules_.front().weight; });
}

std::vector<std::size_t> RampScheme::rules_for(const Secret& secret) const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < rules_.size(); ++i)
    if (rules_[i].secret == secret) out.push_back(i);
  return out;
}

std::optional<std::size_t> RampScheme::secret_index(const Secret& secret) const {
  const auto it = std::lower_bound(secrets_.begin(), secrets_.end(), secret);
  if (it == secrets_.end() || *it != secret) return std::nullopt;
  return static_cast<std::size_t>(it - secrets_.begin());
}

void ShareBundle::add(std::size_t player, Symbol share) {
  if (player == 0) throw ParameterError("players are numbered from 1");
  if (!shares_.emplace(player, share).second)
    throw ParameterError("player " + std::to_string(player) + " appears twice");
}

std::string ShareBundle::to_text() const {
  std::ostringstream os;
  bool first = true;
  for (const auto& [player, share] : shares_) {
    os << (first ? "" : " ") << player << ':' << share;
    first = false;
  }
  return os.str();
}

namespace {

std::uint64_t parse_number(const std::string& tok, const char* what) {
  if (tok.empty() || tok.find_first_not_of("0123456789") != std::string::npos)
    throw ParseError(std::string("bad ") + what + " `" + tok + "`");
  try {
    return std::stoull(tok);
  } catch (const std::exception&) {
    throw ParseError(std::string(what) + " out of range: `" + tok + "`");
  }
}

Symbol parse_symbol(const std::string& tok) {
  const auto x = parse_number(tok, "symbol");
  if (x > std::numeric_limits<Symbol>::max()) throw ParseError("symbol out of range: `" + tok + "`");
  return static_cast<Symbol>(x);
}

// Uniform integer in [0, bound) by rejection; bound > 0.
std::uint64_t uniform_below(std::mt19937_64& gen, std::uint64_t bound) {
  const std::uint64_t threshold = (0 - bound) % bound;
  for (;;) {
    const std::uint64_t x = gen();
    if (x >= threshold) return x % bound;
  }
}

}  // namespace

ShareBundle ShareBundle::parse(const std::string& text) {
  ShareBundle b;
  std::istringstream is(text);
  for (std::string tok; is >> tok;) {
    const auto colon = tok.find(':');
    if (colon == std::string::npos) throw ParseError("expected `player:share`, got `" + tok + "`");
    b.add(parse_number(tok.substr(0, colon), "player"), parse_symbol(tok.substr(colon + 1)));
  }
  return b;
}

std::string secret_to_text(const Secret& secret) {
  std::string out;
  for (std::size_t i = 0; i < secret.size(); ++i) out += (i ? "," : "") + std::to_string(secret[i]);
  return out;
}

Secret secret_from_text(const std::string& text) {
  Secret out;
  std::istringstream is(text);
  for (std::string part; std::getline(is, part, ',');) out.push_back(parse_symbol(part));
  if (out.empty()) throw ParseError("empty secret");
  return out;
}

RampScheme scheme_from_aoa(const AugmentedOA& a, const Limits& limits) {
  if (const auto verdict = verify_aoa(a, limits); !verdict)
    throw ParameterError("input is not an augmented orthogonal array: " + verdict.failure->message);
  std::vector<DistributionRule> rules;
  rules.reserve(a.num_rows());
  for (std::size_t i = 0; i < a.num_rows(); ++i) {
    const auto plain = a.plain(i);
    const auto aug = a.augmented(i);
    rules.push_back({{plain.begin(), plain.end()}, {aug.begin(), aug.end()}, 1});
  }
  return RampScheme(a.s(), a.t(), a.k(), a.v(), std::move(rules));
}

RampScheme scheme_shamir(const Field& field, unsigned s, unsigned t, std::size_t n) {
  const std::uint32_t q = field.order();
  if (std::uint64_t{q} < std::uint64_t{n} + 1) throw ParameterError("polynomial scheme needs q >= n + 1");
  if (!(1 <= s && s < t && t <= n)) throw ParameterError("polynomial scheme needs 1 <= s < t <= n");
  const auto count = checked_pow(q, t);
  if (!count || *count > kDefaultMaxCells) throw CapExceeded("q^t distribution rules exceeds the enumeration cap");

  std::vector<DistributionRule> rules;
  rules.reserve(*count);
  for (std::uint64_t code = 0; code < *count; ++code) {
    const auto a = to_digits(code, q, t);
    DistributionRule rule;
    rule.shares.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
      const Repr x = static_cast<Repr>(j + 1);
      Repr sum = 0;
      for (unsigned i = 0; i < t; ++i) sum = field.add(sum, field.mul(a[i], field.pow(x, i)));
      rule.shares[j] = sum;
    }
    rule.secret.assign(a.begin(), a.begin() + (t - s));
    rules.push_back(std::move(rule));
  }
  return RampScheme(s, t, n, q, std::move(rules));
}

ShareBundle deal(const RampScheme& scheme, const Secret& secret, std::uint64_t seed) {
  const auto candidates = scheme.rules_for(secret);
  if (candidates.empty()) throw ParameterError("secret (" + secret_to_text(secret) + ") is not in the scheme");
  std::uint64_t total = 0;
  for (std::size_t i : candidates) total += scheme.rules()[i].weight;

  std::mt19937_64 gen(seed);
  std::uint64_t pick = uniform_below(gen, total);
  std::size_t chosen = candidates.back();
  for (std::size_t i : candidates) {
    const std::uint64_t w = scheme.rules()[i].weight;
    if (pick < w) {
      chosen = i;
      break;
    }
    pick -= w;
  }

  ShareBundle out;
  const auto& shares = scheme.rules()[chosen].shares;
  for (std::size_t j = 0; j < shares.size(); ++j) out.add(j + 1, shares[j]);
  return out;
}

Reconstruction reconstruct(const RampScheme& scheme, const ShareBundle& bundle) {
  if (bundle.size() < scheme.t())
    throw ParameterError("reconstruction needs at least t = " + std::to_string(scheme.t()) + " shares, got " +
                         std::to_string(bundle.size()));
  for (const auto& [player, share] : bundle.shares()) {
    if (player > scheme.n()) throw ParameterError("player " + std::to_string(player) + " is out of range");
    if (share >= scheme.v()) throw ParameterError("share " + std::to_string(share) + " is out of range");
  }

  Reconstruction out;
  std::set<Secret> found;
  for (const auto& rule : scheme.rules()) {
    const bool match = std::all_of(bundle.shares().begin(), bundle.shares().end(),
                                   [&](const auto& ps) { return rule.shares[ps.first - 1] == ps.second; });
    if (!match) continue;
    ++out.consistent_rules;
    found.insert(rule.secret);
  }
  out.candidates.assign(found.begin(), found.end());
  if (found.empty()) {
    out.status = Reconstruction::Status::Inconsistent;
  } else if (found.size() == 1) {
    out.status = Reconstruction::Status::Recovered;
    out.secret = *found.begin();
  } else {
    out.status = Reconstruction::Status::Ambiguous;
  }
  return out;
}

namespace {

std::string describe_view(const std::vector<std::size_t>& players, const std::vector<Symbol>& projection) {
  std::ostringstream os;
  os << '{';
  for (std::size_t i = 0; i < players.size(); ++i) os << (i ? " " : "") << players[i] << ':' << projection[i];
  os << '}';
  return os.str();
}

}  // namespace

AuditReport audit_security(const RampScheme& scheme, std::uint64_t max_work) {
  const auto& rules = scheme.rules();
  const auto& secrets = scheme.secrets();
  const std::size_t n = scheme.n();
  const unsigned s = scheme.s();
  const unsigned width = scheme.t() - s;

  std::uint64_t work = 0;
  for (unsigned i = 0; i <= s; ++i) work += binomial(n, i);
  if (scheme.ideal()) work += binomial(n, s) * binomial(n - s, width);
  if (work > max_work / rules.size())
    throw CapExceeded("security audit needs about " + std::to_string(work) + " x " + std::to_string(rules.size()) +
                      " rule visits, above the limit of " + std::to_string(max_work));

  std::vector<std::uint64_t> prior(secrets.size(), 0);
  std::vector<std::size_t> secret_of(rules.size());
  std::uint64_t total = 0;
  for (std::size_t r = 0; r < rules.size(); ++r) {
    secret_of[r] = *scheme.secret_index(rules[r].secret);
    prior[secret_of[r]] += rules[r].weight;
    total += rules[r].weight;
  }

  AuditReport report;
  report.bijection_checked = scheme.ideal();
  auto record = [&](const char* property, const std::vector<std::size_t>& subset, const std::vector<Symbol>& proj,
                    std::vector<std::uint64_t> weights, std::string message) {
    if (report.finding) return;
    std::vector<std::size_t> players;
    for (std::size_t p : subset) players.push_back(p + 1);
    report.finding = AuditFinding{property, std::move(players), proj, std::move(weights), std::move(message)};
  };

  for (unsigned size = 0; size <= s; ++size) {
    for_each_subset(n, size, [&](const std::vector<std::size_t>& subset) {
      std::map<std::vector<Symbol>, std::vector<std::size_t>> views;
      for (std::size_t r = 0; r < rules.size(); ++r) {
        std::vector<Symbol> proj;
        proj.reserve(size);
        for (std::size_t p : subset) proj.push_back(rules[r].shares[p]);
        views[std::move(proj)].push_back(r);
      }
      for (const auto& [proj, members] : views) {
        ++report.views;
        std::vector<std::uint64_t> weight(secrets.size(), 0), count(secrets.size(), 0);
        std::uint64_t view_total = 0;
        for (std::size_t r : members) {
          weight[secret_of[r]] += rules[r].weight;
          ++count[secret_of[r]];
          view_total += rules[r].weight;
        }
        std::vector<std::size_t> players1;
        for (std::size_t p : subset) players1.push_back(p + 1);

        for (std::size_t L = 0; L < secrets.size(); ++L) {
          if (count[L] != 0) continue;
          report.weak = false;
          report.perfect = false;
          record("weak", subset, proj, weight,
                 "view " + describe_view(players1, proj) + " rules out secret (" + secret_to_text(secrets[L]) + ")");
        }
        for (std::size_t L = 0; L < secrets.size(); ++L) {
          // Pr[K = L | view] == Pr[K = L], cross-multiplied.
          const auto lhs = static_cast<unsigned __int128>(weight[L]) * total;
          const auto rhs = static_cast<unsigned __int128>(prior[L]) * view_total;
          if (lhs != rhs) {
            report.perfect = false;
            record("perfect", subset, proj, weight,
                   "view " + describe_view(players1, proj) +
                       " changes the probability of secret (" + secret_to_text(secrets[L]) + ")");
          }
          if (count[L] != count[0]) report.equal_counts = false;
        }

        if (!report.bijection_checked || size != s) continue;
        // Every disjoint set of t-s further players must see a distinct tuple per secret.
        std::vector<std::size_t> rest;
        for (std::size_t p = 0; p < n; ++p)
          if (!std::binary_search(subset.begin(), subset.end(), p)) rest.push_back(p);
        for_each_subset(rest.size(), width, [&](const std::vector<std::size_t>& pick) {
          std::vector<std::optional<std::vector<Symbol>>> image(secrets.size());
          std::set<std::vector<Symbol>> seen;
          bool ok = true;
          for (std::size_t r : members) {
            std::vector<Symbol> tail;
            for (std::size_t i : pick) tail.push_back(rules[r].shares[rest[i]]);
            auto& slot = image[secret_of[r]];
            if (!slot) {
              slot = tail;
              ok = ok && seen.insert(tail).second;
            } else if (*slot != tail) {
              ok = false;
            }
          }
          if (ok) return true;
          report.bijection = false;
          std::string others;
          for (std::size_t i : pick) others += (others.empty() ? "" : ",") + std::to_string(rest[i] + 1);
          record("bijection", subset, proj, weight,
                 "view " + describe_view(players1, proj) +
                     " does not pair secrets one-to-one with the shares of players {" + others + "}");
          return false;
        });
      }
      return true;
    });
  }
  return report;
}

AugmentedOA aoa_from_scheme(const RampScheme& scheme) {
  if (!scheme.ideal())
    throw ParameterError("scheme is not ideal: " + std::to_string(scheme.secrets().size()) + " secrets");
  const auto expected = checked_pow(scheme.v(), scheme.t());
  if (!expected || scheme.rules().size() != *expected)
    throw ParameterError("an ideal scheme must have v^t rules, found " + std::to_string(scheme.rules().size()));
  std::vector<std::vector<Symbol>> rows;
  rows.reserve(scheme.rules().size());
  for (const auto& rule : scheme.rules()) {
    auto row = rule.shares;
    row.insert(row.end(), rule.secret.begin(), rule.secret.end());
    rows.push_back(std::move(row));
  }
  AugmentedOA out(scheme.s(), scheme.t(), scheme.n(), scheme.v(), std::move(rows));
  out.canonicalize();
  return out;
}

IdealBound ideal_bound_check(unsigned s, unsigned t, std::size_t n, std::uint64_t v, std::uint64_t secret_count) {
  if (!(s < t && t <= n)) throw ParameterError("needs 0 <= s < t <= n");
  if (v < 2) throw ParameterError("needs v >= 2");
  const auto bound = checked_pow(v, t - s).value_or(std::numeric_limits<std::uint64_t>::max());
  return {bound, secret_count <= bound, secret_count == bound};
}

}  // namespace rampkit
