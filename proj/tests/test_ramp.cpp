#include <doctest.h>

#include <algorithm>
#include <map>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "rampkit/ramp.hpp"

using namespace rampkit;

namespace {

std::vector<RampScheme> test_schemes() {
  const Field f5 = Field::make(5), f7 = Field::make(7), f4 = Field::make(2, 2);
  return {
      scheme_from_aoa(example_aoa_1333()),
      scheme_shamir(f5, 1, 2, 3),
      scheme_shamir(f5, 2, 3, 4),
      scheme_shamir(f4, 1, 3, 3),
      scheme_shamir(f7, 1, 3, 4),
      scheme_from_aoa(aoa_merge(oa_from_generator(rs_generator(Field::make(3), 2), 2), 0)),
  };
}

Secret secret_of_view(const DistributionRule& r) { return r.secret; }

}  // namespace

TEST_CASE("scheme_from_aoa") {
  const auto sch = scheme_from_aoa(example_aoa_1333());
  CHECK(sch.rules().size() == 27);
  CHECK(sch.secrets().size() == 9);
  CHECK(sch.ideal());
  CHECK(sch.uniform_weights());
  for (const auto& k : sch.secrets()) CHECK(sch.rules_for(k).size() == 3);

  const auto threshold = scheme_from_aoa(aoa_merge(oa_from_generator(rs_generator(Field::make(5), 2), 2), 1));
  CHECK(threshold.secrets().size() == 5);
  CHECK(threshold.ideal());

  const auto a2443 = linear_aoa(
      Matrix(Field::make(3), {{1, 0, 0, 0, 1, 0}, {0, 1, 0, 0, 1, 1}, {0, 0, 1, 0, 1, 2}, {0, 0, 0, 1, 0, 1}}), 2, 4, 4);
  const auto big = scheme_from_aoa(a2443);
  CHECK(big.secrets().size() == 9);
  for (const auto& k : big.secrets()) CHECK(big.rules_for(k).size() == 9);

  auto rows = std::vector<std::vector<Symbol>>();
  const auto a = example_aoa_1333();
  for (std::size_t i = 0; i < a.num_rows(); ++i) rows.emplace_back(a.row(i).begin(), a.row(i).end());
  rows[0][4] = 1;
  CHECK_THROWS_AS(scheme_from_aoa(AugmentedOA(1, 3, 3, 3, rows)), ParameterError);
}

TEST_CASE("scheme_shamir") {
  const Field f5 = Field::make(5);
  const auto sch = scheme_shamir(f5, 1, 2, 3);
  CHECK(sch.rules().size() == 25);
  CHECK(sch.secrets().size() == 5);
  // Constant term is the secret: shares at x = 1..3 of a_0 + a_1 x.
  for (const auto& r : sch.rules()) {
    const Symbol a1 = (r.shares[1] + 5 - r.shares[0]) % 5;
    CHECK(r.secret == Secret{(r.shares[0] + 5 - a1) % 5});
    CHECK(r.shares[2] == (r.secret[0] + 3 * a1) % 5);
  }

  const auto tiny = scheme_shamir(Field::make(3), 1, 2, 2);
  CHECK(tiny.rules().front().shares == std::vector<Symbol>{0, 0});
  CHECK(tiny.rules().front().secret == Secret{0});

  // a = (1,2,1) over GF(5): shares 1+2x+x^2 at x = 1,2,3.
  const auto quad = scheme_shamir(f5, 1, 3, 3);
  bool found = false;
  for (const auto& r : quad.rules())
    if (r.shares == std::vector<Symbol>{4, 4, 1}) {
      CHECK(r.secret == Secret{1, 2});
      found = true;
    }
  CHECK(found);

  CHECK_THROWS_AS(scheme_shamir(Field::make(3), 1, 2, 3), ParameterError);
  CHECK_THROWS_AS(scheme_shamir(f5, 0, 2, 3), ParameterError);
  CHECK_THROWS_AS(scheme_shamir(f5, 2, 2, 3), ParameterError);
  CHECK_THROWS_AS(scheme_shamir(f5, 1, 4, 3), ParameterError);
}

TEST_CASE("RampScheme validation") {
  using R = DistributionRule;
  CHECK_THROWS_AS(RampScheme(1, 1, 2, 2, {R{{0, 0}, {}, 1}}), ParameterError);
  CHECK_THROWS_AS(RampScheme(0, 1, 2, 2, {R{{0, 0}, {0}, 0}}), ParameterError);
  CHECK_THROWS_AS(RampScheme(0, 1, 2, 2, {R{{0, 0}, {0}, 1}, R{{0, 0}, {1}, 1}}), ParameterError);
  CHECK_THROWS_AS(RampScheme(0, 1, 2, 2, {R{{0, 2}, {0}, 1}}), ParameterError);
  CHECK_THROWS_AS(RampScheme(0, 1, 2, 2, {R{{0, 0}, {0, 0}, 1}}), ParameterError);
  CHECK_THROWS_AS(RampScheme(0, 1, 2, 2, {R{{0}, {0}, 1}}), ParameterError);
  const RampScheme ok(0, 1, 2, 2, {R{{1, 1}, {1}, 1}, R{{0, 0}, {0}, 1}});
  CHECK(ok.rules().front().shares == std::vector<Symbol>{0, 0});
  CHECK(ok.secret_index({1}) == 1u);
  CHECK_FALSE(ok.secret_index({0, 1}).has_value());
}

TEST_CASE("deal") {
  const auto sch = scheme_from_aoa(example_aoa_1333());
  std::set<std::vector<Symbol>> seen;
  for (std::uint64_t seed = 0; seed < 200; ++seed) {
    const auto b = deal(sch, {0, 0}, seed);
    std::vector<Symbol> shares;
    for (const auto& [p, x] : b.shares()) shares.push_back(x);
    seen.insert(shares);
  }
  CHECK(seen == std::set<std::vector<Symbol>>{{0, 0, 0}, {1, 2, 2}, {2, 1, 1}});

  CHECK(deal(sch, {1, 2}, 42) == deal(sch, {1, 2}, 42));
  CHECK_THROWS_AS(deal(sch, {1}, 0), ParameterError);
  CHECK_THROWS_AS(deal(sch, {3, 0}, 0), ParameterError);

  // s = 0: one rule per secret.
  const auto single = scheme_from_aoa(aoa_merge(oa_from_generator(rs_generator(Field::make(3), 2), 2), 0));
  for (const auto& k : single.secrets()) {
    const auto idx = single.rules_for(k);
    REQUIRE(idx.size() == 1);
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const auto b = deal(single, k, seed);
      CHECK(b.shares().at(1) == single.rules()[idx[0]].shares[0]);
      CHECK(b.shares().at(2) == single.rules()[idx[0]].shares[1]);
    }
  }
}

TEST_CASE("deal respects weights") {
  using R = DistributionRule;
  const RampScheme sch(1, 2, 2, 2, {R{{0, 0}, {0}, 3}, R{{1, 1}, {0}, 1}, R{{0, 1}, {1}, 1}, R{{1, 0}, {1}, 1}});
  int heavy = 0;
  const int trials = 4000;
  for (int seed = 0; seed < trials; ++seed) heavy += deal(sch, {0}, seed).shares().at(1) == 0;
  CHECK(heavy > trials * 0.70);
  CHECK(heavy < trials * 0.80);
}

TEST_CASE("reconstruct round trip over every secret and 10 seeds") {
  for (const auto& sch : test_schemes()) {
    for (const auto& k : sch.secrets())
      for (std::uint64_t seed = 0; seed < 10; ++seed) {
        const auto r = reconstruct(sch, deal(sch, k, seed));
        REQUIRE(r.status == Reconstruction::Status::Recovered);
        REQUIRE(r.secret == k);
        REQUIRE(r.consistent_rules == 1);
      }
  }
}

TEST_CASE("reconstruct on the AOA(1,3,3,3) scheme") {
  const auto sch = scheme_from_aoa(example_aoa_1333());
  for (Symbol a = 0; a < 3; ++a)
    for (Symbol b = 0; b < 3; ++b)
      for (Symbol c = 0; c < 3; ++c) {
        ShareBundle bundle;
        bundle.add(1, a);
        bundle.add(2, b);
        bundle.add(3, c);
        const auto r = reconstruct(sch, bundle);
        REQUIRE(r.status == Reconstruction::Status::Recovered);
        CHECK(r.secret == Secret{(a + b) % 3, (a + c) % 3});
      }
}

TEST_CASE("reconstruct reports inconsistency and too few shares") {
  const Field f3 = Field::make(3);
  const auto a = linear_aoa(shamir_matrix(f3, 1, 2, 3), 1, 2, 3);
  const auto sch = scheme_from_aoa(a);
  std::set<std::vector<Symbol>> used;
  for (const auto& r : sch.rules()) used.insert(r.shares);
  // Smallest share vector that is not a row.
  std::vector<Symbol> missing;
  for (std::uint64_t code = 0; code < 27 && missing.empty(); ++code) {
    std::vector<Symbol> v{Symbol(code / 9), Symbol(code / 3 % 3), Symbol(code % 3)};
    if (!used.count(v)) missing = v;
  }
  REQUIRE_FALSE(missing.empty());
  ShareBundle bundle;
  for (std::size_t j = 0; j < 3; ++j) bundle.add(j + 1, missing[j]);
  const auto r = reconstruct(sch, bundle);
  CHECK(r.status == Reconstruction::Status::Inconsistent);
  CHECK(r.candidates.empty());

  ShareBundle one;
  one.add(1, 0);
  CHECK_THROWS_AS(reconstruct(sch, one), ParameterError);
  ShareBundle far;
  far.add(1, 0);
  far.add(7, 0);
  CHECK_THROWS_AS(reconstruct(sch, far), ParameterError);
}

TEST_CASE("reconstruction is monotone in the bundle") {
  std::mt19937_64 rng(11);
  for (const auto& sch : test_schemes()) {
    const auto& k = sch.secrets()[rng() % sch.secrets().size()];
    const auto full = deal(sch, k, rng());
    for (const auto& base : oracle::all_subsets(sch.n(), sch.t())) {
      for (std::size_t extra = sch.t(); extra <= sch.n(); ++extra) {
        ShareBundle b;
        for (std::size_t p : base) b.add(p + 1, full.shares().at(p + 1));
        for (std::size_t p = 0; b.size() < extra; ++p)
          if (!b.shares().count(p + 1)) b.add(p + 1, full.shares().at(p + 1));
        const auto r = reconstruct(sch, b);
        REQUIRE(r.status == Reconstruction::Status::Recovered);
        REQUIRE(r.secret == k);
      }
    }
  }
}

TEST_CASE("random reconstructs never turn ambiguous on valid schemes") {
  const auto schemes = test_schemes();
  std::mt19937_64 rng(2024);
  int ambiguous = 0;
  for (int i = 0; i < 10000; ++i) {
    const auto& sch = schemes[rng() % schemes.size()];
    const auto& rule = sch.rules()[rng() % sch.rules().size()];
    std::vector<std::size_t> players(sch.n());
    std::iota(players.begin(), players.end(), 1);
    std::shuffle(players.begin(), players.end(), rng);
    const std::size_t take = sch.t() + rng() % (sch.n() - sch.t() + 1);
    ShareBundle b;
    for (std::size_t j = 0; j < take; ++j) b.add(players[j], rule.shares[players[j] - 1]);
    const auto r = reconstruct(sch, b);
    ambiguous += r.status == Reconstruction::Status::Ambiguous;
    REQUIRE(r.secret == rule.secret);
  }
  CHECK(ambiguous == 0);

  using R = DistributionRule;
  const RampScheme corrupt(0, 1, 2, 2, {R{{0, 0}, {0}, 1}, R{{0, 1}, {1}, 1}});
  ShareBundle b;
  b.add(1, 0);
  const auto r = reconstruct(corrupt, b);
  CHECK(r.status == Reconstruction::Status::Ambiguous);
  CHECK(r.candidates == std::vector<Secret>{{0}, {1}});
}

TEST_CASE("audit_security passes on valid schemes") {
  for (const auto& sch : test_schemes()) {
    const auto report = audit_security(sch);
    CHECK(report.weak);
    CHECK(report.perfect);
    CHECK(report.equal_counts);
    CHECK(report.bijection_checked);
    CHECK(report.bijection);
    CHECK(report.passed());
    CHECK_FALSE(report.finding.has_value());
    CHECK(report.views > 0);
  }
}

TEST_CASE("per-view counts match a direct enumeration") {
  const auto sch = scheme_from_aoa(example_aoa_1333());
  // Player 1 holds 0: the 9 rules with alpha = 0 cover each secret once.
  std::map<Secret, int> count;
  for (const auto& r : sch.rules())
    if (r.shares[0] == 0) ++count[secret_of_view(r)];
  CHECK(count.size() == 9);
  for (const auto& [k, c] : count) CHECK(c == 1);

  // Every scheme from a verified AOA: fixing any s players' shares leaves one rule per secret.
  for (const auto& sch2 : test_schemes()) {
    const unsigned s = sch2.s();
    for (const auto& players : oracle::all_subsets(sch2.n(), s)) {
      std::map<std::vector<Symbol>, std::map<Secret, int>> views;
      for (const auto& r : sch2.rules()) {
        std::vector<Symbol> proj;
        for (std::size_t p : players) proj.push_back(r.shares[p]);
        ++views[proj][r.secret];
      }
      REQUIRE(views.size() == oracle::ipow(sch2.v(), s));
      for (const auto& [proj, per_secret] : views) {
        REQUIRE(per_secret.size() == sch2.secrets().size());
        for (const auto& [k, c] : per_secret) REQUIRE(c == 1);
      }
    }
  }
}

TEST_CASE("audit_security negative controls") {
  // Swap the secrets of two rules: shares stay distinct but the view counts break.
  const auto good = scheme_from_aoa(example_aoa_1333());
  auto rules = good.rules();
  std::swap(rules[0].secret, rules[1].secret);
  rules[2].secret = rules[0].secret;
  const RampScheme bad(1, 3, 3, 3, rules);
  const auto report = audit_security(bad);
  CHECK_FALSE(report.passed());
  REQUIRE(report.finding.has_value());
  CHECK(report.finding->players.size() <= 1);
  CHECK(report.finding->secret_weights.size() == bad.secrets().size());
  CHECK_FALSE(report.finding->message.empty());

  // A secret that a single share rules out fails the weak property.
  using R = DistributionRule;
  const RampScheme leaky(1, 2, 2, 2, {R{{0, 0}, {0}, 1}, R{{0, 1}, {0}, 1}, R{{1, 0}, {1}, 1}, R{{1, 1}, {1}, 1}});
  const auto leak = audit_security(leaky);
  CHECK_FALSE(leak.weak);
  CHECK(leak.finding->property == "weak");
  CHECK(leak.finding->players == std::vector<std::size_t>{1});
  CHECK_THROWS_AS(audit_security(scheme_shamir(Field::make(7), 1, 3, 4), 10), CapExceeded);
}

TEST_CASE("weights proportional to a secret prior stay perfect") {
  const auto base = scheme_shamir(Field::make(5), 1, 2, 3);
  auto rules = base.rules();
  // Pr[d] proportional to Pr[K = L]: weight L + 1 on every rule of D_L.
  for (auto& r : rules) r.weight = r.secret[0] + 1;
  const RampScheme prior(1, 2, 3, 5, rules);
  CHECK_FALSE(prior.uniform_weights());
  const auto ok = audit_security(prior);
  CHECK(ok.perfect);
  CHECK(ok.passed());

  // Weights that vary inside D_L leak information.
  auto skewed = base.rules();
  for (std::size_t i = 0; i < skewed.size(); ++i) skewed[i].weight = 1 + (skewed[i].shares[0] == 0 ? 4 : 0) * (skewed[i].secret[0] == 0);
  const auto report = audit_security(RampScheme(1, 2, 3, 5, skewed));
  CHECK(report.weak);
  CHECK_FALSE(report.perfect);
  CHECK(report.finding->property == "perfect");
}

TEST_CASE("aoa_from_scheme") {
  const Field f3 = Field::make(3), f5 = Field::make(5);
  const auto a = aoa_from_scheme(scheme_shamir(f3, 1, 2, 2));
  CHECK(verify_aoa(a).ok);
  const auto b = aoa_from_scheme(scheme_shamir(f5, 2, 3, 4));
  CHECK(b.num_rows() == 125);
  CHECK(verify_aoa(b).ok);

  const auto ex = example_aoa_1333();
  CHECK(aoa_from_scheme(scheme_from_aoa(ex)) == ex);
  for (const auto& sch : test_schemes()) CHECK(scheme_from_aoa(aoa_from_scheme(sch)) == sch);

  using R = DistributionRule;
  const RampScheme few(0, 1, 2, 2, {R{{0, 0}, {0}, 1}});
  CHECK_THROWS_AS(aoa_from_scheme(few), ParameterError);
  const RampScheme extra(0, 1, 2, 2, {R{{0, 0}, {0}, 1}, R{{1, 1}, {1}, 1}, R{{0, 1}, {1}, 1}});
  CHECK_THROWS_AS(aoa_from_scheme(extra), ParameterError);
}

TEST_CASE("threshold polynomial schemes split into full OAs") {
  for (const auto& [q, t, n] : std::vector<std::tuple<unsigned, unsigned, std::size_t>>{{3, 2, 2}, {5, 2, 4}, {5, 3, 4}, {7, 3, 6}}) {
    const auto sch = scheme_shamir(Field::make(q), t - 1, t, n);
    const auto r = aoa_split(aoa_from_scheme(sch));
    CAPTURE(q);
    CAPTURE(t);
    CHECK(r.verdict.ok);
    CHECK(r.array.k() == n + 1);
    CHECK(oracle::is_oa([&] {
      std::vector<oracle::Row> rows;
      for (std::size_t i = 0; i < r.array.num_rows(); ++i) rows.emplace_back(r.array.row(i).begin(), r.array.row(i).end());
      return rows;
    }(), t, n + 1, q));
  }
}

TEST_CASE("ideal_bound_check") {
  auto c = ideal_bound_check(1, 3, 3, 3, 9);
  CHECK(c.ok);
  CHECK(c.ideal);
  CHECK(c.bound == 9);
  c = ideal_bound_check(1, 3, 3, 3, 10);
  CHECK_FALSE(c.ok);
  CHECK_FALSE(c.ideal);
  c = ideal_bound_check(2, 3, 4, 5, 5);
  CHECK(c.ideal);
  c = ideal_bound_check(1, 3, 3, 3, 4);
  CHECK(c.ok);
  CHECK_FALSE(c.ideal);
  for (const auto& sch : test_schemes()) CHECK(ideal_bound_check(sch.s(), sch.t(), sch.n(), sch.v(), sch.secrets().size()).ideal);
}

TEST_CASE("ShareBundle and secret text") {
  const auto b = ShareBundle::parse("3:2  1:0");
  CHECK(b.size() == 2);
  CHECK(b.to_text() == "1:0 3:2");
  CHECK(ShareBundle::parse(b.to_text()) == b);
  CHECK_THROWS_AS(ShareBundle::parse("1:0 1:2"), ParameterError);
  CHECK_THROWS_AS(ShareBundle::parse("0:1"), ParameterError);
  CHECK_THROWS_AS(ShareBundle::parse("1-0"), ParseError);
  CHECK_THROWS_AS(ShareBundle::parse("1:x"), ParseError);

  CHECK(secret_from_text("1,2") == Secret{1, 2});
  CHECK(secret_to_text({4, 0, 3}) == "4,0,3");
  CHECK_THROWS_AS(secret_from_text(""), ParseError);
  CHECK_THROWS_AS(secret_from_text("1,,2"), ParseError);
}
