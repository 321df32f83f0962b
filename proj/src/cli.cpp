#include "rampkit/cli.hpp"

#include <CLI11.hpp>
#include <algorithm>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>

#include "rampkit/designs.hpp"
#include "rampkit/ramp.hpp"

namespace rampkit {

namespace {

constexpr int kOk = 0;
constexpr int kFalse = 1;
constexpr int kUsage = 2;

struct Flags {
  std::optional<std::uint64_t> q, p, j, s, t, k, n, v, max_cells;
  std::uint64_t seed = 0;
  std::string secret, shares, matrix_path;
};

class UsageError : public Error {
 public:
  using Error::Error;
};

std::uint64_t need(const std::optional<std::uint64_t>& x, const char* flag) {
  if (!x) throw UsageError(std::string("missing required flag ") + flag);
  return *x;
}

unsigned need_small(const std::optional<std::uint64_t>& x, const char* flag) {
  const auto value = need(x, flag);
  if (value > 1'000'000) throw UsageError(std::string(flag) + " is out of range");
  return static_cast<unsigned>(value);
}

Field field_from(const Flags& f) {
  if (f.q) {
    if (f.p || f.j) {
      const Field field = Field::make(static_cast<std::uint32_t>(need(f.p, "--p")), static_cast<std::uint32_t>(f.j.value_or(1)));
      if (field.order() != *f.q) throw UsageError("--q disagrees with --p/--j");
      return field;
    }
    return Field::of_order(*f.q);
  }
  if (f.p) return Field::make(static_cast<std::uint32_t>(*f.p), static_cast<std::uint32_t>(f.j.value_or(1)));
  throw UsageError("missing required flag --q (or --p with optional --j)");
}

Limits limits_from(const Flags& f) {
  Limits limits;
  if (f.max_cells) {
    if (*f.max_cells > kDefaultMaxCells)
      throw UsageError("--max-cells may only lower the default of " + std::to_string(kDefaultMaxCells));
    limits.max_cells = *f.max_cells;
  }
  return limits;
}

std::string slurp(std::istream& in) { return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()}; }

std::string oa_name(const OrthogonalArray& a) {
  return "OA(" + std::to_string(a.t()) + "," + std::to_string(a.k()) + "," + std::to_string(a.v()) + ")";
}

std::string aoa_name(const AugmentedOA& a) {
  return "AOA(" + std::to_string(a.s()) + "," + std::to_string(a.t()) + "," + std::to_string(a.k()) + "," +
         std::to_string(a.v()) + ")";
}

AugmentedOA read_aoa(std::istream& in) {
  auto parsed = array_from_text(slurp(in));
  if (auto* a = std::get_if<AugmentedOA>(&parsed)) return std::move(*a);
  throw UsageError("expected an AOA on standard input");
}

const char* status_name(BoundStatus s) { return s == BoundStatus::Proven ? "proven" : "conjectured"; }

// Generator whose row space is an OA(rows, cols, q), for the dual construction.
Matrix default_dual_generator(const Field& field, unsigned rows, unsigned cols) {
  if (rows == cols) return Matrix::identity(field, cols);
  if (rows == 1) {
    Matrix m(field, 1, cols);
    for (unsigned c = 0; c < cols; ++c) m.set(0, c, 1);
    return m;
  }
  if (rows > field.order() || cols > field.order() + 1)
    throw UsageError("no built-in OA(" + std::to_string(rows) + "," + std::to_string(cols) + "," +
                     std::to_string(field.order()) + ") generator; pass --matrix");
  std::vector<std::size_t> keep(cols);
  for (unsigned c = 0; c < cols; ++c) keep[c] = c;
  return rs_generator(field, rows).select_columns(keep);
}

int report_nonexistence(const NonexistenceReport& r, std::ostream& out, std::ostream& err) {
  out << to_text(r.aoa);
  const auto& a = r.aoa;
  err << "# " << aoa_name(a) << (r.verification ? " verified exhaustively" : " FAILED verification: ") << '\n';
  if (!r.verification) err << "# " << r.verification.failure->message << '\n';
  err << "# Bush bound for OA(" << r.oa_strength << ",k," << a.v() << "): k <= " << r.bound.max_k << " ("
      << r.bound.case_label << ")\n";
  err << "# k + t - s = " << r.oa_columns << (r.oa_columns > r.bound.max_k ? " > " : " <= ") << r.bound.max_k
      << (r.certified() ? ", so no OA(" + std::to_string(r.oa_strength) + "," + std::to_string(r.oa_columns) + "," +
                               std::to_string(a.v()) + ") exists"
                        : "")
      << '\n';
  return r.certified() ? kOk : kFalse;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::istream& in, std::ostream& out, std::ostream& err) {
  CLI::App app{"Orthogonal arrays, augmented orthogonal arrays and ideal ramp schemes over finite fields", "rampkit"};
  app.fallthrough();
  app.require_subcommand(1);

  Flags f;
  app.add_option("--q", f.q, "Field order (prime power)");
  app.add_option("--p", f.p, "Field characteristic");
  app.add_option("--j", f.j, "Extension degree");
  app.add_option("--s", f.s, "Lower threshold / lower strength");
  app.add_option("--t", f.t, "Upper threshold / strength");
  app.add_option("--k", f.k, "Number of plain columns");
  app.add_option("--n", f.n, "Number of players");
  app.add_option("--v", f.v, "Alphabet size");
  app.add_option("--seed", f.seed, "Seed for dealing");
  app.add_option("--max-cells", f.max_cells, "Lower the verification cell cap");
  app.add_option("--secret", f.secret, "Secret as comma-separated symbols");
  app.add_option("--shares", f.shares, "Share bundle, e.g. \"1:0 3:2\"");
  app.add_option("--matrix", f.matrix_path, "MAT file for the dual construction");

  auto* construct = app.add_subcommand("construct", "Build an array and write it to standard output");
  construct->require_subcommand(1);
  auto* c_rs = construct->add_subcommand("oa-rs", "Reed-Solomon OA(t, q+1, q)");
  auto* c_shamir = construct->add_subcommand("aoa-shamir", "Linear AOA(s, t, k, q) from the polynomial matrix");
  auto* c_dual = construct->add_subcommand("aoa-dual", "AOA(s, t, t, q) from [I_t | N^T]");
  auto* c_merge = construct->add_subcommand("aoa-merge", "Merge the trailing t-s columns of an OA read from stdin");
  auto* verify = app.add_subcommand("verify", "Verify an OA or AOA read from standard input");
  auto* split = app.add_subcommand("split", "Split an AOA into an OA and verify it");
  auto* bounds = app.add_subcommand("bounds", "Upper bounds on the number of columns");
  bounds->require_subcommand(1);
  auto* b_bush = bounds->add_subcommand("bush", "Bush bound for OA(t, k, v)");
  auto* b_mds = bounds->add_subcommand("mds-max", "M(t, q) for linear MDS codes");
  auto* ramp = app.add_subcommand("ramp", "Ramp schemes stored in AOA format on standard input");
  ramp->require_subcommand(1);
  auto* r_deal = ramp->add_subcommand("deal", "Deal shares for --secret");
  auto* r_rec = ramp->add_subcommand("reconstruct", "Recover the secret from --shares");
  auto* r_audit = ramp->add_subcommand("audit", "Exhaustive security audit");
  auto* demo = app.add_subcommand("demo", "Reproduce the worked constructions");
  demo->require_subcommand(1);
  auto* d_48 = demo->add_subcommand("thm48", "AOA(1, t, q, q) for odd q with no matching OA");
  auto* d_410 = demo->add_subcommand("thm410", "AOA(s, q+1, q+1, q) with no matching OA");
  auto* d_ex = demo->add_subcommand("example-4-3", "The AOA(1,3,3,3) with augmented symbol (a+b, a+c)");

  // First word that is not a flag or a flag value names the verb.
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i].rfind("--", 0) == 0) {
      if (args[i].find('=') == std::string::npos && args[i] != "--help") ++i;
      continue;
    }
    if (args[i] == "-h") continue;
    if (!app.get_subcommand_no_throw(args[i])) {
      err << "error: unknown verb '" << args[i] << "'\n" << app.help();
      return kUsage;
    }
    break;
  }

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e, out, err);
  } catch (const CLI::ParseError& e) {
    app.exit(e, err, err);
    return kUsage;
  }

  try {
    const Limits limits = limits_from(f);

    if (*c_rs) {
      out << to_text(oa_from_generator(rs_generator(field_from(f), need_small(f.t, "--t")), need_small(f.t, "--t"), limits));
      return kOk;
    }
    if (*c_shamir) {
      const unsigned s = need_small(f.s, "--s"), t = need_small(f.t, "--t");
      const std::size_t k = need_small(f.k, "--k");
      out << to_text(linear_aoa(shamir_matrix(field_from(f), s, t, k), s, t, k, limits));
      return kOk;
    }
    if (*c_dual) {
      const unsigned s = need_small(f.s, "--s"), t = need_small(f.t, "--t");
      if (s >= t) throw UsageError("--s must be below --t");
      Matrix n = [&] {
        if (f.matrix_path.empty()) return default_dual_generator(field_from(f), t - s, t);
        std::ifstream file(f.matrix_path);
        if (!file) throw UsageError("cannot open " + f.matrix_path);
        return matrix_from_text(slurp(file));
      }();
      out << to_text(dual_aoa(n, s, t, limits));
      return kOk;
    }
    if (*c_merge) {
      auto parsed = array_from_text(slurp(in));
      auto* oa = std::get_if<OrthogonalArray>(&parsed);
      if (!oa) throw UsageError("expected an OA on standard input");
      out << to_text(aoa_merge(*oa, need_small(f.s, "--s"), limits));
      return kOk;
    }

    if (*verify) {
      auto parsed = array_from_text(slurp(in));
      if (auto* oa = std::get_if<OrthogonalArray>(&parsed)) {
        const auto verdict = verify_oa(*oa, limits);
        if (!verdict) {
          out << oa_name(*oa) << " invalid: " << verdict.failure->message << '\n';
          return kFalse;
        }
        const auto mds = verify_mds(*oa);
        out << oa_name(*oa) << " valid\n";
        out << "MDS code, minimum distance >= " << oa->k() - oa->t() + 1 << ": " << (mds ? "yes" : "no") << '\n';
        return mds ? kOk : kFalse;
      }
      const auto& aoa = std::get<AugmentedOA>(parsed);
      const auto verdict = verify_aoa(aoa, limits);
      if (!verdict) {
        out << aoa_name(aoa) << " invalid: " << verdict.failure->message << '\n';
        return kFalse;
      }
      out << aoa_name(aoa) << " valid\n";
      return kOk;
    }

    if (*split) {
      const auto aoa = read_aoa(in);
      const auto result = aoa_split(aoa, limits);
      if (result.verdict) {
        out << to_text(result.array);
        return kOk;
      }
      out << "split of " << aoa_name(aoa) << " is not an " << oa_name(result.array) << ": "
          << result.verdict.failure->message << '\n';
      if (result.relation) out << "witness: " << result.relation->describe() << '\n';
      return kFalse;
    }

    if (*b_bush || *b_mds) {
      const unsigned t = need_small(f.t, "--t");
      const std::uint64_t alphabet = *b_bush ? need(f.v, "--v") : need(f.q, "--q");
      const auto verdict = *b_bush ? bush_bound(t, alphabet) : mds_max(t, alphabet);
      out << "max_k " << verdict.max_k << '\n';
      out << "case " << verdict.case_label << '\n';
      out << "status " << status_name(verdict.status) << '\n';
      if (f.k && *f.k > verdict.max_k) {
        out << "k = " << *f.k << " exceeds the bound\n";
        return kFalse;
      }
      return kOk;
    }

    if (*r_deal || *r_rec) {
      const auto scheme = scheme_from_aoa(read_aoa(in), limits);
      if (*r_deal) {
        if (f.secret.empty()) throw UsageError("missing required flag --secret");
        out << deal(scheme, secret_from_text(f.secret), f.seed).to_text() << '\n';
        return kOk;
      }
      const auto result = reconstruct(scheme, ShareBundle::parse(f.shares));
      switch (result.status) {
        case Reconstruction::Status::Recovered:
          out << secret_to_text(result.secret) << '\n';
          return kOk;
        case Reconstruction::Status::Inconsistent:
          out << "inconsistent: no distribution rule matches these shares\n";
          return kFalse;
        case Reconstruction::Status::Ambiguous:
          out << "scheme corrupt: shares match " << result.candidates.size() << " different secrets\n";
          return kFalse;
      }
    }

    if (*r_audit) {
      const auto aoa = read_aoa(in);
      std::vector<DistributionRule> rules;
      for (std::size_t i = 0; i < aoa.num_rows(); ++i)
        rules.push_back({{aoa.plain(i).begin(), aoa.plain(i).end()}, {aoa.augmented(i).begin(), aoa.augmented(i).end()}, 1});
      std::optional<RampScheme> scheme;
      try {
        scheme.emplace(aoa.s(), aoa.t(), aoa.k(), aoa.v(), std::move(rules));
      } catch (const ParameterError& e) {
        out << "not a ramp scheme: " << e.what() << '\n';
        return kFalse;
      }
      const auto report = audit_security(*scheme, limits.max_cells);
      const auto bound = ideal_bound_check(scheme->s(), scheme->t(), scheme->n(), scheme->v(), scheme->secrets().size());
      out << "secrets " << scheme->secrets().size() << " of bound " << bound.bound << (bound.ideal ? " (ideal)" : "") << '\n';
      out << "views " << report.views << '\n';
      out << "weak " << (report.weak ? "pass" : "FAIL") << '\n';
      out << "perfect " << (report.perfect ? "pass" : "FAIL") << '\n';
      out << "equal-counts " << (report.equal_counts ? "yes" : "no") << '\n';
      out << "bijection " << (report.bijection_checked ? (report.bijection ? "pass" : "FAIL") : "skipped") << '\n';
      if (report.finding) out << "finding: " << report.finding->message << '\n';
      return report.passed() ? kOk : kFalse;
    }

    if (*d_ex) {
      out << to_text(example_aoa_1333());
      return kOk;
    }
    if (*d_48)
      return report_nonexistence(
          nonexistence_witness(NonexistenceKind::ShamirOddOrder, field_from(f).order(), need_small(f.t, "--t"), limits),
          out, err);
    if (*d_410)
      return report_nonexistence(
          nonexistence_witness(NonexistenceKind::DualRs, field_from(f).order(), need_small(f.s, "--s"), limits), out, err);
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }

  err << app.help();
  return kUsage;
}

}  // namespace rampkit
