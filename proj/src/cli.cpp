#include "unitfrac/cli.hpp"

#include <algorithm>
#include <map>
#include <ostream>

#include "CLI11.hpp"
#include "unitfrac/counterexample.hpp"
#include "unitfrac/errors.hpp"
#include "unitfrac/greedy.hpp"
#include "unitfrac/json_io.hpp"
#include "unitfrac/lemmas.hpp"
#include "unitfrac/underapprox.hpp"

namespace unitfrac::cli {
namespace {

constexpr int kDecimalPlaces = 12;

struct Outcome {
  int code = kExitOk;
};

std::string join(const Tuple& t, const char* sep) {
  std::string out;
  for (std::size_t i = 0; i < t.size(); ++i) out += (i ? sep : "") + t[i].get_str();
  return out;
}

ExpandOptions guard_of(const CliConfig& cfg) { return ExpandOptions{cfg.digit_guard}; }

std::pair<BigInt, BigInt> reduced_pair(const CliConfig& cfg) {
  Rational theta = unit_interval_fraction(parse_bigint(cfg.p), parse_bigint(cfg.q));
  return {theta.num(), theta.den()};
}

int cmd_expand(const CliConfig& cfg, std::ostream& out) {
  auto [p, q] = reduced_pair(cfg);
  Expansion e = expand(Rational::make(p, q), cfg.m, guard_of(cfg));
  BigInt ell = ell_index(p, q);
  DeltaResult delta = delta_index(p, q, guard_of(cfg));
  auto start = e.recurrence_start();

  switch (cfg.output_format) {
    case OutputFormat::Json: {
      json j = e;
      j["p"] = bigint_to_json(p);
      j["q"] = bigint_to_json(q);
      j["ell"] = bigint_to_json(ell);
      j["delta"] = delta.steps;
      j["delta_reciprocal"] = bigint_to_json(delta.reciprocal);
      out << j.dump(2) << '\n';
      break;
    }
    case OutputFormat::Csv:
      out << "n,a_n\n";
      for (std::size_t i = 0; i < e.terms.size(); ++i) out << i + 1 << ',' << e.terms[i] << '\n';
      break;
    case OutputFormat::Plain:
      out << "theta: " << p << '/' << q << '\n';
      for (std::size_t i = 0; i < e.terms.size(); ++i) out << "a_" << i + 1 << " = " << e.terms[i] << '\n';
      out << "error: " << e.error.str() << '\n'
          << "ell: " << ell << '\n'
          << "delta: " << delta.steps << " (reciprocal " << delta.reciprocal << ")\n"
          << "recurrence_start: " << (start ? std::to_string(*start) : "none") << '\n';
      break;
  }
  return kExitOk;
}

int cmd_best(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  auto [p, q] = reduced_pair(cfg);
  Rational theta = Rational::make(p, q);
  expand(theta, cfg.m, guard_of(cfg));  // trips the guard before any search starts
  std::uint64_t budget = cfg.budget ? cfg.budget : kDefaultSearchBudget;
  UnderapproxResult r = cfg.m == 2 && cfg.budget == 0 ? best_two_term(theta) : best_m_term(theta, cfg.m, budget);

  switch (cfg.output_format) {
    case OutputFormat::Json:
      out << json(r).dump(2) << '\n';
      break;
    case OutputFormat::Csv:
      out << "tuple,sum,is_greedy\n";
      for (const auto& t : r.optimal_tuples) {
        out << join(t, ";") << ',' << reciprocal_sum(t).str() << ',' << (t == r.greedy_terms ? "true" : "false")
            << '\n';
      }
      break;
    case OutputFormat::Plain:
      out << "theta: " << theta.str() << "\ngreedy: (" << join(r.greedy_terms, ", ") << ") sum "
          << r.greedy_sum.str() << '\n';
      if (r.status == SearchStatus::Complete) {
        for (const auto& t : r.optimal_tuples) out << "optimal: (" << join(t, ", ") << ") sum " << r.optimal_sum.str() << '\n';
        out << "greedy_is_best: " << std::boolalpha << r.greedy_is_best << "\nunique: " << r.unique << '\n';
      }
      out << "status: " << to_string(r.status) << " after " << r.nodes << " nodes\n";
      break;
  }
  if (r.status == SearchStatus::Inconclusive) {
    err << "search budget of " << budget << " nodes exhausted\n";
    return kExitInconclusive;
  }
  return kExitOk;
}

int cmd_step(const CliConfig& cfg, std::ostream& out) {
  auto [p, q] = reduced_pair(cfg);
  Rational theta = Rational::make(p, q);
  expand(theta, cfg.m + 1, guard_of(cfg));
  StepReport s = step_report(theta, cfg.m, parse_bigint(cfg.N));
  json j = s;
  switch (cfg.output_format) {
    case OutputFormat::Json:
      out << j.dump(2) << '\n';
      break;
    case OutputFormat::Csv:
      out << "m,N,a_m,a_next,b_m,phi,cond_i,cond_ii,cond_iii,cond_iv\n"
          << s.m << ',' << s.N << ',' << s.a_m << ',' << s.a_next << ',' << s.b_m << ',' << s.phi_value.str() << ','
          << std::boolalpha << s.cond_i << ',' << s.cond_ii << ',' << s.cond_iii << ',' << s.cond_iv << '\n';
      break;
    case OutputFormat::Plain:
      for (auto& [key, value] : j.items()) {
        out << key << ": " << (value.is_object() ? value["num"].get<std::string>() + "/" + value["den"].get<std::string>()
                                                 : value.is_string() ? value.get<std::string>() : value.dump())
            << '\n';
      }
      break;
  }
  return kExitOk;
}

int cmd_upsilon(const CliConfig& cfg, std::ostream& out) {
  UpsilonProfile u = upsilon_profile(parse_bigint(cfg.p), parse_bigint(cfg.q), guard_of(cfg));
  switch (cfg.output_format) {
    case OutputFormat::Json:
      out << json(u).dump(2) << '\n';
      break;
    case OutputFormat::Csv:
      out << "p,q,upsilon,ell,delta,family\n"
          << u.p << ',' << u.q << ',' << u.upsilon << ',' << u.ell << ',' << u.delta << ',' << to_string(u.family) << '\n';
      break;
    case OutputFormat::Plain:
      out << "p/q: " << u.p << '/' << u.q << "\nupsilon: " << u.upsilon << "\nell: " << u.ell << "\ndelta: " << u.delta
          << "\nfamily: " << to_string(u.family) << '\n';
      break;
  }
  return kExitOk;
}

int cmd_construct(const CliConfig& cfg, std::ostream& out) {
  Counterexample c = construct(cfg.k);
  switch (cfg.output_format) {
    case OutputFormat::Json:
      out << json(c).dump(2) << '\n';
      break;
    case OutputFormat::Csv:
      out << "k,p,q,v,s,greedy_pair,beating_pair,margin\n"
          << c.k << ',' << c.p << ',' << c.q << ',' << c.v << ',' << (c.s ? std::to_string(*c.s) : "") << ','
          << join(c.greedy_pair, ";") << ',' << join(c.beating_pair, ";") << ',' << c.margin.str() << '\n';
      break;
    case OutputFormat::Plain:
      out << "k: " << c.k << "\np/q: " << c.p << '/' << c.q << "\nv: " << c.v
          << (c.s ? "\ns: " + std::to_string(*c.s) : "") << "\ngreedy: (" << join(c.greedy_pair, ", ")
          << ")\nbeating: (" << join(c.beating_pair, ", ") << ")\nmargin: " << c.margin.str() << '\n';
      break;
  }
  return kExitOk;
}

int cmd_verify(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  const std::string& suite = cfg.suite;
  std::vector<VerificationReport> reports;
  std::vector<ThresholdRow> rows;
  auto bound = [](const std::optional<std::int64_t>& v, std::int64_t fallback) { return v.value_or(fallback); };

  if (suite == "lp1") {
    reports.push_back(verify_lp1(bound(cfg.q_max, 500), cfg.jobs));
  } else if (suite == "lp11") {
    reports.push_back(verify_lp11(bound(cfg.q_max, 500), cfg.jobs));
  } else if (suite == "lp50") {
    reports.push_back(verify_lp50(bound(cfg.q_max, 500), cfg.jobs));
  } else if (suite == "lp12") {
    reports.push_back(verify_lp12(bound(cfg.s_max, 10000)));
  } else if (suite == "threshold") {
    ThresholdSweep sweep = verify_threshold_sweep(bound(cfg.q_max, 200), cfg.jobs);
    reports.push_back(std::move(sweep.report));
    rows = std::move(sweep.rows);
  } else if (suite == "claims") {
    for (auto claim : {FractionalClaim::KOne, FractionalClaim::KTwo, FractionalClaim::KThree}) {
      reports.push_back(check_fractional_claims(claim, bound(cfg.j_max, 500)));
    }
  } else if (suite == "roots") {
    for (int residue = 1; residue <= 3; ++residue) reports.push_back(check_root_interval(residue, bound(cfg.s_max, 200)));
  } else if (suite == "tables") {
    reports.push_back(verify_tables());
  } else if (suite == "bridge") {
    reports.push_back(tie_bridge_check(bound(cfg.q_max, 200), cfg.jobs));
  } else if (suite == "construct") {
    reports.push_back(verify_constructions(bound(cfg.k_max, 200), cfg.jobs));
  } else {
    throw DomainError("unknown suite '" + suite + "'");
  }

  bool passed = std::all_of(reports.begin(), reports.end(), [](const auto& r) { return r.passed(); });
  switch (cfg.output_format) {
    case OutputFormat::Json: {
      json j = {{"suite", suite}, {"passed", passed}, {"reports", reports}};
      if (suite == "threshold") j["rows"] = rows;
      out << j.dump(2) << '\n';
      break;
    }
    case OutputFormat::Csv:
      if (suite == "threshold") {
        write_threshold_csv(out, rows);
      } else {
        out << "lemma_id,points_checked,failures,unexpected,passed\n";
        for (const auto& r : reports) {
          out << r.lemma_id << ',' << r.points_checked << ',' << r.failures.size() << ','
              << r.unexpected_failures().size() << ',' << (r.passed() ? "true" : "false") << '\n';
        }
      }
      break;
    case OutputFormat::Plain:
      for (const auto& r : reports) {
        out << r.lemma_id << ": " << (r.passed() ? "PASS" : "FAIL") << ", " << r.points_checked << " points, "
            << r.failures.size() << " failures (" << r.range_descr << ")\n";
        for (const auto& f : r.failures) {
          out << "  " << (r.is_expected(f) ? "expected " : "UNEXPECTED ") << f.kind << " at (";
          for (std::size_t i = 0; i < f.point.size(); ++i) out << (i ? "," : "") << f.point[i];
          out << ") " << f.detail << '\n';
        }
      }
      break;
  }
  if (!passed) {
    for (const auto& r : reports) {
      for (const auto& f : r.unexpected_failures()) err << r.lemma_id << ": unexpected " << f.kind << ' ' << f.detail << '\n';
    }
    return kExitVerification;
  }
  return kExitOk;
}

int cmd_phi_samples(const CliConfig& cfg, std::ostream& out) {
  if (cfg.grid == 0) throw DomainError("grid must be positive");
  const Rational left = Rational::make(1, 10);
  const Rational step = Rational::make(9, 10) / Rational(static_cast<long>(cfg.grid));
  json samples = json::array();
  if (cfg.output_format != OutputFormat::Json) out << "i,x_num,x_den,phi_num,phi_den,x,phi\n";
  for (std::size_t i = 0; i <= cfg.grid; ++i) {
    Rational x = left + step * Rational(static_cast<long>(i));
    Rational y = phi(x);
    if (cfg.output_format == OutputFormat::Json) {
      samples.push_back({{"x", x}, {"phi", y}});
    } else {
      out << i << ',' << x.num() << ',' << x.den() << ',' << y.num() << ',' << y.den() << ','
          << to_decimal(x, kDecimalPlaces) << ',' << to_decimal(y, kDecimalPlaces) << '\n';
    }
  }
  if (cfg.output_format == OutputFormat::Json) out << samples.dump(2) << '\n';
  return kExitOk;
}

int dispatch(const CliConfig& cfg, std::ostream& out, std::ostream& err) {
  if (cfg.command == "expand") return cmd_expand(cfg, out);
  if (cfg.command == "best") return cmd_best(cfg, out, err);
  if (cfg.command == "step") return cmd_step(cfg, out);
  if (cfg.command == "upsilon") return cmd_upsilon(cfg, out);
  if (cfg.command == "construct") return cmd_construct(cfg, out);
  if (cfg.command == "verify") return cmd_verify(cfg, out, err);
  if (cfg.command == "phi-samples") return cmd_phi_samples(cfg, out);
  throw DomainError("unknown command '" + cfg.command + "'");
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CliConfig cfg;
  bool no_guard = false;

  CLI::App app{"Greedy Egyptian fractions, best underapproximations and lemma checks", "unitfrac"};
  app.require_subcommand(1);
  app.fallthrough();
  const std::map<std::string, OutputFormat> formats{
      {"json", OutputFormat::Json}, {"csv", OutputFormat::Csv}, {"plain", OutputFormat::Plain}};
  app.add_option("--format", cfg.output_format, "json, csv or plain")
      ->transform(CLI::CheckedTransformer(formats, CLI::ignore_case));
  app.add_option("--digit-guard", cfg.digit_guard, "abort when a denominator exceeds this many digits");
  app.add_flag("--no-guard", no_guard, "disable the digit guard");
  app.add_option("--jobs", cfg.jobs, "worker threads for sweeps")->check(CLI::Range(1u, 256u));

  auto fraction = [&](CLI::App* sub) {
    sub->add_option("p", cfg.p, "numerator")->required();
    sub->add_option("q", cfg.q, "denominator")->required();
  };

  CLI::App* expand_cmd = app.add_subcommand("expand", "greedy expansion of p/q");
  fraction(expand_cmd);
  expand_cmd->add_option("--m", cfg.m, "number of terms")->required()->check(CLI::PositiveNumber);

  CLI::App* best_cmd = app.add_subcommand("best", "best m-term underapproximation of p/q");
  fraction(best_cmd);
  best_cmd->add_option("--m", cfg.m, "number of terms")->required()->check(CLI::PositiveNumber);
  best_cmd->add_option("--budget", cfg.budget, "search node budget");

  CLI::App* step_cmd = app.add_subcommand("step", "compare 1/a_m with N/b_m");
  fraction(step_cmd);
  step_cmd->add_option("--m", cfg.m, "step index")->required()->check(CLI::PositiveNumber);
  step_cmd->add_option("--N", cfg.N, "numerator N")->required();

  CLI::App* upsilon_cmd = app.add_subcommand("upsilon", "Upsilon, ell, Delta and family of p/q");
  fraction(upsilon_cmd);

  CLI::App* construct_cmd = app.add_subcommand("construct", "fraction with Upsilon = k where greedy loses");
  construct_cmd->add_option("k", cfg.k, "Upsilon value, at least 4")->required();

  CLI::App* verify_cmd = app.add_subcommand("verify", "run a verification suite");
  verify_cmd->add_option("suite", cfg.suite)
      ->required()
      ->check(CLI::IsMember({"lp1", "lp11", "lp12", "lp50", "threshold", "claims", "roots", "tables", "bridge",
                             "construct"}));
  verify_cmd->add_option("--q-max", cfg.q_max, "largest q swept");
  verify_cmd->add_option("--j-max", cfg.j_max, "largest j for the fractional-part claims");
  verify_cmd->add_option("--s-max", cfg.s_max, "largest s for lp12 and the root intervals");
  verify_cmd->add_option("--k-max", cfg.k_max, "largest k for construct");

  CLI::App* phi_cmd = app.add_subcommand("phi-samples", "exact samples of Phi on [1/10, 1]");
  phi_cmd->add_option("--grid", cfg.grid, "number of intervals")->check(CLI::PositiveNumber);

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitDomain;
  }
  if (no_guard) cfg.digit_guard.reset();
  cfg.command = app.get_subcommands().front()->get_name();

  try {
    return dispatch(cfg, out, err);
  } catch (const DigitGuardExceeded& e) {
    err << "error: " << e.what() << '\n';
    return kExitGuard;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitDomain;
  } catch (const InvariantError& e) {
    err << "invariant violated: " << e.what() << '\n';
    return kExitVerification;
  }
}

}  // namespace unitfrac::cli
