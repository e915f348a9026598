// Command-line front end: weight distributions, histograms, statistics,
// figure data and the closed-form verification suite.

#include <CLI11.hpp>

#include <algorithm>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <tuple>
#include <vector>

#include "demazure/formulas.hpp"
#include "demazure/measure.hpp"
#include "demazure/serialize.hpp"
#include "demazure/stats.hpp"
#include "demazure/verify.hpp"

namespace {

using namespace demazure;

constexpr int kExitOk = 0;
constexpr int kExitMismatch = 1;
constexpr int kExitUsage = 2;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct RunConfig {
  std::int64_t m = 0;
  std::int64_t n = 0;
  std::int64_t N = 0;
  std::string family = "std0";
  std::string format;
  std::string word;
  std::string out;
};

void add_module_options(CLI::App* cmd, RunConfig& cfg, const std::string& default_format) {
  cfg.format = default_format;
  cmd->add_option("--m", cfg.m, "coefficient of Lambda_0")->check(CLI::NonNegativeNumber);
  cmd->add_option("--n", cfg.n, "coefficient of Lambda_1")->check(CLI::NonNegativeNumber);
  cmd->add_option("--N", cfg.N, "word length")->check(CLI::NonNegativeNumber);
  cmd->add_option("--family", cfg.family, "word family")
      ->check(CLI::IsMember({"std0", "std1", "ext0", "ext1"}));
  cmd->add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"json", "csv", "tsv"}));
  cmd->add_option("--word", cfg.word, "explicit word such as \"s0 s1 sigma\" (overrides --family/--N)");
  cmd->add_option("--out", cfg.out, "output path (default: standard output)");
}

FamilyKey family_key(const RunConfig& cfg) {
  return FamilyKey::of(*parse_family(cfg.family), cfg.m, cfg.n, cfg.N);
}

WeylWord resolve_word(const RunConfig& cfg) {
  return cfg.word.empty() ? family_word(family_key(cfg)) : WeylWord::parse(cfg.word);
}

Format resolve_format(const RunConfig& cfg) { return *parse_format(cfg.format); }

void emit(const RunConfig& cfg, const std::string& text) {
  if (cfg.out.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream file(cfg.out, std::ios::binary);
  if (!file) throw UsageError("cannot open " + cfg.out + " for writing");
  file << text;
  if (!file) throw UsageError("failed writing " + cfg.out);
}

int cmd_dist(const RunConfig& cfg) {
  const WeylWord word = resolve_word(cfg);
  const SignedMeasure mu = apply_word(word, HighestWeight(cfg.m, cfg.n));
  emit(cfg, write_measure(mu, word, resolve_format(cfg)));
  return kExitOk;
}

int cmd_hist(const RunConfig& cfg, const std::string& axis) {
  const SignedMeasure mu = apply_word(resolve_word(cfg), HighestWeight(cfg.m, cfg.n));
  const Functional f = axis == "degree" ? Functional::A : Functional::AMinusB;
  emit(cfg, write_histogram(pushforward(mu, f), resolve_format(cfg), axis == "degree" ? "degree" : "finite_weight"));
  return kExitOk;
}

int cmd_stats(const RunConfig& cfg, bool check, bool decimal) {
  if (check && !cfg.word.empty()) throw UsageError("--check is only defined for the standard and extended families");
  const WeylWord word = resolve_word(cfg);
  const SignedMeasure mu = apply_word(word, HighestWeight(cfg.m, cfg.n));

  const BigInt mass = total_mass(mu);
  const Rational ea = moment(mu, 1, 0);
  const Rational eb = moment(mu, 0, 1);
  const Rational ef = expectation(mu, Functional::AMinusB);
  const Rational vf = variance(mu, Functional::AMinusB);
  const Rational va = variance(mu, Functional::A);
  const std::int64_t top = max_degree(mu);

  std::ostringstream out;
  out << "m: " << cfg.m << "\n"
      << "n: " << cfg.n << "\n"
      << "word: " << word.to_string() << "\n"
      << "mass: " << mass.get_str() << "\n"
      << "E[a]: " << to_string(ea) << "\n"
      << "E[b]: " << to_string(eb) << "\n"
      << "E[a-b]: " << to_string(ef) << "\n"
      << "Var(a-b): " << to_string(vf) << "\n"
      << "Var(a): " << to_string(va) << "\n"
      << "max degree: " << top << "\n";
  if (top != 0) {
    const Rational ratio = ea / Rational(BigInt(static_cast<long>(top)));
    const Rational limit = limit_ratio_N(cfg.m, cfg.n);
    out << "E[a]/max degree: " << to_string(ratio);
    if (decimal) out << " ~ " << to_decimal(ratio);
    out << "\n"
        << "limit as N->inf: " << to_string(limit);
    if (decimal) out << " ~ " << to_decimal(limit);
    out << "\n";
  }

  int status = kExitOk;
  if (check) {
    const FamilyKey key = family_key(cfg);
    const Rational closed_ea = expected_degree(key);
    const Rational closed_ef = expected_finite_closed(key);
    const std::vector<std::tuple<std::string, std::string, std::string>> rows{
        {"mass", dim_closed(key).get_str(), mass.get_str()},
        {"E[a]", to_string(closed_ea), to_string(ea)},
        {"E[b]", to_string(Rational(closed_ea - closed_ef)), to_string(eb)},
        {"E[a-b]", to_string(closed_ef), to_string(ef)},
        {"Var(a-b)", to_string(variance_finite_closed(key)), to_string(vf)},
        {"max degree", std::to_string(max_degree_closed(key)), std::to_string(top)},
    };
    for (const auto& [name, closed, brute] : rows) {
      const bool ok = closed == brute;
      if (!ok) status = kExitMismatch;
      out << "check " << name << ": closed=" << closed << " brute=" << brute << (ok ? " ok" : " MISMATCH")
          << "\n";
    }
  }
  emit(cfg, out.str());
  return status;
}

int cmd_figure(const RunConfig& cfg, const std::string& which) {
  const SignedMeasure mu = apply_word(resolve_word(cfg), HighestWeight(cfg.m, cfg.n));
  if (which == "degreehist") {
    emit(cfg, write_histogram(pushforward(mu, Functional::A), resolve_format(cfg), "degree"));
    return kExitOk;
  }
  // weight2d: one row per weight, ordered by degree then finite weight.
  std::vector<std::tuple<std::int64_t, std::int64_t, std::string>> rows;
  for (const auto& [w, c] : mu.entries()) rows.emplace_back(degree(w), finite_weight_dev(w), c.get_str());
  std::sort(rows.begin(), rows.end());
  const char sep = resolve_format(cfg) == Format::Csv ? ',' : '\t';
  std::string text = std::string("finite_weight") + sep + "degree" + sep + "mult\n";
  for (const auto& [deg, fin, mult] : rows) {
    text += std::to_string(fin) + sep + std::to_string(deg) + sep + mult + "\n";
  }
  emit(cfg, text);
  return kExitOk;
}

int cmd_verify(const std::string& grid, unsigned threads, const std::string& fault, const std::string& out) {
  VerifyOptions options;
  options.grid = parse_grid(grid);
  options.threads = threads;
  options.inject_fault = fault;
  const VerifyReport report = run_verify(options);
  RunConfig sink;
  sink.out = out;
  emit(sink, report.render());
  return report.ok() ? kExitOk : kExitMismatch;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Weight distributions and expected degrees of affine sl2 Demazure modules"};
  app.require_subcommand(1);

  RunConfig dist_cfg, hist_cfg, stats_cfg, figure_cfg;
  auto* dist = app.add_subcommand("dist", "full weight distribution");
  add_module_options(dist, dist_cfg, "json");

  auto* hist = app.add_subcommand("hist", "degree or finite-weight histogram");
  add_module_options(hist, hist_cfg, "csv");
  std::string axis = "degree";
  hist->add_option("--axis", axis, "histogram axis")->check(CLI::IsMember({"degree", "finite"}));

  auto* stats = app.add_subcommand("stats", "exact statistics, optionally checked against closed forms");
  add_module_options(stats, stats_cfg, "json");
  bool check = false, decimal = false;
  stats->add_flag("--check", check, "compare with closed forms; exit 1 on mismatch");
  stats->add_flag("--decimal", decimal, "also print 12-digit decimals for the degree ratios");

  auto* figure = app.add_subcommand("figure", "figure data files");
  add_module_options(figure, figure_cfg, "tsv");
  std::string which;
  figure->add_option("which", which, "weight2d or degreehist")
      ->required()
      ->check(CLI::IsMember({"weight2d", "degreehist"}));

  auto* verify = app.add_subcommand("verify", "closed forms versus the brute-force engine over a grid");
  std::string grid = "m<=3,n<=3,N<=8", fault, verify_out;
  unsigned threads = 1;
  verify->add_option("--grid", grid, "bounds \"m<=A,n<=B,N<=C\"");
  verify->add_option("--threads", threads, "worker threads")->check(CLI::PositiveNumber);
  verify->add_option("--inject-fault", fault, "harness self-test: corrupt one closed-form quantity");
  verify->add_option("--out", verify_out, "output path (default: standard output)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*dist) return cmd_dist(dist_cfg);
    if (*hist) return cmd_hist(hist_cfg, axis);
    if (*stats) return cmd_stats(stats_cfg, check, decimal);
    if (*figure) return cmd_figure(figure_cfg, which);
    if (*verify) return cmd_verify(grid, threads, fault, verify_out);
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const std::invalid_argument& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const demazure::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitUsage;
  }
  return kExitUsage;
}
