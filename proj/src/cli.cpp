#include "qalg/cli.hpp"

#include "qalg/dimension.hpp"
#include "qalg/pbw.hpp"
#include "qalg/presentation.hpp"
#include "qalg/torus.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <iomanip>
#include <sstream>
#include <stdexcept>

namespace qalg::cli {

namespace {

// Bad command arguments; exit code 2 like a config error.
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

void add_checks(Report& report, const CheckReport& checks, const std::string& prefix = {}) {
  for (const auto& c : checks.checks) {
    report.checks.push_back({prefix + c.name, c.passed ? "pass" : "fail", c.detail});
  }
}

void add_check(Report& report, std::string name, bool ok, std::string detail = {}) {
  report.checks.push_back({std::move(name), ok ? "pass" : "fail", std::move(detail)});
}

int parse_int_arg(const std::string& text, const char* what) {
  try {
    std::size_t used = 0;
    const int v = std::stoi(text, &used);
    if (used != text.size()) throw std::invalid_argument("");
    return v;
  } catch (const std::exception&) {
    throw UsageError(std::string(what) + ": expected an integer, got '" + text + "'");
  }
}

std::string join_args(const std::vector<std::string>& args) {
  std::string out;
  for (const auto& a : args) {
    if (!out.empty()) out += ' ';
    out += a;
  }
  return out;
}

Word word_arg(const std::string& text, int n) {
  try {
    return parse_word(text, n);
  } catch (const std::invalid_argument& e) {
    throw UsageError(e.what());
  }
}

unsigned long long binomial(int a, int b) {
  unsigned long long r = 1;
  for (int i = 1; i <= b; ++i) r = r * static_cast<unsigned long long>(a - b + i) / static_cast<unsigned long long>(i);
  return r;
}

GrowthBudget growth_budget(const RunOptions& options) {
  GrowthBudget b;
  if (options.budget_seconds) {
    b.deadline = std::chrono::steady_clock::now() +
                 std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                     std::chrono::duration<double>(*options.budget_seconds));
  }
  return b;
}

SearchOptions search_options(const RunOptions& options) {
  SearchOptions s;
  s.height = options.height;
  return s;
}

// ---------------------------------------------------------------------------
// commands

void cmd_nf(Report& report, const AlgebraSpec& spec, const RunOptions& options) {
  const AlgebraSpec s = spec.specialized();
  const Word w = word_arg(join_args(options.args), s.n);
  const PBWElement nf = normal_form(s, w);
  PbwAlgebra A(s);
  report.values["word"] = format_word(w);
  report.values["normal_form"] = to_string(nf, s.lattice);
  add_check(report, "normal form agrees with the multiplication engine", nf == A.word(w));
}

void cmd_mul(Report& report, const AlgebraSpec& spec, const RunOptions& options) {
  if (options.args.size() != 2) throw UsageError("mul expects two words, e.g. --args \"x1 y2\" \"y1\"");
  const AlgebraSpec s = spec.specialized();
  PbwAlgebra A(s);
  const Word a = word_arg(options.args[0], s.n), b = word_arg(options.args[1], s.n);
  const PBWElement f = A.word(a), g = A.word(b);
  const PBWElement fg = A.multiply(f, g);
  report.values["f"] = to_string(f, s.lattice);
  report.values["g"] = to_string(g, s.lattice);
  report.values["product"] = to_string(fg, s.lattice);
  Word ab = a;
  ab.insert(ab.end(), b.begin(), b.end());
  add_check(report, "product agrees with the normal form of the concatenated word", fg == normal_form(s, ab));
}

void cmd_verify(Report& report, const AlgebraSpec& spec) {
  const AlgebraSpec s = spec.specialized();
  add_checks(report, verify_relations(s), "relation: ");
  for (int i = 1; i <= s.n; ++i) add_checks(report, verify_normality(s, i), "normality[" + std::to_string(i) + "]: ");
  for (int m = 1; m < s.n; ++m) add_checks(report, verify_ambiskew(s, m));
  for (unsigned mask = 0; mask < (1u << s.n); ++mask) {
    add_checks(report, theta_check(s, LocalizationChoice::from_mask(s.n, mask)));
  }
}

void run_skew(Report& report, const AlgebraSpec& s, int i, int k) {
  if (i == 1) {
    add_checks(report, skew_power_identity(s, i, k, SkewForm::k1_base));
  } else {
    add_checks(report, skew_power_identity(s, i, k, SkewForm::xk_y));
    add_checks(report, skew_power_identity(s, i, k, SkewForm::x_yk));
  }
}

void cmd_skew(Report& report, const AlgebraSpec& spec, const RunOptions& options) {
  if (options.args.size() < 2 || options.args.size() > 3) throw UsageError("skew expects: i k [form]");
  const AlgebraSpec s = spec.specialized();
  const int i = parse_int_arg(options.args[0], "i");
  const int k = parse_int_arg(options.args[1], "k");
  if (i < 1 || i > s.n || k < 1) throw UsageError("skew needs 1 <= i <= n and k >= 1");
  if (options.args.size() == 3) {
    try {
      add_checks(report, skew_power_identity(s, i, k, parse_skew_form(options.args[2])));
    } catch (const std::invalid_argument& e) {
      throw UsageError(e.what());
    }
  } else {
    run_skew(report, s, i, k);
  }
  report.values["coefficient"] = to_string(skew_coefficient(s, i, k), s.lattice);
}

void run_growth(Report& report, const AlgebraSpec& spec, int N, const RunOptions& options) {
  const AlgebraSpec s = spec.specialized();
  try {
    const GrowthResult g = growth_count(s, N, growth_budget(options));
    report.values["growth_counts"] = g.counts;
    bool match = true;
    for (int m = 0; m <= N; ++m) match = match && g.counts[m] == binomial(m + 2 * s.n, 2 * s.n);
    add_check(report, "growth: counts equal C(m+2n, 2n)", match);
    if (g.exponent) {
      report.values["growth_exponent"] = *g.exponent;
      std::ostringstream detail;
      detail << std::setprecision(6) << "exponent " << *g.exponent << ", expected " << 2 * s.n;
      add_check(report, "growth: fitted exponent within 0.5 of 2n", std::abs(*g.exponent - 2 * s.n) <= 0.5,
                detail.str());
    }
  } catch (const BudgetExceeded& e) {
    add_check(report, "growth: enumeration within budget", false, e.what());
  }
}

void cmd_growth(Report& report, const AlgebraSpec& spec, const RunOptions& options) {
  if (options.args.size() != 1) throw UsageError("growth expects: N");
  const int N = parse_int_arg(options.args[0], "N");
  if (N < 0) throw UsageError("growth length must be non-negative");
  run_growth(report, spec, N, options);
}

void cmd_dim(Report& report, const AlgebraSpec& spec, const RunOptions& options) {
  const DimensionReport d = dim_cn(spec, search_options(options));
  report.values["dimension"] = to_json(d);
  add_check(report, "dim: witness verifies", true, std::to_string(d.witness.size()) + " independent commuting monomials");
  if (d.search_confirmed) add_check(report, "dim: search re-finds a witness of rank d", *d.search_confirmed);
  add_check(report, "dim: point value", d.is_point(),
            d.is_point() ? "" : "interval [" + std::to_string(d.lo) + ", " + std::to_string(d.hi) + "]");
}

void cmd_bound(Report& report, const AlgebraSpec& spec, const RunOptions& options) {
  try {
    const BernsteinReport b = bernstein_bound(spec, search_options(options));
    report.values["bernstein"] = to_json(b);
    add_check(report, "bound: gkdim(M) >= 2n - d determined", true,
              "gkdim(M) >= " + std::to_string(b.bound));
  } catch (const IndeterminateBound& e) {
    add_check(report, "bound: gkdim(M) >= 2n - d determined", false, e.what());
  }
}

void cmd_report(Report& report, const AlgebraSpec& spec, const RunOptions& options) {
  const AlgebraSpec s = spec.specialized();
  cmd_verify(report, spec);
  for (int i = 1; i <= s.n; ++i)
    for (int k = 1; k <= 4; ++k) run_skew(report, s, i, k);
  if (s.n <= 2) {
    run_growth(report, spec, 5, options);
  } else {
    report.checks.push_back({"growth: counts equal C(m+2n, 2n)", "skipped", "enumeration limited to n <= 2"});
  }
  cmd_dim(report, spec, options);
  cmd_bound(report, spec, options);
  const std::size_t trials = s.n <= 2 ? 60 : 20;
  const FuzzResult fuzz = associativity_fuzz(s, trials, s.n <= 2 ? 4 : 3, options.seed);
  report.values["fuzz_seed"] = fuzz.seed;
  add_check(report, "associativity fuzz", fuzz.failures == 0,
            std::to_string(fuzz.trials) + " triples, " + std::to_string(fuzz.failures) + " failures" +
                (fuzz.first_failure.empty() ? "" : ", first " + fuzz.first_failure));
}

}  // namespace

bool Report::failed() const {
  return std::any_of(checks.begin(), checks.end(), [](const CheckEntry& c) { return c.status == "fail"; });
}

nlohmann::json to_json(const Report& r) {
  nlohmann::json checks = nlohmann::json::array();
  for (const auto& c : r.checks) checks.push_back({{"name", c.name}, {"status", c.status}, {"detail", c.detail}});
  return {{"spec", r.spec}, {"checks", checks}, {"values", r.values}, {"elapsed_ms", r.elapsed_ms}};
}

Report report_from_json(const nlohmann::json& j) {
  Report r;
  r.spec = j.at("spec");
  for (const auto& c : j.at("checks")) {
    r.checks.push_back({c.at("name").get<std::string>(), c.at("status").get<std::string>(),
                        c.at("detail").get<std::string>()});
  }
  r.values = j.at("values");
  r.elapsed_ms = j.at("elapsed_ms").get<long long>();
  return r;
}

std::string to_text(const Report& r) {
  std::ostringstream out;
  if (r.spec.contains("n")) out << "spec: n=" << r.spec["n"] << " kind=" << r.spec["kind"].get<std::string>() << "\n";
  std::size_t width = 4;
  for (const auto& c : r.checks) width = std::max(width, c.name.size());
  out << std::left << std::setw(8) << "status" << std::setw(static_cast<int>(width) + 2) << "check"
      << "detail\n";
  for (const auto& c : r.checks) {
    out << std::left << std::setw(8) << c.status << std::setw(static_cast<int>(width) + 2) << c.name << c.detail
        << "\n";
  }
  for (const auto& [key, value] : r.values.items()) out << key << ": " << value.dump() << "\n";
  out << "elapsed_ms: " << r.elapsed_ms << "\n";
  out << "overall: " << (r.failed() ? "fail" : "pass") << "\n";
  return out.str();
}

RunResult run(const nlohmann::json& config, const std::string& command, const RunOptions& options) {
  const auto start = std::chrono::steady_clock::now();
  RunResult result;
  Report& report = result.report;
  auto finish = [&](int code) {
    std::stable_sort(report.checks.begin(), report.checks.end(),
                     [](const CheckEntry& a, const CheckEntry& b) { return a.name < b.name; });
    report.elapsed_ms = std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start)
                            .count();
    result.exit_code = code != 0 ? code : (report.failed() ? 1 : 0);
    return result;
  };

  AlgebraSpec spec;
  try {
    spec = spec_from_json(config);
    spec.validate();
  } catch (const ConfigError& e) {
    report.checks.push_back({"config", "fail", e.what()});
    return finish(2);
  } catch (const std::exception& e) {
    report.checks.push_back({"config", "fail", e.what()});
    return finish(2);
  }
  report.spec = spec_to_json(spec);

  try {
    if (command == "nf") {
      cmd_nf(report, spec, options);
    } else if (command == "mul") {
      cmd_mul(report, spec, options);
    } else if (command == "verify") {
      cmd_verify(report, spec);
    } else if (command == "skew") {
      cmd_skew(report, spec, options);
    } else if (command == "growth") {
      cmd_growth(report, spec, options);
    } else if (command == "dim") {
      cmd_dim(report, spec, options);
    } else if (command == "bound") {
      cmd_bound(report, spec, options);
    } else if (command == "report") {
      cmd_report(report, spec, options);
    } else {
      throw UsageError("unknown command '" + command + "' (nf, mul, verify, skew, growth, dim, bound, report)");
    }
  } catch (const UsageError& e) {
    report.checks.push_back({"usage", "fail", e.what()});
    return finish(2);
  } catch (const std::invalid_argument& e) {
    // non-monomial entries and similar data problems surface here
    report.checks.push_back({"config", "fail", e.what()});
    return finish(2);
  }
  return finish(0);
}

RunResult run_text(const std::string& config_text, const std::string& command, const RunOptions& options) {
  nlohmann::json config;
  try {
    config = nlohmann::json::parse(config_text);
  } catch (const nlohmann::json::parse_error& e) {
    RunResult r;
    r.report.checks.push_back({"config", "fail", std::string("malformed JSON: ") + e.what()});
    r.exit_code = 2;
    return r;
  }
  return run(config, command, options);
}

}  // namespace qalg::cli
