// Command-line front end: list, run, run-all, eval phi, eval qpoch.

#include <algorithm>
#include <charconv>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include <CLI11.hpp>

#include <qcauchy/qcauchy.hpp>
#include <qcauchy/verify/report.hpp>

namespace {

using qcauchy::Scalar;
namespace verify = qcauchy::verify;

constexpr int exit_passed = 0;
constexpr int exit_failed = 1;
constexpr int exit_usage = 2;

struct usage_error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

double parse_real(std::string_view s)
{
  double v = 0.0;
  const auto* end = s.data() + s.size();
  auto [ptr, ec] = std::from_chars(s.data(), end, v);
  if (ec != std::errc() || ptr != end || s.empty()) throw usage_error("not a number: '" + std::string(s) + "'");
  return v;
}

/// "x", "yi", "x+yi" or "x-yi" (j is accepted for i).
Scalar parse_literal(std::string_view s)
{
  if (s.empty()) throw usage_error("empty list entry");
  const char last = s.back();
  if (last != 'i' && last != 'j') return parse_real(s);
  s.remove_suffix(1);
  std::size_t split = std::string_view::npos;
  for (std::size_t k = s.size(); k-- > 1;) {
    if ((s[k] == '+' || s[k] == '-') && s[k - 1] != 'e' && s[k - 1] != 'E') {
      split = k;
      break;
    }
  }
  auto imag = [](std::string_view t) {
    if (t.empty() || t == "+") return 1.0;
    if (t == "-") return -1.0;
    return parse_real(t.front() == '+' ? t.substr(1) : t);
  };
  if (split == std::string_view::npos) return {0.0, imag(s)};
  return {parse_real(s.substr(0, split)), imag(s.substr(split))};
}

/// "re" or "re,im".
Scalar parse_pair(const std::string& s)
{
  const auto comma = s.find(',');
  if (comma == std::string::npos) return parse_real(s);
  if (s.find(',', comma + 1) != std::string::npos) throw usage_error("expected re[,im]: '" + s + "'");
  return {parse_real(std::string_view(s).substr(0, comma)), parse_real(std::string_view(s).substr(comma + 1))};
}

std::vector<Scalar> parse_csv(const std::string& s)
{
  std::vector<Scalar> out;
  if (s.empty()) return out;
  std::size_t start = 0;
  while (true) {
    const auto comma = s.find(',', start);
    out.push_back(parse_literal(std::string_view(s).substr(start, comma - start)));
    if (comma == std::string::npos) break;
    start = comma + 1;
  }
  return out;
}

std::string show(Scalar z)
{
  char buf[96];
  std::snprintf(buf, sizeof buf, "%.17g %+.17gi", z.real(), z.imag());
  return buf;
}

void write_json(const nlohmann::ordered_json& j, const std::string& path)
{
  std::ofstream out(path, std::ios::binary);
  if (!out) throw usage_error("cannot open " + path + " for writing");
  out << j.dump(2) << '\n';
}

void print_summary(const verify::VerificationRecord& r)
{
  std::printf("%-18s %s  max_rel_err=%.3e  tol=%.0e  trials=%d\n", r.identity.c_str(), r.passed ? "PASS" : "FAIL",
              r.max_rel_err, r.tolerance, r.trials);
  for (std::size_t k = 0; k < r.results.size(); ++k) {
    const auto& t = r.results[k];
    if (!t.error.empty()) std::printf("  trial %zu: %s\n", k, t.error.c_str());
    else if (!t.converged) std::printf("  trial %zu: not converged (rel_err %.3e)\n", k, t.rel_err);
  }
}

struct RunArgs {
  std::string id;
  int trials = 20;
  std::uint64_t seed = 0;
  std::optional<double> tol;
  std::optional<double> q;
  std::string json;
};

int cmd_list()
{
  for (const auto& s : verify::builtin_registry())
    std::printf("%-18s %-17s %s\n", s.id.c_str(), verify::kind_name(s.kind), s.anchor.c_str());
  return exit_passed;
}

int cmd_run(const RunArgs& a)
{
  const auto reg = verify::builtin_registry();
  const verify::IdentitySpec* spec = nullptr;
  for (const auto& s : reg)
    if (s.id == a.id) spec = &s;
  if (!spec) throw usage_error("unknown identity '" + a.id + "' (see 'list')");
  if (a.q && !(*a.q > 0.0 && *a.q < 1.0)) throw usage_error("--q must lie in (0, 1)");

  verify::RunOptions opt;
  opt.trials = a.trials;
  opt.seed = a.seed;
  opt.tol_override = a.tol;
  opt.fixed_q = a.q;
  const auto rec = verify::run_identity(*spec, opt);
  print_summary(rec);
  if (!a.json.empty()) write_json(verify::to_json(rec), a.json);
  return rec.passed ? exit_passed : exit_failed;
}

int cmd_run_all(const RunArgs& a)
{
  verify::RunOptions opt;
  opt.trials = a.trials;
  opt.seed = a.seed;
  std::vector<verify::VerificationRecord> recs;
  for (const auto& spec : verify::builtin_registry()) {
    recs.push_back(verify::run_identity(spec, opt));
    print_summary(recs.back());
  }
  const bool ok = verify::all_passed(recs);
  const auto failed = std::count_if(recs.begin(), recs.end(), [](const auto& r) { return !r.passed; });
  std::printf("%td of %zu identities failed\n", failed, recs.size());
  if (!a.json.empty()) write_json(verify::to_json(recs), a.json);
  return ok ? exit_passed : exit_failed;
}

void print_value(const qcauchy::SeriesValue& v)
{
  std::printf("value     %s\nabs_err   %.3e\nterms     %d\nconverged %s\n", show(v.value).c_str(), v.abs_err,
              v.terms_used, v.converged ? "true" : "false");
}

} // namespace

int main(int argc, char** argv)
{
  CLI::App app{"q-series library and identity verification harness"};
  app.require_subcommand(1);

  auto* list = app.add_subcommand("list", "print every registered identity");

  RunArgs run_args;
  auto* run = app.add_subcommand("run", "verify one identity at sampled points");
  run->add_option("--id", run_args.id, "identity id")->required();
  run->add_option("--trials", run_args.trials, "number of sampled points")->check(CLI::NonNegativeNumber);
  run->add_option("--seed", run_args.seed, "sampler seed");
  run->add_option("--tol", run_args.tol, "relative-error threshold")->check(CLI::PositiveNumber);
  run->add_option("--q", run_args.q, "fixed base q")->check(CLI::Range(0.0, 1.0));
  run->add_option("--json", run_args.json, "write the JSON report here");

  RunArgs all_args;
  auto* run_all = app.add_subcommand("run-all", "verify every identity");
  run_all->add_option("--trials", all_args.trials, "number of sampled points")->check(CLI::NonNegativeNumber);
  run_all->add_option("--seed", all_args.seed, "sampler seed");
  run_all->add_option("--json", all_args.json, "write the JSON report here");

  auto* eval = app.add_subcommand("eval", "evaluate a single function");
  eval->require_subcommand(1);

  std::string upper, lower, z_text, q_text;
  auto* eval_phi = eval->add_subcommand("phi", "basic hypergeometric series r-phi-s");
  eval_phi->add_option("--upper", upper, "numerator parameters, e.g. 0.3,0.2+0.1i");
  eval_phi->add_option("--lower", lower, "denominator parameters");
  eval_phi->add_option("--q", q_text, "base")->required();
  eval_phi->add_option("--z", z_text, "argument re[,im]")->required();

  std::string a_text, qp_text;
  std::optional<int> n;
  bool infinite = false;
  auto* eval_qpoch = eval->add_subcommand("qpoch", "q-shifted factorial (a;q)_n or (a;q)_inf");
  eval_qpoch->add_option("--a", a_text, "re[,im]")->required();
  eval_qpoch->add_option("--q", qp_text, "base")->required();
  auto* n_opt = eval_qpoch->add_option("--n", n, "finite order (may be negative)");
  auto* inf_opt = eval_qpoch->add_flag("--inf", infinite, "infinite product");
  n_opt->excludes(inf_opt);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return exit_usage;
  }

  try {
    if (*list) return cmd_list();
    if (*run) return cmd_run(run_args);
    if (*run_all) return cmd_run_all(all_args);
    if (*eval_phi) {
      const qcauchy::QBase q(parse_real(q_text));
      const qcauchy::PhiSpec spec{parse_csv(upper), parse_csv(lower), q, parse_pair(z_text)};
      print_value(qcauchy::phi(spec));
      return exit_passed;
    }
    if (*eval_qpoch) {
      if (!n && !infinite) throw usage_error("eval qpoch needs --n or --inf");
      const qcauchy::QBase q(parse_real(qp_text));
      const Scalar a = parse_pair(a_text);
      if (infinite) print_value(qcauchy::qpoch_infinite(a, q));
      else std::printf("value     %s\n", show(qcauchy::qpoch_finite(a, q, *n)).c_str());
      return exit_passed;
    }
  } catch (const usage_error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  } catch (const qcauchy::error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_usage;
  }
  return exit_usage;
}
