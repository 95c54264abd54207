#pragma once

/// Running registered identities at sampled parameter points.

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "registry.hpp"

namespace qcauchy::verify {

struct TrialResult {
  ParamPoint params;
  Scalar lhs{};
  Scalar rhs{};
  double rel_err = 0.0;
  bool converged = true;
  std::string error; // set when an evaluator threw
};

struct VerificationRecord {
  std::string identity;
  std::string anchor;
  std::uint64_t seed = 0;
  int trials = 0;
  double tolerance = 0.0;
  std::vector<TrialResult> results;
  double max_rel_err = 0.0;
  bool passed = true;
};

struct RunOptions {
  int trials = 20;
  std::uint64_t seed = 0;
  std::optional<double> tol_override;
  std::optional<double> fixed_q;
  /// Values forced after sampling; the admissibility check is skipped for them.
  std::map<std::string, Scalar> overrides;
  /// The RHS is multiplied by (1 + rhs_perturbation); used for fault injection.
  double rhs_perturbation = 0.0;
};

inline constexpr int max_redraws = 1000;

/// q for a trial: 0.2, 0.3, 0.5 for the first three, then uniform on [0.15, 0.7].
inline double trial_q(Rng& rng, int trial)
{
  static constexpr double fixed[] = {0.2, 0.3, 0.5};
  const double drawn = rng.uniform(0.15, 0.7);
  return trial < 3 ? fixed[trial] : drawn;
}

inline ParamPoint sample_params(const IdentitySpec& spec, std::uint64_t seed, int trial,
                                std::optional<double> fixed_q = std::nullopt)
{
  Rng rng(spec.id, seed, static_cast<std::uint64_t>(trial));
  const double q = fixed_q ? *fixed_q : trial_q(rng, trial);
  for (int attempt = 0; attempt < max_redraws; ++attempt) {
    ParamPoint p;
    p.set("q", q);
    Draw d(rng, q);
    spec.draw(d, p);
    if (spec.admissible(p)) return p;
  }
  throw sampler_error("sample_params: no admissible point for " + spec.id + " after 1000 draws");
}

inline double relative_error(Scalar lhs, Scalar rhs) { return std::abs(lhs - rhs) / std::max(std::abs(rhs), 1e-30); }

inline TrialResult run_trial(const IdentitySpec& spec, ParamPoint point, const RunOptions& opt)
{
  TrialResult r;
  r.params = std::move(point);
  try {
    const auto lhs = spec.lhs(r.params);
    const auto rhs = spec.rhs(r.params);
    r.lhs = lhs.value;
    r.rhs = rhs.value * (1.0 + opt.rhs_perturbation);
    r.converged = lhs.converged && rhs.converged && qcauchy::detail::is_finite(r.lhs) && qcauchy::detail::is_finite(r.rhs);
    r.rel_err = relative_error(r.lhs, r.rhs);
  } catch (const std::exception& e) {
    r.converged = false;
    r.rel_err = std::numeric_limits<double>::infinity();
    r.error = e.what();
  }
  return r;
}

inline const IdentitySpec& find_identity(const std::vector<IdentitySpec>& reg, const std::string& id)
{
  auto it = std::find_if(reg.begin(), reg.end(), [&](const IdentitySpec& s) { return s.id == id; });
  if (it == reg.end()) throw domain_error("unknown identity: " + id);
  return *it;
}

inline VerificationRecord run_identity(const IdentitySpec& spec, const RunOptions& opt)
{
  VerificationRecord rec;
  rec.identity = spec.id;
  rec.anchor = spec.anchor;
  rec.seed = opt.seed;
  rec.trials = opt.trials;
  rec.tolerance = opt.tol_override.value_or(spec.tol);

  std::vector<std::future<TrialResult>> jobs;
  for (int k = 0; k < opt.trials; ++k) {
    ParamPoint p;
    try {
      p = sample_params(spec, opt.seed, k, opt.fixed_q);
    } catch (const sampler_error& e) {
      TrialResult r;
      r.converged = false;
      r.rel_err = std::numeric_limits<double>::infinity();
      r.error = e.what();
      jobs.push_back(std::async(std::launch::deferred, [r] { return r; }));
      continue;
    }
    for (const auto& [name, value] : opt.overrides) p.set(name, value);
    jobs.push_back(std::async(std::launch::async, [&spec, &opt, p] { return run_trial(spec, p, opt); }));
  }
  for (auto& j : jobs) rec.results.push_back(j.get());

  for (const auto& r : rec.results) {
    rec.max_rel_err = std::max(rec.max_rel_err, r.rel_err);
    if (!r.converged) rec.passed = false;
  }
  rec.passed = rec.passed && rec.max_rel_err <= rec.tolerance;
  return rec;
}

inline VerificationRecord run_identity(const std::string& id, int trials, std::uint64_t seed,
                                       std::optional<double> tol_override = std::nullopt)
{
  const auto reg = builtin_registry();
  RunOptions opt;
  opt.trials = trials;
  opt.seed = seed;
  opt.tol_override = tol_override;
  return run_identity(find_identity(reg, id), opt);
}

inline std::vector<VerificationRecord> run_all(int trials, std::uint64_t seed)
{
  std::vector<VerificationRecord> out;
  RunOptions opt;
  opt.trials = trials;
  opt.seed = seed;
  for (const auto& spec : builtin_registry()) out.push_back(run_identity(spec, opt));
  return out;
}

inline bool all_passed(const std::vector<VerificationRecord>& recs)
{
  return std::all_of(recs.begin(), recs.end(), [](const VerificationRecord& r) { return r.passed; });
}

} // namespace qcauchy::verify
