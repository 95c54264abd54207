#pragma once

/// JSON form of verification records. Field order is fixed.

#include <cmath>
#include <vector>

#include <nlohmann/json.hpp>

#include "runner.hpp"

namespace qcauchy::verify {

namespace detail {

inline nlohmann::ordered_json number(double x)
{
  if (std::isfinite(x)) return x;
  return nullptr;
}

inline nlohmann::ordered_json pair(Scalar z) { return nlohmann::ordered_json::array({number(z.real()), number(z.imag())}); }

} // namespace detail

inline nlohmann::ordered_json to_json(const VerificationRecord& rec)
{
  using nlohmann::ordered_json;
  ordered_json results = ordered_json::array();
  for (const auto& r : rec.results) {
    ordered_json params = ordered_json::object();
    for (const auto& [name, value] : r.params.values()) params[name] = detail::pair(value);
    ordered_json item;
    item["params"] = std::move(params);
    item["lhs"] = detail::pair(r.lhs);
    item["rhs"] = detail::pair(r.rhs);
    item["rel_err"] = detail::number(r.rel_err);
    item["converged"] = r.converged;
    if (!r.error.empty()) item["error"] = r.error;
    results.push_back(std::move(item));
  }
  ordered_json out;
  out["identity"] = rec.identity;
  out["anchor"] = rec.anchor;
  out["seed"] = rec.seed;
  out["trials"] = rec.trials;
  out["tolerance"] = rec.tolerance;
  out["results"] = std::move(results);
  out["max_rel_err"] = detail::number(rec.max_rel_err);
  out["passed"] = rec.passed;
  return out;
}

inline nlohmann::ordered_json to_json(const std::vector<VerificationRecord>& recs)
{
  auto arr = nlohmann::ordered_json::array();
  for (const auto& r : recs) arr.push_back(to_json(r));
  return arr;
}

} // namespace qcauchy::verify
