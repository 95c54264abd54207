#pragma once

/// Unilateral basic hypergeometric series r-phi-s.

#include <cmath>
#include <optional>
#include <vector>

#include "qcore.hpp"

namespace qcauchy {

/// Parameters within this distance (relative to 1) of q^{-m} are treated as
/// exactly q^{-m}.
inline constexpr double termination_threshold = 1e-12;

/// r-phi-s(upper; lower; q, z).
struct PhiSpec {
  std::vector<Scalar> upper;
  std::vector<Scalar> lower;
  QBase q;
  Scalar z;
};

namespace detail {

/// Smallest m >= 0 with |x q^m - 1| <= threshold, if any (searched up to max_m).
inline std::optional<int> match_negative_power(Scalar x, double q, int max_m)
{
  double qm = 1.0;
  for (int m = 0; m <= max_m; ++m) {
    const double xm = std::abs(x) * qm;
    if (xm < 0.5) break;
    if (std::abs(x * qm - 1.0) <= termination_threshold) return m;
    qm *= q;
  }
  return std::nullopt;
}

inline std::optional<int> termination_index(const PhiSpec& spec, int max_m)
{
  std::optional<int> best;
  for (const auto& a : spec.upper) {
    auto m = match_negative_power(a, spec.q.value(), max_m);
    if (m && (!best || *m < *best)) best = m;
  }
  return best;
}

inline int unilateral_exponent(const PhiSpec& spec)
{
  return 1 + static_cast<int>(spec.lower.size()) - static_cast<int>(spec.upper.size());
}

/// term_{k+1} / term_k.
inline Scalar phi_term_ratio(const PhiSpec& spec, int k, double qk)
{
  Scalar num(1), den(1.0 - qk * spec.q.value());
  for (const auto& a : spec.upper) num *= 1.0 - a * qk;
  for (const auto& b : spec.lower) den *= 1.0 - b * qk;
  const int e = unilateral_exponent(spec);
  Scalar factor = spec.z;
  if (e != 0) factor *= std::pow(-qk, e);
  return num / den * factor;
}

/// Certified bound on |term_{j+1}/term_j| for every j >= k, or nullopt when the
/// elementary bound is not available (a lower parameter with |b| q^k >= 1).
inline std::optional<double> phi_ratio_bound(const PhiSpec& spec, double qk)
{
  double num = 1.0, den = 1.0 - qk * spec.q.value();
  for (const auto& a : spec.upper) num *= 1.0 + std::abs(a) * qk;
  for (const auto& b : spec.lower) {
    const double f = 1.0 - std::abs(b) * qk;
    if (f <= 0.0) return std::nullopt;
    den *= f;
  }
  const int e = unilateral_exponent(spec);
  if (e < 0) return std::nullopt;
  return num / den * std::pow(qk, e) * std::abs(spec.z);
}

inline void check_lower_poles(const PhiSpec& spec, std::optional<int> stop, int max_m)
{
  for (const auto& b : spec.lower) {
    auto m = match_negative_power(b, spec.q.value(), max_m);
    if (m && (!stop || *m < *stop))
      throw pole_error("phi: lower parameter equals q^-m, denominator vanishes");
  }
}

} // namespace detail

/// Term k of the series computed directly from q-shifted factorials.
inline Scalar phi_term(const PhiSpec& spec, int k)
{
  if (k < 0) throw domain_error("phi_term: k must be >= 0");
  Scalar num(1), den = qpoch_finite(Scalar(spec.q.value()), spec.q, k);
  for (const auto& a : spec.upper) num *= qpoch_finite(a, spec.q, k);
  for (const auto& b : spec.lower) den *= qpoch_finite(b, spec.q, k);
  const int e = detail::unilateral_exponent(spec);
  const double qbinom2 = std::pow(spec.q.value(), 0.5 * k * (k - 1.0));
  const double sign = (k % 2 == 0 || e % 2 == 0) ? 1.0 : -1.0;
  return num / den * sign * std::pow(qbinom2, e) * std::pow(spec.z, k);
}

/// Evaluates the series with a certified geometric tail bound.
///
/// Once the ratio bound rho drops below 0.999 the sum stops at the first k with
/// |term_k| rho / (1 - rho) < tail_tol. A terminating series (an upper
/// parameter equal to q^{-m}) is summed exactly up to index m.
inline SeriesValue phi(const PhiSpec& spec, const TruncationPolicy& policy = {})
{
  policy.validate();
  const int r = static_cast<int>(spec.upper.size());
  const int s = static_cast<int>(spec.lower.size());
  const auto stop = detail::termination_index(spec, policy.max_terms);
  detail::check_lower_poles(spec, stop, policy.max_terms);

  if (!stop && spec.z != 0.0) {
    if (r > s + 1) throw divergence_error("phi: r > s + 1 with a non-terminating series");
    if (r == s + 1 && std::abs(spec.z) >= 1.0)
      throw divergence_error("phi: |z| >= 1 for a non-terminating r = s + 1 series");
  }

  const double q = spec.q.value();
  SeriesValue out;
  Scalar term(1);
  double qk = 1.0;
  for (int k = 0; k < policy.max_terms; ++k) {
    out.value += term;
    out.terms_used = k + 1;
    if (stop && k == *stop) return out;
    if (term == 0.0) return out;
    if (!stop) {
      if (auto rho = detail::phi_ratio_bound(spec, qk); rho && *rho < 0.999) {
        const double bound = std::abs(term) * *rho / (1.0 - *rho);
        if (bound < policy.tail_tol) {
          out.abs_err = bound;
          return out;
        }
      }
    }
    term *= detail::phi_term_ratio(spec, k, qk);
    qk *= q;
  }
  out.converged = false;
  out.abs_err = std::abs(term);
  return out;
}

/// Certified bound on |sum_{j>k} term_j|, or nullopt if no ratio bound below
/// one can be certified at index k.
inline std::optional<double> phi_ratio_tail_bound(const PhiSpec& spec, int k)
{
  if (k < 0) throw domain_error("phi_ratio_tail_bound: k must be >= 0");
  const auto stop = detail::termination_index(spec, k + 1);
  if (stop && k >= *stop) return 0.0;

  const double q = spec.q.value();
  Scalar term(1);
  double qk = 1.0;
  for (int j = 0; j < k; ++j) {
    term *= detail::phi_term_ratio(spec, j, qk);
    qk *= q;
  }
  auto rho = detail::phi_ratio_bound(spec, qk);
  if (!rho || *rho >= 1.0) return std::nullopt;
  return std::abs(term) * *rho / (1.0 - *rho);
}

} // namespace qcauchy
