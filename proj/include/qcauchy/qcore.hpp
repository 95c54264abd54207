#pragma once

/// q-shifted factorials and Gauss binomial coefficients.
///
/// All kernels are templates over the real type so the difference-operator
/// code can run in extended precision; the library default is double.

#include <cmath>
#include <span>
#include <vector>

#include "types.hpp"

namespace qcauchy {

/// Factors 1 - x with |1 - x| below this are treated as exact zeros when they
/// would have to be inverted.
inline constexpr double pole_threshold = 1e-14;

/// (a;q)_n for any integer n. Negative n uses (a;q)_n = 1/(aq^n;q)_{-n}.
template <class Real>
BasicScalar<Real> qpoch_finite(const BasicScalar<Real>& a, const BasicQBase<Real>& q, int n)
{
  using C = BasicScalar<Real>;
  const Real qv = q.value();
  C prod(1);
  if (n >= 0) {
    Real qk(1);
    for (int k = 0; k < n; ++k) {
      prod *= C(1) - a * qk;
      qk *= qv;
    }
    return prod;
  }
  // factors 1 - a q^{n+j}, j = 0 .. -n-1
  using std::pow;
  Real qk = pow(qv, Real(n));
  for (int j = 0; j < -n; ++j) {
    const C factor = C(1) - a * qk;
    if (detail::modulus(factor) < pole_threshold)
      throw pole_error("qpoch_finite: vanishing factor for negative order");
    prod *= factor;
    qk *= qv;
  }
  return C(1) / prod;
}

/// (a;q)_inf truncated once the remaining product provably differs from 1 by
/// less than tail_tol relative to the partial product.
///
/// With x = |a| q^K / (1 - q) <= 1/2 the tail satisfies
/// |prod_{k>=K}(1 - a q^k) - 1| <= exp(2x) - 1.
template <class Real>
BasicSeriesValue<Real> qpoch_infinite(const BasicScalar<Real>& a, const BasicQBase<Real>& q,
                                      const TruncationPolicy& policy = {})
{
  using C = BasicScalar<Real>;
  policy.validate();
  const Real qv = q.value();
  const double amod = detail::modulus(a);
  const double one_minus_q = detail::to_double(Real(1) - qv);

  BasicSeriesValue<Real> out;
  out.value = C(1);
  if (amod == 0.0) return out;

  Real qk(1);
  double qk_d = 1.0;
  double bound = 0.0;
  for (int k = 0; k < policy.max_terms; ++k) {
    const double x = amod * qk_d / one_minus_q;
    if (x <= 0.5) {
      bound = std::expm1(2.0 * x);
      const double err = bound * detail::modulus(out.value);
      if (err <= policy.tail_tol) {
        out.abs_err = err;
        out.terms_used = k;
        return out;
      }
    }
    out.value *= C(1) - a * qk;
    qk *= qv;
    qk_d = detail::to_double(qk);
    if (out.value == C(0)) {
      out.terms_used = k + 1;
      return out;
    }
  }
  const double x = amod * qk_d / one_minus_q;
  out.abs_err = (x <= 0.5 ? std::expm1(2.0 * x) : std::numeric_limits<double>::infinity()) *
                detail::modulus(out.value);
  out.terms_used = policy.max_terms;
  out.converged = false;
  return out;
}

/// (a_1, ..., a_m; q)_n.
template <class Real>
BasicSeriesValue<Real> qpoch_multi(std::span<const BasicScalar<Real>> as, const BasicQBase<Real>& q, int n)
{
  if (as.empty()) throw domain_error("qpoch_multi: parameter list must be nonempty");
  BasicSeriesValue<Real> out;
  out.value = BasicScalar<Real>(1);
  for (const auto& a : as) out.value *= qpoch_finite(a, q, n);
  out.terms_used = n < 0 ? -n : n;
  return out;
}

/// (a_1, ..., a_m; q)_inf with first-order error propagation.
template <class Real>
BasicSeriesValue<Real> qpoch_multi(std::span<const BasicScalar<Real>> as, const BasicQBase<Real>& q,
                                   const TruncationPolicy& policy = {})
{
  if (as.empty()) throw domain_error("qpoch_multi: parameter list must be nonempty");
  std::vector<BasicSeriesValue<Real>> parts;
  parts.reserve(as.size());
  for (const auto& a : as) parts.push_back(qpoch_infinite(a, q, policy));

  BasicSeriesValue<Real> out;
  out.value = BasicScalar<Real>(1);
  for (const auto& p : parts) {
    out.value *= p.value;
    out.terms_used = std::max(out.terms_used, p.terms_used);
    out.converged = out.converged && p.converged;
  }
  for (std::size_t i = 0; i < parts.size(); ++i) {
    double others = 1.0;
    for (std::size_t j = 0; j < parts.size(); ++j)
      if (j != i) others *= detail::modulus(parts[j].value);
    out.abs_err += parts[i].abs_err * others;
  }
  return out;
}

/// Gauss coefficient [n choose k]_q.
template <class Real>
Real qbinomial(int n, int k, const BasicQBase<Real>& q)
{
  if (n < 0 || k < 0 || k > n) throw domain_error("qbinomial: requires 0 <= k <= n");
  if (k > n - k) k = n - k;
  const Real qv = q.value();
  using std::pow;
  Real result(1);
  Real num = pow(qv, Real(n - k + 1)); // q^{n-k+j}
  Real den = qv;                        // q^j
  for (int j = 1; j <= k; ++j) {
    result *= (Real(1) - num) / (Real(1) - den);
    num *= qv;
    den *= qv;
  }
  return result;
}

/// Row [n choose 0..n]_q via the multiplicative recurrence.
template <class Real>
std::vector<Real> qbinomial_row(int n, const BasicQBase<Real>& q)
{
  if (n < 0) throw domain_error("qbinomial_row: n must be >= 0");
  const Real qv = q.value();
  std::vector<Real> row(static_cast<std::size_t>(n) + 1);
  row[0] = Real(1);
  using std::pow;
  Real qk1 = qv; // q^{k+1}
  for (int k = 0; k < n; ++k) {
    row[k + 1] = row[k] * (Real(1) - pow(qv, Real(n - k))) / (Real(1) - qk1);
    qk1 *= qv;
  }
  return row;
}

} // namespace qcauchy
