#pragma once

/// The q-difference operator D_q and the Cauchy operator
///
///   T(a, b; D_q) = sum_n (a;q)_n / (q;q)_n (b D_q)^n
///
/// acting on caller-supplied functions of one complex parameter.

#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <vector>

#include "qcore.hpp"

namespace qcauchy {

/// A function of the parameter the operators act on, analytic in the open
/// disk |x| < radius (radius may be infinite).
template <class Real>
struct BasicParamFunction {
  std::function<BasicScalar<Real>(const BasicScalar<Real>&)> eval;
  double radius = std::numeric_limits<double>::infinity();

  BasicScalar<Real> operator()(const BasicScalar<Real>& x) const { return eval(x); }
};

using ParamFunction = BasicParamFunction<double>;

/// Result of an iterated difference. `cancellation` is set when the value is
/// below the rounding level of the difference table.
template <class Real>
struct BasicDifference {
  BasicScalar<Real> value{};
  bool cancellation = false;
};

namespace detail {

template <class Real>
void require_nonsingular(const BasicScalar<Real>& a)
{
  if (modulus(a) <= 1e-12) throw singular_point_error("D_q is singular at the origin");
}

} // namespace detail

/// D_q f(a) = (f(a) - f(aq)) / a.
template <class Real>
BasicScalar<Real> dq(const BasicParamFunction<Real>& f, const BasicScalar<Real>& a, const BasicQBase<Real>& q)
{
  detail::require_nonsingular(a);
  return (f(a) - f(a * q.value())) / a;
}

/// D_q^n f(a) by the difference table on the grid a, aq, ..., aq^n.
template <class Real>
BasicDifference<Real> dq_pow(const BasicParamFunction<Real>& f, const BasicScalar<Real>& a,
                             const BasicQBase<Real>& q, int n)
{
  using C = BasicScalar<Real>;
  if (n < 0) throw domain_error("dq_pow: n must be >= 0");
  if (n == 0) return {f(a), false};
  detail::require_nonsingular(a);

  const Real qv = q.value();
  std::vector<C> grid(static_cast<std::size_t>(n) + 1);
  std::vector<C> table(grid.size());
  C x = a;
  double fmax = 0.0;
  for (std::size_t j = 0; j < grid.size(); ++j) {
    grid[j] = x;
    table[j] = f(x);
    fmax = std::max(fmax, detail::modulus(table[j]));
    x *= qv;
  }
  for (int level = 1; level <= n; ++level)
    for (int j = 0; j + level <= n; ++j) table[j] = (table[j] - table[j + 1]) / grid[j];

  const double floor = n * 4.5 * detail::to_double(detail::epsilon<Real>()) * fmax;
  return {table[0], detail::modulus(table[0]) < floor};
}

/// q-Leibniz expansion of D_q^n {f g}(a):
///
///   sum_k q^{k(k-n)} [n k] D_q^k{f}(a) D_q^{n-k}{g(a q^k)}
///
/// where the second operator acts on the function a -> g(a q^k).
template <class Real>
BasicScalar<Real> leibniz_sum(const BasicParamFunction<Real>& f, const BasicParamFunction<Real>& g,
                              const BasicScalar<Real>& a, const BasicQBase<Real>& q, int n)
{
  using C = BasicScalar<Real>;
  if (n < 0) throw domain_error("leibniz_sum: n must be >= 0");
  const Real qv = q.value();
  const auto binom = qbinomial_row(n, q);
  C sum(0);
  Real qk(1);
  for (int k = 0; k <= n; ++k) {
    BasicParamFunction<Real> shifted{[&g, qk](const C& x) { return g(x * qk); }, g.radius};
    using std::pow;
    const Real weight = pow(qv, Real(k * (k - n))) * binom[k];
    sum += weight * dq_pow(f, a, q, k).value * dq_pow(shifted, a, q, n - k).value;
    qk *= qv;
  }
  return sum;
}

/// T(a, b; D_q){c^n} = sum_k [n k] (a;q)_k b^k c^{n-k}, a finite sum.
template <class Real>
BasicScalar<Real> cauchy_op_monomial(const BasicScalar<Real>& a, const BasicScalar<Real>& b,
                                     const BasicScalar<Real>& c, const BasicQBase<Real>& q, int n)
{
  using C = BasicScalar<Real>;
  if (n < 0) throw domain_error("cauchy_op_monomial: n must be >= 0");
  const auto binom = qbinomial_row(n, q);
  const Real qv = q.value();
  std::vector<C> cpow(static_cast<std::size_t>(n) + 1);
  cpow[0] = C(1);
  for (int j = 1; j <= n; ++j) cpow[j] = cpow[j - 1] * c;
  C sum(0), apoch(1), bk(1);
  Real qk(1);
  for (int k = 0; k <= n; ++k) {
    sum += binom[k] * apoch * bk * cpow[n - k];
    apoch *= C(1) - a * qk;
    bk *= b;
    qk *= qv;
  }
  return sum;
}

/// Taylor coefficients of f about the origin from samples on |x| = r, stored
/// scaled as f_m r^m.
struct TaylorExpansion {
  std::vector<Scalar> scaled;
  double radius = 0.0;
  double max_abs = 0.0;  // max |f| on the sampling circle
  bool resolved = false; // coefficients decayed to rounding level

  [[nodiscard]] Scalar coefficient(int m) const { return scaled.at(m) / std::pow(radius, m); }
};

/// Coefficients from an N-point trapezoid rule on |x| = r, doubling N (64 up to
/// max_nodes) until the scaled coefficients |c_m| r^m in the upper half of the
/// retained range fall below 1e-14 max|f|, about 50 ulp; the rounding floor
/// of the transform itself sits near 1e-16 to 1e-15.
inline TaylorExpansion taylor_coefficients(const ParamFunction& f, double r, int max_nodes = 16384)
{
  if (!(r > 0.0)) throw domain_error("taylor_coefficients: radius must be positive");
  TaylorExpansion out;
  out.radius = r;
  for (int n = 64; n <= max_nodes; n *= 2) {
    std::vector<Scalar> samples(static_cast<std::size_t>(n));
    double fmax = 0.0;
    for (int j = 0; j < n; ++j) {
      samples[j] = f(std::polar(r, 2.0 * std::numbers::pi * j / n));
      fmax = std::max(fmax, std::abs(samples[j]));
    }
    std::vector<Scalar> twiddle(static_cast<std::size_t>(n));
    for (int j = 0; j < n; ++j) twiddle[j] = std::polar(1.0, -2.0 * std::numbers::pi * j / n);
    const int keep = n / 2;
    std::vector<Scalar> scaled(static_cast<std::size_t>(keep));
    double tail = 0.0;
    for (int m = 0; m < keep; ++m) {
      Scalar acc(0);
      long idx = 0;
      for (int j = 0; j < n; ++j) {
        acc += samples[j] * twiddle[idx];
        idx += m;
        if (idx >= n) idx -= n;
      }
      acc /= static_cast<double>(n);
      if (m >= keep / 2) tail = std::max(tail, std::abs(acc));
      scaled[m] = acc;
    }
    out.scaled = std::move(scaled);
    out.max_abs = fmax;
    if (tail <= 1e-14 * fmax) {
      out.resolved = true;
      return out;
    }
  }
  return out;
}

namespace detail {

/// Empirical stopping rule for series without a certified tail: stop once the
/// last 5 terms are each below tol and so is their sum.
class SmallTermRun {
public:
  explicit SmallTermRun(double tol) : tol_(tol) {}

  /// Returns true when the series may stop after this term.
  bool push(Scalar term)
  {
    window_[next_] = term;
    next_ = (next_ + 1) % window_.size();
    count_ = std::abs(term) < tol_ ? count_ + 1 : 0;
    if (count_ < static_cast<int>(window_.size())) return false;
    Scalar sum(0);
    for (auto t : window_) sum += t;
    return std::abs(sum) < tol_;
  }

  /// Sum of |term| over the window.
  [[nodiscard]] double window_abs() const
  {
    double s = 0.0;
    for (auto t : window_) s += std::abs(t);
    return s;
  }

private:
  double tol_;
  std::array<Scalar, 5> window_{};
  std::size_t next_ = 0;
  int count_ = 0;
};

/// Sampling radius between max(|b|, |c|) and the analytic radius of f.
inline double cauchy_sampling_radius(double needed, double analytic)
{
  if (!std::isfinite(analytic)) return std::max(2.0 * needed, 1.0);
  return std::sqrt(std::max(needed, 0.05 * analytic) * analytic);
}

} // namespace detail

/// T(a, b; D_q){f}(c).
///
/// D_q^n f(c) is obtained from the Taylor expansion of f,
///
///   D_q^n f(c) = sum_j f_{j+n} (q^{j+1};q)_n c^j,
///
/// which avoids the q^{-n(n-1)/2} cancellation of the difference table. The
/// operator series stops once 5 consecutive terms and their sum are below
/// tail_tol. Requires max(|b|, |c|) < f.radius.
inline SeriesValue cauchy_op(Scalar a, Scalar b, const ParamFunction& f, Scalar c, const QBase& q,
                             const TruncationPolicy& policy = {})
{
  policy.validate();
  if (b == 0.0) return {f(c), 0.0, 1, true};

  const double needed = std::max(std::abs(b), std::abs(c));
  if (!(needed < f.radius))
    throw domain_error("cauchy_op: max(|b|, |c|) must lie inside the analytic radius of f");

  const double r = detail::cauchy_sampling_radius(needed, f.radius);
  const auto taylor = taylor_coefficients(f, r);
  const auto& fc = taylor.scaled;
  const int m_count = static_cast<int>(fc.size());
  const double qv = q.value();

  // (q;q)_m for the binomial weights (q^{j+1};q)_n = (q;q)_{j+n} / (q;q)_j.
  std::vector<double> qfac(static_cast<std::size_t>(m_count) + 1, 1.0);
  for (int m = 1; m <= m_count; ++m) qfac[m] = qfac[m - 1] * (1.0 - std::pow(qv, m));

  // Everything is carried in units of the sampling radius: f_m r^m, (c/r)^j, (b/r)^n.
  std::vector<Scalar> cpow(static_cast<std::size_t>(m_count));
  cpow[0] = 1.0;
  for (int j = 1; j < m_count; ++j) cpow[j] = cpow[j - 1] * (c / r);
  const Scalar b_scaled = b / r;

  SeriesValue out;
  Scalar coef(1); // (a;q)_n (b/r)^n / (q;q)_n
  detail::SmallTermRun run(policy.tail_tol);
  const int n_cap = std::min(policy.max_terms, m_count);
  for (int n = 0; n < n_cap; ++n) {
    Scalar deriv(0);
    for (int j = 0; j + n < m_count; ++j) deriv += fc[j + n] * (qfac[j + n] / qfac[j]) * cpow[j];
    const Scalar term = coef * deriv;
    out.value += term;
    out.terms_used = n + 1;

    if (run.push(term)) {
      out.abs_err = std::min(run.window_abs(), policy.tail_tol);
      out.converged = taylor.resolved;
      return out;
    }
    coef *= (1.0 - a * std::pow(qv, n)) * b_scaled / (1.0 - std::pow(qv, n + 1));
  }
  out.abs_err = std::numeric_limits<double>::infinity();
  out.converged = false;
  return out;
}

} // namespace qcauchy
