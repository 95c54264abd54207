#pragma once

/// Cauchy polynomials and the classical / bivariate Rogers-Szego polynomials,
/// with the truncated generating sums used to check their closed forms.

#include <cmath>
#include <vector>

#include "qcore.hpp"
#include "qoperator.hpp"

namespace qcauchy {

/// P_k(x, y) = (x - y)(x - qy)...(x - q^{k-1} y).
inline Scalar cauchy_poly(Scalar x, Scalar y, int k, const QBase& q)
{
  if (k < 0) throw domain_error("cauchy_poly: k must be >= 0");
  Scalar prod(1);
  double qj = 1.0;
  for (int j = 0; j < k; ++j) {
    prod *= x - qj * y;
    qj *= q.value();
  }
  return prod;
}

/// h_n(x, y | q) = sum_k [n k] P_k(x, y).
inline Scalar rogers_szego_biv(Scalar x, Scalar y, const QBase& q, int n)
{
  if (n < 0) throw domain_error("rogers_szego_biv: n must be >= 0");
  const auto binom = qbinomial_row(n, q);
  Scalar sum(0), pk(1);
  double qj = 1.0;
  for (int k = 0; k <= n; ++k) {
    sum += binom[k] * pk;
    pk *= x - qj * y;
    qj *= q.value();
  }
  return sum;
}

/// h_n(x | q) = sum_k [n k] x^k.
inline Scalar rogers_szego(Scalar x, const QBase& q, int n)
{
  if (n < 0) throw domain_error("rogers_szego: n must be >= 0");
  const auto binom = qbinomial_row(n, q);
  Scalar sum(0), xk(1);
  for (int k = 0; k <= n; ++k) {
    sum += binom[k] * xk;
    xk *= x;
  }
  return sum;
}

/// h_0(x, y | q) ... h_n(x, y | q) in O(n^2).
inline std::vector<Scalar> rogers_szego_biv_sequence(Scalar x, Scalar y, const QBase& q, int n)
{
  if (n < 0) throw domain_error("rogers_szego_biv_sequence: n must be >= 0");
  std::vector<Scalar> pk(static_cast<std::size_t>(n) + 1);
  pk[0] = 1.0;
  double qj = 1.0;
  for (int k = 1; k <= n; ++k) {
    pk[k] = pk[k - 1] * (x - qj * y);
    qj *= q.value();
  }
  std::vector<Scalar> h(pk.size());
  for (int m = 0; m <= n; ++m) {
    const auto binom = qbinomial_row(m, q);
    Scalar sum(0);
    for (int k = 0; k <= m; ++k) sum += binom[k] * pk[k];
    h[m] = sum;
  }
  return h;
}

namespace detail {

/// Grows a cached sequence of h_n(x, y) on demand.
class BivariateRS {
public:
  BivariateRS(Scalar x, Scalar y, const QBase& q) : x_(x), y_(y), q_(q) {}

  Scalar operator()(int n)
  {
    if (n >= static_cast<int>(h_.size())) h_ = rogers_szego_biv_sequence(x_, y_, q_, std::max(2 * n, 64));
    return h_[n];
  }

private:
  Scalar x_, y_;
  QBase q_;
  std::vector<Scalar> h_;
};

} // namespace detail

/// sum_n h_n(x, y | q) t^n / (q;q)_n.
inline SeriesValue biv_generating_function(Scalar x, Scalar y, Scalar t, const QBase& q,
                                           const TruncationPolicy& policy = {})
{
  policy.validate();
  SeriesValue out;
  if (t == 0.0) {
    out.value = 1.0;
    out.terms_used = 1;
    return out;
  }
  detail::BivariateRS h(x, y, q);
  detail::SmallTermRun run(policy.tail_tol);
  Scalar weight(1); // t^n / (q;q)_n
  for (int n = 0; n < policy.max_terms; ++n) {
    const Scalar term = h(n) * weight;
    out.value += term;
    out.terms_used = n + 1;
    if (run.push(term)) {
      out.abs_err = std::min(run.window_abs(), policy.tail_tol);
      return out;
    }
    weight *= t / (1.0 - std::pow(q.value(), n + 1));
  }
  out.converged = false;
  out.abs_err = std::numeric_limits<double>::infinity();
  return out;
}

/// Mehler kernel sum_n h_n(x, y | q) h_n(u, v | q) t^n / (q;q)_n.
inline SeriesValue mehler_sum(Scalar x, Scalar y, Scalar u, Scalar v, Scalar t, const QBase& q,
                              const TruncationPolicy& policy = {})
{
  policy.validate();
  detail::BivariateRS h1(x, y, q), h2(u, v, q);
  detail::SmallTermRun run(policy.tail_tol);
  SeriesValue out;
  Scalar weight(1);
  for (int n = 0; n < policy.max_terms; ++n) {
    const Scalar term = h1(n) * h2(n) * weight;
    out.value += term;
    out.terms_used = n + 1;
    if (run.push(term)) {
      out.abs_err = std::min(run.window_abs(), policy.tail_tol);
      return out;
    }
    weight *= t / (1.0 - std::pow(q.value(), n + 1));
  }
  out.converged = false;
  out.abs_err = std::numeric_limits<double>::infinity();
  return out;
}

/// Rogers double sum sum_{n,m} h_{m+n}(x, y | q) t^n s^m / ((q;q)_n (q;q)_m),
/// truncated to the rectangle n < N, m < M where N (resp. M) is the first index
/// after which 5 consecutive row (column) magnitudes are below tail_tol / 2.
inline SeriesValue rogers_double_sum(Scalar x, Scalar y, Scalar s, Scalar t, const QBase& q,
                                     const TruncationPolicy& policy = {}, int max_side = 400)
{
  policy.validate();
  const double half_tol = 0.5 * policy.tail_tol;
  for (int side = 64;; side *= 2) {
    side = std::min(side, max_side);
    const auto h = rogers_szego_biv_sequence(x, y, q, 2 * side);
    std::vector<Scalar> tw(static_cast<std::size_t>(side)), sw(tw.size());
    tw[0] = sw[0] = 1.0;
    for (int n = 1; n < side; ++n) {
      const double qn = 1.0 - std::pow(q.value(), n);
      tw[n] = tw[n - 1] * t / qn;
      sw[n] = sw[n - 1] * s / qn;
    }
    std::vector<double> row(static_cast<std::size_t>(side), 0.0), col(row.size(), 0.0);
    for (int n = 0; n < side; ++n)
      for (int m = 0; m < side; ++m) {
        const double mag = std::abs(h[n + m] * tw[n] * sw[m]);
        row[n] += mag;
        col[m] += mag;
      }
    auto cut = [&](const std::vector<double>& mags) {
      int run = 0;
      for (int i = 0; i < side; ++i) {
        run = mags[i] < half_tol ? run + 1 : 0;
        if (run >= 5) return i + 1;
      }
      return -1;
    };
    const int n_cut = cut(row);
    const int m_cut = cut(col);
    if ((n_cut < 0 || m_cut < 0) && side < max_side) continue;

    SeriesValue out;
    const int nn = n_cut < 0 ? side : n_cut;
    const int mm = m_cut < 0 ? side : m_cut;
    for (int n = 0; n < nn; ++n)
      for (int m = 0; m < mm; ++m) out.value += h[n + m] * tw[n] * sw[m];
    out.terms_used = nn * mm;
    out.converged = n_cut >= 0 && m_cut >= 0;
    double tail = 0.0;
    for (int i = std::max(nn - 5, 0); i < nn; ++i) tail += row[i];
    for (int i = std::max(mm - 5, 0); i < mm; ++i) tail += col[i];
    out.abs_err = out.converged ? std::min(tail, policy.tail_tol) : std::numeric_limits<double>::infinity();
    return out;
  }
}

} // namespace qcauchy
