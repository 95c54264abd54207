#pragma once

/// Quadrature engines: periodic trapezoid on the circle, Gauss-Legendre panels
/// on an interval, Jackson q-integrals and vertical-line Barnes integrals.

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numbers>
#include <vector>

#include <boost/math/quadrature/gauss.hpp>

#include "types.hpp"

namespace qcauchy {

struct QuadResult {
  Scalar value{};
  double abs_err = 0.0; // estimate; for Barnes integrals it includes the analytic tail bound
  int nodes_used = 0;
  bool converged = true;
};

using RealFunction = std::function<Scalar(double)>;

namespace detail {

/// Successive refinements agree once |delta| <= tol * max(1, |value|).
inline bool settled(Scalar prev, Scalar cur, double tol)
{
  return std::abs(cur - prev) <= tol * std::max(1.0, std::abs(cur));
}

} // namespace detail

/// Integral of a 2pi-periodic f over [-pi, pi]: trapezoid rule, 64 to max_nodes nodes.
inline QuadResult quad_circle(const RealFunction& f, double tol, int max_nodes = 8192)
{
  if (!(tol > 0.0)) throw domain_error("quad_circle: tol must be positive");
  constexpr double pi = std::numbers::pi;
  QuadResult out;

  int n = 64;
  Scalar sum(0);
  for (int j = 0; j < n; ++j) sum += f(-pi + 2.0 * pi * j / n);
  Scalar prev = sum * (2.0 * pi / n);

  while (n < max_nodes) {
    // the new nodes sit halfway between the old ones
    for (int j = 0; j < n; ++j) sum += f(-pi + pi * (2 * j + 1) / n);
    n *= 2;
    const Scalar cur = sum * (2.0 * pi / n);
    out.value = cur;
    out.abs_err = std::abs(cur - prev);
    out.nodes_used = n;
    if (detail::settled(prev, cur, tol)) return out;
    prev = cur;
  }
  out.converged = false;
  return out;
}

namespace detail {

inline Scalar gauss_panels(const RealFunction& f, double lo, double hi, int panels)
{
  using rule = boost::math::quadrature::gauss<double, 20>;
  const auto& x = rule::abscissa();
  const auto& w = rule::weights();
  const double width = (hi - lo) / panels;
  Scalar total(0);
  for (int p = 0; p < panels; ++p) {
    const double mid = lo + (p + 0.5) * width;
    const double half = 0.5 * width;
    Scalar acc(0);
    for (std::size_t k = 0; k < x.size(); ++k) {
      if (x[k] == 0.0) {
        acc += w[k] * f(mid);
      } else {
        acc += w[k] * (f(mid - half * x[k]) + f(mid + half * x[k]));
      }
    }
    total += acc * half;
  }
  return total;
}

} // namespace detail

/// Composite 20-point Gauss-Legendre rule on [lo, hi], doubling the panel count
/// from 2 up to max_panels.
inline QuadResult quad_panel(const RealFunction& f, double lo, double hi, double tol, int max_panels = 2048)
{
  if (!(tol > 0.0)) throw domain_error("quad_panel: tol must be positive");
  QuadResult out;
  if (lo == hi) return out;

  int panels = 2;
  Scalar prev = detail::gauss_panels(f, lo, hi, panels);
  while (panels < max_panels) {
    panels *= 2;
    const Scalar cur = detail::gauss_panels(f, lo, hi, panels);
    out.value = cur;
    out.abs_err = std::abs(cur - prev);
    out.nodes_used = 20 * panels;
    if (detail::settled(prev, cur, tol)) return out;
    prev = cur;
  }
  out.converged = false;
  return out;
}

/// Jackson integral (1 - q) sum_n q^n [d f(d q^n) - c f(c q^n)].
///
/// The tail after term n is estimated as |term_n| rho / (1 - rho), rho being
/// the larger of q and the last observed term ratio.
inline SeriesValue jackson_qintegral(const std::function<Scalar(Scalar)>& f, Scalar c, Scalar d, const QBase& q,
                                     const TruncationPolicy& policy = {})
{
  policy.validate();
  if (c == 0.0 || d == 0.0) throw domain_error("jackson_qintegral: endpoints must be nonzero");
  const double qv = q.value();
  SeriesValue out;
  if (c == d) {
    out.terms_used = 0;
    return out;
  }
  double qn = 1.0;
  Scalar sum(0);
  double last = std::numeric_limits<double>::infinity();
  for (int n = 0; n < policy.max_terms; ++n) {
    const Scalar term = qn * (d * f(d * qn) - c * f(c * qn));
    sum += term;
    const double mag = std::abs(term);
    if (n >= 4) {
      const double rho = std::max(qv, last > 0.0 ? mag / last : 0.0);
      if (rho < 1.0) {
        const double tail = (1.0 - qv) * mag * rho / (1.0 - rho);
        if (tail < policy.tail_tol) {
          out.value = (1.0 - qv) * sum;
          out.abs_err = tail;
          out.terms_used = n + 1;
          return out;
        }
      }
    }
    last = mag;
    qn *= qv;
  }
  out.value = (1.0 - qv) * sum;
  out.abs_err = std::numeric_limits<double>::infinity();
  out.terms_used = policy.max_terms;
  out.converged = false;
  return out;
}

/// The line Re s = -shift, truncated to |Im s| <= half_height.
///
/// `envelope` is a constant C with |f(-shift + it)| <= C exp(-2 pi |t|) for
/// |t| >= 1. When half_height <= 0 it is chosen from the envelope so the
/// neglected tail is below tol / 10. `pole_abscissae` lists the real parts of
/// the integrand's pole families nearest the line.
struct BarnesLine {
  double shift = 0.0;
  double half_height = 0.0;
  double envelope = 1.0;
  std::vector<double> pole_abscissae;
};

inline constexpr double barnes_pole_gap = 0.02;

namespace detail {

inline double barnes_tail(double envelope, double height)
{
  return envelope * std::exp(-2.0 * std::numbers::pi * height) / (2.0 * std::numbers::pi);
}

} // namespace detail

/// (1 / 2 pi i) times the integral of f along the line, upward.
inline QuadResult barnes_integral(const std::function<Scalar(Scalar)>& f, const BarnesLine& line, double tol)
{
  if (!(tol > 0.0)) throw domain_error("barnes_integral: tol must be positive");
  if (!(line.envelope >= 0.0) || !std::isfinite(line.envelope))
    throw domain_error("barnes_integral: envelope must be finite and nonnegative");
  for (double p : line.pole_abscissae)
    if (std::abs(p + line.shift) < barnes_pole_gap) throw pole_error("barnes_integral: pole too close to the contour");

  double height = line.half_height;
  if (height <= 0.0) {
    height = 1.0;
    if (line.envelope > 0.0)
      height = std::max(1.0, std::log(10.0 * line.envelope / (2.0 * std::numbers::pi * tol)) /
                                 (2.0 * std::numbers::pi));
  }
  // ds = i dt cancels the i of 1 / (2 pi i).
  const RealFunction g = [&](double t) { return f(Scalar(-line.shift, t)) / (2.0 * std::numbers::pi); };
  const int panels = std::max(2048, static_cast<int>(std::ceil(height)) * 256);
  QuadResult out = quad_panel(g, -height, height, tol, panels);
  out.abs_err += detail::barnes_tail(line.envelope, height);
  return out;
}

} // namespace qcauchy
