#pragma once

/// Barnes-type integrands in product form, so the decay envelope on the
/// contour can be bounded from the parameters.
///
///   prod (q^{n_i + s};q)_inf / prod (q^{d_j + s};q)_inf * pi q^s / (sin sin) * inner
///
/// with inner an optional r-phi-s whose parameters are q^{e} or q^{e + s}.

#include <cmath>
#include <numbers>
#include <optional>
#include <vector>

#include "../hyperseries.hpp"
#include "../qintegrate.hpp"

namespace qcauchy::verify {

/// q^{exponent}, or q^{exponent + s} when `moves` is set.
struct QPower {
  double exponent = 0.0;
  bool moves = false;
};

struct InnerPhi {
  std::vector<QPower> upper;
  std::vector<QPower> lower;
  double z_exponent = 0.0;
};

enum class SinePair {
  first,  // sin pi(c - s) sin pi(d - s)
  second, // sin pi s sin pi(d + s)
};

struct BarnesForm {
  std::vector<double> num;
  std::vector<double> den;
  SinePair sines = SinePair::first;
  double c = 0.0;
  double d = 0.0;
  std::optional<InnerPhi> inner;
  std::vector<double> poles; // real parts of the pole families next to the contour
};

namespace detail {

inline Scalar qpow(const QBase& q, double exponent, Scalar s) { return q.pow(Scalar(exponent) + s); }

inline Scalar sine_factor(const BarnesForm& form, Scalar s)
{
  constexpr double pi = std::numbers::pi;
  if (form.sines == SinePair::first) return std::sin(pi * (form.c - s)) * std::sin(pi * (form.d - s));
  return std::sin(pi * s) * std::sin(pi * (form.d + s));
}

inline PhiSpec inner_spec(const InnerPhi& inner, const QBase& q, Scalar s)
{
  PhiSpec spec{{}, {}, q, q.pow(inner.z_exponent)};
  for (const auto& p : inner.upper) spec.upper.push_back(qpow(q, p.exponent, p.moves ? s : Scalar(0)));
  for (const auto& p : inner.lower) spec.lower.push_back(qpow(q, p.exponent, p.moves ? s : Scalar(0)));
  return spec;
}

} // namespace detail

/// Integrand value at s. `ok` is cleared if an inner truncation fails.
inline Scalar barnes_integrand(const BarnesForm& form, const QBase& q, Scalar s, const TruncationPolicy& products,
                               const TruncationPolicy& inner_policy, bool& ok)
{
  Scalar value = std::numbers::pi * q.pow(s) / detail::sine_factor(form, s);
  for (double e : form.num) {
    const auto v = qpoch_infinite(detail::qpow(q, e, s), q, products);
    ok = ok && v.converged;
    value *= v.value;
  }
  for (double e : form.den) {
    const auto v = qpoch_infinite(detail::qpow(q, e, s), q, products);
    ok = ok && v.converged;
    value /= v.value;
  }
  if (form.inner) {
    const auto v = phi(detail::inner_spec(*form.inner, q, s), inner_policy);
    ok = ok && v.converged;
    value *= v.value;
  }
  return value;
}

/// C with |integrand(-shift + it)| <= C exp(-2 pi |t|) for |t| >= 1.
///
/// Uses |(x;q)_inf| <= (-|x|;q)_inf, 1/|(x;q)_inf| <= 1/(|x|;q)_inf for |x| < 1,
/// |sin pi(u + it)| >= sinh(pi |t|), and the positive-term majorant of the
/// inner series. Returns infinity when one of these bounds is unavailable.
inline double barnes_envelope(const BarnesForm& form, const QBase& q, double shift)
{
  constexpr double inf = std::numeric_limits<double>::infinity();
  const TruncationPolicy policy{10000, 1e-15};
  auto mod = [&](const QPower& p) { return std::pow(q.value(), p.exponent - (p.moves ? shift : 0.0)); };

  double bound = std::numbers::pi * std::pow(q.value(), -shift);
  // 1 / (sinh(pi t))^2 <= 4 e^{-2 pi t} / (1 - e^{-2 pi})^2 for t >= 1
  bound *= 4.0 / std::pow(1.0 - std::exp(-2.0 * std::numbers::pi), 2);
  for (double e : form.num) bound *= qpoch_infinite(Scalar(-mod({e, true})), q, policy).value.real();
  for (double e : form.den) {
    const double x = mod({e, true});
    if (x >= 1.0) return inf;
    bound /= qpoch_infinite(Scalar(x), q, policy).value.real();
  }
  if (form.inner) {
    PhiSpec major{{}, {}, q, std::pow(q.value(), form.inner->z_exponent)};
    for (const auto& p : form.inner->upper) major.upper.push_back(-mod(p));
    for (const auto& p : form.inner->lower) {
      if (mod(p) >= 1.0) return inf;
      major.lower.push_back(mod(p));
    }
    try {
      bound *= phi(major, policy).value.real();
    } catch (const error&) {
      return inf;
    }
  }
  return bound;
}

inline BarnesLine barnes_line(const BarnesForm& form, const QBase& q, double shift)
{
  BarnesLine line;
  line.shift = shift;
  line.envelope = barnes_envelope(form, q, shift);
  line.pole_abscissae = form.poles;
  return line;
}

} // namespace qcauchy::verify
