#pragma once

/// The registry of identities checked by the harness. Each entry pairs the two
/// sides of an identity with a sampler of admissible parameters.

#include <cmath>
#include <functional>
#include <initializer_list>
#include <numbers>
#include <string>
#include <vector>

#include "../qcauchy.hpp"
#include "barnes.hpp"
#include "params.hpp"

namespace qcauchy::verify {

enum class Kind { series, operator_identity, circle_integral, panel_integral, jackson_integral, barnes_integral };

inline const char* kind_name(Kind k)
{
  switch (k) {
  case Kind::series: return "series";
  case Kind::operator_identity: return "operator";
  case Kind::circle_integral: return "circle-integral";
  case Kind::panel_integral: return "panel-integral";
  case Kind::jackson_integral: return "jackson-integral";
  case Kind::barnes_integral: return "barnes-integral";
  }
  return "unknown";
}

/// Default relative tolerance for each kind.
inline double kind_tolerance(Kind k)
{
  switch (k) {
  case Kind::circle_integral:
  case Kind::panel_integral:
  case Kind::barnes_integral: return 1e-6;
  default: return 1e-8;
  }
}

struct Evaluation {
  Scalar value{};
  double abs_err = 0.0;
  bool converged = true;
};

using Evaluator = std::function<Evaluation(const ParamPoint&)>;

struct IdentitySpec {
  std::string id;
  std::string anchor;
  Kind kind = Kind::series;
  /// Fills every parameter except q, which is already set.
  std::function<void(Draw&, ParamPoint&)> draw;
  std::function<bool(const ParamPoint&)> admissible;
  Evaluator lhs;
  Evaluator rhs;
  double tol = 1e-8;
};

/// Truncation settings shared by all evaluators.
struct EvalSettings {
  TruncationPolicy products{10000, 1e-15};
  TruncationPolicy series{10000, 1e-14};
  TruncationPolicy op{10000, 1e-13};
  double quad_tol = 1e-10;
  TruncationPolicy inner{10000, 1e-12}; // quad_tol / 100
  TruncationPolicy jackson{10000, 1e-13};
};

inline const EvalSettings& eval_settings()
{
  static const EvalSettings s;
  return s;
}

namespace detail {

/// Pointwise evaluation with a sticky convergence flag; used inside integrands.
class Node {
public:
  explicit Node(QBase q) : q_(q) {}

  [[nodiscard]] const QBase& q() const { return q_; }
  [[nodiscard]] bool ok() const { return ok_; }
  void fail() { ok_ = false; }

  Scalar inf(Scalar x)
  {
    const auto v = qpoch_infinite(x, q_, eval_settings().products);
    ok_ = ok_ && v.converged;
    return v.value;
  }

  Scalar ratio(std::initializer_list<Scalar> num, std::initializer_list<Scalar> den)
  {
    Scalar r(1);
    for (auto x : num) r *= inf(x);
    for (auto x : den) r /= inf(x);
    return r;
  }

  Scalar phi(std::vector<Scalar> upper, std::vector<Scalar> lower, Scalar z)
  {
    const auto v = qcauchy::phi({std::move(upper), std::move(lower), q_, z}, eval_settings().inner);
    ok_ = ok_ && v.converged;
    return v.value;
  }

private:
  QBase q_;
  bool ok_ = true;
};

/// Top-level evaluation: tracks convergence and a first-order relative error.
class Ctx {
public:
  explicit Ctx(const ParamPoint& p) : p_(p), q_(p.q()) {}

  Scalar operator()(const char* name) const { return p_[name]; }
  [[nodiscard]] double real(const char* name) const { return p_.real(name); }
  [[nodiscard]] const QBase& q() const { return q_; }
  [[nodiscard]] double qv() const { return q_.value(); }
  /// q^x for a real exponent.
  [[nodiscard]] Scalar Q(double x) const { return q_.pow(x); }

  template <class V>
  Scalar track(const V& v)
  {
    ok_ = ok_ && v.converged;
    const double m = std::abs(v.value);
    if (m > 0.0) rel_ += v.abs_err / m;
    return v.value;
  }

  Scalar inf(Scalar x) { return track(qpoch_infinite(x, q_, eval_settings().products)); }

  Scalar ratio(std::initializer_list<Scalar> num, std::initializer_list<Scalar> den)
  {
    Scalar r(1);
    for (auto x : num) r *= inf(x);
    for (auto x : den) r /= inf(x);
    return r;
  }

  Scalar phi(std::vector<Scalar> upper, std::vector<Scalar> lower, Scalar z)
  {
    return track(qcauchy::phi({std::move(upper), std::move(lower), q_, z}, eval_settings().series));
  }

  void absorb(const Node& n) { ok_ = ok_ && n.ok(); }

  [[nodiscard]] Evaluation done(Scalar value) const { return {value, rel_ * std::abs(value), ok_}; }

private:
  const ParamPoint& p_;
  QBase q_;
  bool ok_ = true;
  double rel_ = 0.0;
};

inline Scalar unit(double theta) { return std::polar(1.0, theta); }

/// Integral over [0, pi] of f(e^{it}).
inline Evaluation panel_side(Ctx& c, const std::function<Scalar(Node&, Scalar)>& integrand)
{
  Node node(c.q());
  const auto r = quad_panel([&](double th) { return integrand(node, unit(th)); }, 0.0, std::numbers::pi,
                            eval_settings().quad_tol);
  c.absorb(node);
  return c.done(c.track(r));
}

/// Radius r in the pole-free annulus minimizing the peak of |f(r e^{it})| on a
/// coarse grid. Integrands with large theta-type factors cancel badly on the
/// unit circle; shrinking or growing the circle can remove most of that.
inline double circle_radius(const QBase& q, const std::function<Scalar(Node&, Scalar)>& integrand,
                            const std::vector<Scalar>& inner, const std::vector<Scalar>& outer)
{
  constexpr double margin = 1.05;
  double lo = 0.0, hi = std::numeric_limits<double>::infinity();
  for (auto z : inner) lo = std::max(lo, margin * std::abs(z));
  for (auto z : outer)
    if (z != 0.0) hi = std::min(hi, 1.0 / (margin * std::abs(z)));
  lo = std::min(lo, 1.0);
  hi = std::max(hi, 1.0);
  if (!(lo > 0.0) || !std::isfinite(hi)) return 1.0;

  constexpr int radii = 24, probes = 32;
  double best_r = 1.0, best = std::numeric_limits<double>::infinity();
  for (int k = 0; k <= radii; ++k) {
    const double r = lo * std::pow(hi / lo, static_cast<double>(k) / radii);
    Node probe(q);
    double peak = 0.0;
    try {
      for (int j = 0; j < probes; ++j)
        peak = std::max(peak, std::abs(integrand(probe, std::polar(r, 2.0 * std::numbers::pi * j / probes))));
    } catch (const error&) {
      continue;
    }
    if (probe.ok() && std::isfinite(peak) && peak < best) {
      best = peak;
      best_r = r;
    }
  }
  return best_r;
}

/// (1 / 2pi) times the integral over [-pi, pi] of f(e^{it}).
///
/// `inner` and `outer` give the pole rings of f: poles at z q^k for z in
/// inner, at 1 / (z q^k) for z in outer. The integral is taken over the
/// circle of radius circle_radius(...), which gives the same value.
inline Evaluation circle_side(Ctx& c, const std::function<Scalar(Node&, Scalar)>& integrand,
                              const std::vector<Scalar>& inner = {}, const std::vector<Scalar>& outer = {})
{
  const double radius = inner.empty() ? 1.0 : circle_radius(c.q(), integrand, inner, outer);
  Node node(c.q());
  auto r = quad_circle([&](double th) { return integrand(node, std::polar(radius, th)); }, eval_settings().quad_tol);
  r.value /= 2.0 * std::numbers::pi;
  r.abs_err /= 2.0 * std::numbers::pi;
  c.absorb(node);
  return c.done(c.track(r));
}

inline Evaluation jackson_side(Ctx& c, Scalar lo, Scalar hi, const std::function<Scalar(Node&, Scalar)>& integrand)
{
  Node node(c.q());
  const auto r = jackson_qintegral([&](Scalar t) { return integrand(node, t); }, lo, hi, c.q(),
                                   eval_settings().jackson);
  c.absorb(node);
  return c.done(c.track(r));
}

inline Evaluation barnes_side(Ctx& c, const BarnesForm& form, double shift)
{
  Node node(c.q());
  bool ok = true;
  const auto line = barnes_line(form, c.q(), shift);
  const auto r = barnes_integral(
      [&](Scalar s) {
        return barnes_integrand(form, c.q(), s, eval_settings().products, eval_settings().inner, ok);
      },
      line, eval_settings().quad_tol);
  if (!ok) node.fail();
  c.absorb(node);
  return c.done(c.track(r));
}

inline Evaluation operator_side(Ctx& c, Scalar a, Scalar b, Scalar at, double radius,
                                const std::function<Scalar(Node&, Scalar)>& f)
{
  Node node(c.q());
  const ParamFunction fn{[&](Scalar x) { return f(node, x); }, radius};
  const auto r = cauchy_op(a, b, fn, at, c.q(), eval_settings().op);
  c.absorb(node);
  return c.done(c.track(r));
}

inline bool all_small(std::initializer_list<Scalar> xs)
{
  for (auto x : xs)
    if (!check::small(x)) return false;
  return true;
}

inline bool all_off_zero(double q, std::initializer_list<Scalar> xs, double gap = 1e-3)
{
  for (auto x : xs)
    if (!check::off_zero(x, q, gap)) return false;
  return true;
}

/// Zeros of numerator factors are kept further away so the relative error stays meaningful.
inline constexpr double numerator_gap = 1e-2;

inline double Qr(const ParamPoint& p, double x) { return std::pow(p.real("q"), x); }

/// Real exponent ranges for Barnes-type parameters.
inline void draw_exponents(Draw& d, ParamPoint& p, std::initializer_list<const char*> wide,
                           std::initializer_list<const char*> narrow)
{
  for (auto n : wide) p.set(n, d.real(0.2, 1.5));
  for (auto n : narrow) p.set(n, d.real(0.1, 0.9));
}

inline bool in_range(const ParamPoint& p, std::initializer_list<const char*> wide,
                     std::initializer_list<const char*> narrow)
{
  for (auto n : wide) {
    const double v = p.real(n);
    if (!(v >= 0.2 && v <= 1.5)) return false;
  }
  for (auto n : narrow) {
    const double v = p.real(n);
    if (!(v >= 0.1 && v <= 0.9)) return false;
  }
  return true;
}

inline bool barnes_cd_ok(const ParamPoint& p)
{
  const double gap = std::abs(p.real("c") - p.real("d"));
  return gap >= 0.05 && gap <= 0.9;
}

inline bool poles_clear(const std::vector<double>& poles, double shift)
{
  for (double x : poles)
    if (std::abs(x + shift) < barnes_pole_gap) return false;
  return true;
}

inline double sin_pi(double x) { return std::sin(std::numbers::pi * x); }

} // namespace detail

/// Barnes integrand descriptions, shared by the registry and the contour tests.
namespace barnes_forms {

inline BarnesForm first(const ParamPoint& p)
{
  const double a = p.real("a"), b = p.real("b"), c = p.real("c"), d = p.real("d");
  return {{1 - c, 1 - d}, {a, b}, SinePair::first, c, d, std::nullopt, {c, d, -a, -b}};
}

inline BarnesForm second(const ParamPoint& p)
{
  const double a = p.real("a"), b = p.real("b"), c = p.real("c"), d = p.real("d");
  return {{1, d, 1 + a + b + c - d}, {a, b, c}, SinePair::second, 0.0, d, std::nullopt, {0, 1 - d, -a, -b, -c}};
}

inline BarnesForm first_ext(const ParamPoint& p)
{
  const double a = p.real("a"), b = p.real("b"), c = p.real("c"), d = p.real("d"), e = p.real("e"),
               f = p.real("f");
  return {{1 - c, 1 - d, e + f}, {a, b, f}, SinePair::first, c, d, std::nullopt, {c, d, -a, -b, -f}};
}

inline BarnesForm liu(const ParamPoint& p)
{
  const double a = p.real("a"), b = p.real("b"), c = p.real("c"), d = p.real("d"), f = p.real("f");
  return {{1 - c, 1 - d, a + b + c + d + f}, {a, b, f}, SinePair::first, c, d, std::nullopt, {c, d, -a, -b, -f}};
}

inline BarnesForm first_ext2(const ParamPoint& p)
{
  const double a = p.real("a"), b = p.real("b"), c = p.real("c"), d = p.real("d"), e = p.real("e"),
               f = p.real("f"), g = p.real("g");
  InnerPhi inner{{{e, false}, {a, true}, {b, true}}, {{e + g, true}, {a + b + c + d + f, true}}, c + d + f + g};
  return {{1 - c, 1 - d, a + b + c + d + f, e + g},
          {a, b, f, g},
          SinePair::first,
          c,
          d,
          inner,
          {c, d, -a, -b, -f, -g, -(e + g)}};
}

inline BarnesForm second_ext(const ParamPoint& p)
{
  const double a = p.real("a"), b = p.real("b"), c = p.real("c"), d = p.real("d"), e = p.real("e"),
               f = p.real("f");
  InnerPhi inner{{{e, false}, {a, true}, {b, true}}, {{e + f, true}, {1 + a + b + c - d, true}}, 1 + c + f - d};
  return {{1, d, 1 + a + b + c - d, e + f},
          {a, b, c, f},
          SinePair::second,
          0.0,
          d,
          inner,
          {0, 1 - d, -a, -b, -c, -f, -(e + f)}};
}

/// Default contour: the imaginary axis for the first kind, Re s = -d/2 for the second.
inline double default_shift(const BarnesForm& form) { return form.sines == SinePair::first ? 0.0 : form.d / 2; }

} // namespace barnes_forms

namespace detail {

using check::off_zero;

// Integrand pieces shared by the Askey-Wilson family.
inline Scalar aw_weight(Node& n, Scalar w, std::initializer_list<Scalar> ps)
{
  Scalar v = n.inf(w * w) * n.inf(1.0 / (w * w));
  for (auto x : ps) v /= n.inf(x * w) * n.inf(x / w);
  return v;
}

// The theta-function part of the Askey-Roy family.
inline Scalar roy_weight(Node& n, Scalar w, Scalar c, Scalar d, Scalar rho)
{
  const double q = n.q().value();
  return n.inf(rho * w / d) * n.inf(q * d / (rho * w)) * n.inf(rho * c / w) * n.inf(q * w / (c * rho)) /
         (n.inf(c / w) * n.inf(d / w));
}

inline Scalar roy_constant(Ctx& x, Scalar c, Scalar d, Scalar rho)
{
  return x.ratio({rho * c / d, d * x.qv() / (rho * c), rho, x.qv() / rho}, {});
}

inline bool roy_admissible(const ParamPoint& p)
{
  const double q = p.real("q");
  const Scalar c = p["c"], d = p["d"], rho = p["rho"];
  return all_off_zero(q, {rho * c / d, d * q / (rho * c), rho, q / rho}, numerator_gap);
}

inline void draw_small(Draw& d, ParamPoint& p, std::initializer_list<const char*> names, double cap = 1.0)
{
  for (auto n : names) p.set(n, d.complex(cap));
}

inline bool params_small(const ParamPoint& p, std::initializer_list<const char*> names)
{
  for (auto n : names)
    if (!check::small(p[n])) return false;
  return true;
}

} // namespace detail

inline std::vector<IdentitySpec> builtin_registry()
{
  using namespace detail;
  using C = Scalar;
  std::vector<IdentitySpec> reg;

  auto add = [&](std::string id, std::string anchor, Kind kind, auto draw, auto admissible, auto lhs, auto rhs) {
    reg.push_back({std::move(id), std::move(anchor), kind, draw, admissible,
                   [lhs](const ParamPoint& p) {
                     Ctx c(p);
                     return lhs(c);
                   },
                   [rhs](const ParamPoint& p) {
                     Ctx c(p);
                     return rhs(c);
                   },
                   kind_tolerance(kind)});
  };

  // ---- summations and transformations ----

  add(
      "cauchy-qbinomial", "Cauchy q-binomial theorem", Kind::series,
      [](Draw& d, ParamPoint& p) {
        p.set("a", d.complex(2.0));
        p.set("z", d.complex());
      },
      [](const ParamPoint& p) { return check::small(p["z"]) && off_zero(p["z"], p.real("q")); },
      [](Ctx& c) { return c.done(c.phi({c("a")}, {}, c("z"))); },
      [](Ctx& c) { return c.done(c.ratio({c("a") * c("z")}, {c("z")})); });

  add(
      "euler", "Euler's identity for 1/(z;q)_inf", Kind::series,
      [](Draw& d, ParamPoint& p) { p.set("z", d.complex()); },
      [](const ParamPoint& p) { return check::small(p["z"]) && off_zero(p["z"], p.real("q")); },
      [](Ctx& c) { return c.done(c.phi({C(0)}, {}, c("z"))); },
      [](Ctx& c) { return c.done(c.ratio({}, {c("z")})); });

  add(
      "q-gauss", "q-Gauss summation", Kind::series,
      [](Draw& d, ParamPoint& p) {
        const C a = d.complex(2.0), b = d.complex(2.0);
        p.set("a", a);
        p.set("b", b);
        p.set("c", a * b * d.complex());
      },
      [](const ParamPoint& p) {
        const double q = p.real("q");
        const C a = p["a"], b = p["b"], c = p["c"];
        return check::small(c / (a * b)) && all_off_zero(q, {c, c / (a * b)});
      },
      [](Ctx& x) {
        const C a = x("a"), b = x("b"), c = x("c");
        return x.done(x.phi({a, b}, {c}, c / (a * b)));
      },
      [](Ctx& x) {
        const C a = x("a"), b = x("b"), c = x("c");
        return x.done(x.ratio({c / a, c / b}, {c, c / (a * b)}));
      });

  add(
      "heine", "Heine's 2phi1 transformation", Kind::series,
      [](Draw& d, ParamPoint& p) {
        const C b = d.complex(2.0);
        p.set("a", d.complex(2.0));
        p.set("b", b);
        p.set("c", b * d.complex());
        p.set("z", d.complex());
      },
      [](const ParamPoint& p) {
        const double q = p.real("q");
        const C b = p["b"], c = p["c"], z = p["z"];
        return all_small({z, c / b}) && all_off_zero(q, {c, z, b * z});
      },
      [](Ctx& x) { return x.done(x.phi({x("a"), x("b")}, {x("c")}, x("z"))); },
      [](Ctx& x) {
        const C a = x("a"), b = x("b"), c = x("c"), z = x("z");
        return x.done(x.ratio({c / b, b * z}, {c, z}) * x.phi({a * b * z / c, b}, {b * z}, c / b));
      });

  add(
      "sears", "Sears' 3phi2 transformation", Kind::series,
      [](Draw& d, ParamPoint& p) {
        const C a = d.complex(2.0), b = d.complex(2.0), c = d.complex(2.0), dd = d.complex(2.0);
        p.set("a", a);
        p.set("b", b);
        p.set("c", c);
        p.set("d", dd);
        p.set("e", a * d.complex(std::min(1.0, std::abs(b * c / dd))));
      },
      [](const ParamPoint& p) {
        const double q = p.real("q");
        const C a = p["a"], b = p["b"], c = p["c"], d = p["d"], e = p["e"];
        return all_small({d * e / (a * b * c), e / a}) && all_off_zero(q, {d, e, d * e / (b * c), d * e / (a * b * c)});
      },
      [](Ctx& x) {
        const C a = x("a"), b = x("b"), c = x("c"), d = x("d"), e = x("e");
        return x.done(x.phi({a, b, c}, {d, e}, d * e / (a * b * c)));
      },
      [](Ctx& x) {
        const C a = x("a"), b = x("b"), c = x("c"), d = x("d"), e = x("e");
        return x.done(x.ratio({e / a, d * e / (b * c)}, {e, d * e / (a * b * c)}) *
                      x.phi({a, d / b, d / c}, {d, d * e / (b * c)}, e / a));
      });

  // ---- Cauchy operator identities (the operator acts on c) ----

  auto draw_op = [](bool with_a, bool with_s, bool with_v) {
    return [=](Draw& d, ParamPoint& p) {
      if (with_a) p.set("a", d.complex(2.0));
      const C t = d.complex(2.0);
      p.set("t", t);
      double reach = std::abs(t);
      if (with_s) {
        const C s = d.complex(2.0);
        p.set("s", s);
        reach = std::max(reach, std::abs(s));
      }
      if (with_v) p.set("v", d.complex(2.0));
      p.set("b", d.complex(1.0 / reach));
      p.set("c", d.complex(1.0 / reach));
    };
  };

  add(
      "op-cauchy", "Cauchy operator on 1/(ct;q)_inf", Kind::operator_identity, draw_op(true, false, false),
      [](const ParamPoint& p) {
        const C b = p["b"], c = p["c"], t = p["t"];
        return all_small({b * t, c * t}) && all_off_zero(p.real("q"), {b * t, c * t});
      },
      [](Ctx& x) {
        const C t = x("t");
        return operator_side(x, x("a"), x("b"), x("c"), 1.0 / std::abs(t),
                             [t](Node& n, C v) { return 1.0 / n.inf(v * t); });
      },
      [](Ctx& x) {
        const C a = x("a"), b = x("b"), c = x("c"), t = x("t");
        return x.done(x.ratio({a * b * t}, {b * t, c * t}));
      });

  auto two_factor_ok = [](const ParamPoint& p) {
    const C b = p["b"], c = p["c"], s = p["s"], t = p["t"];
    const double q = p.real("q");
    const C a = p.has("a") ? p["a"] : C(0);
    return all_small({b * s, b * t, c * s, c * t}) &&
           all_off_zero(q, {b * s, b * t, c * s, c * t, a * b * t, a * b * s});
  };
  auto two_factor_lhs = [](Ctx& x, C a) {
    const C s = x("s"), t = x("t");
    return operator_side(x, a, x("b"), x("c"), 1.0 / std::max(std::abs(s), std::abs(t)),
                         [s, t](Node& n, C v) { return 1.0 / (n.inf(v * s) * n.inf(v * t)); });
  };

  add(
      "op-two-factor", "Cauchy operator on 1/(cs,ct;q)_inf", Kind::operator_identity, draw_op(true, true, false),
      two_factor_ok, [two_factor_lhs](Ctx& x) { return two_factor_lhs(x, x("a")); },
      [](Ctx& x) {
        const C a = x("a"), b = x("b"), c = x("c"), s = x("s"), t = x("t");
        return x.done(x.ratio({a * b * t}, {b * t, c * s, c * t}) * x.phi({a, c * t}, {a * b * t}, b * s));
      });

  add(
      "chen-liu", "Euler operator on 1/(cs,ct;q)_inf", Kind::operator_identity, draw_op(false, true, false),
      two_factor_ok, [two_factor_lhs](Ctx& x) { return two_factor_lhs(x, C(0)); },
      [](Ctx& x) {
        const C b = x("b"), c = x("c"), s = x("s"), t = x("t");
        return x.done(x.ratio({b * c * s * t}, {b * s, b * t, c * s, c * t}));
      });

  add(
      "op-three-factor", "Cauchy operator on (cv;q)_inf/(cs,ct;q)_inf", Kind::operator_identity,
      draw_op(true, true, true),
      [two_factor_ok](const ParamPoint& p) {
        const C a = p["a"], b = p["b"], c = p["c"], s = p["s"], v = p["v"];
        return two_factor_ok(p) && all_off_zero(p.real("q"), {a * b * s, c * v});
      },
      [](Ctx& x) {
        const C s = x("s"), t = x("t"), v = x("v");
        return operator_side(x, x("a"), x("b"), x("c"), 1.0 / std::max(std::abs(s), std::abs(t)),
                             [s, t, v](Node& n, C u) { return n.inf(u * v) / (n.inf(u * s) * n.inf(u * t)); });
      },
      [](Ctx& x) {
        const C a = x("a"), b = x("b"), c = x("c"), s = x("s"), t = x("t"), v = x("v");
        return x.done(x.ratio({a * b * s, c * v}, {b * s, c * s, c * t}) *
                      x.phi({a, c * s, v / t}, {a * b * s, c * v}, b * t));
      });

  // ---- Askey-Wilson family, integrals over [0, pi] ----

  add(
      "askey-wilson", "Askey-Wilson integral", Kind::panel_integral,
      [](Draw& d, ParamPoint& p) { draw_small(d, p, {"a", "b", "c", "d"}); },
      [](const ParamPoint& p) { return params_small(p, {"a", "b", "c", "d"}); },
      [](Ctx& x) {
        const C a = x("a"), b = x("b"), c = x("c"), d = x("d");
        return panel_side(x, [=](Node& n, C w) { return aw_weight(n, w, {a, b, c, d}); });
      },
      [](Ctx& x) {
        const C a = x("a"), b = x("b"), c = x("c"), d = x("d");
        return x.done(2.0 * std::numbers::pi *
                      x.ratio({a * b * c * d}, {C(x.qv()), a * b, a * c, a * d, b * c, b * d, c * d}));
      });

  add(
      "isv", "Ismail-Stanton-Viennot integral", Kind::panel_integral,
      [](Draw& d, ParamPoint& p) { draw_small(d, p, {"a", "b", "c", "d", "g"}); },
      [](const ParamPoint& p) { return params_small(p, {"a", "b", "c", "d", "g"}); },
      [](Ctx& x) {
        const C a = x("a"), b = x("b"), c = x("c"), d = x("d"), g = x("g");
        return panel_side(x, [=](Node& n, C w) { return aw_weight(n, w, {a, b, c, d, g}); });
      },
      [](Ctx& x) {
        const C a = x("a"), b = x("b"), c = x("c"), d = x("d"), g = x("g");
        return x.done(2.0 * std::numbers::pi *
                      x.ratio({a * b * c * g, a * b * c * d},
                              {C(x.qv()), a * b, a * c, a * d, a * g, b * c, b * d, b * g, c * d, c * g}) *
                      x.phi({a * b, a * c, b * c}, {a * b * c * g, a * b * c * d}, d * g));
      });

  auto aw_ext_integrand = [](C a, C b, C c, C d, C f, C g) {
    return [=](Node& n, C w) {
      return aw_weight(n, w, {a, b, c, d}) * n.inf(f * g * w) / n.inf(g * w) *
             n.phi({f, a * w, b * w}, {f * g * w, a * b}, g / w);
    };
  };

  add(
      "askey-wilson-ext", "Askey-Wilson integral extended by the Cauchy operator", Kind::panel_integral,
      [](Draw& d, ParamPoint& p) { draw_small(d, p, {"a", "b", "c", "d", "f", "g"}); },
      [](const ParamPoint& p) { return params_small(p, {"a", "b", "c", "d", "f", "g"}); },
      [aw_ext_integrand](Ctx& x) {
        return panel_side(x, aw_ext_integrand(x("a"), x("b"), x("c"), x("d"), x("f"), x("g")));
      },
      [](Ctx& x) {
        const C a = x("a"), b = x("b"), c = x("c"), d = x("d"), f = x("f"), g = x("g");
        return x.done(2.0 * std::numbers::pi *
                      x.ratio({c * f * g, a * b * c * d},
                              {C(x.qv()), a * b, a * c, a * d, b * c, b * d, c * d, c * g}) *
                      x.phi({f, a * c, b * c}, {c * f * g, a * b * c * d}, d * g));
      });

  add(
      "askey-wilson-abcd", "extended Askey-Wilson integral at f = abcd", Kind::panel_integral,
      [](Draw& d, ParamPoint& p) { draw_small(d, p, {"a", "b", "c", "d", "g"}); },
      [](const ParamPoint& p) { return params_small(p, {"a", "b", "c", "d", "g"}); },
      [aw_ext_integrand](Ctx& x) {
        const C a = x("a"), b = x("b"), c = x("c"), d = x("d");
        return panel_side(x, aw_ext_integrand(a, b, c, d, a * b * c * d, x("g")));
      },
      [](Ctx& x) {
        const C a = x("a"), b = x("b"), c = x("c"), d = x("d"), g = x("g");
        return x.done(2.0 * std::numbers::pi *
                      x.ratio({a * b * c * d, a * c * d * g, b * c * d * g},
                              {C(x.qv()), a * b, a * c, a * d, b * c, b * d, c * d, c * g, d * g}));
      });

  // ---- Askey-Roy family, (1/2pi) * integrals over [-pi, pi] ----

  add(
      "askey-roy", "Askey-Roy integral", Kind::circle_integral,
      [](Draw& d, ParamPoint& p) {
        draw_small(d, p, {"a", "b", "c", "d"});
        p.set("rho", d.real(0.5, 2.0));
      },
      [](const ParamPoint& p) { return params_small(p, {"a", "b", "c", "d"}) && roy_admissible(p); },
      [](Ctx& x) {
        const C a = x("a"), b = x("b"), c = x("c"), d = x("d"), rho = x("rho");
        return circle_side(
            x, [=](Node& n, C w) { return roy_weight(n, w, c, d, rho) / (n.inf(a * w) * n.inf(b * w)); }, {c, d},
            {a, b});
      },
      [](Ctx& x) {
        const C a = x("a"), b = x("b"), c = x("c"), d = x("d");
        return x.done(roy_constant(x, c, d, x("rho")) *
                      x.ratio({a * b * c * d}, {C(x.qv()), a * c, a * d, b * c, b * d}));
      });

  auto roy_ext_integrand = [](C a, C b, C c, C d, C f, C g, C rho) {
    return [=](Node& n, C w) {
      return roy_weight(n, w, c, d, rho) * n.inf(f * g * w) / (n.inf(a * w) * n.inf(b * w) * n.inf(g * w));
    };
  };

  add(
      "askey-roy-ext", "Askey-Roy integral extended by the Cauchy operator", Kind::circle_integral,
      [](Draw& d, ParamPoint& p) {
        draw_small(d, p, {"a", "b", "c", "d", "f", "g"});
        p.set("rho", d.real(0.5, 2.0));
      },
      [](const ParamPoint& p) { return params_small(p, {"a", "b", "c", "d", "f", "g"}) && roy_admissible(p); },
      [roy_ext_integrand](Ctx& x) {
        return circle_side(x, roy_ext_integrand(x("a"), x("b"), x("c"), x("d"), x("f"), x("g"), x("rho")),
                           {x("c"), x("d")}, {x("a"), x("b"), x("g")});
      },
      [](Ctx& x) {
        const C a = x("a"), b = x("b"), c = x("c"), d = x("d"), f = x("f"), g = x("g");
        return x.done(roy_constant(x, c, d, x("rho")) *
                      x.ratio({a * b * c * d, c * f * g}, {C(x.qv()), a * c, a * d, b * c, b * d, c * g}) *
                      x.phi({f, a * c, b * c}, {c * f * g, a * b * c * d}, d * g));
      });

  add(
      "gasper", "Gasper's extension of the Askey-Roy integral", Kind::circle_integral,
      [](Draw& d, ParamPoint& p) {
        draw_small(d, p, {"a", "b", "c", "d", "f"});
        p.set("rho", d.real(0.5, 2.0));
      },
      [](const ParamPoint& p) {
        const C a = p["a"], b = p["b"], c = p["c"], d = p["d"], f = p["f"];
        return params_small(p, {"a", "b", "c", "d", "f"}) && roy_admissible(p) &&
               all_off_zero(p.real("q"), {b * c * d * f, a * c * d * f}, numerator_gap);
      },
      [](Ctx& x) {
        const C a = x("a"), b = x("b"), c = x("c"), d = x("d"), f = x("f"), rho = x("rho");
        return circle_side(x, [=](Node& n, C w) {
          return roy_weight(n, w, c, d, rho) * n.inf(a * b * c * d * f * w) /
                 (n.inf(a * w) * n.inf(b * w) * n.inf(f * w));
        }, {c, d}, {a, b, f});
      },
      [](Ctx& x) {
        const C a = x("a"), b = x("b"), c = x("c"), d = x("d"), f = x("f");
        return x.done(roy_constant(x, c, d, x("rho")) *
                      x.ratio({a * b * c * d, b * c * d * f, a * c * d * f},
                              {C(x.qv()), a * c, a * d, b * c, b * d, c * f, d * f}));
      });

  add(
      "askey-roy-ext2", "Gasper's integral extended by the Cauchy operator", Kind::circle_integral,
      [](Draw& d, ParamPoint& p) {
        draw_small(d, p, {"a", "b", "c", "d", "f", "g", "h"});
        p.set("rho", d.real(0.5, 2.0));
      },
      [](const ParamPoint& p) {
        const C a = p["a"], b = p["b"], c = p["c"], d = p["d"], f = p["f"];
        return params_small(p, {"a", "b", "c", "d", "f", "g", "h"}) && roy_admissible(p) &&
               all_off_zero(p.real("q"), {b * c * d * f, a * c * d * f}, numerator_gap);
      },
      [](Ctx& x) {
        const C a = x("a"), b = x("b"), c = x("c"), d = x("d"), f = x("f"), g = x("g"), h = x("h"), rho = x("rho");
        return circle_side(x, [=](Node& n, C w) {
          const C abcdf = a * b * c * d * f;
          return roy_weight(n, w, c, d, rho) * n.inf(abcdf * w) * n.inf(g * h * w) /
                 (n.inf(a * w) * n.inf(b * w) * n.inf(f * w) * n.inf(h * w)) *
                 n.phi({g, a * w, f * w}, {g * h * w, abcdf * w}, b * c * d * h);
        }, {c, d}, {a, b, f, h, g * h, a * b * c * d * f});
      },
      [](Ctx& x) {
        const C a = x("a"), b = x("b"), c = x("c"), d = x("d"), f = x("f"), g = x("g"), h = x("h");
        return x.done(roy_constant(x, c, d, x("rho")) *
                      x.ratio({a * b * c * d, b * c * d * f, a * c * d * f, c * g * h},
                              {C(x.qv()), a * c, a * d, b * c, b * d, c * f, c * h, d * f}) *
                      x.phi({g, a * c, c * f}, {c * g * h, a * c * d * f}, d * h));
      });

  add(
      "zhang-wang", "Zhang-Wang integral", Kind::circle_integral,
      [](Draw& d, ParamPoint& p) {
        draw_small(d, p, {"a", "b", "c", "d", "f", "g"});
        p.set("rho", d.real(0.5, 2.0));
      },
      [](const ParamPoint& p) {
        const C a = p["a"], b = p["b"], c = p["c"], d = p["d"], f = p["f"], g = p["g"];
        const C cd = c * d;
        return params_small(p, {"a", "b", "c", "d", "f", "g"}) && roy_admissible(p) &&
               all_off_zero(p.real("q"), {a * cd * f, a * cd * g, b * cd * f, b * cd * g, cd * f * g}, numerator_gap);
      },
      [](Ctx& x) {
        const C a = x("a"), b = x("b"), c = x("c"), d = x("d"), f = x("f"), g = x("g"), rho = x("rho");
        return circle_side(x, [=](Node& n, C w) {
          const C cdfg = c * d * f * g;
          return roy_weight(n, w, c, d, rho) * n.inf(a * cdfg * w) * n.inf(b * cdfg * w) /
                 (n.inf(a * w) * n.inf(b * w) * n.inf(f * w) * n.inf(g * w)) *
                 n.phi({f * w, g * w, cdfg}, {a * cdfg * w, b * cdfg * w}, a * b * c * d);
        }, {c, d}, {a, b, f, g, a * c * d * f * g, b * c * d * f * g});
      },
      [](Ctx& x) {
        const C a = x("a"), b = x("b"), c = x("c"), d = x("d"), f = x("f"), g = x("g");
        const C cd = c * d;
        return x.done(roy_constant(x, c, d, x("rho")) *
                      x.ratio({a * cd * f, a * cd * g, b * cd * f, b * cd * g, cd * f * g},
                              {C(x.qv()), a * c, a * d, b * c, b * d, c * f, d * f, c * g, d * g}));
      });

  // ---- bivariate Rogers-Szego polynomials ----

  auto track_series = [](Ctx& x, const SeriesValue& v) { return x.done(x.track(v)); };

  add(
      "rs-generating", "generating function of h_n(x,y|q)", Kind::series,
      [](Draw& d, ParamPoint& p) {
        const C xx = d.complex(2.0);
        p.set("x", xx);
        p.set("y", d.complex(2.0));
        p.set("t", d.complex(std::min(1.0, 1.0 / std::abs(xx))));
      },
      [](const ParamPoint& p) {
        const C x = p["x"], t = p["t"];
        return all_small({t, x * t}) && all_off_zero(p.real("q"), {t, x * t});
      },
      [track_series](Ctx& x) {
        return track_series(x, biv_generating_function(x("x"), x("y"), x("t"), x.q(), eval_settings().series));
      },
      [](Ctx& x) {
        const C xx = x("x"), y = x("y"), t = x("t");
        return x.done(x.ratio({y * t}, {t, xx * t}));
      });

  auto draw_mehler = [](bool bivariate) {
    return [=](Draw& d, ParamPoint& p) {
      const C xx = d.complex(2.0), u = d.complex(2.0);
      p.set("x", xx);
      p.set("u", u);
      if (bivariate) {
        p.set("y", d.complex(2.0));
        p.set("v", d.complex(2.0));
      }
      const double reach = std::max({1.0, std::abs(xx), std::abs(u), std::abs(xx * u)});
      p.set("t", d.complex(1.0 / reach));
    };
  };
  auto mehler_ok = [](const ParamPoint& p) {
    const C xx = p["x"], u = p["u"], t = p["t"];
    const C y = p.has("y") ? p["y"] : C(0), v = p.has("v") ? p["v"] : C(0);
    return all_small({t, t * u, t * xx, t * u * xx}) &&
           all_off_zero(p.real("q"), {t, t * u, t * xx, t * u * xx, t * y, t * v});
  };

  add(
      "mehler-biv", "Mehler's formula for h_n(x,y|q)", Kind::series, draw_mehler(true), mehler_ok,
      [track_series](Ctx& x) {
        return track_series(x, mehler_sum(x("x"), x("y"), x("u"), x("v"), x("t"), x.q(), eval_settings().series));
      },
      [](Ctx& x) {
        const C xx = x("x"), y = x("y"), u = x("u"), v = x("v"), t = x("t");
        return x.done(x.ratio({t * y, t * v}, {t, t * u, t * xx}) *
                      x.phi({t, y / xx, v / u}, {t * y, t * v}, t * u * xx));
      });

  add(
      "mehler", "Mehler's formula for h_n(x|q)", Kind::series, draw_mehler(false), mehler_ok,
      [track_series](Ctx& x) {
        return track_series(x, mehler_sum(x("x"), 0.0, x("u"), 0.0, x("t"), x.q(), eval_settings().series));
      },
      [](Ctx& x) {
        const C xx = x("x"), u = x("u"), t = x("t");
        return x.done(x.ratio({t * t * u * xx}, {t, t * u, t * xx, t * u * xx}));
      });

  auto draw_rogers = [](bool bivariate) {
    return [=](Draw& d, ParamPoint& p) {
      const C xx = d.complex(2.0);
      p.set("x", xx);
      if (bivariate) p.set("y", d.complex(2.0));
      const double cap = std::min(1.0, 1.0 / std::abs(xx));
      p.set("s", d.complex(cap));
      p.set("t", d.complex(cap));
    };
  };
  auto rogers_ok = [](const ParamPoint& p) {
    const C xx = p["x"], s = p["s"], t = p["t"];
    const C y = p.has("y") ? p["y"] : C(0);
    return all_small({s, t, s * xx, t * xx}) && all_off_zero(p.real("q"), {s, t, s * xx, t * xx, t * y});
  };

  add(
      "rogers-biv", "Rogers formula for h_n(x,y|q)", Kind::series, draw_rogers(true), rogers_ok,
      [track_series](Ctx& x) {
        return track_series(x, rogers_double_sum(x("x"), x("y"), x("s"), x("t"), x.q(), eval_settings().series));
      },
      [](Ctx& x) {
        const C xx = x("x"), y = x("y"), s = x("s"), t = x("t");
        return x.done(x.ratio({t * y}, {s, t, t * xx}) * x.phi({t, y / xx}, {t * y}, s * xx));
      });

  add(
      "rogers", "Rogers formula for h_n(x|q)", Kind::series, draw_rogers(false), rogers_ok,
      [track_series](Ctx& x) {
        return track_series(x, rogers_double_sum(x("x"), 0.0, x("s"), x("t"), x.q(), eval_settings().series));
      },
      [](Ctx& x) {
        const C xx = x("x"), s = x("s"), t = x("t");
        return x.done(x.ratio({s * t * xx}, {s, s * xx, t, t * xx}));
      });

  // ---- Jackson q-integrals on [c, d] with c < 0 < d ----

  auto draw_ends = [](Draw& d, ParamPoint& p) {
    p.set("c", d.real(-1.5, -0.3));
    p.set("d", d.real(0.3, 1.5));
    return std::max(std::abs(p.real("c")), std::abs(p.real("d")));
  };

  add(
      "sears-two-term", "Sears' two-term q-integral", Kind::jackson_integral,
      [draw_ends](Draw& d, ParamPoint& p) {
        const double reach = draw_ends(d, p);
        draw_small(d, p, {"a", "b"});
        p.set("e", d.complex(1.0 / reach));
      },
      [](const ParamPoint& p) {
        const C a = p["a"], b = p["b"], c = p["c"], d = p["d"], e = p["e"];
        const double q = p.real("q");
        return all_small({c * e, d * e}) && all_off_zero(q, {a * c, a * d, b * c, b * d, c * e, d * e}) &&
               all_off_zero(q, {a * b * c * d, b * c * d * e, a * c * d * e}, numerator_gap);
      },
      [](Ctx& x) {
        const C a = x("a"), b = x("b"), c = x("c"), d = x("d"), e = x("e");
        const double q = x.qv();
        return jackson_side(x, c, d, [=](Node& n, C t) {
          return n.ratio({q * t / c, q * t / d, a * b * c * d * e * t}, {a * t, b * t, e * t});
        });
      },
      [](Ctx& x) {
        const C a = x("a"), b = x("b"), c = x("c"), d = x("d"), e = x("e");
        const double q = x.qv();
        return x.done(d * (1.0 - q) *
                      x.ratio({C(q), d * q / c, c / d, a * b * c * d, b * c * d * e, a * c * d * e},
                              {a * c, a * d, b * c, b * d, c * e, d * e}));
      });

  add(
      "sears-ext", "Sears' two-term q-integral extended by the Cauchy operator", Kind::jackson_integral,
      [draw_ends](Draw& d, ParamPoint& p) {
        const double reach = draw_ends(d, p);
        draw_small(d, p, {"a", "f"});
        p.set("e", d.complex(1.0 / reach));
        const C g = d.complex(1.0 / reach);
        p.set("g", g);
        p.set("b", d.complex(std::min(1.0, 1.0 / std::abs(p["c"] * p["d"] * g))));
      },
      [](const ParamPoint& p) {
        const C a = p["a"], b = p["b"], c = p["c"], d = p["d"], e = p["e"], f = p["f"], g = p["g"];
        const double q = p.real("q");
        const C abcde = a * b * c * d * e;
        return all_small({b * c * d * g, c * e, c * g, d * e, d * g}) &&
               all_off_zero(q, {a * c, a * d, b * c, b * d, c * e, c * g, d * e, c * f * g, a * c * d * e,
                                f * g * c, f * g * d, abcde * c, abcde * d}) &&
               all_off_zero(q, {a * b * c * d, b * c * d * e, a * c * d * e, c * f * g}, numerator_gap);
      },
      [](Ctx& x) {
        const C a = x("a"), b = x("b"), c = x("c"), d = x("d"), e = x("e"), f = x("f"), g = x("g");
        const double q = x.qv();
        return jackson_side(x, c, d, [=](Node& n, C t) {
          const C abcdet = a * b * c * d * e * t;
          return n.ratio({q * t / c, q * t / d, abcdet, f * g * t}, {a * t, b * t, e * t, g * t}) *
                 n.phi({f, a * t, e * t}, {f * g * t, abcdet}, b * c * d * g);
        });
      },
      [](Ctx& x) {
        const C a = x("a"), b = x("b"), c = x("c"), d = x("d"), e = x("e"), f = x("f"), g = x("g");
        const double q = x.qv();
        return x.done(d * (1.0 - q) *
                      x.ratio({C(q), d * q / c, c / d, a * b * c * d, b * c * d * e, a * c * d * e, c * f * g},
                              {a * c, a * d, b * c, b * d, c * e, c * g, d * e}) *
                      x.phi({f, a * c, c * e}, {c * f * g, a * c * d * e}, d * g));
      });

  // ---- q-Barnes integrals ----

  auto barnes_lhs = [](BarnesForm (*form)(const ParamPoint&)) {
    return [form](const ParamPoint& p) {
      Ctx x(p);
      const auto f = form(p);
      return barnes_side(x, f, barnes_forms::default_shift(f));
    };
  };
  auto barnes_ok = [](BarnesForm (*form)(const ParamPoint&)) {
    return [form](const ParamPoint& p) {
      const auto f = form(p);
      return poles_clear(f.poles, barnes_forms::default_shift(f));
    };
  };
  auto add_barnes = [&](std::string id, std::string anchor, BarnesForm (*form)(const ParamPoint&),
                        std::function<void(Draw&, ParamPoint&)> draw, std::function<bool(const ParamPoint&)> ok,
                        std::function<Evaluation(Ctx&)> rhs) {
    auto clear = barnes_ok(form);
    reg.push_back({std::move(id), std::move(anchor), Kind::barnes_integral, std::move(draw),
                   [ok, clear](const ParamPoint& p) { return ok(p) && clear(p); }, barnes_lhs(form),
                   [rhs](const ParamPoint& p) {
                     Ctx c(p);
                     return rhs(c);
                   },
                   kind_tolerance(Kind::barnes_integral)});
  };

  // q^c / sin pi(d - c) (q, q^{1+c-d}, q^{d-c}, q^{a+b+c+d};q)_inf / (q^{a+c}, q^{a+d}, q^{b+c}, q^{b+d};q)_inf
  auto watson = [](Ctx& x) {
    const double a = x.real("a"), b = x.real("b"), c = x.real("c"), d = x.real("d");
    // sign fixed by the upward orientation of the contour
    return x.Q(c) / sin_pi(d - c) *
           x.ratio({C(x.qv()), x.Q(1 + c - d), x.Q(d - c), x.Q(a + b + c + d)},
                   {x.Q(a + c), x.Q(a + d), x.Q(b + c), x.Q(b + d)});
  };
  // -csc pi d (q, q^d, q^{1-d}, q^{1+b+c-d}, q^{1+a+c-d}, q^{1+a+b-d};q)_inf / (q^a, q^b, q^c, q^{1+a-d}, ...;q)_inf
  auto agarwal = [](Ctx& x) {
    const double a = x.real("a"), b = x.real("b"), c = x.real("c"), d = x.real("d");
    return -1.0 / sin_pi(d) *
           x.ratio({C(x.qv()), x.Q(d), x.Q(1 - d), x.Q(1 + b + c - d), x.Q(1 + a + c - d), x.Q(1 + a + b - d)},
                   {x.Q(a), x.Q(b), x.Q(c), x.Q(1 + a - d), x.Q(1 + b - d), x.Q(1 + c - d)});
  };

  auto first_ranges = [](std::initializer_list<const char*> wide) {
    std::vector<const char*> names(wide);
    return std::pair{[names](Draw& d, ParamPoint& p) {
                       for (auto n : names) p.set(n, d.real(0.2, 1.5));
                       p.set("c", d.real(0.1, 0.9));
                       p.set("d", d.real(0.1, 0.9));
                     },
                     [names](const ParamPoint& p) {
                       for (auto n : names) {
                         const double v = p.real(n);
                         if (!(v >= 0.2 && v <= 1.5)) return false;
                       }
                       return in_range(p, {}, {"c", "d"}) && barnes_cd_ok(p);
                     }};
  };
  auto second_ranges = [](std::initializer_list<const char*> wide) {
    std::vector<const char*> names(wide);
    return std::pair{[names](Draw& d, ParamPoint& p) {
                       for (auto n : names) p.set(n, d.real(0.2, 1.5));
                       p.set("d", d.real(0.1, 0.9));
                     },
                     [names](const ParamPoint& p) {
                       for (auto n : names) {
                         const double v = p.real(n);
                         if (!(v >= 0.2 && v <= 1.5)) return false;
                       }
                       return in_range(p, {}, {"d"});
                     }};
  };
  auto q_small = [](const ParamPoint& p, std::initializer_list<double> exps) {
    for (double e : exps)
      if (Qr(p, e) > margin) return false;
    return true;
  };

  {
    auto [draw, ok] = first_ranges({"a", "b"});
    add_barnes("barnes1", "Watson's q-analogue of Barnes' first lemma", barnes_forms::first, draw, ok,
               [watson](Ctx& x) { return x.done(watson(x)); });
  }
  {
    auto [draw, ok] = second_ranges({"a", "b", "c"});
    add_barnes("barnes2", "Agarwal's q-analogue of Barnes' second lemma", barnes_forms::second, draw,
               [ok](const ParamPoint& p) {
                 const double half = p.real("d") / 2 + barnes_pole_gap;
                 return ok(p) && p.real("a") > half && p.real("b") > half && p.real("c") > half;
               },
               [agarwal](Ctx& x) { return x.done(agarwal(x)); });
  }
  {
    auto [draw, ok] = first_ranges({"a", "b", "e", "f"});
    add_barnes("barnes1-ext", "Barnes' first lemma extended by the Cauchy operator", barnes_forms::first_ext, draw,
               [ok, q_small](const ParamPoint& p) {
                 const double c = p.real("c"), d = p.real("d"), f = p.real("f");
                 return ok(p) && q_small(p, {f, c + f, d + f});
               },
               [watson](Ctx& x) {
                 const double a = x.real("a"), b = x.real("b"), c = x.real("c"), d = x.real("d"), e = x.real("e"),
                              f = x.real("f");
                 return x.done(watson(x) * x.ratio({x.Q(c + e + f)}, {x.Q(c + f)}) *
                               x.phi({x.Q(e), x.Q(a + c), x.Q(b + c)}, {x.Q(c + e + f), x.Q(a + b + c + d)},
                                     x.Q(d + f)));
               });
  }
  {
    auto [draw, ok] = first_ranges({"a", "b", "f"});
    add_barnes("liu", "Liu's extension of Barnes' first lemma", barnes_forms::liu, draw,
               [ok, q_small](const ParamPoint& p) {
                 const double c = p.real("c"), d = p.real("d"), f = p.real("f");
                 return ok(p) && q_small(p, {f, c + f, d + f});
               },
               [watson](Ctx& x) {
                 const double a = x.real("a"), b = x.real("b"), c = x.real("c"), d = x.real("d"), f = x.real("f");
                 return x.done(watson(x) *
                               x.ratio({x.Q(a + c + d + f), x.Q(b + c + d + f)}, {x.Q(c + f), x.Q(d + f)}));
               });
  }
  {
    auto [draw, ok] = first_ranges({"a", "b", "e", "f", "g"});
    add_barnes("barnes1-ext2", "Liu's formula extended by the Cauchy operator", barnes_forms::first_ext2, draw,
               [ok, q_small](const ParamPoint& p) {
                 const double c = p.real("c"), d = p.real("d"), f = p.real("f"), g = p.real("g");
                 return ok(p) && q_small(p, {f, g, c + f, c + g, d + f, d + g, c + d + f + g});
               },
               [watson](Ctx& x) {
                 const double a = x.real("a"), b = x.real("b"), c = x.real("c"), d = x.real("d"), e = x.real("e"),
                              f = x.real("f"), g = x.real("g");
                 return x.done(watson(x) *
                               x.ratio({x.Q(a + c + d + f), x.Q(b + c + d + f), x.Q(c + e + g)},
                                       {x.Q(c + f), x.Q(c + g), x.Q(d + f)}) *
                               x.phi({x.Q(e), x.Q(a + c), x.Q(b + c)}, {x.Q(c + e + g), x.Q(a + b + c + d)},
                                     x.Q(d + g)));
               });
  }
  {
    auto [draw, ok] = second_ranges({"a", "b", "c", "e", "f"});
    add_barnes("barnes2-ext", "Barnes' second lemma extended by the Cauchy operator", barnes_forms::second_ext, draw,
               [ok, q_small](const ParamPoint& p) {
                 const double c = p.real("c"), d = p.real("d"), e = p.real("e"), f = p.real("f");
                 const double half = d / 2 + barnes_pole_gap;
                 return ok(p) && p.real("a") > half && p.real("b") > half && c > half && f > half && e + f > half &&
                        q_small(p, {f, 1 + f - d, 1 + c + f - d});
               },
               [agarwal](Ctx& x) {
                 const double a = x.real("a"), b = x.real("b"), d = x.real("d"), e = x.real("e"), f = x.real("f");
                 return x.done(agarwal(x) * x.ratio({x.Q(e + f)}, {x.Q(f)}) *
                               x.phi({x.Q(a), x.Q(b), x.Q(e)}, {x.Q(e + f), x.Q(1 + a + b - d)}, x.Q(1 + f - d)));
               });
  }

  return reg;
}

} // namespace qcauchy::verify
