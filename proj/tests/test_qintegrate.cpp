#include <cmath>
#include <numbers>
#include <random>

#include <gtest/gtest.h>

#include <qcauchy/qintegrate.hpp>
#include <qcauchy/verify/registry.hpp>

#include "oracle_values.hpp"

using qcauchy::QBase;
using qcauchy::Scalar;
using std::numbers::pi;

namespace {

double rel(Scalar got, Scalar want) { return std::abs(got - want) / std::max(std::abs(want), 1e-300); }

Scalar inf(Scalar a, const QBase& q) { return qcauchy::qpoch_infinite(a, q, {10000, 1e-15}).value; }

/// Askey-Wilson weight at w = e^{i theta}.
Scalar aw(Scalar w, std::initializer_list<Scalar> ps, const QBase& q)
{
  Scalar v = inf(w * w, q) * inf(1.0 / (w * w), q);
  for (auto p : ps) v /= inf(p * w, q) * inf(p / w, q);
  return v;
}

qcauchy::verify::ParamPoint point(std::initializer_list<std::pair<const char*, double>> values)
{
  qcauchy::verify::ParamPoint p;
  for (const auto& [name, v] : values) p.set(name, v);
  return p;
}

/// The Barnes integrand of the given form on the complex plane, at 1e-15 product accuracy.
std::function<Scalar(Scalar)> integrand(const qcauchy::verify::BarnesForm& form, const QBase& q)
{
  return [form, q](Scalar s) {
    bool ok = true;
    return qcauchy::verify::barnes_integrand(form, q, s, {10000, 1e-15}, {10000, 1e-14}, ok);
  };
}

} // namespace

TEST(QuadCircle, Constant)
{
  const auto r = qcauchy::quad_circle([](double) { return Scalar(1.0); }, 1e-12);
  EXPECT_NEAR(r.value.real(), 2 * pi, 1e-13);
  EXPECT_TRUE(r.converged);
}

TEST(QuadCircle, FourierModeVanishes)
{
  const auto r = qcauchy::quad_circle([](double th) { return std::polar(1.0, th); }, 1e-12);
  EXPECT_LT(std::abs(r.value), 1e-14);
}

TEST(QuadCircle, AgreesWithPanelOnEvenIntegrand)
{
  const QBase q(0.5);
  const auto f = [&](double th) {
    const Scalar w = std::polar(1.0, th);
    return 1.0 / (inf(0.5 * w, q) * inf(0.5 / w, q));
  };
  const auto full = qcauchy::quad_circle(f, 1e-12);
  const auto half = qcauchy::quad_panel(f, 0.0, pi, 1e-12);
  EXPECT_LT(std::abs(half.value - 0.5 * full.value), 1e-9);
}

TEST(QuadCircle, GeometricConvergenceOnAskeyRoyIntegrand)
{
  const QBase q(0.4);
  const Scalar a(0.3), b(0.2, 0.1), c(0.4), d(0.0, 0.25);
  const double rho = 1.3;
  const auto f = [&](double th) {
    const Scalar w = std::polar(1.0, th);
    return inf(rho * w / d, q) * inf(0.4 * d / (rho * w), q) * inf(rho * c / w, q) * inf(0.4 * w / (c * rho), q) /
           (inf(a * w, q) * inf(b * w, q) * inf(c / w, q) * inf(d / w, q));
  };
  const Scalar want = 2 * pi * oracle::askey_roy_quad;
  double prev = INFINITY;
  for (int n = 8; n <= 64; n *= 2) {
    Scalar sum(0);
    for (int j = 0; j < n; ++j) sum += f(-pi + 2 * pi * j / n);
    const double err = std::abs(sum * (2 * pi / n) - want);
    if (prev > 1e-11) EXPECT_LT(err, 0.25 * prev) << "n=" << n;
    prev = err;
  }
  const auto r = qcauchy::quad_circle(f, 1e-12);
  EXPECT_LT(rel(r.value / (2 * pi), oracle::askey_roy_quad), 1e-10);
}

TEST(QuadPanel, ElementaryIntegrals)
{
  EXPECT_NEAR(qcauchy::quad_panel([](double) { return Scalar(1.0); }, 0.0, pi, 1e-12).value.real(), pi, 1e-13);
  EXPECT_LT(std::abs(qcauchy::quad_panel([](double t) { return Scalar(std::cos(t)); }, 0.0, pi, 1e-12).value),
            1e-14);
  EXPECT_EQ(qcauchy::quad_panel([](double) { return Scalar(1.0); }, 1.0, 1.0, 1e-12).value, Scalar(0.0));
}

TEST(QuadPanel, AskeyWilsonWithZeroParameters)
{
  for (double qv : {0.3, 0.5}) {
    const QBase q(qv);
    const auto r = qcauchy::quad_panel([&](double th) { return aw(std::polar(1.0, th), {}, q); }, 0.0, pi, 1e-12);
    EXPECT_LT(rel(r.value, 2 * pi / inf(qv, q)), 1e-8) << "q=" << qv;
  }
  EXPECT_LT(rel(inf(0.5, QBase(0.5)), oracle::qq_inf_half), 1e-14);
  EXPECT_LT(rel(inf(0.3, QBase(0.3)), oracle::qq_inf_03), 1e-14);
}

TEST(QuadPanel, AskeyWilsonReference)
{
  const QBase q(0.4);
  const auto r = qcauchy::quad_panel(
      [&](double th) { return aw(std::polar(1.0, th), {0.2, 0.3, -0.4, Scalar(0.0, 0.1)}, q); }, 0.0, pi, 1e-12);
  ASSERT_TRUE(r.converged);
  EXPECT_LT(rel(r.value, oracle::askey_wilson_quad), 1e-10);
}

TEST(Jackson, ElementaryIntegrands)
{
  const QBase q(0.5);
  const double c = -0.7, d = 1.2;
  EXPECT_NEAR(qcauchy::jackson_qintegral([](Scalar) { return Scalar(1.0); }, c, d, q).value.real(), d - c, 1e-12);
  EXPECT_NEAR(qcauchy::jackson_qintegral([](Scalar t) { return t; }, c, d, q).value.real(),
              (d * d - c * c) / 1.5, 1e-12);
  const auto same = qcauchy::jackson_qintegral([](Scalar t) { return std::exp(t); }, 0.4, 0.4, q);
  EXPECT_EQ(same.value, Scalar(0.0));
  EXPECT_THROW(qcauchy::jackson_qintegral([](Scalar t) { return t; }, 0.0, d, q), qcauchy::domain_error);
}

TEST(Jackson, Linear)
{
  std::mt19937_64 rng(51);
  std::uniform_real_distribution<double> u(-1.0, 1.0), qd(0.15, 0.7);
  const auto f = [](Scalar t) { return 1.0 / (1.0 - 0.3 * t); };
  const auto g = [](Scalar t) { return (t + 2.0) / (1.0 + 0.5 * t * t); };
  for (int rep = 0; rep < 20; ++rep) {
    const QBase q(qd(rng));
    const Scalar alpha(u(rng), u(rng)), beta(u(rng), u(rng));
    const double c = -1.5 + u(rng) * 0.5, d = 1.0 + u(rng) * 0.5;
    const qcauchy::TruncationPolicy tight{10000, 1e-15};
    const auto lhs = qcauchy::jackson_qintegral([&](Scalar t) { return alpha * f(t) + beta * g(t); }, c, d, q, tight);
    const Scalar rhs = alpha * qcauchy::jackson_qintegral(f, c, d, q, tight).value +
                       beta * qcauchy::jackson_qintegral(g, c, d, q, tight).value;
    EXPECT_LT(std::abs(lhs.value - rhs), 1e-12 * std::max(1.0, std::abs(rhs)));
  }
}

TEST(Jackson, SearsIntegrandReference)
{
  const QBase q(0.4);
  const Scalar a(0.3), b(-0.2, 0.1), e(0.0, 0.5);
  const double c = -0.8, d = 0.6;
  const auto g = [&](Scalar t) {
    return inf(0.4 * t / c, q) * inf(0.4 * t / d, q) * inf(a * b * c * d * e * t, q) /
           (inf(a * t, q) * inf(b * t, q) * inf(e * t, q));
  };
  const auto r = qcauchy::jackson_qintegral(g, c, d, q, {10000, 1e-14});
  ASSERT_TRUE(r.converged);
  EXPECT_LT(rel(r.value, oracle::sears_jackson), 1e-12);
}

TEST(Barnes, ZeroIntegrand)
{
  qcauchy::BarnesLine line;
  line.envelope = 0.0;
  const auto r = qcauchy::barnes_integral([](Scalar) { return Scalar(0.0); }, line, 1e-10);
  EXPECT_EQ(r.value, Scalar(0.0));
}

TEST(Barnes, FirstLemmaReference)
{
  namespace v = qcauchy::verify;
  const QBase q(0.5);
  const auto form = v::barnes_forms::first(point({{"a", 0.4}, {"b", 0.4}, {"c", 0.3}, {"d", 0.6}}));
  const auto r = qcauchy::barnes_integral(integrand(form, q), v::barnes_line(form, q, 0.0), 1e-11);
  ASSERT_TRUE(r.converged);
  EXPECT_LT(rel(r.value, oracle::barnes1_quad), 1e-9);

  // q^c / sin pi(d - c) (q, q^{1+c-d}, q^{d-c}, q^{a+b+c+d}) / (q^{a+c}, q^{a+d}, q^{b+c}, q^{b+d})
  const Scalar closed = std::pow(0.5, 0.3) / std::sin(pi * 0.3) *
                        (inf(0.5, q) * inf(std::pow(0.5, 0.7), q) * inf(std::pow(0.5, 0.3), q) *
                         inf(std::pow(0.5, 1.7), q)) /
                        (inf(std::pow(0.5, 0.7), q) * inf(std::pow(0.5, 1.0), q) * inf(std::pow(0.5, 0.7), q) *
                         inf(std::pow(0.5, 1.0), q));
  EXPECT_LT(rel(oracle::barnes1_quad, closed), 1e-12);
}

TEST(Barnes, SecondLemmaReference)
{
  namespace v = qcauchy::verify;
  const QBase q(0.5);
  const auto form = v::barnes_forms::second(point({{"a", 0.7}, {"b", 0.9}, {"c", 0.8}, {"d", 0.4}}));
  const auto r = qcauchy::barnes_integral(integrand(form, q), v::barnes_line(form, q, 0.2), 1e-11);
  ASSERT_TRUE(r.converged);
  EXPECT_LT(rel(r.value, oracle::barnes2_quad), 1e-9);
}

TEST(Barnes, DoublingHeightStaysWithinError)
{
  namespace v = qcauchy::verify;
  const QBase q(0.5);
  const double tol = 1e-10;
  const auto form = v::barnes_forms::first(point({{"a", 0.4}, {"b", 0.4}, {"c", 0.3}, {"d", 0.6}}));
  auto line = v::barnes_line(form, q, 0.0);
  const auto base = qcauchy::barnes_integral(integrand(form, q), line, tol);
  const double height = std::max(1.0, std::log(10.0 * line.envelope / (2 * pi * tol)) / (2 * pi));
  line.half_height = 2 * height;
  const auto doubled = qcauchy::barnes_integral(integrand(form, q), line, tol);
  EXPECT_LE(std::abs(doubled.value - base.value), base.abs_err);
}

TEST(Barnes, PoleNearContourIsRejected)
{
  qcauchy::BarnesLine line;
  line.shift = 0.3;
  line.pole_abscissae = {-0.29};
  EXPECT_THROW(qcauchy::barnes_integral([](Scalar) { return Scalar(0.0); }, line, 1e-10), qcauchy::pole_error);
}
