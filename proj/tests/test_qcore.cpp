#include <array>
#include <cmath>
#include <random>

#include <gtest/gtest.h>

#include <qcauchy/qcore.hpp>

#include "oracle_values.hpp"

using qcauchy::QBase;
using qcauchy::Scalar;

namespace {

double rel(Scalar got, Scalar want) { return std::abs(got - want) / std::max(std::abs(want), 1e-300); }

} // namespace

TEST(QPochFinite, EmptyProductIsOne)
{
  EXPECT_EQ(qcauchy::qpoch_finite(Scalar(3.7, -1.0), QBase(0.5), 0), Scalar(1.0));
}

TEST(QPochFinite, SmallProducts)
{
  EXPECT_NEAR(qcauchy::qpoch_finite(Scalar(0.5), QBase(0.5), 3).real(), 0.328125, 1e-15);
  EXPECT_NEAR(qcauchy::qpoch_finite(Scalar(0.25), QBase(0.5), -1).real(), 2.0, 1e-15);
}

TEST(QPochFinite, NegativeOrderPoleThrows)
{
  // (0.25;0.5)_{-2} = 1 / ((1;0.5)_2)
  EXPECT_THROW(qcauchy::qpoch_finite(Scalar(0.25), QBase(0.5), -2), qcauchy::pole_error);
}

TEST(QBase, RejectsOutsideUnitInterval)
{
  EXPECT_THROW(QBase(0.0), qcauchy::domain_error);
  EXPECT_THROW(QBase(1.0), qcauchy::domain_error);
  EXPECT_THROW(QBase(-0.3), qcauchy::domain_error);
}

TEST(QPochInfinite, TrivialArguments)
{
  const QBase q(0.5);
  EXPECT_EQ(qcauchy::qpoch_infinite(Scalar(0), q).value, Scalar(1.0));
  EXPECT_EQ(qcauchy::qpoch_infinite(Scalar(1), q).value, Scalar(0.0));
}

TEST(QPochInfinite, MatchesReferenceValues)
{
  const auto half = qcauchy::qpoch_infinite(Scalar(0.5), QBase(0.5));
  EXPECT_TRUE(half.converged);
  EXPECT_LE(half.abs_err, 1e-12);
  EXPECT_LE(std::abs(half.value - oracle::qq_inf_half), 1e-12);

  const qcauchy::TruncationPolicy fine{10000, 1e-15};
  EXPECT_LT(rel(qcauchy::qpoch_infinite(Scalar(0.5), QBase(0.5), fine).value, oracle::qq_inf_half), 1e-14);
  const auto z = qcauchy::qpoch_infinite(Scalar(0.3, -0.7), QBase(0.6), fine);
  EXPECT_LT(rel(z.value, oracle::qpoch_inf_complex), 1e-13);
}

TEST(QPochInfinite, ErrorBoundCoversTruncation)
{
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> mod(0.0, 2.0), arg(-M_PI, M_PI), qd(0.1, 0.9);
  for (int k = 0; k < 200; ++k) {
    const Scalar a = std::polar(mod(rng), arg(rng));
    const QBase q(qd(rng));
    const auto coarse = qcauchy::qpoch_infinite(a, q, {10000, 1e-6});
    const auto fine = qcauchy::qpoch_infinite(a, q, {10000, 1e-14});
    ASSERT_TRUE(coarse.converged);
    EXPECT_LE(std::abs(coarse.value - fine.value), coarse.abs_err + fine.abs_err + 1e-15 * std::abs(fine.value));
  }
}

TEST(QPochInfinite, FlagsExhaustedTermBudget)
{
  const auto v = qcauchy::qpoch_infinite(Scalar(0.5), QBase(0.99), {3, 1e-12});
  EXPECT_FALSE(v.converged);
}

TEST(QPochMulti, ProductsOfSingles)
{
  const QBase q(0.5);
  const std::array<Scalar, 2> zeros{0.0, 0.0};
  EXPECT_EQ(qcauchy::qpoch_multi<double>(zeros, q).value, Scalar(1.0));

  const std::array<Scalar, 2> as{0.5, 0.25};
  EXPECT_NEAR(qcauchy::qpoch_multi<double>(as, q, 2).value.real(), 0.24609375, 1e-15);

  const std::array<Scalar, 1> single{Scalar(0.3, 0.2)};
  EXPECT_EQ(qcauchy::qpoch_multi<double>(single, q, 4).value, qcauchy::qpoch_finite(single[0], q, 4));
}

TEST(QBinomial, GaussianPolynomialValues)
{
  const QBase q(0.5);
  EXPECT_DOUBLE_EQ(qcauchy::qbinomial(7, 0, q), 1.0);
  EXPECT_NEAR(qcauchy::qbinomial(4, 2, q), 2.1875, 1e-15);
  EXPECT_NEAR(qcauchy::qbinomial(5, 2, q), qcauchy::qbinomial(5, 3, q), 1e-14);
  EXPECT_THROW(qcauchy::qbinomial(3, 4, q), qcauchy::domain_error);
  EXPECT_THROW(qcauchy::qbinomial(3, -1, q), qcauchy::domain_error);
}

TEST(QBinomial, RowAgreesWithEntries)
{
  const QBase q(0.37);
  const auto row = qcauchy::qbinomial_row(12, q);
  ASSERT_EQ(row.size(), 13u);
  for (int k = 0; k <= 12; ++k) EXPECT_NEAR(row[k], qcauchy::qbinomial(12, k, q), 1e-12 * row[k]);
}

TEST(KernelLaws, ShiftLaw)
{
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> mod(0.0, 2.0), arg(-M_PI, M_PI);
  std::uniform_int_distribution<int> idx(0, 8);
  const std::array<double, 3> qs{0.3, 0.5, 0.7};
  for (int k = 0; k < 200; ++k) {
    const Scalar a = std::polar(mod(rng), arg(rng));
    const QBase q(qs[k % 3]);
    const int m = idx(rng), n = idx(rng);
    const Scalar lhs = qcauchy::qpoch_finite(a, q, m + n);
    const Scalar rhs = qcauchy::qpoch_finite(a, q, m) * qcauchy::qpoch_finite(a * std::pow(q.value(), m), q, n);
    EXPECT_LE(std::abs(lhs - rhs), 1e-12 * std::max(std::abs(rhs), 1e-300)) << "case " << k;
  }
}

TEST(KernelLaws, SpliceLaw)
{
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> mod(0.0, 2.0), arg(-M_PI, M_PI), qd(0.15, 0.7);
  std::uniform_int_distribution<int> idx(0, 10);
  for (int k = 0; k < 200; ++k) {
    const Scalar a = std::polar(mod(rng), arg(rng));
    const QBase q(qd(rng));
    const int n = idx(rng);
    const Scalar lhs = qcauchy::qpoch_finite(a, q, n) *
                       qcauchy::qpoch_infinite(a * std::pow(q.value(), n), q).value;
    const Scalar rhs = qcauchy::qpoch_infinite(a, q).value;
    EXPECT_LE(std::abs(lhs - rhs), 1e-10 * std::max(std::abs(rhs), 1e-300)) << "case " << k;
  }
}

TEST(KernelLaws, QPascal)
{
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> qd(0.1, 0.9);
  for (int rep = 0; rep < 4; ++rep) {
    const QBase q(qd(rng));
    for (int n = 2; n <= 11; ++n)
      for (int k = 1; k <= n - 1; ++k) {
        const double lhs = qcauchy::qbinomial(n, k, q);
        const double rhs =
            qcauchy::qbinomial(n - 1, k - 1, q) + std::pow(q.value(), k) * qcauchy::qbinomial(n - 1, k, q);
        EXPECT_NEAR(lhs, rhs, 1e-12 * rhs) << "n=" << n << " k=" << k;
      }
  }
}
