#pragma once

#include <cmath>
#include <complex>
#include <limits>
#include <stdexcept>
#include <string>

namespace qcauchy {

template <class Real>
using BasicScalar = std::complex<Real>;

/// Complex parameter / result type used throughout the library.
using Scalar = BasicScalar<double>;

class error : public std::runtime_error {
public:
  using std::runtime_error::runtime_error;
};

/// Argument outside the domain of an operation (bad index range, q outside (0,1), ...).
class domain_error : public error {
public:
  using error::error;
};

/// A factor that should be inverted vanishes (within the library's pole threshold).
class pole_error : public error {
public:
  using error::error;
};

/// A series was requested outside its region of convergence.
class divergence_error : public error {
public:
  using error::error;
};

/// D_q evaluated at the origin.
class singular_point_error : public error {
public:
  using error::error;
};

/// Base of the q-calculus. Only real 0 < q < 1 is supported.
template <class Real>
class BasicQBase {
public:
  explicit BasicQBase(Real q) : q_(q)
  {
    if (!(q > Real(0) && q < Real(1)))
      throw domain_error("q must lie in the open interval (0, 1)");
  }

  [[nodiscard]] Real value() const noexcept { return q_; }

  /// omega with q = exp(-omega).
  [[nodiscard]] Real omega() const
  {
    using std::log;
    return -log(q_);
  }

  /// q^x for real or complex exponents.
  [[nodiscard]] BasicScalar<Real> pow(BasicScalar<Real> x) const
  {
    using std::exp;
    return exp(-omega() * x);
  }
  [[nodiscard]] Real pow(Real x) const
  {
    using std::pow;
    return pow(q_, x);
  }

private:
  Real q_;
};

using QBase = BasicQBase<double>;

/// Caps that govern every truncated infinite sum or product.
struct TruncationPolicy {
  int max_terms = 10000;
  double tail_tol = 1e-12;

  void validate() const
  {
    if (max_terms < 1) throw domain_error("TruncationPolicy: max_terms must be >= 1");
    if (!(tail_tol > 0.0)) throw domain_error("TruncationPolicy: tail_tol must be > 0");
  }
};

/// A truncated value with an absolute-error estimate.
///
/// When `converged` is true, `abs_err` does not exceed the tail_tol of the
/// policy that produced the value.
template <class Real>
struct BasicSeriesValue {
  BasicScalar<Real> value{};
  double abs_err = 0.0;
  int terms_used = 0;
  bool converged = true;
};

using SeriesValue = BasicSeriesValue<double>;

namespace detail {

template <class Real>
inline double to_double(const Real& x)
{
  return static_cast<double>(x);
}

template <class Real>
inline double modulus(const BasicScalar<Real>& z)
{
  using std::abs;
  return static_cast<double>(abs(z));
}

template <class Real>
inline bool is_finite(const BasicScalar<Real>& z)
{
  return std::isfinite(to_double(z.real())) && std::isfinite(to_double(z.imag()));
}

template <class Real>
inline Real epsilon()
{
  return std::numeric_limits<Real>::epsilon();
}

} // namespace detail

} // namespace qcauchy
