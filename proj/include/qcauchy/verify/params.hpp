#pragma once

/// Parameter points and deterministic sampling for identity verification.

#include <cmath>
#include <cstdint>
#include <map>
#include <numbers>
#include <random>
#include <string>
#include <string_view>

#include "../types.hpp"

namespace qcauchy::verify {

class sampler_error : public error {
public:
  using error::error;
};

/// Named parameter values. The entry "q" is always present and real.
class ParamPoint {
public:
  void set(const std::string& name, Scalar v) { values_[name] = v; }
  [[nodiscard]] Scalar operator[](const std::string& name) const
  {
    auto it = values_.find(name);
    if (it == values_.end()) throw domain_error("ParamPoint: missing parameter " + name);
    return it->second;
  }
  [[nodiscard]] double real(const std::string& name) const { return (*this)[name].real(); }
  [[nodiscard]] bool has(const std::string& name) const { return values_.count(name) != 0; }
  [[nodiscard]] QBase q() const { return QBase(real("q")); }
  [[nodiscard]] const std::map<std::string, Scalar>& values() const { return values_; }

  bool operator==(const ParamPoint&) const = default;

private:
  std::map<std::string, Scalar> values_;
};

namespace detail {

inline std::uint64_t fnv1a(std::string_view s)
{
  std::uint64_t h = 1469598103934665603ULL;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ULL;
  }
  return h;
}

inline std::uint64_t splitmix64(std::uint64_t x)
{
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

} // namespace detail

/// Uniform draws from a generator seeded by (identity id, seed, trial).
class Rng {
public:
  Rng(std::string_view id, std::uint64_t seed, std::uint64_t trial)
      : gen_(detail::splitmix64(detail::fnv1a(id) ^ detail::splitmix64(seed ^ detail::splitmix64(trial))))
  {
  }

  /// Uniform on [0, 1).
  double uniform() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }

private:
  std::mt19937_64 gen_;
};

/// Margin applied to every modulus condition |x| < 1.
inline constexpr double margin = 0.85;

/// Draws parameters for one trial.
class Draw {
public:
  Draw(Rng& rng, double q) : rng_(rng), q_(q) {}

  [[nodiscard]] double q() const { return q_; }

  /// Modulus uniform in [0.1, margin * cap], phase uniform.
  Scalar complex(double cap = 1.0)
  {
    const double hi = margin * cap;
    const double r = rng_.uniform(0.1, std::max(hi, 0.1));
    const double phase = rng_.uniform(0.0, 2.0 * std::numbers::pi);
    return std::polar(r, phase);
  }

  double real(double lo, double hi) { return rng_.uniform(lo, hi); }

private:
  Rng& rng_;
  double q_;
};

/// Admissibility helpers.
namespace check {

/// |x| within the sampling margin.
inline bool small(Scalar x) { return std::abs(x) <= margin + 1e-12; }

/// (x;q)_inf stays at least `gap` (relative) away from a zero: |x q^m - 1| >= gap for all m >= 0.
inline bool off_zero(Scalar x, double q, double gap = 1e-3)
{
  double qm = 1.0;
  for (int m = 0; m < 10000; ++m) {
    if (std::abs(x) * qm < 0.5) return true;
    if (std::abs(x * qm - 1.0) < gap) return false;
    qm *= q;
  }
  return true;
}

} // namespace check

} // namespace qcauchy::verify
