#pragma once

#include <cmath>
#include <numbers>
#include <stdexcept>

namespace gpsched {

/// Standard normal density.
template <typename Scalar = double>
Scalar norm_pdf(Scalar x) {
  return std::exp(Scalar(-0.5) * x * x) * Scalar(std::numbers::inv_sqrtpi) /
         Scalar(std::numbers::sqrt2);
}

/// Standard normal CDF, evaluated through erfc so both tails keep full
/// relative accuracy.
template <typename Scalar = double>
Scalar norm_cdf(Scalar x) {
  return Scalar(0.5) * std::erfc(-x / Scalar(std::numbers::sqrt2));
}

namespace detail {

// tau(-t) = phi(t) - t * Phi(-t) for t >= 0. Both factors are evaluated in
// the lower tail, where erfc keeps them accurate; the subtraction is clamped
// so round-off can never produce a negative value.
template <typename Scalar>
Scalar tau_nonpositive(Scalar t) {
  const Scalar v = norm_pdf(t) - t * norm_cdf(-t);
  return v > Scalar(0) ? v : Scalar(0);
}

}  // namespace detail

/// tau(y) = y * Phi(y) + phi(y), the improvement kernel of the closed-form
/// expected-improvement expression. Nonnegative, nondecreasing, and
/// tau(y) - tau(-y) == y. For y >= 0 it is computed as y + tau(-y), which
/// sidesteps the cancellation in y * Phi(y) + phi(y) at large |y|.
template <typename Scalar = double>
Scalar tau(Scalar y) {
  if (y >= Scalar(0)) {
    return y + detail::tau_nonpositive(y);
  }
  return detail::tau_nonpositive(-y);
}

/// Standard deviations below which a posterior is treated as a point mass.
inline constexpr double kDegenerateSigma = 1e-12;

/// E[max{X - incumbent, 0}] for X ~ N(mu, sigma^2): sigma * tau((mu - a) / sigma),
/// with the degenerate point-mass limit max{mu - a, 0} for sigma below
/// kDegenerateSigma. Always >= max{mu - incumbent, 0}.
template <typename Scalar = double>
Scalar expected_improvement(Scalar mu, Scalar sigma, Scalar incumbent) {
  if (sigma < Scalar(0)) {
    throw std::invalid_argument("expected_improvement: sigma must be nonnegative");
  }
  const Scalar gain = mu - incumbent;
  const Scalar floor = gain > Scalar(0) ? gain : Scalar(0);
  if (sigma < Scalar(kDegenerateSigma)) {
    return floor;
  }
  const Scalar value = sigma * tau(gain / sigma);
  return value > floor ? value : floor;
}

}  // namespace gpsched
