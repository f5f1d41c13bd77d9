#include "envelope/specfun.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>
#include <string>

#include "envelope/errors.hpp"

namespace envelope::specfun {

namespace {

constexpr double kInvE = 1.0 / std::numbers::e;
constexpr double kBranchSlack = 1e-14;
constexpr int kMaxIterations = 50;

double w0_initial_guess(double z) {
  if (z < -0.25) {
    // Puiseux series about the branch point z = -1/e.
    const double p = std::sqrt(std::max(0.0, 2.0 * (std::numbers::e * z + 1.0)));
    return -1.0 + p - p * p / 3.0 + 11.0 / 72.0 * p * p * p;
  }
  if (z < 3.0) {
    // Pade-like start; accurate to a few percent on [-0.25, 3].
    return z * (1.0 + 4.0 / 3.0 * z) / (1.0 + 7.0 / 3.0 * z + 5.0 / 6.0 * z * z);
  }
  const double l1 = std::log(z);
  const double l2 = std::log(l1);
  return l1 - l2 + l2 / l1;
}

double residual_scale(double z) { return std::max(1.0, std::abs(z)); }

}  // namespace

double lambert_w0(double z) {
  if (std::isnan(z)) {
    throw DomainError("lambert_w0: NaN argument");
  }
  if (z < -kInvE - kBranchSlack) {
    throw DomainError("lambert_w0: argument " + std::to_string(z) +
                      " below the branch point -1/e");
  }
  if (z <= -kInvE) {
    return -1.0;
  }
  if (z == 0.0) {
    return 0.0;
  }
  if (std::isinf(z)) {
    return z;
  }

  double w = w0_initial_guess(z);
  const double tol = 1e-13 * residual_scale(z);

  if (z > std::numbers::e) {
    // Newton on w + log(w) = log(z); avoids e^w overflow for huge z.
    const double log_z = std::log(z);
    for (int it = 0; it < kMaxIterations; ++it) {
      const double h = w + std::log(w) - log_z;
      const double step = h / (1.0 + 1.0 / w);
      w -= step;
      if (std::abs(step) <= 4.0 * std::numeric_limits<double>::epsilon() * w) {
        break;
      }
    }
    return w;
  }

  // Halley iteration on f(w) = w e^w - z.
  for (int it = 0; it < kMaxIterations; ++it) {
    const double ew = std::exp(w);
    const double f = w * ew - z;
    if (std::abs(f) <= tol) {
      break;
    }
    const double wp1 = w + 1.0;
    if (wp1 <= 0.0) {
      // Numerically at the branch point.
      w = -1.0;
      break;
    }
    const double denom = ew * wp1 - (w + 2.0) * f / (2.0 * wp1);
    const double step = f / denom;
    double next = w - step;
    if (next < -1.0) {
      next = 0.5 * (w - 1.0);
    }
    if (next == w) {
      break;
    }
    w = next;
  }
  return w;
}

namespace {

double quartic(QuarticSign sign, double x, double y) {
  const double s = sign == QuarticSign::plus ? 8.0 : -8.0;
  const double x2 = x * x;
  return 4.0 * x2 * x2 + s * x - 3.0 * y;
}

double quartic_slope(QuarticSign sign, double x) {
  const double s = sign == QuarticSign::plus ? 8.0 : -8.0;
  return 16.0 * x * x * x + s;
}

// Radical closed form, rearranged so V(Y) carries no cancellation for
// large Y. G+ still cancels as Y -> 0.
double quartic_closed_form(QuarticSign sign, double y) {
  const double w = std::sqrt(4.0 + y * y * y);
  const double s = std::cbrt(2.0 + w);
  const double s2 = s * s;
  const double v = (8.0 + 4.0 * w) / (s * (s2 * s2 + s2 * y + y * y));
  const double root_v = std::sqrt(v);
  const double tail = std::sqrt(4.0 / root_v - v);
  return sign == QuarticSign::plus ? 0.5 * (tail - root_v) : 0.5 * (tail + root_v);
}

// Newton steps kept inside a sign-change bracket; falls back to bisection.
double safeguarded_root(QuarticSign sign, double y, double lo, double hi, double guess) {
  double x = std::clamp(guess, lo, hi);
  for (int it = 0; it < 200; ++it) {
    const double f = quartic(sign, x, y);
    if (f == 0.0) {
      return x;
    }
    if (f < 0.0) {
      lo = x;
    } else {
      hi = x;
    }
    const double df = quartic_slope(sign, x);
    double next = x - f / df;
    if (!(next > lo && next < hi)) {
      next = 0.5 * (lo + hi);
    }
    if (std::abs(next - x) <= 2.0 * std::numeric_limits<double>::epsilon() * std::abs(next)) {
      return next;
    }
    x = next;
  }
  return x;
}

}  // namespace

double quartic_root_g(QuarticSign sign, double y) {
  if (!(y >= 0.0) || std::isinf(y)) {
    throw DomainError("quartic_root_g: Y must be finite and >= 0, got " + std::to_string(y));
  }
  if (sign == QuarticSign::plus && y == 0.0) {
    throw DomainError("quartic_root_g: 4x^4 + 8x = 0 has no positive root");
  }
  if (sign == QuarticSign::minus && y == 0.0) {
    return std::cbrt(2.0);
  }

  const double tol = 1e-12 * std::max(1.0, y);
  double x = y >= 1e-3 ? quartic_closed_form(sign, y) : std::numeric_limits<double>::quiet_NaN();
  if (std::isfinite(x) && x > 0.0 && std::abs(quartic(sign, x, y)) <= tol) {
    // One Newton step recovers the last few bits the radicals lose.
    return x - quartic(sign, x, y) / quartic_slope(sign, x);
  }

  double lo = 0.0;
  double hi = 0.0;
  double guess = 0.0;
  if (sign == QuarticSign::minus) {
    // p(2^(1/3)) = -3Y <= 0 and p(2 + Y^(1/4)) > 0.
    lo = std::cbrt(2.0);
    hi = 2.0 + std::sqrt(std::sqrt(y));
    guess = std::isfinite(x) ? x : lo + y / 8.0;
  } else {
    // p(0) = -3Y < 0 and p(3Y/8) > 0.
    lo = 0.0;
    hi = 3.0 * y / 8.0;
    guess = std::isfinite(x) && x > 0.0 ? x : hi;
  }
  return safeguarded_root(sign, y, lo, hi, guess);
}

double log_beta(double x, double y) {
  if (!(x > 0.0) || !(y > 0.0)) {
    throw DomainError("beta: arguments must be positive");
  }
  return std::lgamma(x) + std::lgamma(y) - std::lgamma(x + y);
}

double beta(double x, double y) {
  if (!(x > 0.0) || !(y > 0.0)) {
    throw DomainError("beta: arguments must be positive");
  }
  if (x + y < 140.0) {
    const double direct = std::tgamma(x) * std::tgamma(y) / std::tgamma(x + y);
    if (std::isfinite(direct) && direct > 0.0) {
      return direct;
    }
  }
  return std::exp(log_beta(x, y));
}

}  // namespace envelope::specfun
