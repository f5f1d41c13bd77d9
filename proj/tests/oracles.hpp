#pragma once

// Slow, obviously-correct reference computations for the unit tests.
// Nothing here shares code with the library.

#include <cmath>
#include <functional>
#include <limits>

#include "envelope/model.hpp"

namespace oracles {

/// Plain bisection on a sign change of f over [lo, hi].
inline double bisect(const std::function<double(double)>& f, double lo, double hi) {
  double flo = f(lo);
  for (int i = 0; i < 400; ++i) {
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) {
      break;
    }
    const double fm = f(mid);
    if ((fm < 0.0) == (flo < 0.0)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  return 0.5 * (lo + hi);
}

/// W0(z) for z in [-1/e, 1e6] as the root of w e^w - z on [-1, 20].
inline double lambert_w0(double z) {
  return bisect([z](double w) { return w * std::exp(w) - z; }, -1.0, 20.0);
}

/// Positive root of 4x^4 + sign * 8x - 3Y.
inline double quartic_root(int sign, double y) {
  auto f = [=](double x) { return 4.0 * x * x * x * x + sign * 8.0 * x - 3.0 * y; };
  const double hi = 2.0 + std::pow(std::max(y, 1.0), 0.25);
  const double lo = sign < 0 ? std::cbrt(2.0) : 0.0;
  return bisect(f, lo, hi);
}

/// max |analytic - central difference| of d1 and d2 at x with step h.
struct DerivativeError {
  double d1 = 0.0;
  double d2 = 0.0;
};

inline DerivativeError derivative_error(const envelope::Interaction& w, double x, double h) {
  const double fp = w.value(x + h);
  const double fm = w.value(x - h);
  const double f0 = w.value(x);
  return {std::abs(w.d1(x) - (fp - fm) / (2.0 * h)),
          std::abs(w.d2(x) - (fp - 2.0 * f0 + fm) / (h * h))};
}

inline double rel(double a, double b) {
  return std::abs(a - b) / std::max(std::abs(b), std::numeric_limits<double>::min());
}

}  // namespace oracles
