#pragma once

namespace envelope::specfun {

/// Selects the quartic 4x^4 + 8x - 3Y = 0 (plus) or 4x^4 - 8x - 3Y = 0 (minus).
enum class QuarticSign { plus, minus };

/// Principal branch W0 of the Lambert function, the inverse of w * e^w on
/// w >= -1. Defined for z >= -1/e; arguments below the branch point by
/// more than 1e-14 raise DomainError.
double lambert_w0(double z);

/// The unique positive root G(Y) of 4x^4 +- 8x - 3Y = 0.
///
/// The radical closed form is used where it is well conditioned; small Y
/// and any closed-form result whose polynomial residual is too large fall
/// back to a safeguarded Newton/bisection iteration on the quartic.
/// Y < 0 raises DomainError, as does Y = 0 with QuarticSign::plus (the
/// only nonnegative root is then x = 0).
double quartic_root_g(QuarticSign sign, double y);

/// Euler beta function B(x, y) = Gamma(x) Gamma(y) / Gamma(x + y),
/// evaluated through log-gamma. Requires x > 0 and y > 0.
double beta(double x, double y);

/// log B(x, y), for callers that raise the beta function to large powers.
double log_beta(double x, double y);

}  // namespace envelope::specfun
