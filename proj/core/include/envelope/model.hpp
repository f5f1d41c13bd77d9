#pragma once

#include <compare>
#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

namespace envelope {

/// A radial interaction W(x) together with its first two derivatives.
///
/// Used for the kinetic energy T(p), the one-body potential U(s) with
/// s = |r_i - R|, and the pair potential V(r) with r = |r_i - r_j|.
/// Derivatives are analytic; the envelope and DOS formulas need W'' and
/// numeric second differences would contaminate phi.
struct Interaction {
  std::function<double(double)> value;
  std::function<double(double)> d1;
  std::function<double(double)> d2;
  std::string label;

  double operator()(double x) const { return value(x); }

  static Interaction zero();
};

namespace interactions {

/// T(p) = p^2 / (2m).
Interaction nonrelativistic_kinetic(double mass);
/// T(p) = p (massless particles).
Interaction ultrarelativistic_kinetic();
/// coef * x^exponent, for any real exponent.
Interaction power(double coef, double exponent);
/// -depth * exp(-x^2 / range^2).
Interaction gaussian_well(double depth, double range);
/// coef * ln(x / scale).
Interaction logarithmic(double coef, double scale);

}  // namespace interactions

/// Variational character of an envelope energy.
enum class Bound { upper, lower, none };

const char* to_string(Bound b);

/// N identical particles in D dimensions with kinetic energy T, one-body
/// potential U and pair potential V. hbar = c = 1.
class SystemSpec {
 public:
  /// Throws DomainError unless N >= 2 and D >= 2.
  SystemSpec(int particles, int dimensions, Interaction kinetic, Interaction onebody,
             Interaction pairwise);

  int particles() const { return particles_; }
  int dimensions() const { return dimensions_; }
  /// C_N = N (N - 1) / 2.
  double pair_count() const { return 0.5 * particles_ * (particles_ - 1); }

  const Interaction& kinetic() const { return kinetic_; }
  const Interaction& onebody() const { return onebody_; }
  const Interaction& pairwise() const { return pairwise_; }

  /// Bound tag attached to energies at the genuine global quantum number.
  /// Only the built-in systems set anything other than Bound::none.
  Bound variational() const { return variational_; }
  SystemSpec with_variational(Bound b) const;

  /// Optional check run before every solve at quantum number q; lets a
  /// built-in system raise a precise error (NoBoundState, UnboundRegime)
  /// instead of the generic NoSolution.
  using Admissibility = std::function<void(double q)>;
  const Admissibility& admissibility() const { return admissibility_; }
  SystemSpec with_admissibility(Admissibility check) const;

  const std::string& name() const { return name_; }
  SystemSpec with_name(std::string name) const;

 private:
  int particles_;
  int dimensions_;
  Interaction kinetic_;
  Interaction onebody_;
  Interaction pairwise_;
  Bound variational_ = Bound::none;
  Admissibility admissibility_;
  std::string name_ = "custom";
};

/// An exact multiple of 1/2, stored as its doubled integer value.
struct HalfInteger {
  std::int64_t twice = 0;

  static constexpr HalfInteger from_int(std::int64_t v) { return {2 * v}; }
  constexpr double value() const { return 0.5 * static_cast<double>(twice); }

  friend constexpr HalfInteger operator+(HalfInteger a, HalfInteger b) {
    return {a.twice + b.twice};
  }
  friend constexpr HalfInteger operator*(std::int64_t k, HalfInteger a) {
    return {k * a.twice};
  }
  friend constexpr auto operator<=>(HalfInteger, HalfInteger) = default;
};

/// Internal quantum numbers (n_i, l_i), i = 1..N-1, either per mode or
/// only through the sums sum(n_i) and sum(l_i).
class QuantumNumbers {
 public:
  /// Throws DomainError on negative entries or unequal list lengths.
  static QuantumNumbers from_modes(std::vector<int> radial, std::vector<int> orbital);
  /// Throws DomainError on negative sums.
  static QuantumNumbers from_sums(int radial_sum, int orbital_sum);

  int radial_sum() const { return radial_sum_; }
  int orbital_sum() const { return orbital_sum_; }
  /// Number of modes when given per mode.
  std::optional<std::size_t> modes() const { return modes_; }

 private:
  QuantumNumbers(int radial_sum, int orbital_sum, std::optional<std::size_t> modes)
      : radial_sum_(radial_sum), orbital_sum_(orbital_sum), modes_(modes) {}

  int radial_sum_;
  int orbital_sum_;
  std::optional<std::size_t> modes_;
};

/// nu = sum(n_i) + (N-1)/2, lambda = sum(l_i) + (N-1)(D-2)/2 and
/// Q = sum(2 n_i + l_i) + (N-1) D/2 = 2 nu + lambda, all exact.
struct GlobalNumbers {
  HalfInteger nu;
  HalfInteger lambda;
  HalfInteger q;
};

/// Throws ShapeError if per-mode lists do not have N - 1 entries.
GlobalNumbers global_numbers(const QuantumNumbers& qn, const SystemSpec& spec);

double global_q(const QuantumNumbers& qn, const SystemSpec& spec);
std::pair<double, double> nu_lambda(const QuantumNumbers& qn, const SystemSpec& spec);

/// Q_phi = phi * nu + lambda. Throws DomainError unless phi > 0, nu > 0
/// and lambda >= 0.
double q_phi(double nu, double lambda, double phi);

/// One solution of the envelope equations.
///
/// p0^2 is the mean squared momentum per particle and r0^2 the sum of the
/// squared pair separations in the auxiliary eigenstate.
struct EtSolution {
  double energy = 0.0;
  double r0 = 0.0;
  double p0 = 0.0;
  double q_used = 0.0;
  Bound bound = Bound::none;
};

/// phi = lambda A / B with B = b_n / b_d, and the ingredients it came from.
struct PhiResult {
  double phi = 0.0;
  double a_sq = 0.0;
  double b_n = 0.0;
  double b_d = 0.0;
  double lambda = 0.0;
  double r0_at_lambda = 0.0;
};

}  // namespace envelope
