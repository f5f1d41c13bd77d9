#pragma once

#include <optional>

#include "envelope/model.hpp"

namespace envelope {

/// Small collective radial oscillation about the circular orbit of total
/// angular momentum lambda: Delta H = p_r^2 / (2 mu) + stiffness Delta r^2 / 2.
struct RadialMode {
  double mu = 0.0;
  double stiffness = 0.0;
  /// A^2 from the explicit four-term expression in T', T'', U'', V''.
  double a_sq = 0.0;
  /// Radial quantum of energy, A = sqrt(stiffness / mu).
  double a = 0.0;
  /// Collective radius of the circular orbit, r0 at Q = lambda.
  double r0 = 0.0;
};

/// Throws DomainError for lambda <= 0 or T'(lambda/r0) <= 0, and
/// NegativeStiffness when A^2 < 0.
RadialMode radial_mode(const SystemSpec& spec, double lambda);

/// E0(lambda) + A nu: circular-orbit energy plus nu radial quanta.
double dos_energy(const SystemSpec& spec, double lambda, double nu);

/// Slope B = b_n / b_d of the envelope energy along Q = lambda (1 + eps),
/// i.e. E(lambda (1 + eps)) - E(lambda) = B eps + O(eps^2).
struct SlopeB {
  double b_n = 0.0;
  double b_d = 0.0;
  double r0 = 0.0;

  double value() const { return b_n / b_d; }
};

/// Throws DomainError for lambda <= 0 and DegenerateSlope when b_d = 0.
SlopeB slope_b(const SystemSpec& spec, double lambda);

/// phi = lambda A / B, evaluated as lambda A b_d / b_n.
/// Throws PhiUndefined for lambda = 0 or a non-positive result.
PhiResult compute_phi(const SystemSpec& spec, double lambda);

/// How phi enters Q_phi = phi nu + lambda.
class PhiChoice {
 public:
  static PhiChoice fixed(double phi);
  static PhiChoice dos() { return PhiChoice(true, 0.0); }
  /// phi = 2, the genuine envelope quantum number Q.
  static PhiChoice genuine() { return fixed(2.0); }

  bool is_dos() const { return dos_; }
  double value() const { return value_; }

 private:
  PhiChoice(bool dos, double value) : dos_(dos), value_(value) {}
  bool dos_;
  double value_;
};

struct ImprovedEnergy {
  EtSolution solution;
  /// Present when phi came from compute_phi.
  std::optional<PhiResult> phi_detail;
  double phi = 0.0;
  double nu = 0.0;
  double lambda = 0.0;
};

/// Envelope energy at Q_phi = phi nu + lambda:
///   1. nu and lambda from the quantum numbers,
///   2. r0 at Q = lambda,
///   3. phi = lambda A / B (or the fixed value),
///   4. Q_phi = phi nu + lambda,
///   5. solve at Q_phi.
/// The bound tag is dropped whenever phi != 2.
ImprovedEnergy improved_energy(const SystemSpec& spec, const QuantumNumbers& qn,
                               PhiChoice choice = PhiChoice::dos());
ImprovedEnergy improved_energy(const SystemSpec& spec, double nu, double lambda,
                               PhiChoice choice = PhiChoice::dos());

}  // namespace envelope
