#pragma once

#include <span>
#include <vector>

#include "envelope/dos.hpp"
#include "envelope/model.hpp"

/// Built-in Hamiltonians with closed-form envelope energies and phi.
///
/// Each system comes as a SystemSpec constructor (for the generic solvers)
/// plus its analytic E(q) and phi(lambda). The constructors also attach the
/// catalogued variational character of the genuine envelope energy and an
/// admissibility check that mirrors the closed form's domain.
namespace envelope::systems {

/// Nonrelativistic particles, V(r) = sgn(b) a r^b.
struct PowerLaw2Params {
  double m = 1.0;
  double a = 1.0;
  double b = 2.0;
};

/// Upper bound for b <= 2, lower bound for b > 2.
SystemSpec powerlaw2(const PowerLaw2Params& p, int particles, int dimensions = 3);
double powerlaw2_energy(const PowerLaw2Params& p, int particles, double q);
/// sqrt(b + 2); b -> 0 is the logarithmic potential.
double powerlaw2_phi(double b);

/// C1(b) = (b+2)^(b/(b+2)) from the envelope ratio and C2(b) from
/// Bohr-Sommerfeld quantization of the two-body problem, with
/// delta = |C1 - C2| / (C1 + C2).
struct BsqCoefficients {
  double c1 = 0.0;
  double c2 = 0.0;
  double delta = 0.0;
};
BsqCoefficients bsq_ratio_coeffs(double b);

/// Massless particles, U(s) = a s^b.
struct PowerLaw1Params {
  double a = 1.0;
  double b = 1.0;
};

/// Upper bound for b <= 2, no definite character otherwise.
SystemSpec powerlaw1(const PowerLaw1Params& p, int particles, int dimensions = 3);
double powerlaw1_energy(const PowerLaw1Params& p, int particles, double q);
double powerlaw1_phi(double b);

/// Nonrelativistic particles, V(r) = -V0 exp(-r^2 / R^2).
struct GaussianParams {
  double m = 1.0;
  double v0 = 1.0;
  double range = 1.0;
};

SystemSpec gaussian(const GaussianParams& p, int particles, int dimensions = 3);
/// Y(Z) = -Z / (sqrt(N) (N-1) R sqrt(2 m V0)).
double gaussian_y(const GaussianParams& p, int particles, double z);
/// Throws NoBoundState when Y(q) < -1/e.
double gaussian_energy(const GaussianParams& p, int particles, double q);
/// 2 sqrt(1 + W0(Y(lambda))).
double gaussian_phi(const GaussianParams& p, int particles, double lambda);

/// Nonrelativistic particles in a harmonic trap U(s) = m omega^2 s^2 / 2
/// with pairwise Coulomb repulsion V(r) = g / r.
struct ConfinedParams {
  double m = 1.0;
  double omega = 1.0;
  double g = 1.0;
};

/// Lower bound.
SystemSpec confined(const ConfinedParams& p, int particles, int dimensions = 3);
double confined_y(const ConfinedParams& p, int particles, double z);
/// With `ground_shift`, adds 3 omega / 2 for a trap acting on sum r_i^2
/// rather than on the distances to the centre of mass.
double confined_energy(const ConfinedParams& p, int particles, double q,
                       bool ground_shift = false);
double confined_phi(const ConfinedParams& p, int particles, double lambda);

/// Massless quarks with linear confinement U(s) = k s and colour Coulomb
/// attraction V(r) = -g / r.
struct BaryonParams {
  double tension = 0.2;
  double g = 2.0 / 3.0 * 0.4;

  /// g = (2/3) alpha_s.
  static BaryonParams from_alpha_s(double tension, double alpha_s);
};

/// Upper bound.
SystemSpec baryon(const BaryonParams& p, int particles, int dimensions = 3);
/// Throws UnboundRegime when N q <= C_N^(3/2) g.
double baryon_energy(const BaryonParams& p, int particles, double q);
/// Throws DomainError when the radicand is not positive.
double baryon_phi(const BaryonParams& p, int particles, double lambda);

/// One reference row of the three-quark spectrum: the sums n1+n2 and l1+l2
/// of the dominant oscillator component and the accurate eigenmass (GeV).
struct Table1Reference {
  int n_sum;
  int l_sum;
  double exact;
};

/// The 16 reference states, in published order.
std::span<const Table1Reference> table1_reference();
/// N = 3, D = 3, k = 0.2 GeV^2, g = (2/3) 0.4.
BaryonParams table1_params();

struct Table1Row {
  int n_sum = 0;
  int l_sum = 0;
  double exact = 0.0;
  double energy = 0.0;
  double phi = 0.0;
};

/// Mean relative errors |E - exact| / exact over all rows, over the rows
/// with l_sum = 0, and over the rest.
struct Table1Result {
  std::vector<Table1Row> rows;
  double delta = 0.0;
  double delta_l0 = 0.0;
  double delta_rest = 0.0;
};

Table1Result table1(PhiChoice choice);

}  // namespace envelope::systems
