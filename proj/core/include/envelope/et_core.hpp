#pragma once

#include "envelope/model.hpp"

namespace envelope {

/// Envelope energy as a function of the collective radius at fixed q:
/// E(r0) = N T(q/r0) + N U(r0/N) + C_N V(r0/sqrt(C_N)).
double envelope_energy_at(const SystemSpec& spec, double q, double r0);

/// Both sides of the stationarity condition
///   N p0 T'(p0) = r0 U'(r0/N) + sqrt(C_N) r0 V'(r0/sqrt(C_N)),  p0 = q/r0,
/// which is r0 dE/dr0 = 0 for the function above.
struct Stationarity {
  double kinetic_side = 0.0;
  double potential_side = 0.0;

  /// potential_side - kinetic_side; equals r0 dE/dr0.
  double residual() const { return potential_side - kinetic_side; }
  double scale() const;
};

Stationarity stationarity(const SystemSpec& spec, double q, double r0);

/// Solves the envelope equations for the collective radius r0 at global
/// quantum number q.
///
/// The pair (r0 p0 = q, stationarity) is reduced to one equation in r0 and
/// the roots where E(r0) has a local minimum are bracketed on a log grid
/// over [1e-9, 1e9]. A single minimum is refined with TOMS 748.
/// Throws NoSolution when there is no minimum and AmbiguousSolution when
/// there is more than one.
double solve_radius(const SystemSpec& spec, double q);

/// Full solution at quantum number q. The bound tag is the spec's
/// catalogued variational character.
EtSolution energy(const SystemSpec& spec, double q);

}  // namespace envelope
