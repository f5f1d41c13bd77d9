#pragma once

#include "envelope/model.hpp"

/// Reference eigensolver for the two-body radial problem
///   -u''/(2 mu) + [V(r) + l(l+1)/(2 mu r^2)] u = E u,  u(0) = u(inf) = 0,
/// in D = 3. Independent of the envelope machinery; used to check its
/// exactness and bound statements.
namespace envelope::oracle {

struct RadialOptions {
  /// Initial box radius; grown until the outer turning point sits below
  /// 60% of the box and the tail has decayed.
  double initial_box = 8.0;
  double max_box = 1e5;
  /// Intervals on the first grid; doubled until the Richardson estimate
  /// of the step error falls below `tolerance`.
  int initial_intervals = 4000;
  int max_refinements = 6;
  /// Relative target on the eigenvalue (absolute below |E| = 1).
  double tolerance = 1e-11;
};

struct RadialSolution {
  double energy = 0.0;
  double box = 0.0;
  int intervals = 0;
  /// Interior nodes of the eigenfunction.
  int nodes = 0;
};

/// The (n_r + 1)-th eigenvalue at angular momentum l. Throws NoBoundState
/// if fewer than n_r + 1 levels exist below the potential at the largest
/// box, and ConvergenceError if grid refinement stalls.
RadialSolution solve_radial(double mu, const Interaction& potential, int l, int n_r,
                            const RadialOptions& options = {});

double radial_eigenvalue(double mu, const Interaction& potential, int l, int n_r,
                         const RadialOptions& options = {});

/// Dirichlet eigenvalue on a fixed uniform grid of `intervals` steps over
/// [0, box], without extrapolation. Converges as step^4.
double box_eigenvalue(double mu, const Interaction& potential, int l, int n_r, double box,
                      int intervals);

/// Sign changes of the outward Numerov solution at energy E on (0, box].
/// Equals the number of box eigenvalues below E.
int count_nodes(double mu, const Interaction& potential, int l, double energy, double box,
                int intervals);

}  // namespace envelope::oracle
