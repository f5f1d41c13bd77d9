#include "envelope/dos.hpp"

#include <cmath>
#include <sstream>

#include "envelope/errors.hpp"
#include "envelope/et_core.hpp"

namespace envelope {

namespace {

constexpr double kGenuineTolerance = 1e-12;

void require_positive_lambda(double lambda, const char* where) {
  if (lambda == 0.0) {
    throw PhiUndefined(std::string(where) +
                       ": lambda = 0 (no orbital motion to expand about)");
  }
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    std::ostringstream os;
    os << where << ": lambda must be positive, got " << lambda;
    throw DomainError(os.str());
  }
}

// Interaction derivatives at the circular orbit of radius r0.
struct OrbitTerms {
  double n = 0.0;
  double root_pairs = 0.0;
  double lambda = 0.0;
  double r0 = 0.0;
  double t1 = 0.0;
  double t2 = 0.0;
  double u1 = 0.0;
  double u2 = 0.0;
  double v1 = 0.0;
  double v2 = 0.0;
};

OrbitTerms orbit_terms(const SystemSpec& spec, double lambda, double r0) {
  OrbitTerms o;
  o.n = spec.particles();
  o.root_pairs = std::sqrt(spec.pair_count());
  o.lambda = lambda;
  o.r0 = r0;
  const double p0 = lambda / r0;
  o.t1 = spec.kinetic().d1(p0);
  o.t2 = spec.kinetic().d2(p0);
  o.u1 = spec.onebody().d1(r0 / o.n);
  o.u2 = spec.onebody().d2(r0 / o.n);
  o.v1 = spec.pairwise().d1(r0 / o.root_pairs);
  o.v2 = spec.pairwise().d2(r0 / o.root_pairs);
  return o;
}

RadialMode radial_mode_at(const OrbitTerms& o) {
  if (!(o.t1 > 0.0)) {
    throw DomainError("radial_mode: T'(lambda/r0) must be positive");
  }
  const double n = o.n;
  const double lam = o.lambda;
  const double r = o.r0;

  RadialMode mode;
  mode.r0 = r;
  mode.mu = lam / (n * r * o.t1);
  mode.stiffness = n * lam / (r * r * r * r) * (2.0 * r * o.t1 + lam * o.t2) + o.u2 / n + o.v2;
  mode.a_sq = 2.0 * n * n / (r * r) * o.t1 * o.t1 + n * n * lam / (r * r * r) * o.t1 * o.t2 +
              r / lam * o.t1 * o.u2 + n * r / lam * o.t1 * o.v2;
  if (mode.a_sq < 0.0) {
    std::ostringstream os;
    os << "radial_mode: A^2 = " << mode.a_sq << " < 0 at lambda = " << lam;
    throw NegativeStiffness(os.str());
  }
  mode.a = std::sqrt(mode.a_sq);
  return mode;
}

SlopeB slope_b_at(const OrbitTerms& o) {
  const double n = o.n;
  const double lam = o.lambda;
  const double r = o.r0;
  const double x = lam / r;

  SlopeB b;
  b.r0 = r;
  b.b_n = n * lam / r * (2.0 * o.t1 + x * o.t2) * (o.u1 + o.root_pairs * o.v1) +
          lam * o.t1 * (o.u2 + n * o.v2);
  b.b_d = n * lam / (r * r) * o.t1 + n * lam * lam / (r * r * r) * o.t2 + o.u1 + r / n * o.u2 +
          o.root_pairs * o.v1 + r * o.v2;
  if (b.b_d == 0.0 || !std::isfinite(b.b_d)) {
    throw DegenerateSlope("slope_b: denominator B_d vanishes");
  }
  return b;
}

}  // namespace

RadialMode radial_mode(const SystemSpec& spec, double lambda) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    std::ostringstream os;
    os << "radial_mode: lambda must be positive, got " << lambda;
    throw DomainError(os.str());
  }
  const double r0 = solve_radius(spec, lambda);
  return radial_mode_at(orbit_terms(spec, lambda, r0));
}

double dos_energy(const SystemSpec& spec, double lambda, double nu) {
  if (!(nu > 0.0)) {
    throw DomainError("dos_energy: nu must be positive");
  }
  const RadialMode mode = radial_mode(spec, lambda);
  return envelope_energy_at(spec, lambda, mode.r0) + mode.a * nu;
}

SlopeB slope_b(const SystemSpec& spec, double lambda) {
  if (!(lambda > 0.0) || !std::isfinite(lambda)) {
    std::ostringstream os;
    os << "slope_b: lambda must be positive, got " << lambda;
    throw DomainError(os.str());
  }
  const double r0 = solve_radius(spec, lambda);
  return slope_b_at(orbit_terms(spec, lambda, r0));
}

PhiResult compute_phi(const SystemSpec& spec, double lambda) {
  require_positive_lambda(lambda, "compute_phi");
  const double r0 = solve_radius(spec, lambda);
  const OrbitTerms terms = orbit_terms(spec, lambda, r0);
  const RadialMode mode = radial_mode_at(terms);
  const SlopeB slope = slope_b_at(terms);
  if (slope.b_n == 0.0) {
    throw DegenerateSlope("compute_phi: numerator B_n vanishes");
  }

  PhiResult out;
  out.a_sq = mode.a_sq;
  out.b_n = slope.b_n;
  out.b_d = slope.b_d;
  out.lambda = lambda;
  out.r0_at_lambda = r0;
  out.phi = lambda * mode.a * slope.b_d / slope.b_n;
  if (!(out.phi > 0.0) || !std::isfinite(out.phi)) {
    std::ostringstream os;
    os << "compute_phi: non-positive phi = " << out.phi << " at lambda = " << lambda;
    throw PhiUndefined(os.str());
  }
  return out;
}

PhiChoice PhiChoice::fixed(double phi) {
  if (!(phi > 0.0) || !std::isfinite(phi)) {
    throw DomainError("PhiChoice: phi must be positive and finite");
  }
  return PhiChoice(false, phi);
}

ImprovedEnergy improved_energy(const SystemSpec& spec, double nu, double lambda,
                               PhiChoice choice) {
  if (!(nu > 0.0)) {
    throw DomainError("improved_energy: nu must be positive");
  }
  ImprovedEnergy out;
  out.nu = nu;
  out.lambda = lambda;
  if (choice.is_dos()) {
    out.phi_detail = compute_phi(spec, lambda);
    out.phi = out.phi_detail->phi;
  } else {
    out.phi = choice.value();
  }
  out.solution = energy(spec, q_phi(nu, lambda, out.phi));
  if (std::abs(out.phi - 2.0) > kGenuineTolerance) {
    out.solution.bound = Bound::none;
  }
  return out;
}

ImprovedEnergy improved_energy(const SystemSpec& spec, const QuantumNumbers& qn,
                               PhiChoice choice) {
  const auto [nu, lambda] = nu_lambda(qn, spec);
  return improved_energy(spec, nu, lambda, choice);
}

}  // namespace envelope
