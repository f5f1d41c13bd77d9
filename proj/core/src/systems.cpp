#include "envelope/systems.hpp"

#include <array>
#include <cmath>
#include <numbers>
#include <sstream>
#include <string>

#include "envelope/errors.hpp"
#include "envelope/specfun.hpp"

namespace envelope::systems {

namespace {

using interactions::gaussian_well;
using interactions::nonrelativistic_kinetic;
using interactions::power;
using interactions::ultrarelativistic_kinetic;

double pairs_of(int n) { return 0.5 * n * (n - 1); }

void require_particles(int n) {
  if (n < 2) {
    throw DomainError("need N >= 2 particles, got " + std::to_string(n));
  }
}

void require_q(double q) {
  if (!(q > 0.0) || !std::isfinite(q)) {
    std::ostringstream os;
    os << "quantum number must be positive, got " << q;
    throw DomainError(os.str());
  }
}

void validate(const PowerLaw2Params& p) {
  if (!(p.m > 0.0) || !(p.a > 0.0)) {
    throw DomainError("powerlaw2: need m > 0 and a > 0");
  }
  if (!(p.b > -2.0) || p.b == 0.0) {
    throw DomainError("powerlaw2: need b > -2 and b != 0");
  }
}

void validate(const PowerLaw1Params& p) {
  if (!(p.a > 0.0) || !(p.b > 0.0)) {
    throw DomainError("powerlaw1: need a > 0 and b > 0");
  }
}

void validate(const GaussianParams& p) {
  if (!(p.m > 0.0) || !(p.v0 > 0.0) || !(p.range > 0.0)) {
    throw DomainError("gaussian: need m > 0, V0 > 0 and R > 0");
  }
}

void validate(const ConfinedParams& p) {
  if (!(p.m > 0.0) || !(p.omega > 0.0)) {
    throw DomainError("confined: need m > 0 and omega > 0");
  }
  if (!(p.g >= 0.0)) {
    throw DomainError("confined: need g >= 0");
  }
}

void validate(const BaryonParams& p) {
  if (!(p.tension > 0.0)) {
    throw DomainError("baryon: need k > 0");
  }
  if (!(p.g >= 0.0)) {
    throw DomainError("baryon: need g >= 0");
  }
}

}  // namespace

// Power-law pair potential, nonrelativistic kinematics.

SystemSpec powerlaw2(const PowerLaw2Params& p, int particles, int dimensions) {
  validate(p);
  const double sign = p.b > 0.0 ? 1.0 : -1.0;
  return SystemSpec(particles, dimensions, nonrelativistic_kinetic(p.m), Interaction::zero(),
                    power(sign * p.a, p.b))
      .with_variational(p.b <= 2.0 ? Bound::upper : Bound::lower)
      .with_name("powerlaw2");
}

double powerlaw2_energy(const PowerLaw2Params& p, int particles, double q) {
  validate(p);
  require_particles(particles);
  require_q(q);
  const double n = particles;
  const double b = p.b;
  const double inner = n * n * std::pow(n - 1.0, 2.0 - b) * p.a * p.a * b * b *
                       std::pow(q, 2.0 * b) / (16.0 * std::pow(p.m, b));
  return (b + 2.0) / b * std::pow(inner, 1.0 / (b + 2.0));
}

double powerlaw2_phi(double b) {
  if (!(b > -2.0)) {
    throw DomainError("powerlaw2_phi: need b > -2");
  }
  return std::sqrt(b + 2.0);
}

BsqCoefficients bsq_ratio_coeffs(double b) {
  if (!(b > 0.0) || !std::isfinite(b)) {
    throw DomainError("bsq_ratio_coeffs: need b > 0");
  }
  const double s = b + 2.0;
  BsqCoefficients out;
  out.c1 = std::pow(s, b / s);
  const double log_c2 = 2.0 / s * std::numbers::ln2 + 2.0 * b / s * std::log(std::numbers::pi) +
                        3.0 * b / s * std::log(b) - std::log(s) -
                        2.0 * b / s * specfun::log_beta(1.0 / b, 1.5);
  out.c2 = std::exp(log_c2);
  out.delta = std::abs(out.c1 - out.c2) / (out.c1 + out.c2);
  return out;
}

// Power-law one-body potential, massless particles.

SystemSpec powerlaw1(const PowerLaw1Params& p, int particles, int dimensions) {
  validate(p);
  return SystemSpec(particles, dimensions, ultrarelativistic_kinetic(), power(p.a, p.b),
                    Interaction::zero())
      .with_variational(p.b <= 2.0 ? Bound::upper : Bound::none)
      .with_name("powerlaw1");
}

double powerlaw1_energy(const PowerLaw1Params& p, int particles, double q) {
  validate(p);
  require_particles(particles);
  require_q(q);
  const double b = p.b;
  return (b + 1.0) / b * std::pow(particles * p.a * b * std::pow(q, b), 1.0 / (b + 1.0));
}

double powerlaw1_phi(double b) {
  if (!(b > 0.0)) {
    throw DomainError("powerlaw1_phi: need b > 0");
  }
  return std::sqrt(b + 1.0);
}

// Gaussian well.

double gaussian_y(const GaussianParams& p, int particles, double z) {
  validate(p);
  require_particles(particles);
  const double n = particles;
  return -z / (std::sqrt(n) * (n - 1.0) * p.range * std::sqrt(2.0 * p.m * p.v0));
}

namespace {

void require_gaussian_bound_state(const GaussianParams& p, int particles, double q) {
  const double y = gaussian_y(p, particles, q);
  if (y < -1.0 / std::numbers::e) {
    std::ostringstream os;
    os << "gaussian: Y(" << q << ") = " << y << " < -1/e, the well is too shallow to bind";
    throw NoBoundState(os.str());
  }
}

}  // namespace

SystemSpec gaussian(const GaussianParams& p, int particles, int dimensions) {
  validate(p);
  return SystemSpec(particles, dimensions, nonrelativistic_kinetic(p.m), Interaction::zero(),
                    gaussian_well(p.v0, p.range))
      .with_variational(Bound::upper)
      .with_admissibility(
          [p, particles](double q) { require_gaussian_bound_state(p, particles, q); })
      .with_name("gaussian");
}

double gaussian_energy(const GaussianParams& p, int particles, double q) {
  require_q(q);
  require_gaussian_bound_state(p, particles, q);
  const double y = gaussian_y(p, particles, q);
  const double w = specfun::lambert_w0(y);
  return -pairs_of(particles) * p.v0 * y * y * (1.0 + 2.0 * w) / (w * w);
}

double gaussian_phi(const GaussianParams& p, int particles, double lambda) {
  require_q(lambda);
  require_gaussian_bound_state(p, particles, lambda);
  return 2.0 * std::sqrt(1.0 + specfun::lambert_w0(gaussian_y(p, particles, lambda)));
}

// Harmonic trap with Coulomb repulsion.

SystemSpec confined(const ConfinedParams& p, int particles, int dimensions) {
  validate(p);
  return SystemSpec(particles, dimensions, nonrelativistic_kinetic(p.m),
                    power(0.5 * p.m * p.omega * p.omega, 2.0), power(p.g, -1.0))
      .with_variational(Bound::lower)
      .with_name("confined");
}

double confined_y(const ConfinedParams& p, int particles, double z) {
  validate(p);
  require_particles(particles);
  if (p.g == 0.0) {
    throw DomainError("confined_y: Y is undefined for g = 0");
  }
  const double n = particles;
  return std::pow(2.0, 16.0 / 3.0) / 3.0 / (std::pow(n, 4.0 / 3.0) * (n - 1.0) * (n - 1.0)) *
         std::pow(p.omega / (p.m * p.g * p.g), 2.0 / 3.0) * z * z;
}

double confined_energy(const ConfinedParams& p, int particles, double q, bool ground_shift) {
  validate(p);
  require_particles(particles);
  require_q(q);
  const double shift = ground_shift ? 1.5 * p.omega : 0.0;
  if (p.g == 0.0) {
    return p.omega * q + shift;
  }
  const double n = particles;
  const double root = specfun::quartic_root_g(specfun::QuarticSign::minus,
                                              confined_y(p, particles, q));
  return std::pow(n, 2.0 / 3.0) * (n - 1.0) / std::pow(2.0, 5.0 / 3.0) *
             std::cbrt(p.m * p.omega * p.omega * p.g * p.g) * (root * root + 1.0 / root) +
         shift;
}

double confined_phi(const ConfinedParams& p, int particles, double lambda) {
  validate(p);
  require_particles(particles);
  require_q(lambda);
  if (p.g == 0.0) {
    return 2.0;
  }
  const double y = confined_y(p, particles, lambda);
  return 2.0 * std::sqrt(2.0 * specfun::quartic_root_g(specfun::QuarticSign::minus, y) / y + 1.0);
}

// Large-N baryons.

BaryonParams BaryonParams::from_alpha_s(double tension, double alpha_s) {
  return BaryonParams{tension, 2.0 / 3.0 * alpha_s};
}

namespace {

void require_baryon_bound(const BaryonParams& p, int particles, double q) {
  const double c = pairs_of(particles);
  const double radicand = particles * q - std::pow(c, 1.5) * p.g;
  if (!(radicand > 0.0)) {
    std::ostringstream os;
    os << "baryon: N q - C_N^(3/2) g = " << radicand << " <= 0 at q = " << q;
    throw UnboundRegime(os.str());
  }
}

}  // namespace

SystemSpec baryon(const BaryonParams& p, int particles, int dimensions) {
  validate(p);
  return SystemSpec(particles, dimensions, ultrarelativistic_kinetic(), power(p.tension, 1.0),
                    power(-p.g, -1.0))
      .with_variational(Bound::upper)
      .with_admissibility([p, particles](double q) { require_baryon_bound(p, particles, q); })
      .with_name("baryon");
}

double baryon_energy(const BaryonParams& p, int particles, double q) {
  validate(p);
  require_particles(particles);
  require_q(q);
  require_baryon_bound(p, particles, q);
  const double c = pairs_of(particles);
  return std::sqrt(4.0 * p.tension) * std::sqrt(particles * q - std::pow(c, 1.5) * p.g);
}

double baryon_phi(const BaryonParams& p, int particles, double lambda) {
  validate(p);
  require_particles(particles);
  require_q(lambda);
  const double n = particles;
  const double radicand =
      2.0 - std::sqrt(n * (n - 1.0) * (n - 1.0) * (n - 1.0)) * p.g / (std::numbers::sqrt2 * lambda);
  if (!(radicand > 0.0)) {
    std::ostringstream os;
    os << "baryon_phi: radicand " << radicand << " <= 0 at lambda = " << lambda;
    throw DomainError(os.str());
  }
  return std::sqrt(radicand);
}

// Three-quark reference spectrum.

namespace {

constexpr std::array<Table1Reference, 16> kTable1 = {{
    {0, 0, 2.128},
    {0, 1, 2.606},
    {1, 0, 2.739},
    {0, 2, 2.959},
    {1, 1, 3.125},
    {0, 3, 3.299},
    {2, 0, 3.260},
    {1, 2, 3.422},
    {0, 4, 3.581},
    {2, 1, 3.584},
    {1, 3, 3.716},
    {0, 5, 3.861},
    {3, 0, 3.721},
    {2, 2, 3.838},
    {1, 4, 3.966},
    {0, 6, 4.103},
}};

}  // namespace

std::span<const Table1Reference> table1_reference() { return kTable1; }

BaryonParams table1_params() { return BaryonParams::from_alpha_s(0.2, 0.4); }

Table1Result table1(PhiChoice choice) {
  constexpr int kParticles = 3;
  constexpr int kDimensions = 3;
  const SystemSpec spec = baryon(table1_params(), kParticles, kDimensions);

  Table1Result out;
  out.rows.reserve(kTable1.size());
  double sum = 0.0;
  double sum_l0 = 0.0;
  double sum_rest = 0.0;
  int count_l0 = 0;
  int count_rest = 0;
  for (const Table1Reference& ref : kTable1) {
    const auto qn = QuantumNumbers::from_sums(ref.n_sum, ref.l_sum);
    const ImprovedEnergy e = improved_energy(spec, qn, choice);
    Table1Row row{ref.n_sum, ref.l_sum, ref.exact, e.solution.energy, e.phi};
    const double rel = std::abs(row.energy - row.exact) / row.exact;
    sum += rel;
    if (ref.l_sum == 0) {
      sum_l0 += rel;
      ++count_l0;
    } else {
      sum_rest += rel;
      ++count_rest;
    }
    out.rows.push_back(row);
  }
  out.delta = sum / static_cast<double>(kTable1.size());
  out.delta_l0 = sum_l0 / count_l0;
  out.delta_rest = sum_rest / count_rest;
  return out;
}

}  // namespace envelope::systems
