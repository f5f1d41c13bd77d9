#include "envelope/model.hpp"

#include <cmath>
#include <numeric>
#include <sstream>
#include <string>

#include "envelope/errors.hpp"

namespace envelope {

namespace {

std::string format_number(double x) {
  std::ostringstream os;
  os.precision(12);
  os << x;
  return os.str();
}

}  // namespace

Interaction Interaction::zero() {
  auto nil = [](double) { return 0.0; };
  return Interaction{nil, nil, nil, "0"};
}

namespace interactions {

Interaction nonrelativistic_kinetic(double mass) {
  if (!(mass > 0.0)) {
    throw DomainError("nonrelativistic_kinetic: mass must be positive");
  }
  return Interaction{
      [mass](double p) { return p * p / (2.0 * mass); },
      [mass](double p) { return p / mass; },
      [mass](double) { return 1.0 / mass; },
      "p^2/(2*" + format_number(mass) + ")"};
}

Interaction ultrarelativistic_kinetic() {
  return Interaction{[](double p) { return p; }, [](double) { return 1.0; },
                     [](double) { return 0.0; }, "p"};
}

Interaction power(double coef, double exponent) {
  if (exponent == 0.0) {
    return Interaction{[coef](double) { return coef; }, [](double) { return 0.0; },
                       [](double) { return 0.0; }, format_number(coef)};
  }
  const double b = exponent;
  return Interaction{
      [coef, b](double x) { return coef * std::pow(x, b); },
      [coef, b](double x) { return coef * b * std::pow(x, b - 1.0); },
      [coef, b](double x) { return coef * b * (b - 1.0) * std::pow(x, b - 2.0); },
      format_number(coef) + "*x^" + format_number(b)};
}

Interaction gaussian_well(double depth, double range) {
  if (!(range > 0.0)) {
    throw DomainError("gaussian_well: range must be positive");
  }
  const double inv_r2 = 1.0 / (range * range);
  return Interaction{
      [depth, inv_r2](double x) { return -depth * std::exp(-x * x * inv_r2); },
      [depth, inv_r2](double x) { return 2.0 * depth * x * inv_r2 * std::exp(-x * x * inv_r2); },
      [depth, inv_r2](double x) {
        return 2.0 * depth * inv_r2 * (1.0 - 2.0 * x * x * inv_r2) * std::exp(-x * x * inv_r2);
      },
      "-" + format_number(depth) + "*exp(-x^2/" + format_number(range) + "^2)"};
}

Interaction logarithmic(double coef, double scale) {
  if (!(scale > 0.0)) {
    throw DomainError("logarithmic: scale must be positive");
  }
  return Interaction{[coef, scale](double x) { return coef * std::log(x / scale); },
                     [coef](double x) { return coef / x; },
                     [coef](double x) { return -coef / (x * x); },
                     format_number(coef) + "*ln(x/" + format_number(scale) + ")"};
}

}  // namespace interactions

const char* to_string(Bound b) {
  switch (b) {
    case Bound::upper:
      return "upper";
    case Bound::lower:
      return "lower";
    case Bound::none:
      break;
  }
  return "none";
}

SystemSpec::SystemSpec(int particles, int dimensions, Interaction kinetic, Interaction onebody,
                       Interaction pairwise)
    : particles_(particles),
      dimensions_(dimensions),
      kinetic_(std::move(kinetic)),
      onebody_(std::move(onebody)),
      pairwise_(std::move(pairwise)) {
  if (particles_ < 2) {
    throw DomainError("SystemSpec: need N >= 2 particles, got " + std::to_string(particles_));
  }
  if (dimensions_ < 2) {
    throw DomainError("SystemSpec: need D >= 2 dimensions, got " + std::to_string(dimensions_));
  }
  if (!kinetic_.value || !kinetic_.d1 || !kinetic_.d2 || !onebody_.value || !onebody_.d1 ||
      !onebody_.d2 || !pairwise_.value || !pairwise_.d1 || !pairwise_.d2) {
    throw DomainError("SystemSpec: every interaction needs a value and two derivatives");
  }
}

SystemSpec SystemSpec::with_variational(Bound b) const {
  SystemSpec copy = *this;
  copy.variational_ = b;
  return copy;
}

SystemSpec SystemSpec::with_admissibility(Admissibility check) const {
  SystemSpec copy = *this;
  copy.admissibility_ = std::move(check);
  return copy;
}

SystemSpec SystemSpec::with_name(std::string name) const {
  SystemSpec copy = *this;
  copy.name_ = std::move(name);
  return copy;
}

QuantumNumbers QuantumNumbers::from_modes(std::vector<int> radial, std::vector<int> orbital) {
  if (radial.size() != orbital.size()) {
    throw DomainError("QuantumNumbers: radial and orbital lists differ in length");
  }
  for (std::size_t i = 0; i < radial.size(); ++i) {
    if (radial[i] < 0 || orbital[i] < 0) {
      throw DomainError("QuantumNumbers: quantum numbers must be nonnegative");
    }
  }
  const int n_sum = std::accumulate(radial.begin(), radial.end(), 0);
  const int l_sum = std::accumulate(orbital.begin(), orbital.end(), 0);
  return QuantumNumbers(n_sum, l_sum, radial.size());
}

QuantumNumbers QuantumNumbers::from_sums(int radial_sum, int orbital_sum) {
  if (radial_sum < 0 || orbital_sum < 0) {
    throw DomainError("QuantumNumbers: quantum-number sums must be nonnegative");
  }
  return QuantumNumbers(radial_sum, orbital_sum, std::nullopt);
}

GlobalNumbers global_numbers(const QuantumNumbers& qn, const SystemSpec& spec) {
  const std::int64_t modes = spec.particles() - 1;
  if (qn.modes() && static_cast<std::int64_t>(*qn.modes()) != modes) {
    throw ShapeError("QuantumNumbers: expected " + std::to_string(modes) +
                     " modes for N = " + std::to_string(spec.particles()) + ", got " +
                     std::to_string(*qn.modes()));
  }
  const std::int64_t d = spec.dimensions();
  const HalfInteger nu{2 * qn.radial_sum() + modes};
  const HalfInteger lambda{2 * qn.orbital_sum() + modes * (d - 2)};
  return GlobalNumbers{nu, lambda, 2 * nu + lambda};
}

double global_q(const QuantumNumbers& qn, const SystemSpec& spec) {
  return global_numbers(qn, spec).q.value();
}

std::pair<double, double> nu_lambda(const QuantumNumbers& qn, const SystemSpec& spec) {
  const GlobalNumbers g = global_numbers(qn, spec);
  return {g.nu.value(), g.lambda.value()};
}

double q_phi(double nu, double lambda, double phi) {
  if (!(phi > 0.0) || !std::isfinite(phi)) {
    throw DomainError("q_phi: phi must be positive and finite, got " + format_number(phi));
  }
  if (!(nu > 0.0)) {
    throw DomainError("q_phi: nu must be positive");
  }
  if (!(lambda >= 0.0)) {
    throw DomainError("q_phi: lambda must be nonnegative");
  }
  return phi * nu + lambda;
}

}  // namespace envelope
