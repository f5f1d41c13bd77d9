#include "envelope/et_core.hpp"

#include <algorithm>
#include <boost/math/tools/toms748_solve.hpp>
#include <cmath>
#include <cstdint>
#include <limits>
#include <sstream>
#include <utility>
#include <vector>

#include "envelope/errors.hpp"

namespace envelope {

namespace {

constexpr double kScanLow = 1e-9;
constexpr double kScanHigh = 1e9;
constexpr int kPointsPerDecade = 24;
constexpr double kResidualTolerance = 1e-10;

void check_q(double q) {
  if (!(q > 0.0) || !std::isfinite(q)) {
    std::ostringstream os;
    os << "envelope solve: q must be positive and finite, got " << q;
    throw DomainError(os.str());
  }
}

}  // namespace

double envelope_energy_at(const SystemSpec& spec, double q, double r0) {
  const double n = spec.particles();
  const double pairs = spec.pair_count();
  const double p0 = q / r0;
  return n * spec.kinetic()(p0) + n * spec.onebody()(r0 / n) +
         pairs * spec.pairwise()(r0 / std::sqrt(pairs));
}

double Stationarity::scale() const {
  return std::abs(kinetic_side) + std::abs(potential_side);
}

Stationarity stationarity(const SystemSpec& spec, double q, double r0) {
  const double n = spec.particles();
  const double root_pairs = std::sqrt(spec.pair_count());
  const double p0 = q / r0;
  Stationarity s;
  s.kinetic_side = n * p0 * spec.kinetic().d1(p0);
  s.potential_side =
      r0 * spec.onebody().d1(r0 / n) + root_pairs * r0 * spec.pairwise().d1(r0 / root_pairs);
  return s;
}

double solve_radius(const SystemSpec& spec, double q) {
  check_q(q);
  if (spec.admissibility()) {
    spec.admissibility()(q);
  }

  auto residual = [&](double r) { return stationarity(spec, q, r).residual(); };

  const int decades = static_cast<int>(std::lround(std::log10(kScanHigh / kScanLow)));
  const int points = decades * kPointsPerDecade + 1;
  std::vector<std::pair<double, double>> brackets;
  std::vector<double> exact_roots;

  double r_prev = kScanLow;
  double f_prev = residual(r_prev);
  for (int i = 1; i < points; ++i) {
    const double r = kScanLow * std::pow(10.0, static_cast<double>(i) / kPointsPerDecade);
    const double f = residual(r);
    if (std::isfinite(f_prev) && std::isfinite(f) && f_prev < 0.0) {
      // dE/dr0 going from - to + marks a local minimum of E(r0).
      if (f == 0.0) {
        exact_roots.push_back(r);
      } else if (f > 0.0) {
        brackets.emplace_back(r_prev, r);
      }
    }
    r_prev = r;
    f_prev = f;
  }

  const std::size_t found = brackets.size() + exact_roots.size();
  if (found == 0) {
    std::ostringstream os;
    os << "envelope solve: no minimum of E(r0) in [" << kScanLow << ", " << kScanHigh
       << "] at q = " << q;
    throw NoSolution(os.str());
  }
  if (found > 1) {
    std::ostringstream os;
    os << "envelope solve: " << found << " minima of E(r0) at q = " << q << ":";
    for (const auto& [lo, hi] : brackets) {
      os << " [" << lo << ", " << hi << "]";
    }
    for (double r : exact_roots) {
      os << " {" << r << "}";
    }
    throw AmbiguousSolution(os.str());
  }
  if (!exact_roots.empty()) {
    return exact_roots.front();
  }

  const auto [lo, hi] = brackets.front();
  std::uintmax_t max_iter = 200;
  auto tol = [](double a, double b) {
    return std::abs(a - b) <= 4.0 * std::numeric_limits<double>::epsilon() * std::min(a, b);
  };
  const auto [a, b] = boost::math::tools::toms748_solve(residual, lo, hi, tol, max_iter);
  const double fa = std::abs(residual(a));
  const double fb = std::abs(residual(b));
  const double r0 = fa <= fb ? a : b;

  const Stationarity s = stationarity(spec, q, r0);
  if (!(std::abs(s.residual()) <= kResidualTolerance * s.scale())) {
    std::ostringstream os;
    os << "envelope solve: stationarity residual " << s.residual() << " at r0 = " << r0
       << " exceeds tolerance";
    throw ConvergenceError(os.str());
  }
  return r0;
}

EtSolution energy(const SystemSpec& spec, double q) {
  const double r0 = solve_radius(spec, q);
  EtSolution sol;
  sol.r0 = r0;
  sol.p0 = q / r0;
  sol.q_used = q;
  sol.energy = envelope_energy_at(spec, q, r0);
  sol.bound = spec.variational();
  return sol;
}

}  // namespace envelope
