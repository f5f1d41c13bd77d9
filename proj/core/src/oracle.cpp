#include "envelope/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <sstream>
#include <vector>

#include "envelope/errors.hpp"

namespace envelope::oracle {

namespace {

constexpr double kRescale = 1e150;
constexpr double kTailDecay = 32.0;
constexpr double kTurningFraction = 0.6;
constexpr double kNodeDecay = 6.0;

class RadialGrid {
 public:
  RadialGrid(double mu, const Interaction& potential, int l, double box, int intervals)
      : mu_(mu), l_(l), h_(box / intervals), intervals_(intervals), veff_(intervals + 1) {
    const double centrifugal = 0.5 * l * (l + 1) / mu;
    for (int i = 1; i <= intervals; ++i) {
      const double r = i * h_;
      veff_[i] = potential(r) + centrifugal / (r * r);
    }
    // r V(r) as r -> 0 fixes the O(r^2) term of u ~ r^(l+1) (1 + alpha r).
    const double eps = 1e-9 * h_;
    coulomb_limit_ = eps * potential(eps);
    if (!std::isfinite(coulomb_limit_)) {
      coulomb_limit_ = 0.0;
    }
  }

  double step() const { return h_; }
  double box() const { return h_ * intervals_; }
  int intervals() const { return intervals_; }
  double veff(int i) const { return veff_[i]; }

  double min_veff() const {
    return *std::min_element(veff_.begin() + 1, veff_.end());
  }

  /// Sign changes of u on (0, box] for the solution with u(0) = 0.
  int nodes(double energy) const { return nodes_through(energy, intervals_); }

  /// Sign changes of u on (0, r_last], r_last = last * step.
  int nodes_through(double energy, int last) const {
    const double h2 = h_ * h_;
    const double two_mu = 2.0 * mu_;
    auto f = [&](int i) { return two_mu * (veff_[i] - energy); };

    // u_1 = 1; u_0 = 0 leaves only the (F u)(0) limit in w_0.
    const double u1 = 1.0;
    const double alpha = mu_ * coulomb_limit_ / (l_ + 1);
    const double c = u1 / (std::pow(h_, l_ + 1) * (1.0 + alpha * h_));
    double fu0 = 0.0;
    if (l_ == 0) {
      fu0 = two_mu * coulomb_limit_ * c;
    } else if (l_ == 1) {
      fu0 = 2.0 * c;
    }

    double w_prev = -h2 / 12.0 * fu0;
    double f_cur = f(1);
    double u_cur = u1;
    double w_cur = (1.0 - h2 * f_cur / 12.0) * u_cur;
    int count = 0;
    for (int i = 1; i < last; ++i) {
      const double w_next = 2.0 * w_cur - w_prev + h2 * f_cur * u_cur;
      const double f_next = f(i + 1);
      const double u_next = w_next / (1.0 - h2 * f_next / 12.0);
      if ((u_cur > 0.0 && u_next <= 0.0) || (u_cur < 0.0 && u_next >= 0.0)) {
        ++count;
      }
      w_prev = w_cur;
      w_cur = w_next;
      u_cur = u_next;
      f_cur = f_next;
      if (std::abs(w_cur) > kRescale) {
        w_prev /= kRescale;
        w_cur /= kRescale;
        u_cur /= kRescale;
      }
    }
    return count;
  }

  /// Outermost r with Veff(r) <= E.
  double turning_point(double energy) const {
    for (int i = intervals_; i >= 1; --i) {
      if (veff_[i] <= energy) {
        return i * h_;
      }
    }
    return 0.0;
  }

  /// First grid index beyond the turning point where the WKB decay
  /// integral reaches `decay`.
  int decay_index(double energy, double decay) const {
    const double start = turning_point(energy);
    double sum = 0.0;
    for (int i = 1; i <= intervals_; ++i) {
      const double excess = veff_[i] - energy;
      if (excess > 0.0 && i * h_ > start) {
        sum += std::sqrt(2.0 * mu_ * excess) * h_;
        if (sum >= decay) {
          return i;
        }
      }
    }
    return intervals_;
  }

  /// Integral of kappa = sqrt(2 mu (Veff - E)) beyond the turning point.
  double tail_decay(double energy) const {
    const double start = turning_point(energy);
    double sum = 0.0;
    for (int i = 1; i <= intervals_; ++i) {
      const double excess = veff_[i] - energy;
      if (excess > 0.0 && i * h_ > start) {
        sum += std::sqrt(2.0 * mu_ * excess) * h_;
      }
    }
    return sum;
  }

 private:
  double mu_;
  int l_;
  double h_;
  int intervals_;
  std::vector<double> veff_;
  double coulomb_limit_ = 0.0;
};

struct Bracket {
  double lo;
  double hi;
};

// Energies with nodes(lo) <= n_r < nodes(hi), or nothing if the box holds
// fewer than n_r + 1 levels below its edge potential.
bool bracket_level(const RadialGrid& grid, int n_r, Bracket& out) {
  double lo = grid.min_veff();
  double span = std::max(1.0, std::abs(lo));
  lo -= span;
  for (int guard = 0; grid.nodes(lo) > n_r && guard < 60; ++guard) {
    span *= 2.0;
    lo -= span;
  }
  const double hi = grid.veff(grid.intervals());
  if (grid.nodes(hi) <= n_r) {
    return false;
  }
  out = {lo, hi};
  return true;
}

double bisect_level(const RadialGrid& grid, int n_r, Bracket b) {
  for (int it = 0; it < 200; ++it) {
    const double mid = 0.5 * (b.lo + b.hi);
    if (mid <= b.lo || mid >= b.hi) {
      break;
    }
    if (grid.nodes(mid) > n_r) {
      b.hi = mid;
    } else {
      b.lo = mid;
    }
    if (b.hi - b.lo <= 2.0 * std::numeric_limits<double>::epsilon() *
                           std::max(std::abs(b.lo), std::abs(b.hi))) {
      break;
    }
  }
  return 0.5 * (b.lo + b.hi);
}

void check_arguments(double mu, int l, int n_r) {
  if (!(mu > 0.0)) {
    throw DomainError("radial oracle: reduced mass must be positive");
  }
  if (l < 0 || n_r < 0) {
    throw DomainError("radial oracle: l and n_r must be nonnegative");
  }
}

}  // namespace

int count_nodes(double mu, const Interaction& potential, int l, double energy, double box,
                int intervals) {
  check_arguments(mu, l, 0);
  return RadialGrid(mu, potential, l, box, intervals).nodes(energy);
}

double box_eigenvalue(double mu, const Interaction& potential, int l, int n_r, double box,
                      int intervals) {
  check_arguments(mu, l, n_r);
  if (!(box > 0.0) || intervals < 2) {
    throw DomainError("box_eigenvalue: need box > 0 and at least 2 intervals");
  }
  const RadialGrid grid(mu, potential, l, box, intervals);
  Bracket b{};
  if (!bracket_level(grid, n_r, b)) {
    throw NoBoundState("box_eigenvalue: fewer than n_r + 1 levels below the box edge");
  }
  return bisect_level(grid, n_r, b);
}

RadialSolution solve_radial(double mu, const Interaction& potential, int l, int n_r,
                            const RadialOptions& options) {
  check_arguments(mu, l, n_r);

  // Grow the box on a coarse grid until the level is well inside it.
  double box = options.initial_box;
  const int coarse = options.initial_intervals;
  double coarse_energy = 0.0;
  for (;;) {
    const RadialGrid grid(mu, potential, l, box, coarse);
    Bracket b{};
    if (bracket_level(grid, n_r, b)) {
      coarse_energy = bisect_level(grid, n_r, b);
      const bool inside = grid.turning_point(coarse_energy) < kTurningFraction * box;
      if (inside && grid.tail_decay(coarse_energy) >= kTailDecay) {
        break;
      }
    }
    if (box >= options.max_box) {
      std::ostringstream os;
      os << "radial oracle: no level n_r = " << n_r << " at l = " << l << " within box "
         << box;
      throw NoBoundState(os.str());
    }
    box = std::min(options.max_box, box * 1.5);
  }

  // Refine the step; Richardson-extrapolate the h^4 error.
  int intervals = coarse;
  double previous = box_eigenvalue(mu, potential, l, n_r, box, intervals);
  for (int level = 0; level < options.max_refinements; ++level) {
    intervals *= 2;
    const double current = box_eigenvalue(mu, potential, l, n_r, box, intervals);
    const double correction = (current - previous) / 15.0;
    previous = current;
    if (std::abs(correction) <= options.tolerance * std::max(1.0, std::abs(current))) {
      RadialSolution out;
      out.energy = current + correction;
      out.box = box;
      out.intervals = intervals;
      // Count where the state lives; a level resolved to a few ulps still
      // diverges far out in the forbidden region.
      const RadialGrid grid(mu, potential, l, box, intervals);
      out.nodes = grid.nodes_through(current, grid.decay_index(current, kNodeDecay));
      return out;
    }
  }
  std::ostringstream os;
  os << "radial oracle: eigenvalue not converged after " << options.max_refinements
     << " grid refinements";
  throw ConvergenceError(os.str());
}

double radial_eigenvalue(double mu, const Interaction& potential, int l, int n_r,
                         const RadialOptions& options) {
  return solve_radial(mu, potential, l, n_r, options).energy;
}

}  // namespace envelope::oracle
