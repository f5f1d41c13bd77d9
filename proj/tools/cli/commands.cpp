#include "cli/commands.hpp"

#include <fmt/format.h>

#include <CLI11.hpp>
#include <algorithm>
#include <array>
#include <cmath>
#include <fstream>
#include <limits>
#include <ostream>
#include <sstream>
#include <tuple>

#include "envelope/dos.hpp"
#include "envelope/errors.hpp"
#include "envelope/et_core.hpp"
#include "envelope/systems.hpp"

namespace envelope::cli {

namespace {

constexpr double kNaN = std::numeric_limits<double>::quiet_NaN();

constexpr std::array<std::string_view, 16> kScanAxes = {
    "N", "D", "m", "a", "b", "V0", "R", "omega", "g", "k", "alpha_s", "nu", "lambda", "q",
    "n_sum", "l_sum"};
constexpr std::array<std::string_view, 4> kIntegerAxes = {"N", "D", "n_sum", "l_sum"};

template <std::size_t K>
bool contains(const std::array<std::string_view, K>& set, std::string_view key) {
  return std::find(set.begin(), set.end(), key) != set.end();
}

std::vector<int> parse_int_list(const Config& cfg, const std::string& key) {
  std::vector<int> values;
  std::stringstream ss(*cfg.text(key));
  std::string item;
  while (std::getline(ss, item, ',')) {
    Config one;
    one.set(key, item, "");
    try {
      values.push_back(*one.integer(key));
    } catch (const ConfigError&) {
      cfg.fail(key, "expected a comma-separated list of integers");
    }
  }
  return values;
}

// Evaluates `fn`, mapping library errors to NaN for tabulated output.
template <typename Fn>
double or_nan(Fn&& fn) {
  try {
    return fn();
  } catch (const Error&) {
    return kNaN;
  }
}

void write_text(const Config& cfg, const std::string& text, std::ostream& out) {
  const auto path = cfg.text("csv");
  if (!path) {
    out << text;
    return;
  }
  std::ofstream file(*path, std::ios::binary);
  if (!file) {
    cfg.fail("csv", "cannot write `" + *path + "`");
  }
  file << text;
}

struct Overrides {
  std::string config_path;
  std::vector<std::string> assignments;
  std::vector<std::pair<std::string, std::string>> flags;
};

Config assemble_config(const Overrides& o) {
  Config cfg = o.config_path.empty() ? Config{} : Config::load(o.config_path);
  for (const std::string& arg : o.assignments) {
    const auto eq = arg.find('=');
    if (eq == std::string::npos || eq == 0 || eq + 1 == arg.size()) {
      throw ConfigError("command line: expected `key=value`, got `" + arg + "`");
    }
    cfg.set(arg.substr(0, eq), arg.substr(eq + 1), "command line");
  }
  for (const auto& [key, value] : o.flags) {
    cfg.set(key, value, "--" + key);
  }
  cfg.require_known_keys();
  return cfg;
}

std::string phi_label(const PhiChoice& c) {
  return c.is_dos() ? std::string("dos") : format_number(c.value());
}

// Report lines `key: value`.
class Report {
 public:
  explicit Report(std::ostream& out) : out_(out) {}
  void line(std::string_view key, std::string_view value) {
    out_ << fmt::format("{:<11}{}\n", fmt::format("{}:", key), value);
  }
  void number(std::string_view key, double v) { line(key, format_number(v)); }

 private:
  std::ostream& out_;
};

int cmd_solve(const Config& cfg, std::ostream& out) {
  const ConfiguredSystem sys = configure_system(cfg);
  Report rep(out);
  EtSolution sol;
  double nu = kNaN;
  double lambda = kNaN;
  double phi = kNaN;
  std::optional<PhiResult> detail;
  if (const auto q = cfg.number("q")) {
    sol = energy(sys.spec, *q);
  } else {
    std::tie(nu, lambda) = configured_nu_lambda(cfg, sys.spec);
    const ImprovedEnergy e =
        improved_energy(sys.spec, nu, lambda, parse_phi(cfg, PhiChoice::genuine()));
    sol = e.solution;
    phi = e.phi;
    detail = e.phi_detail;
  }
  const double e_total = sol.energy + sys.energy_shift;
  const double closed = sys.closed_energy
                            ? or_nan([&] { return sys.closed_energy(sol.q_used); }) +
                                  sys.energy_shift
                            : kNaN;

  rep.line("system", sys.kind);
  rep.number("N", sys.spec.particles());
  rep.number("D", sys.spec.dimensions());
  if (!std::isnan(nu)) {
    rep.number("nu", nu);
    rep.number("lambda", lambda);
    rep.line("phi_mode", detail ? "dos" : "fixed");
    rep.number("phi", phi);
  }
  rep.number("Q_used", sol.q_used);
  rep.number("E", e_total);
  rep.number("r0", sol.r0);
  rep.number("p0", sol.p0);
  rep.line("bound", to_string(sol.bound));
  if (sys.energy_shift != 0.0) {
    rep.number("shift", sys.energy_shift);
  }
  if (!std::isnan(closed)) {
    rep.number("E_closed", closed);
  }

  if (cfg.has("csv")) {
    const std::string csv =
        "system,N,D,nu,lambda,phi,q,E,r0,p0,bound\n" +
        fmt::format("{},{},{},{},{},{},{},{},{},{},{}\n", sys.kind, sys.spec.particles(),
                    sys.spec.dimensions(), format_number(nu), format_number(lambda),
                    format_number(phi), format_number(sol.q_used), format_number(e_total),
                    format_number(sol.r0), format_number(sol.p0), to_string(sol.bound));
    write_text(cfg, csv, out);
  }
  return kExitOk;
}

int cmd_phi(const Config& cfg, std::ostream& out) {
  const ConfiguredSystem sys = configure_system(cfg);
  const double lambda = configured_nu_lambda(cfg, sys.spec).second;
  const PhiResult r = compute_phi(sys.spec, lambda);
  const double closed =
      sys.closed_phi ? or_nan([&] { return sys.closed_phi(lambda); }) : kNaN;

  Report rep(out);
  rep.line("system", sys.kind);
  rep.number("N", sys.spec.particles());
  rep.number("D", sys.spec.dimensions());
  rep.number("lambda", r.lambda);
  rep.number("r0", r.r0_at_lambda);
  rep.number("A^2", r.a_sq);
  rep.number("B_n", r.b_n);
  rep.number("B_d", r.b_d);
  rep.number("B", r.b_n / r.b_d);
  rep.number("phi", r.phi);
  if (!std::isnan(closed)) {
    rep.number("phi_closed", closed);
  }

  if (cfg.has("csv")) {
    const std::string csv =
        "system,N,D,lambda,phi,a_sq,b_n,b_d,r0,phi_closed\n" +
        fmt::format("{},{},{},{},{},{},{},{},{},{}\n", sys.kind, sys.spec.particles(),
                    sys.spec.dimensions(), format_number(r.lambda), format_number(r.phi),
                    format_number(r.a_sq), format_number(r.b_n), format_number(r.b_d),
                    format_number(r.r0_at_lambda), format_number(closed));
    write_text(cfg, csv, out);
  }
  return kExitOk;
}

int cmd_table1(const Config& cfg, std::ostream& out) {
  std::vector<PhiChoice> choices;
  const std::string mode = cfg.text("phi").value_or("all");
  if (mode == "all") {
    choices = {PhiChoice::genuine(), PhiChoice::dos(), PhiChoice::fixed(1.35),
               PhiChoice::fixed(1.23)};
  } else {
    choices = {parse_phi(cfg, PhiChoice::genuine())};
  }

  std::vector<systems::Table1Result> results;
  results.reserve(choices.size());
  for (const PhiChoice& c : choices) {
    results.push_back(systems::table1(c));
  }

  std::string header = fmt::format("{:>6} {:>6} {:>7}", "n1+n2", "l1+l2", "exact");
  for (const PhiChoice& c : choices) {
    header += fmt::format(" {:>11}", "phi=" + phi_label(c));
  }
  out << header << "\n";
  const std::size_t rows = results.front().rows.size();
  for (std::size_t i = 0; i < rows; ++i) {
    const auto& first = results.front().rows[i];
    std::string line = fmt::format("{:>6} {:>6} {:>7.3f}", first.n_sum, first.l_sum, first.exact);
    for (const auto& res : results) {
      line += fmt::format(" {:>11.3f}", res.rows[i].energy);
    }
    out << line << "\n";
  }
  auto footer = [&](std::string_view label, auto member) {
    std::string line = fmt::format("{:<21}", label);
    for (const auto& res : results) {
      line += fmt::format(" {:>10.1f}%", 100.0 * (res.*member));
    }
    out << line << "\n";
  };
  footer("Delta", &systems::Table1Result::delta);
  footer("Delta (l1+l2 = 0)", &systems::Table1Result::delta_l0);
  footer("Delta (l1+l2 > 0)", &systems::Table1Result::delta_rest);

  if (cfg.has("csv")) {
    std::string csv = "n_sum,l_sum,exact,E,phi_used\n";
    for (const auto& res : results) {
      for (const auto& row : res.rows) {
        csv += fmt::format("{},{},{},{},{}\n", row.n_sum, row.l_sum, format_number(row.exact),
                           format_number(row.energy), format_number(row.phi));
      }
    }
    std::ofstream file(*cfg.text("csv"), std::ios::binary);
    if (!file) {
      cfg.fail("csv", "cannot write `" + *cfg.text("csv") + "`");
    }
    file << csv;
  }
  return kExitOk;
}

std::vector<double> scan_grid(const Config& cfg) {
  for (const char* key : {"start", "stop", "count"}) {
    if (!cfg.has(key)) {
      throw ConfigError(std::string("scan: missing key `") + key + "`");
    }
  }
  const double start = *cfg.number("start");
  const double stop = *cfg.number("stop");
  const int count = *cfg.integer("count");
  if (count < 1) {
    cfg.fail("count", "must be at least 1");
  }
  std::vector<double> grid(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    grid[i] = count == 1 ? start : start + (stop - start) * i / (count - 1);
  }
  return grid;
}

std::string scan_row(const Config& cfg, const std::string& emit) {
  const ConfiguredSystem sys = configure_system(cfg);
  if (emit == "bsq") {
    const double b = cfg.number_or("b", kNaN);
    const auto c = [&]() -> systems::BsqCoefficients {
      try {
        return systems::bsq_ratio_coeffs(b);
      } catch (const Error&) {
        return {kNaN, kNaN, kNaN};
      }
    }();
    return fmt::format("{},{},{}", format_number(c.c1), format_number(c.c2),
                       format_number(c.delta));
  }

  const auto [nu, lambda] = configured_nu_lambda(cfg, sys.spec);
  const double phi_dos = or_nan([&] { return compute_phi(sys.spec, lambda).phi; });
  if (emit == "phi") {
    const double closed = sys.closed_phi ? or_nan([&] { return sys.closed_phi(lambda); }) : kNaN;
    return fmt::format("{},{},{}", format_number(lambda), format_number(phi_dos),
                       format_number(closed));
  }

  if (const auto q = cfg.number("q")) {
    const double e = or_nan([&] { return energy(sys.spec, *q).energy; }) + sys.energy_shift;
    const double closed =
        sys.closed_energy ? or_nan([&] { return sys.closed_energy(*q); }) + sys.energy_shift
                          : kNaN;
    return fmt::format("{},{},{}", format_number(*q), format_number(e), format_number(closed));
  }
  const double e2 = or_nan([&] {
    return improved_energy(sys.spec, nu, lambda, PhiChoice::genuine()).solution.energy;
  });
  const double e_dos = std::isnan(phi_dos) ? kNaN : or_nan([&] {
    return improved_energy(sys.spec, nu, lambda, PhiChoice::fixed(phi_dos)).solution.energy;
  });
  return fmt::format("{},{},{},{},{}", format_number(nu), format_number(lambda),
                     format_number(e2 + sys.energy_shift), format_number(phi_dos),
                     format_number(e_dos + sys.energy_shift));
}

int cmd_scan(const Config& cfg, std::ostream& out) {
  const auto axis = cfg.text("axis");
  if (!axis) {
    throw ConfigError("scan: missing key `axis`");
  }
  if (!contains(kScanAxes, *axis)) {
    cfg.fail("axis", "unknown scan axis `" + *axis + "`");
  }
  std::string emit = cfg.text("emit").value_or("energy");
  if (emit == "delta") {
    emit = "bsq";
  }
  if (emit != "energy" && emit != "phi" && emit != "bsq") {
    cfg.fail("emit", "expected `energy`, `phi`, `bsq` or `delta`, got `" + emit + "`");
  }
  const std::vector<double> grid = scan_grid(cfg);
  const bool integral = contains(kIntegerAxes, *axis);

  std::string header = *axis + ",";
  if (emit == "bsq") {
    header += "c1,c2,delta";
  } else if (emit == "phi") {
    header += "lambda,phi_dos,phi_closed";
  } else if (cfg.has("q") || *axis == "q") {
    header += "q,E,E_closed";
  } else {
    header += "nu,lambda,E_phi2,phi_dos,E_dos";
  }

  std::string csv = header + "\n";
  for (double value : grid) {
    Config point = cfg;
    std::string text = format_number(value);
    if (integral) {
      if (std::abs(value - std::round(value)) > 1e-9) {
        cfg.fail("axis", "grid value " + text + " is not an integer for axis `" + *axis + "`");
      }
      text = std::to_string(static_cast<long>(std::lround(value)));
    }
    point.set(*axis, text, "scan grid");
    csv += text + "," + scan_row(point, emit) + "\n";
  }
  write_text(cfg, csv, out);
  return kExitOk;
}

}  // namespace

std::string format_number(double x) {
  if (std::isnan(x)) {
    return "nan";
  }
  return fmt::format("{:.12g}", x);
}

PhiChoice parse_phi(const Config& cfg, PhiChoice fallback) {
  const auto raw = cfg.text("phi");
  if (!raw) {
    return fallback;
  }
  if (*raw == "dos") {
    return PhiChoice::dos();
  }
  const double v = *cfg.number("phi");
  if (!(v > 0.0) || !std::isfinite(v)) {
    cfg.fail("phi", "must be positive, `dos` or `2`");
  }
  return PhiChoice::fixed(v);
}

std::pair<double, double> configured_nu_lambda(const Config& cfg, const SystemSpec& spec) {
  std::optional<QuantumNumbers> qn;
  try {
    if (cfg.has("n") || cfg.has("l")) {
      if (!cfg.has("n") || !cfg.has("l")) {
        throw ConfigError("quantum numbers: `n` and `l` lists must be given together");
      }
      qn = QuantumNumbers::from_modes(parse_int_list(cfg, "n"), parse_int_list(cfg, "l"));
    } else {
      qn = QuantumNumbers::from_sums(cfg.integer_or("n_sum", 0), cfg.integer_or("l_sum", 0));
    }
    auto [nu, lambda] = nu_lambda(*qn, spec);
    nu = cfg.number_or("nu", nu);
    lambda = cfg.number_or("lambda", lambda);
    return {nu, lambda};
  } catch (const DomainError& e) {
    throw ConfigError(std::string("quantum numbers: ") + e.what());
  } catch (const ShapeError& e) {
    throw ConfigError(std::string("quantum numbers: ") + e.what());
  }
}

ConfiguredSystem configure_system(const Config& cfg) {
  const auto kind = cfg.text("system");
  if (!kind) {
    throw ConfigError("config: missing key `system`");
  }
  const int d = cfg.integer_or("D", 3);
  try {
    if (*kind == "powerlaw2" || *kind == "harmonic" || *kind == "coulomb") {
      systems::PowerLaw2Params p;
      p.m = cfg.number_or("m", 1.0);
      if (*kind == "coulomb") {
        p.a = cfg.number_or("g", 1.0);
        p.b = -1.0;
      } else {
        p.a = cfg.number_or("a", 1.0);
        p.b = *kind == "harmonic" ? 2.0 : cfg.number_or("b", 2.0);
      }
      const int n = cfg.integer_or("N", 2);
      return {*kind, systems::powerlaw2(p, n, d),
              [p, n](double q) { return systems::powerlaw2_energy(p, n, q); },
              [b = p.b](double) { return systems::powerlaw2_phi(b); }};
    }
    if (*kind == "powerlaw1") {
      const systems::PowerLaw1Params p{cfg.number_or("a", 1.0), cfg.number_or("b", 1.0)};
      const int n = cfg.integer_or("N", 2);
      return {*kind, systems::powerlaw1(p, n, d),
              [p, n](double q) { return systems::powerlaw1_energy(p, n, q); },
              [b = p.b](double) { return systems::powerlaw1_phi(b); }};
    }
    if (*kind == "gaussian") {
      const systems::GaussianParams p{cfg.number_or("m", 1.0), cfg.number_or("V0", 1.0),
                                      cfg.number_or("R", 1.0)};
      const int n = cfg.integer_or("N", 2);
      return {*kind, systems::gaussian(p, n, d),
              [p, n](double q) { return systems::gaussian_energy(p, n, q); },
              [p, n](double lambda) { return systems::gaussian_phi(p, n, lambda); }};
    }
    if (*kind == "confined") {
      const systems::ConfinedParams p{cfg.number_or("m", 1.0), cfg.number_or("omega", 1.0),
                                      cfg.number_or("g", 1.0)};
      const int n = cfg.integer_or("N", 2);
      ConfiguredSystem sys{*kind, systems::confined(p, n, d),
                           [p, n](double q) { return systems::confined_energy(p, n, q); },
                           [p, n](double lambda) { return systems::confined_phi(p, n, lambda); }};
      if (cfg.flag("ground_shift").value_or(false)) {
        sys.energy_shift = 1.5 * p.omega;
      }
      return sys;
    }
    if (*kind == "baryon") {
      systems::BaryonParams p =
          systems::BaryonParams::from_alpha_s(cfg.number_or("k", 0.2), cfg.number_or("alpha_s", 0.4));
      if (cfg.has("g")) {
        p.g = *cfg.number("g");
      }
      const int n = cfg.integer_or("N", 3);
      return {*kind, systems::baryon(p, n, d),
              [p, n](double q) { return systems::baryon_energy(p, n, q); },
              [p, n](double lambda) { return systems::baryon_phi(p, n, lambda); }};
    }
  } catch (const DomainError& e) {
    throw ConfigError("system `" + *kind + "`: " + e.what());
  }
  cfg.fail("system",
           "unknown system `" + *kind +
               "` (expected powerlaw2, harmonic, coulomb, powerlaw1, gaussian, confined, baryon)");
}

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Envelope-theory eigenvalues with DOS-improved quantum numbers", "envelope"};
  app.require_subcommand(1);

  Overrides o;
  std::optional<std::string> csv, phi, nu, lambda, q, axis, start, stop, count, emit;

  auto common = [&](CLI::App* sub) {
    sub->add_option("--config", o.config_path, "Config file with `key = value` lines");
    sub->add_option("--csv", csv, "Write CSV output to PATH");
    sub->add_option("--phi", phi, "phi: a number, `2`, or `dos`");
    sub->add_option("--nu", nu, "Collective radial quantum number");
    sub->add_option("--lambda", lambda, "Collective orbital quantum number");
    sub->add_option("--q", q, "Global quantum number (skips nu/lambda)");
    sub->add_option("assignments", o.assignments, "Extra `key=value` settings");
  };
  CLI::App* solve = app.add_subcommand("solve", "Envelope energy for one state");
  CLI::App* phi_cmd = app.add_subcommand("phi", "DOS value of phi at lambda");
  CLI::App* table = app.add_subcommand("table1", "Three-quark spectrum versus reference masses");
  CLI::App* scan = app.add_subcommand("scan", "Sweep one parameter and write CSV");
  for (CLI::App* sub : {solve, phi_cmd, table, scan}) {
    common(sub);
  }
  scan->add_option("--axis", axis, "Parameter to sweep");
  scan->add_option("--start", start, "First grid value");
  scan->add_option("--stop", stop, "Last grid value");
  scan->add_option("--count", count, "Number of grid points");
  scan->add_option("--emit", emit, "Columns: energy, phi or bsq");

  std::vector<const char*> argv;
  argv.push_back("envelope");
  for (const std::string& a : args) {
    argv.push_back(a.c_str());
  }
  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitConfig;
  }

  auto flag = [&](const char* key, const std::optional<std::string>& v) {
    if (v) {
      o.flags.emplace_back(key, *v);
    }
  };
  flag("csv", csv);
  flag("phi", phi);
  flag("nu", nu);
  flag("lambda", lambda);
  flag("q", q);
  flag("axis", axis);
  flag("start", start);
  flag("stop", stop);
  flag("count", count);
  flag("emit", emit);

  try {
    const Config cfg = assemble_config(o);
    if (solve->parsed()) {
      return cmd_solve(cfg, out);
    }
    if (phi_cmd->parsed()) {
      return cmd_phi(cfg, out);
    }
    if (table->parsed()) {
      return cmd_table1(cfg, out);
    }
    return cmd_scan(cfg, out);
  } catch (const ConfigError& e) {
    err << "config error: " << e.what() << "\n";
    return kExitConfig;
  } catch (const Error& e) {
    err << "error: " << e.name() << ": " << e.what() << "\n";
    return kExitSolver;
  }
}

}  // namespace envelope::cli
