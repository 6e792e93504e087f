#include "cli.hpp"

#include <CLI11.hpp>
#include <json.hpp>

#include <algorithm>
#include <charconv>
#include <cmath>
#include <cstdio>
#include <fstream>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <variant>
#include <vector>

#include "relspin/relspin.hpp"

namespace relspin::cli {
namespace {

using json = nlohmann::ordered_json;

// Raw flag values shared by every subcommand; each subcommand registers the
// subset it understands.
struct Flags {
  std::optional<double> kz, energy, kx, vb, delta, slope_width;
  std::optional<double> width, vl, vr, kperp;
  std::size_t rk_steps = 2000;
  std::optional<std::string> dump;
  std::string param;
  double from = 0.0, to = 0.0;
  std::size_t points = 11;
  std::string widths;
  std::string format;
  std::optional<std::string> output;
  std::optional<std::string> config;
};

[[noreturn]] void input_error(const std::string& what) { throw error(errc::invalid_input, what); }

// Collects warnings so a sweep reports each distinct one once.
struct Diagnostics {
  std::vector<std::string> lines;
  void warn(const std::string& s) {
    if (std::find(lines.begin(), lines.end(), s) == lines.end()) lines.push_back(s);
  }
};

// ---------------------------------------------------------------- output

std::string full(double v) {
  if (std::isnan(v)) return "nan";
  char buf[32];
  const auto r = std::to_chars(buf, buf + sizeof buf, v);
  return std::string(buf, r.ptr);
}

std::string rounded(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.6g", v);
  return buf;
}

using Cell = std::variant<std::monostate, double, std::string>;

std::string cell_text(const Cell& c, bool display) {
  if (const auto* d = std::get_if<double>(&c)) return display ? rounded(*d) : full(*d);
  if (const auto* t = std::get_if<std::string>(&c)) return *t;
  return "";
}

json cell_json(const Cell& c) {
  if (const auto* d = std::get_if<double>(&c)) return std::isfinite(*d) ? json(*d) : json(nullptr);
  if (const auto* t = std::get_if<std::string>(&c)) return *t;
  return nullptr;
}

// One table feeds all three formats, so they can only differ in rounding.
struct Table {
  std::vector<std::string> columns;
  std::vector<std::vector<Cell>> rows;

  std::string csv() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < columns.size(); ++i) os << (i ? "," : "") << columns[i];
    os << '\n';
    for (const auto& r : rows) {
      for (std::size_t i = 0; i < columns.size(); ++i)
        os << (i ? "," : "") << (i < r.size() ? cell_text(r[i], false) : "");
      os << '\n';
    }
    return os.str();
  }

  std::string text() const {
    std::vector<std::vector<std::string>> body;
    for (const auto& r : rows) {
      std::vector<std::string> b;
      for (std::size_t i = 0; i < columns.size(); ++i)
        b.push_back(i < r.size() ? cell_text(r[i], true) : "");
      body.push_back(std::move(b));
    }
    std::vector<std::size_t> w(columns.size());
    for (std::size_t i = 0; i < columns.size(); ++i) {
      w[i] = columns[i].size();
      for (const auto& b : body) w[i] = std::max(w[i], b[i].size());
    }
    std::ostringstream os;
    auto line = [&](const std::vector<std::string>& v) {
      for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << "  ";
        os << std::string(w[i] - v[i].size(), ' ') << v[i];
      }
      os << '\n';
    };
    line(columns);
    for (const auto& b : body) line(b);
    return os.str();
  }

  json rows_json() const {
    json arr = json::array();
    for (const auto& r : rows) {
      json o = json::object();
      for (std::size_t i = 0; i < columns.size(); ++i)
        o[columns[i]] = i < r.size() ? cell_json(r[i]) : json(nullptr);
      arr.push_back(std::move(o));
    }
    return arr;
  }
};

std::vector<Cell> cells(const std::vector<double>& v) { return {v.begin(), v.end()}; }

std::string sanitize(std::string s) {
  for (char& c : s)
    if (c == ',' || c == '\n' || c == '\r') c = ';';
  return s;
}

json cx(complex z) { return {{"re", z.real()}, {"im", z.imag()}}; }

json wave_json(const WaveVector& w) {
  return {{"re", w.value.real()}, {"im", w.value.imag()}, {"kind", to_string(w.kind)}};
}

json residual_json(const BoundaryResiduals& r) {
  return {{"continuity_up", r.continuity_up},
          {"continuity_low", r.continuity_low},
          {"derivative_up", r.derivative_up},
          {"derivative_low", r.derivative_low}};
}

// ---------------------------------------------------------------- reflect

struct ReflectPoint {
  double energy, kz, kx, vb, delta;
  std::optional<double> slope_width;
  WaveVectorSet wv;
  MatchingParams mp;
  AmplitudeSet amps;
  BeamReport beam;
  BoundaryResiduals res_up, res_down;
};

double resolve_delta(const Flags& f, double kx, double vb, Diagnostics& diag) {
  if (f.delta) {
    if (f.slope_width) diag.warn("warning: both --delta and --slope-width given; using --delta");
    return *f.delta;
  }
  if (f.slope_width) return barrier_soe(kx, vb, *f.slope_width);
  input_error("one of --delta or --slope-width is required");
}

ReflectPoint compute_reflect(const Flags& f, Diagnostics& diag) {
  if (f.kz.has_value() == f.energy.has_value())
    input_error("exactly one of --kz and --energy-ev is required");
  if (!f.kx) input_error("--kx is required");
  if (!f.vb) input_error("--vb is required");
  const BarrierSpec barrier{*f.vb, f.slope_width};
  barrier.validate();
  if (!std::isfinite(*f.kx)) input_error("--kx must be finite");

  ReflectPoint p{};
  p.kx = *f.kx;
  p.vb = *f.vb;
  p.slope_width = f.slope_width;
  p.delta = resolve_delta(f, p.kx, p.vb, diag);
  if (f.kz) {
    if (!(*f.kz > 0.0)) input_error("--kz must be positive");
    p.energy = energy_from_k_rel(p.kx, *f.kz, p.delta);
  } else {
    p.energy = *f.energy;
  }
  p.wv = wave_vectors_rel(p.energy, p.delta, p.kx, p.vb);
  p.kz = p.wv.kz.value.real();
  p.mp = matching_params(p.energy, p.kx, p.vb);
  p.amps = step_amplitudes(p.wv, p.mp.coupling());
  p.beam = beam_report(p.wv, p.amps, p.kx);
  p.res_up = boundary_residuals(p.amps, p.wv, p.mp, SpinChannel::EffUp);
  p.res_down = boundary_residuals(p.amps, p.wv, p.mp, SpinChannel::EffDown);
  return p;
}

const std::vector<std::string> kReflectColumns{
    "energy_ev",   "kz",          "kx",          "vb",
    "delta_ev",    "kz_prime",    "qz_re",       "qz_im",
    "qz_prime_re", "qz_prime_im", "alpha_deg",   "alpha_prime_deg",
    "R_re",        "R_im",        "Rp_re",       "Rp_im",
    "T_re",        "T_im",        "Tp_re",       "Tp_im",
    "refl_conserving_fraction",   "refl_flip_fraction",
    "transmitted_fraction",       "flux_imbalance",
    "abs_Rp_over_R", "M",         "S",           "residual_max"};

double abs_ratio(const AmplitudeSet& a) {
  return std::abs(a.R) > 0.0 ? std::abs(a.R_prime) / std::abs(a.R) : NAN;
}

std::vector<double> reflect_values(const ReflectPoint& p) {
  const auto& a = p.amps;
  const auto& b = p.beam;
  return {p.energy,
          p.kz,
          p.kx,
          p.vb,
          p.delta,
          p.wv.kz_prime.value.real(),
          p.wv.qz.value.real(),
          p.wv.qz.value.imag(),
          p.wv.qz_prime.value.real(),
          p.wv.qz_prime.value.imag(),
          b.alpha_deg,
          b.alpha_prime_deg,
          a.R.real(),
          a.R.imag(),
          a.R_prime.real(),
          a.R_prime.imag(),
          a.T.real(),
          a.T.imag(),
          a.T_prime.real(),
          a.T_prime.imag(),
          b.refl_conserving_fraction,
          b.refl_flip_fraction,
          b.transmitted_fraction,
          b.flux_imbalance,
          abs_ratio(a),
          p.mp.M,
          p.mp.S,
          std::max(p.res_up.max(), p.res_down.max())};
}

json reflect_json(const ReflectPoint& p) {
  const auto& a = p.amps;
  const auto& b = p.beam;
  json j;
  j["inputs"] = {{"energy_ev", p.energy},
                 {"kz", p.kz},
                 {"kx", p.kx},
                 {"vb", p.vb},
                 {"slope_width_cm", p.slope_width ? json(*p.slope_width) : json(nullptr)}};
  j["delta_ev"] = p.delta;
  j["wave_vectors"] = {{"kz", wave_json(p.wv.kz)},
                       {"kz_prime", wave_json(p.wv.kz_prime)},
                       {"qz", wave_json(p.wv.qz)},
                       {"qz_prime", wave_json(p.wv.qz_prime)}};
  j["angles_deg"] = {{"alpha_deg", b.alpha_deg},
                     {"alpha_prime_deg", b.alpha_prime_deg},
                     {"difference_deg", b.alpha_deg - b.alpha_prime_deg}};
  j["amplitudes"] = {{"R", cx(a.R)}, {"R_prime", cx(a.R_prime)}, {"T", cx(a.T)},
                     {"T_prime", cx(a.T_prime)}, {"P", cx(a.P)}, {"P_prime", cx(a.P_prime)},
                     {"F", cx(a.F)}, {"F_prime", cx(a.F_prime)}};
  j["fractions"] = {{"refl_conserving_fraction", b.refl_conserving_fraction},
                    {"refl_flip_fraction", b.refl_flip_fraction},
                    {"transmitted_fraction", b.transmitted_fraction},
                    {"transmission_propagating", b.transmission_propagating}};
  j["residuals"] = {{"spin_up", residual_json(p.res_up)},
                    {"spin_down", residual_json(p.res_down)},
                    {"max", std::max(p.res_up.max(), p.res_down.max())}};
  j["diagnostics"] = {{"M", p.mp.M},
                      {"S", p.mp.S},
                      {"flux_imbalance", b.flux_imbalance},
                      {"abs_Rp_over_R", abs_ratio(a)}};
  return j;
}

// ---------------------------------------------------------------- well

struct WellPoint {
  WellSpec spec;
  double kperp;
  BoundStateResult r;
  double delta_integral;
  std::array<double, 2> jumps;
};

WellSpec well_spec(const Flags& f) {
  if (!f.width) input_error("--width is required");
  if (!f.vl) input_error("--vl is required");
  if (!f.vr) input_error("--vr is required");
  return {*f.width, *f.vl, *f.vr};
}

WellPoint compute_well(const Flags& f) {
  const auto spec = well_spec(f);
  const double kperp = f.kperp.value_or(0.0);
  WellSolverOptions opt;
  opt.steps = f.rk_steps;
  auto r = solve_bound_state(spec, kperp, opt);
  const double integral = soe_integral_form(r, spec, kperp);
  const auto jumps = interface_flux_jumps(r, spec);
  return {spec, kperp, std::move(r), integral, jumps};
}

const std::vector<std::string> kWellColumns{
    "width_cm",      "v_left_ev",       "v_right_ev",      "kperp",
    "e0_ev",         "delta_ev",        "delta_integral_ev", "psi_sq_left",
    "psi_sq_right",  "kappa_left",      "kappa_right",     "flux_jump_left",
    "flux_jump_right", "iterations",    "residual"};

std::vector<double> well_values(const WellPoint& w) {
  return {w.spec.width,
          w.spec.v_left,
          w.spec.v_right,
          w.kperp,
          w.r.e0,
          w.r.delta,
          w.delta_integral,
          w.r.psi_sq_left_iface,
          w.r.psi_sq_right_iface,
          w.r.kappa_left,
          w.r.kappa_right,
          w.jumps[0],
          w.jumps[1],
          static_cast<double>(w.r.iterations),
          w.r.residual};
}

json well_json(const WellPoint& w, std::size_t steps) {
  json j;
  j["inputs"] = {{"width_cm", w.spec.width},
                 {"v_left_ev", w.spec.v_left},
                 {"v_right_ev", w.spec.v_right},
                 {"kperp", w.kperp}};
  j["e0_ev"] = w.r.e0;
  j["delta_ev"] = w.r.delta;
  j["delta_integral_ev"] = w.delta_integral;
  j["interfaces"] = {{"psi_sq_left", w.r.psi_sq_left_iface},
                     {"psi_sq_right", w.r.psi_sq_right_iface},
                     {"kappa_left", w.r.kappa_left},
                     {"kappa_right", w.r.kappa_right},
                     {"flux_jump_left", w.jumps[0]},
                     {"flux_jump_right", w.jumps[1]}};
  j["solver"] = {{"steps", steps}, {"iterations", w.r.iterations}, {"residual", w.r.residual}};
  return j;
}

// ---------------------------------------------------------------- commands

std::string render(const Table& t, const json& j, const std::string& format) {
  if (format == "json") return j.dump(2) + "\n";
  if (format == "csv") return t.csv();
  return t.text();
}

std::string cmd_reflect(const Flags& f, Diagnostics& diag) {
  const auto p = compute_reflect(f, diag);
  Table t{kReflectColumns, {cells(reflect_values(p))}};
  return render(t, reflect_json(p), f.format);
}

std::string cmd_well(const Flags& f) {
  const auto w = compute_well(f);
  if (f.dump) {
    std::ofstream os(*f.dump);
    if (!os) input_error("cannot open dump file " + *f.dump);
    write_wavefunction(os, w.r, w.spec, w.kperp);
  }
  Table t{kWellColumns, {cells(well_values(w))}};
  return render(t, well_json(w, f.rk_steps), f.format);
}

const std::set<std::string> kReflectParams{"kx", "kz", "energy-ev", "vb", "delta"};
const std::set<std::string> kWellParams{"kperp", "width", "vl", "vr"};

void set_param(Flags& f, const std::string& name, double v) {
  if (name == "kx") f.kx = v;
  else if (name == "kz") f.kz = v, f.energy.reset();
  else if (name == "energy-ev") f.energy = v, f.kz.reset();
  else if (name == "vb") f.vb = v;
  else if (name == "delta") f.delta = v;
  else if (name == "kperp") f.kperp = v;
  else if (name == "width") f.width = v;
  else if (name == "vl") f.vl = v;
  else if (name == "vr") f.vr = v;
}

std::string cmd_sweep(const Flags& f, Diagnostics& diag) {
  const bool reflect = kReflectParams.count(f.param) > 0;
  if (!reflect && kWellParams.count(f.param) == 0)
    input_error("unknown sweep parameter '" + f.param + "'");
  if (f.points < 2) input_error("--steps must be at least 2");
  if (!std::isfinite(f.from) || !std::isfinite(f.to)) input_error("--from/--to must be finite");

  Table t;
  t.columns = {"index", "param", "value"};
  const auto& cols = reflect ? kReflectColumns : kWellColumns;
  t.columns.insert(t.columns.end(), cols.begin(), cols.end());
  t.columns.push_back("error");
  const double n1 = static_cast<double>(f.points - 1);
  for (std::size_t i = 0; i < f.points; ++i) {
    const double v = f.from + (f.to - f.from) * static_cast<double>(i) / n1;
    Flags g = f;
    set_param(g, f.param, v);
    std::vector<Cell> row{static_cast<double>(i), f.param, v};
    try {
      const auto vals =
          reflect ? reflect_values(compute_reflect(g, diag)) : well_values(compute_well(g));
      row.insert(row.end(), vals.begin(), vals.end());
      row.emplace_back(std::monostate{});
    } catch (const error& e) {
      // A missing fixed input fails every point alike: report it once.
      if (e.code() == errc::invalid_input &&
          std::string(e.what()).find("required") != std::string::npos)
        throw;
      row.resize(t.columns.size() - 1);
      row.emplace_back(sanitize(e.what()));
    }
    t.rows.push_back(std::move(row));
  }
  json j;
  j["param"] = f.param;
  j["rows"] = t.rows_json();
  return render(t, j, f.format);
}

std::vector<double> parse_widths(const std::string& s) {
  if (s.empty()) return default_sweep_widths();
  std::vector<double> w;
  std::stringstream ss(s);
  std::string item;
  while (std::getline(ss, item, ',')) {
    try {
      std::size_t used = 0;
      w.push_back(std::stod(item, &used));
      if (used != item.size()) throw std::invalid_argument(item);
    } catch (const std::exception&) {
      input_error("bad slope width '" + item + "'");
    }
  }
  return w;
}

const std::vector<std::string> kVerifyColumns{"width_cm", "dev_R", "dev_Rp", "dev_T", "dev_Tp",
                                              "dev_P",    "dev_Pp", "dev_F", "dev_Fp"};

std::string cmd_verify(const Flags& f, Diagnostics& diag, bool& passed) {
  const auto p = compute_reflect(f, diag);
  const auto widths = parse_widths(f.widths);
  const auto rows = slope_convergence_sweep(p.energy, p.delta, p.kx, p.vb, widths, f.rk_steps);

  Table t{kVerifyColumns, {}};
  for (const auto& r : rows) {
    const auto& d = r.deviation;
    t.rows.push_back(
        cells({r.width, d.R, d.R_prime, d.T, d.T_prime, d.P, d.P_prime, d.F, d.F_prime}));
  }
  const auto& last = rows.back().deviation;
  const double final_dev = std::max(last.max_spin_up(), last.max_spin_down());
  const bool monotone = monotone_decreasing(rows);
  passed = final_dev < 1e-3 && monotone;
  if (!passed)
    diag.warn("verification failed: final deviation " + full(final_dev) +
              (monotone ? "" : ", deviation not monotone in slope width"));

  json j;
  j["inputs"] = reflect_json(p)["inputs"];
  j["delta_ev"] = p.delta;
  j["rows"] = t.rows_json();
  j["final_deviation"] = final_dev;
  j["monotone"] = monotone;
  j["passed"] = passed;
  return render(t, j, f.format);
}

// ---------------------------------------------------------------- parsing

int exit_code(errc c) {
  switch (c) {
    case errc::no_bound_state:
    case errc::no_convergence:
    case errc::stiff_failure:
      return kSolverError;
    default:
      return kInputError;
  }
}

std::string config_token(const json& v) {
  if (v.is_string()) return v.get<std::string>();
  if (v.is_number_integer()) return std::to_string(v.get<long long>());
  if (v.is_number()) return full(v.get<double>());
  if (v.is_array()) {
    std::string s;
    for (const auto& e : v) s += (s.empty() ? "" : ",") + config_token(e);
    return s;
  }
  throw error(errc::invalid_input, "unsupported config value " + v.dump());
}

// Expands --config into flag tokens placed right after the subcommand, so
// that flags on the command line (parsed later, last value wins) override
// them.
std::vector<std::string> expand_config(std::span<const std::string> args) {
  std::optional<std::string> path;
  for (std::size_t i = 0; i < args.size(); ++i) {
    if (args[i] == "--config" && i + 1 < args.size()) path = args[i + 1];
    else if (args[i].rfind("--config=", 0) == 0) path = args[i].substr(9);
  }
  std::vector<std::string> out(args.begin(), args.end());
  if (!path) return out;

  std::ifstream is(*path);
  if (!is) throw error(errc::invalid_input, "cannot open config file " + *path);
  json cfg;
  try {
    cfg = json::parse(is);
  } catch (const json::exception& e) {
    throw error(errc::invalid_input, std::string("bad config file: ") + e.what());
  }
  if (!cfg.is_object()) throw error(errc::invalid_input, "config file must hold a JSON object");

  std::vector<std::string> tokens;
  std::optional<std::string> command;
  for (const auto& [key, value] : cfg.items()) {
    if (key == "command") {
      command = value.get<std::string>();
      continue;
    }
    tokens.push_back("--" + key);
    tokens.push_back(config_token(value));
  }
  const bool has_command = !out.empty() && out.front().rfind("-", 0) != 0;
  if (!has_command) {
    if (!command) throw error(errc::invalid_input, "no subcommand given");
    out.insert(out.begin(), *command);
  }
  out.insert(out.begin() + 1, tokens.begin(), tokens.end());
  return out;
}

void add_output_flags(CLI::App* c, Flags& f, const std::string& default_format) {
  c->add_option("--format", f.format, "Output format: table, json or csv (default " + default_format + ")")
      ->check(CLI::IsMember({"table", "json", "csv"}));
  c->add_option("--output", f.output, "Write data to this file instead of standard output");
  c->add_option("--config", f.config, "JSON file with flag values (keys are flag names)");
}

void add_reflect_flags(CLI::App* c, Flags& f) {
  c->add_option("--kz", f.kz, "Incident normal wave vector [1/cm]");
  c->add_option("--energy-ev", f.energy, "Electron energy above the rest energy [eV]");
  c->add_option("--kx", f.kx, "Transverse wave vector [1/cm]");
  c->add_option("--vb", f.vb, "Barrier height [eV]");
  c->add_option("--delta", f.delta, "Spin-orbit energy [eV]; wins over --slope-width");
  c->add_option("--slope-width", f.slope_width, "Barrier slope width [cm]; sets the spin-orbit energy");
}

void add_well_flags(CLI::App* c, Flags& f) {
  c->add_option("--width", f.width, "Well width [cm]");
  c->add_option("--vl", f.vl, "Left barrier offset [eV]");
  c->add_option("--vr", f.vr, "Right barrier offset [eV]");
  c->add_option("--kperp", f.kperp, "In-plane wave vector [1/cm]");
}

}  // namespace

int run(std::span<const std::string> args, std::ostream& out, std::ostream& err) {
  Flags f;
  CLI::App app{"Spin-flip reflection of relativistic electrons and spin-orbit split well states.\n"
               "Units: energies in eV, lengths in cm, wave vectors in 1/cm.",
               "relspin-cli"};
  app.option_defaults()->multi_option_policy(CLI::MultiOptionPolicy::TakeLast);
  app.require_subcommand(1);

  auto* reflect = app.add_subcommand("reflect", "Reflection from a vertical step barrier");
  add_reflect_flags(reflect, f);
  add_output_flags(reflect, f, "table");

  auto* well = app.add_subcommand("well", "Ground state and spin-orbit energy of an asymmetric well");
  add_well_flags(well, f);
  well->add_option("--steps", f.rk_steps, "RK4 steps across the well")->capture_default_str();
  well->add_option("--dump", f.dump, "Write the wavefunction (z, psi) to this file");
  add_output_flags(well, f, "table");

  auto* sweep = app.add_subcommand("sweep", "Sweep one parameter of reflect or well");
  add_reflect_flags(sweep, f);
  add_well_flags(sweep, f);
  sweep->add_option("--param", f.param, "kx, kz, energy-ev, vb, delta, kperp, width, vl or vr")
      ->required();
  sweep->add_option("--from", f.from, "First value")->required();
  sweep->add_option("--to", f.to, "Last value")->required();
  sweep->add_option("--steps", f.points, "Number of grid points (>= 2)")->capture_default_str();
  sweep->add_option("--rk-steps", f.rk_steps, "RK4 steps across the well")->capture_default_str();
  add_output_flags(sweep, f, "csv");

  auto* verify = app.add_subcommand("verify", "Compare the step amplitudes with a sloped-barrier ODE solution");
  add_reflect_flags(verify, f);
  verify->add_option("--widths", f.widths, "Comma-separated, strictly decreasing slope widths [cm]");
  verify->add_option("--steps", f.rk_steps, "RK4 steps per integration segment")->capture_default_str();
  add_output_flags(verify, f, "table");

  Diagnostics diag;
  auto flush_diag = [&] {
    for (const auto& l : diag.lines) err << l << '\n';
  };

  try {
    auto tokens = expand_config(args);
    std::reverse(tokens.begin(), tokens.end());
    try {
      app.parse(tokens);
    } catch (const CLI::CallForHelp&) {
      out << app.help();
      return kOk;
    } catch (const CLI::CallForAllHelp&) {
      out << app.help("", CLI::AppFormatMode::All);
      return kOk;
    } catch (const CLI::ParseError& e) {
      err << "error: " << e.what() << '\n';
      return kInputError;
    }

    if (f.format.empty()) f.format = sweep->parsed() ? "csv" : "table";
    std::string payload;
    int code = kOk;
    if (reflect->parsed()) {
      payload = cmd_reflect(f, diag);
    } else if (well->parsed()) {
      payload = cmd_well(f);
    } else if (sweep->parsed()) {
      payload = cmd_sweep(f, diag);
    } else {
      bool passed = true;
      payload = cmd_verify(f, diag, passed);
      if (!passed) code = kVerificationFailed;
    }

    if (f.output) {
      std::ofstream os(*f.output);
      if (!(os << payload)) throw error(errc::invalid_input, "cannot write " + *f.output);
    } else {
      out << payload;
    }
    flush_diag();
    return code;
  } catch (const error& e) {
    flush_diag();
    err << "error: " << e.what() << '\n';
    return exit_code(e.code());
  } catch (const std::exception& e) {
    flush_diag();
    err << "error: " << e.what() << '\n';
    return kInputError;
  }
}

}  // namespace relspin::cli
