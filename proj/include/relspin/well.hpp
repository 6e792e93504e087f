#ifndef RELSPIN_WELL_HPP
#define RELSPIN_WELL_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <cstddef>
#include <limits>
#include <ostream>
#include <vector>

#include "relspin/core.hpp"
#include "relspin/rk4.hpp"
#include "relspin/roots.hpp"

namespace relspin {

struct WellSolverOptions {
  std::size_t steps = 2000;        // RK4 steps across the well
  std::size_t scan_points = 400;   // trial energies in the bracket scan
  double energy_tol = 1e-10;       // absolute bisection width [eV]
  std::size_t max_iterations = 200;
};

/// Ground state of the asymmetric well.  grid/psi/flux cover [-a/2, a/2];
/// the tails exp(kappa_left (z + a/2)) and exp(-kappa_right (z - a/2)) are
/// analytic.  flux is (1/m) dpsi/dz in units of 1/(eV cm^{3/2}).
struct BoundStateResult {
  double e0 = 0.0;
  std::vector<double> grid;
  std::vector<double> psi;
  std::vector<double> flux;
  double psi_sq_left_iface = 0.0;
  double psi_sq_right_iface = 0.0;
  double kappa_left = 0.0;
  double kappa_right = 0.0;
  double delta = 0.0;
  std::size_t iterations = 0;
  double residual = 0.0;

  /// Normalised wavefunction anywhere on the axis (linear interpolation
  /// inside the well).
  double psi_at(double z) const {
    const double zl = grid.front(), zr = grid.back();
    if (z <= zl) return psi.front() * std::exp(kappa_left * (z - zl));
    if (z >= zr) return psi.back() * std::exp(-kappa_right * (z - zr));
    const double h = (zr - zl) / static_cast<double>(grid.size() - 1);
    const auto i = std::min(static_cast<std::size_t>((z - zl) / h), grid.size() - 2);
    const double t = (z - grid[i]) / h;
    return (1.0 - t) * psi[i] + t * psi[i + 1];
  }
};

namespace detail {

/// Per-trial-energy quantities of the well problem.  The mass depends on the
/// trial energy, so everything is recomputed for each E.
struct WellTrial {
  double energy;
  double mu_left, mu_in, mu_right;  // m c^2 in each region [eV]
  double kappa2_left, kappa2_right;

  WellTrial(const WellSpec& w, double k_perp, double e)
      : energy(e),
        mu_left(relativistic_mass_energy(e, w.v_left)),
        mu_in(relativistic_mass_energy(e, 0.0)),
        mu_right(relativistic_mass_energy(e, w.v_right)),
        kappa2_left(k_perp * k_perp + 2.0 * mu_left * (w.v_left - e) / kHbarC2),
        kappa2_right(k_perp * k_perp + 2.0 * mu_right * (w.v_right - e) / kHbarC2) {}

  bool bound() const noexcept { return kappa2_left > 0.0 && kappa2_right > 0.0; }
};

// State (psi, Pi = psi'/mu, integral of psi^2) inside the well, where
//   psi' = mu Pi,  Pi' = [k_perp^2/mu - 2E/(hc)^2] psi.
class WellShooter {
 public:
  using State = std::array<double, 3>;

  WellShooter(const WellSpec& well, double k_perp, std::size_t steps)
      : well_(well), k_perp_(k_perp), steps_(steps) {}

  /// Relative BenDaniel-Duke defect at z = a/2, in [-1, 1]; NaN when the
  /// trial energy is not below both barriers.
  double mismatch(double e) const {
    const WellTrial t(well_, k_perp_, e);
    if (!t.bound()) return std::numeric_limits<double>::quiet_NaN();
    const auto y = integrate(t, [](double, const State&) {});
    return defect(t, y);
  }

  /// +1 below the ground state, -1 above it, NaN when not bound.  Above the
  /// ground state the shooting solution either overshoots the right tail
  /// (negative defect) or has already picked up an interior node, and the
  /// node count never decreases with energy, so the sign flips exactly once.
  double ground_state_side(double e) const {
    const WellTrial t(well_, k_perp_, e);
    if (!t.bound()) return std::numeric_limits<double>::quiet_NaN();
    bool node = false;
    const auto y = integrate(t, [&node](double, const State& s) { node = node || s[0] < 0.0; });
    return !node && defect(t, y) > 0.0 ? 1.0 : -1.0;
  }

  template <typename Observer>
  State integrate(const WellTrial& t, Observer&& observe) const {
    const double mu = t.mu_in;
    const double coeff = k_perp_ * k_perp_ / mu - 2.0 * t.energy / kHbarC2;
    auto rhs = [mu, coeff](double, const State& y) -> State {
      return {mu * y[1], coeff * y[0], y[0] * y[0]};
    };
    const State start{1.0, std::sqrt(t.kappa2_left) / t.mu_left, 0.0};
    return numerics::rk4_integrate(rhs, -0.5 * well_.width, 0.5 * well_.width, start, steps_,
                                   observe);
  }

  static double defect(const WellTrial& t, const State& y) {
    const double a = t.mu_right * y[1];
    const double b = std::sqrt(t.kappa2_right) * y[0];
    const double scale = std::abs(a) + std::abs(b);
    return scale > 0.0 ? (a + b) / scale : 0.0;
  }

 private:
  WellSpec well_;
  double k_perp_;
  std::size_t steps_;
};

}  // namespace detail

/// Interface masses m c^2 at E0: outside-left, inside, outside-right.
struct InterfaceMasses {
  double left_out, inside, right_out;
};

inline InterfaceMasses interface_masses(const WellSpec& well, double e0) {
  return {relativistic_mass_energy(e0, well.v_left), relativistic_mass_energy(e0, 0.0),
          relativistic_mass_energy(e0, well.v_right)};
}

/// |Delta| = k (hbar^2/2) { |psi|^2(-a/2) [1/m(-a/2+) - 1/m(-a/2-)]
///                        + |psi|^2(a/2)  [1/m(a/2+)  - 1/m(a/2-)] }
inline double well_soe(const BoundStateResult& result, const WellSpec& well, double k_perp) {
  const auto m = interface_masses(well, result.e0);
  // 1/m_in - 1/m_out written without subtracting nearly equal reciprocals.
  const double jump_left = (m.left_out - m.inside) / (m.inside * m.left_out);
  const double jump_right = (m.inside - m.right_out) / (m.inside * m.right_out);
  const double s = result.psi_sq_left_iface * jump_left + result.psi_sq_right_iface * jump_right;
  return std::abs(k_perp * 0.5 * kHbarC2 * s);
}

/// Piecewise-constant 1/m(z) profile; its derivative is a sum of point
/// masses at the breakpoints.
struct InverseMassProfile {
  std::vector<double> breakpoints;  // ascending
  std::vector<double> values;       // values.size() == breakpoints.size() + 1

  template <typename Density>
  double integrate_derivative(Density&& density) const {
    double acc = 0.0;
    for (std::size_t i = 0; i < breakpoints.size(); ++i) {
      const double jump = values[i + 1] - values[i];
      acc += jump * density(breakpoints[i]);
    }
    return acc;
  }
};

/// k (hbar^2/2) <psi| d/dz (1/m) |psi>, with the derivative of the step
/// profile taken as a distribution and |psi|^2 read from the solved state.
inline double soe_integral_form(const BoundStateResult& result, const WellSpec& well,
                                double k_perp) {
  const auto m = interface_masses(well, result.e0);
  const InverseMassProfile profile{{-0.5 * well.width, 0.5 * well.width},
                                   {1.0 / m.left_out, 1.0 / m.inside, 1.0 / m.right_out}};
  // Jumps are formed from reciprocals here; at bound-state energies the
  // reciprocals differ by >= 1e-6 relative, well inside double precision.
  const double expectation =
      profile.integrate_derivative([&](double z) { return result.psi_at(z) * result.psi_at(z); });
  return std::abs(k_perp * 0.5 * kHbarC2 * expectation);
}

/// Relative jump of (1/m) dpsi/dz across each interface, from the grid value
/// inside and the analytic tail outside.
inline std::array<double, 2> interface_flux_jumps(const BoundStateResult& r,
                                                  const WellSpec& well) {
  const auto m = interface_masses(well, r.e0);
  const double left_tail = r.kappa_left * r.psi.front() / m.left_out;
  const double right_tail = -r.kappa_right * r.psi.back() / m.right_out;
  auto rel = [](double a, double b) {
    const double s = std::max(std::abs(a), std::abs(b));
    return s > 0.0 ? std::abs(a - b) / s : 0.0;
  };
  return {rel(r.flux.front(), left_tail), rel(r.flux.back(), right_tail)};
}

/// Ground state of
///   [-(hbar^2/2) d/dz (1/m) d/dz + hbar^2 k^2 / 2m(z) + V(z) - E] psi = 0
/// with m(z) from the relativistic mass at the trial energy.  Shooting from
/// the left interface; a uniform scan finds the first trial energy above the
/// ground state (see WellShooter::ground_state_side) and bisection closes the
/// bracket.  Plain sign changes of the matching defect are not used for the
/// bracket: in deep wells one scan interval can hold several levels.
inline BoundStateResult solve_bound_state(const WellSpec& well, double k_perp,
                                          const WellSolverOptions& opt = {}) {
  well.validate();
  if (!(k_perp >= 0.0)) throw error(errc::invalid_input, "k_perp must be >= 0");
  if (opt.steps < 2 || opt.scan_points < 2)
    throw error(errc::invalid_input, "solver needs at least two steps and two scan points");
  const double v_min = std::min(well.v_left, well.v_right);
  if (std::max(well.v_left, well.v_right) >= 2.0 * kRestEnergy)
    throw error(errc::klein_regime, "barrier offsets must stay below 2 m0c^2");

  const detail::WellShooter shooter(well, k_perp, opt.steps);
  const double transverse_floor = kHbarC2 * k_perp * k_perp / (2.0 * kRestEnergy);
  const double e_hi = 0.999 * v_min + transverse_floor;
  const double e_lo = 1e-9 * e_hi;

  auto f = [&](double e) { return shooter.ground_state_side(e); };
  const auto bracket = numerics::first_sign_change(f, e_lo, e_hi, opt.scan_points);
  if (!bracket) throw error(errc::no_bound_state, "no bound level below the barriers");
  const auto root = numerics::bisect(f, *bracket, opt.energy_tol, opt.max_iterations);

  BoundStateResult r;
  r.e0 = root.x;
  r.iterations = root.iterations;
  const detail::WellTrial t(well, k_perp, r.e0);
  r.kappa_left = std::sqrt(t.kappa2_left);
  r.kappa_right = std::sqrt(t.kappa2_right);
  r.grid.reserve(opt.steps + 1);
  r.psi.reserve(opt.steps + 1);
  r.flux.reserve(opt.steps + 1);
  const auto end = shooter.integrate(t, [&](double z, const detail::WellShooter::State& y) {
    r.grid.push_back(z);
    r.psi.push_back(y[0]);
    r.flux.push_back(y[1]);
  });
  r.residual = std::abs(detail::WellShooter::defect(t, end));

  const double psi_l = r.psi.front(), psi_r = r.psi.back();
  const double norm = end[2] + psi_l * psi_l / (2.0 * r.kappa_left) +
                      psi_r * psi_r / (2.0 * r.kappa_right);
  const double scale = 1.0 / std::sqrt(norm);
  for (auto& v : r.psi) v *= scale;
  for (auto& v : r.flux) v *= scale;
  r.psi_sq_left_iface = r.psi.front() * r.psi.front();
  r.psi_sq_right_iface = r.psi.back() * r.psi.back();
  r.delta = well_soe(r, well, k_perp);
  return r;
}

/// Two-column dump (z [cm], psi [cm^-1/2]) including `tail_lengths` decay
/// lengths of analytic tail on each side.
inline void write_wavefunction(std::ostream& os, const BoundStateResult& r, const WellSpec& well,
                               double k_perp, double tail_lengths = 3.0,
                               std::size_t tail_points = 100) {
  os << "# bound state of asymmetric well: width=" << well.width << " cm v_left=" << well.v_left
     << " eV v_right=" << well.v_right << " eV k_perp=" << k_perp << " 1/cm\n";
  os << "# e0_ev=" << r.e0 << " delta_ev=" << r.delta << "\n";
  os << "# z_cm psi_cm^-1/2\n";
  const auto old = os.precision(12);
  const double zl = r.grid.front(), zr = r.grid.back();
  for (std::size_t i = tail_points; i > 0; --i) {
    const double z = zl - tail_lengths / r.kappa_left * static_cast<double>(i) / tail_points;
    os << z << ' ' << r.psi_at(z) << '\n';
  }
  for (std::size_t i = 0; i < r.grid.size(); ++i) os << r.grid[i] << ' ' << r.psi[i] << '\n';
  for (std::size_t i = 1; i <= tail_points; ++i) {
    const double z = zr + tail_lengths / r.kappa_right * static_cast<double>(i) / tail_points;
    os << z << ' ' << r.psi_at(z) << '\n';
  }
  os.precision(old);
}

}  // namespace relspin

#endif
