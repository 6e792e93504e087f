#ifndef RELSPIN_VERIFY_HPP
#define RELSPIN_VERIFY_HPP

#include <algorithm>
#include <array>
#include <cmath>
#include <numbers>
#include <ostream>
#include <utility>
#include <vector>

#include "relspin/core.hpp"
#include "relspin/dispersion.hpp"
#include "relspin/reflection.hpp"
#include "relspin/rk4.hpp"
#include "relspin/soc.hpp"

namespace relspin {

/// Relative difference of each numerically extracted amplitude from its
/// closed-form step value (absolute difference where the closed form is 0).
struct AmplitudeDeviation {
  double R = 0.0, R_prime = 0.0, T = 0.0, T_prime = 0.0;
  double P = 0.0, P_prime = 0.0, F = 0.0, F_prime = 0.0;

  double max_spin_up() const noexcept { return std::max({R, R_prime, T, T_prime}); }
  double max_spin_down() const noexcept { return std::max({P, P_prime, F, F_prime}); }
};

struct OracleResult {
  AmplitudeSet amplitudes;
  double slope_width = 0.0;
  AmplitudeDeviation deviation;
};

namespace detail {

inline double relative_deviation(complex numeric, complex exact) {
  const double d = std::abs(numeric - exact);
  const double s = std::abs(exact);
  return s > 0.0 ? d / s : d;
}

inline AmplitudeDeviation compare(const AmplitudeSet& n, const AmplitudeSet& e) {
  return {relative_deviation(n.R, e.R),         relative_deviation(n.R_prime, e.R_prime),
          relative_deviation(n.T, e.T),         relative_deviation(n.T_prime, e.T_prime),
          relative_deviation(n.P, e.P),         relative_deviation(n.P_prime, e.P_prime),
          relative_deviation(n.F, e.F),         relative_deviation(n.F_prime, e.F_prime)};
}

// Coupled two-component system on the ramp, in the effective-spin energy
// model (E -+ delta on the (1,1)/(1,-1) channels):
//   -(hc^2/2) d/dz[(1/mu) psi'] + (hc^2/2)(d/dz 1/mu) kx sigma_y psi
//       + [hc^2 kx^2 / 2mu + V + delta sigma_x - E] psi = 0.
// With Pi = (psi' - kx sigma_y psi)/mu both psi and Pi are continuous and
//   psi' = mu Pi + kx sigma_y psi,
//   Pi'  = -kx sigma_y Pi + (2/hc^2) [(V - E) psi + delta sigma_x psi].
// No derivative of the mass appears, so the ramp needs no special treatment.
class CoupledSystem {
 public:
  using State = std::array<complex, 4>;  // psi_up, psi_low, Pi_up, Pi_low

  CoupledSystem(double energy, double delta, double kx, SlopedBarrier barrier)
      : e_(energy), delta_(delta), kx_(kx), b_(barrier) {}

  double potential(double z) const {
    const double h = 0.5 * b_.a;
    if (z <= -h) return 0.0;
    if (z >= h) return b_.vb;
    return b_.vb * (z / b_.a + 0.5);
  }

  double mu(double z) const { return relativistic_mass_energy(e_, potential(z)); }

  State operator()(double z, const State& y) const {
    const complex i(0.0, 1.0);
    const double m = mu(z);
    const double g = 2.0 / kHbarC2;
    const double w = potential(z) - e_;
    // sigma_y (a, b) = (-i b, i a); sigma_x (a, b) = (b, a)
    return {m * y[2] + kx_ * (-i * y[1]), m * y[3] + kx_ * (i * y[0]),
            -kx_ * (-i * y[3]) + g * (w * y[0] + delta_ * y[1]),
            -kx_ * (i * y[2]) + g * (w * y[1] + delta_ * y[0])};
  }

  State state_from(double z, const Spinor& psi, const Spinor& dpsi) const {
    const complex i(0.0, 1.0);
    const double m = mu(z);
    return {psi[0], psi[1], (dpsi[0] - kx_ * (-i * psi[1])) / m,
            (dpsi[1] - kx_ * (i * psi[0])) / m};
  }

  SpinorJet jet(double z, const State& y) const {
    const complex i(0.0, 1.0);
    const double m = mu(z);
    return {{y[0], y[1]}, {m * y[2] + kx_ * (-i * y[1]), m * y[3] + kx_ * (i * y[0])}};
  }

 private:
  double e_, delta_, kx_;
  SlopedBarrier b_;
};

// Incoming/outgoing plane-wave coefficients of both channels on the left.
struct LeftDecomposition {
  complex in_up, out_up, in_down, out_down;
};

inline LeftDecomposition decompose_left(const SpinorJet& j, double z, complex kz, complex kzp) {
  const complex i(0.0, 1.0);
  const complex f = 0.5 * (j.value[0] + j.value[1]);
  const complex fd = 0.5 * (j.derivative[0] + j.derivative[1]);
  const complex h = 0.5 * (j.value[0] - j.value[1]);
  const complex hd = 0.5 * (j.derivative[0] - j.derivative[1]);
  return {0.5 * (f + fd / (i * kz)) * std::exp(-i * kz * z),
          0.5 * (f - fd / (i * kz)) * std::exp(i * kz * z),
          0.5 * (h + hd / (i * kzp)) * std::exp(-i * kzp * z),
          0.5 * (h - hd / (i * kzp)) * std::exp(i * kzp * z)};
}

inline void check_resolution(double h, double kmax) {
  if (std::abs(h) * kmax > 2.0 * std::numbers::pi / 10.0)
    throw error(errc::stiff_failure,
                "fewer than 10 RK4 steps per shortest wavelength/decay length; raise the step count");
}

}  // namespace detail

/// Decay-length based integration window: the ramp plus two decay lengths of
/// the slowest channel on each side.
inline double default_z_span(double slope_width, const WaveVectorSet& wv) {
  const double kmin = std::min({wv.kz.magnitude(), wv.kz_prime.magnitude(), wv.qz.magnitude(),
                                wv.qz_prime.magnitude()});
  return slope_width + (kmin > 0.0 ? 4.0 / kmin : 0.0);
}

/// Integrates the coupled system across a ramp of width barrier.a from
/// z = +z_span/2 (pure barrier-side channel solutions) to z = -z_span/2 and
/// extracts the reflection/transmission amplitudes of both incident channels.
/// Each of the three segments (barrier side, ramp, free side) gets `steps`
/// RK4 steps so the kinks of the ramp fall on grid points.
inline OracleResult integrate_coupled(double energy, double delta, double kx,
                                      const SlopedBarrier& barrier, double z_span,
                                      std::size_t steps) {
  barrier.validate();
  require_klein_guard(energy, barrier.vb);
  if (!(z_span >= barrier.a)) throw error(errc::invalid_input, "z_span must cover the slope");
  if (steps < 1) throw error(errc::invalid_input, "steps must be positive");

  const auto wv = wave_vectors_rel(energy, delta, kx, barrier.vb);
  const double kmax = std::max({wv.kz.magnitude(), wv.kz_prime.magnitude(), wv.qz.magnitude(),
                                wv.qz_prime.magnitude(), std::abs(kx)});
  const detail::CoupledSystem sys(energy, delta, kx, barrier);

  const double half = 0.5 * barrier.a;
  const double outer = 0.5 * z_span;
  std::vector<std::pair<double, double>> segments;
  if (outer > half) segments.emplace_back(outer, half);
  segments.emplace_back(half, -half);
  if (outer > half) segments.emplace_back(-half, -outer);
  for (const auto& [z0, z1] : segments) detail::check_resolution((z1 - z0) / steps, kmax);

  const complex i(0.0, 1.0);
  std::array<detail::LeftDecomposition, 2> parts;
  const std::array<std::pair<complex, Spinor>, 2> seeds{
      std::pair<complex, Spinor>{wv.qz.value, {1.0, 1.0}},
      std::pair<complex, Spinor>{wv.qz_prime.value, {1.0, -1.0}}};
  for (std::size_t s = 0; s < 2; ++s) {
    const auto& [q, dir] = seeds[s];
    const complex phase = std::exp(i * q * outer);
    const Spinor psi{dir[0] * phase, dir[1] * phase};
    const Spinor dpsi{i * q * psi[0], i * q * psi[1]};
    auto y = sys.state_from(outer, psi, dpsi);
    for (const auto& [z0, z1] : segments) y = numerics::rk4_integrate(sys, z0, z1, y, steps);
    parts[s] = detail::decompose_left(sys.jet(-outer, y), -outer, wv.kz.value, wv.kz_prime.value);
  }

  // alpha * seed_up + beta * seed_down with a prescribed incoming content.
  const auto& u = parts[0];
  const auto& d = parts[1];
  const complex det = u.in_up * d.in_down - d.in_up * u.in_down;
  auto combine = [&](complex in_up, complex in_down) {
    const complex alpha = (in_up * d.in_down - d.in_up * in_down) / det;
    const complex beta = (u.in_up * in_down - in_up * u.in_down) / det;
    return std::array<complex, 4>{alpha * u.out_up + beta * d.out_up,
                                  alpha * u.out_down + beta * d.out_down, alpha, beta};
  };
  const auto up = combine(1.0, 0.0);
  const auto down = combine(0.0, 1.0);

  OracleResult r;
  const auto params = matching_params(energy, kx, barrier.vb);
  // Spin-down incidence: P is the (1,-1) echo, P' the (1,1) echo, F rides
  // on qz' and F' on qz.
  r.amplitudes = {up[0],   up[1],   up[2],   up[3], down[1], down[0],
                  down[3], down[2], params.coupling()};
  r.slope_width = barrier.a;
  r.deviation = detail::compare(r.amplitudes, step_amplitudes(wv, params.coupling()));
  return r;
}

struct SweepRow {
  double width = 0.0;
  AmplitudeDeviation deviation;
};

/// Oracle deviation from the vertical-step amplitudes for each slope width.
inline std::vector<SweepRow> slope_convergence_sweep(double energy, double delta, double kx,
                                                     double vb, const std::vector<double>& widths,
                                                     std::size_t steps = 2000) {
  if (widths.empty()) throw error(errc::invalid_input, "no slope widths given");
  for (std::size_t n = 0; n < widths.size(); ++n) {
    if (!(widths[n] > 0.0)) throw error(errc::invalid_input, "slope widths must be positive");
    if (n > 0 && !(widths[n] < widths[n - 1]))
      throw error(errc::invalid_input, "slope widths must be strictly decreasing");
  }
  const auto wv = wave_vectors_rel(energy, delta, kx, vb);
  std::vector<SweepRow> rows;
  rows.reserve(widths.size());
  for (const double a : widths) {
    const auto res = integrate_coupled(energy, delta, kx, SlopedBarrier{vb, a},
                                       default_z_span(a, wv), steps);
    rows.push_back({a, res.deviation});
  }
  return rows;
}

inline std::vector<double> default_sweep_widths() { return {1e-9, 1e-10, 1e-11, 1e-12}; }

inline bool monotone_decreasing(const std::vector<SweepRow>& rows) {
  for (std::size_t n = 1; n < rows.size(); ++n)
    if (!(rows[n].deviation.max_spin_up() < rows[n - 1].deviation.max_spin_up())) return false;
  return true;
}

inline void write_sweep_csv(std::ostream& os, const std::vector<SweepRow>& rows) {
  os << "width_cm,dev_R,dev_Rp,dev_T,dev_Tp\n";
  const auto old = os.precision(10);
  for (const auto& r : rows)
    os << r.width << ',' << r.deviation.R << ',' << r.deviation.R_prime << ',' << r.deviation.T
       << ',' << r.deviation.T_prime << '\n';
  os.precision(old);
}

}  // namespace relspin

#endif
