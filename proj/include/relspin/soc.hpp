#ifndef RELSPIN_SOC_HPP
#define RELSPIN_SOC_HPP

#include <array>
#include <numbers>
#include <utility>

#include "relspin/core.hpp"

namespace relspin {

/// Linear ramp from 0 to vb over the width a, centred on z = 0.
struct SlopedBarrier {
  double vb = 0.0;  // eV
  double a = 0.0;   // cm

  double field_strength() const noexcept { return vb / a; }  // dV/dz [eV/cm]

  void validate() const {
    if (!(vb > 0.0)) throw error(errc::invalid_input, "barrier height must be positive");
    if (!(a > 0.0)) throw error(errc::invalid_input, "slope width must be positive");
  }
};

/// Spin-orbit energy of an electron with transverse wave vector kx on the
/// ramp: (hbar c)^2 / (4 (m0c^2)^2) * kx * vb / a.  The z overlap of the
/// state with the ramp is not applied, so this is an upper estimate.
inline double barrier_soe(double kx, double vb, double a) {
  if (!(a > 0.0)) throw error(errc::invalid_input, "slope width must be positive");
  return kHbarC2 / (4.0 * kRestEnergy * kRestEnergy) * kx * (vb / a);
}

inline double barrier_soe(double kx, const SlopedBarrier& barrier) {
  barrier.validate();
  return barrier_soe(kx, barrier.vb, barrier.a);
}

using Matrix2 = std::array<std::array<complex, 2>, 2>;

inline Matrix2 sigma_x() { return {{{0.0, 1.0}, {1.0, 0.0}}}; }
inline Matrix2 sigma_y() { return {{{0.0, complex(0.0, -1.0)}, {complex(0.0, 1.0), 0.0}}}; }
inline Matrix2 sigma_z() { return {{{1.0, 0.0}, {0.0, -1.0}}}; }

inline Spinor multiply(const Matrix2& m, const Spinor& s) {
  return {m[0][0] * s[0] + m[0][1] * s[1], m[1][0] * s[0] + m[1][1] * s[1]};
}

/// <a|b>
inline complex inner(const Spinor& a, const Spinor& b) {
  return std::conj(a[0]) * b[0] + std::conj(a[1]) * b[1];
}

/// Effective spin-up and spin-down states (1,1)/sqrt2 and (1,-1)/sqrt2.
inline std::pair<Spinor, Spinor> effective_spin_states() {
  return {SpinorBasis::effective(SpinChannel::EffUp).spinor(),
          SpinorBasis::effective(SpinChannel::EffDown).spinor()};
}

struct PerturbedEnergies {
  double e1 = 0.0;  // effective spin-up, E0 + delta
  double e2 = 0.0;  // effective spin-down, E0 - delta

  double splitting() const noexcept { return e1 - e2; }
};

/// First-order splitting of a doubly degenerate level: E0 +- |H_so^{ud}|.
inline PerturbedEnergies perturbed_energies(double e0, double delta) {
  if (!(delta >= 0.0)) throw error(errc::invalid_input, "spin-orbit energy must be >= 0");
  return {e0 + delta, e0 - delta};
}

}  // namespace relspin

#endif
