#ifndef RELSPIN_CORE_HPP
#define RELSPIN_CORE_HPP

#include <array>
#include <cmath>
#include <complex>
#include <numbers>
#include <optional>
#include <string>
#include <utility>

#include "relspin/error.hpp"

/// Units throughout: energies in eV (rest energy excluded), lengths in cm,
/// wave vectors in 1/cm.  hbar and c only enter through hbar_c and the rest
/// energy m0 c^2.
namespace relspin {

using complex = std::complex<double>;
using Spinor = std::array<complex, 2>;

struct PhysicalConstants {
  static constexpr double rest_energy = 510998.95;   // m0 c^2 [eV]
  static constexpr double hbar_c = 1.973269804e-5;   // [eV cm]
};

inline constexpr double kRestEnergy = PhysicalConstants::rest_energy;
inline constexpr double kHbarC = PhysicalConstants::hbar_c;
inline constexpr double kHbarC2 = kHbarC * kHbarC;

enum class SpinChannel { EffUp, EffDown };

inline const char* to_string(SpinChannel c) noexcept {
  return c == SpinChannel::EffUp ? "EffUp" : "EffDown";
}

struct ElectronState {
  double energy = 0.0;  // eV
  double kx = 0.0;      // 1/cm; ky = 0 by choice of axes
  SpinChannel spin_channel = SpinChannel::EffUp;
};

/// Scattering barrier: V = 0 for z <= 0, vb beyond.  A slope width turns the
/// vertical step into a linear ramp over [-a/2, a/2].
struct BarrierSpec {
  double vb = 0.0;
  std::optional<double> slope_width;

  void validate() const {
    if (!(vb > 0.0)) throw error(errc::invalid_input, "barrier height must be positive");
    if (slope_width && !(*slope_width > 0.0))
      throw error(errc::invalid_input, "slope width must be positive");
  }
};

/// Well of width `width` centred on z = 0 with barrier offsets on each side.
struct WellSpec {
  double width = 0.0;
  double v_left = 0.0;
  double v_right = 0.0;

  bool asymmetric() const noexcept { return v_left != v_right; }

  void validate() const {
    if (!(width > 0.0)) throw error(errc::invalid_input, "well width must be positive");
    if (!(v_left > 0.0) || !(v_right > 0.0))
      throw error(errc::invalid_input, "well barrier offsets must be positive");
  }
};

/// Two-component state a|up> + b|down>.
struct SpinorBasis {
  complex a{1.0, 0.0};
  complex b{0.0, 0.0};

  bool normalized(double tol = 1e-12) const {
    return std::abs(std::norm(a) + std::norm(b) - 1.0) <= tol;
  }

  Spinor spinor() const { return {a, b}; }

  /// Components along the effective states (1,1)/sqrt2 and (1,-1)/sqrt2.
  std::pair<complex, complex> effective_components() const {
    const double r = std::numbers::sqrt2 / 2.0;
    return {r * (a + b), r * (a - b)};
  }

  static SpinorBasis effective(SpinChannel c) {
    const double r = std::numbers::sqrt2 / 2.0;
    return c == SpinChannel::EffUp ? SpinorBasis{r, r} : SpinorBasis{r, -r};
  }
};

inline bool klein_allowed(double energy, double vb) noexcept {
  return vb < 2.0 * kRestEnergy + energy;
}

inline void require_klein_guard(double energy, double vb) {
  if (!klein_allowed(energy, vb))
    throw error(errc::klein_regime, "barrier " + std::to_string(vb) +
                                        " eV reaches 2 m0c^2 + E; Klein regime not supported");
}

/// m(z) c^2 = m0 c^2 [1 + (E - V)/(2 m0 c^2)].
inline double relativistic_mass_energy(double energy, double potential) {
  const double diff = energy - potential;
  if (diff <= -2.0 * kRestEnergy)
    throw error(errc::nonpositive_mass, "E - V <= -2 m0c^2 gives a nonpositive mass");
  return kRestEnergy + 0.5 * diff;
}

inline constexpr double to_degrees(double rad) noexcept { return rad * 180.0 / std::numbers::pi; }
inline constexpr double to_radians(double deg) noexcept { return deg * std::numbers::pi / 180.0; }

}  // namespace relspin

#endif
