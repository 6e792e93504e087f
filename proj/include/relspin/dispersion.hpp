#ifndef RELSPIN_DISPERSION_HPP
#define RELSPIN_DISPERSION_HPP

#include <cmath>

#include "relspin/core.hpp"

namespace relspin {

enum class WaveKind { Propagating, Evanescent };

inline const char* to_string(WaveKind k) noexcept {
  return k == WaveKind::Propagating ? "Propagating" : "Evanescent";
}

/// A z wave vector.  Propagating values are real and positive; evanescent
/// values are +i*kappa so that exp(i q z) decays for z > 0.
struct WaveVector {
  complex value{};
  WaveKind kind = WaveKind::Propagating;

  bool propagating() const noexcept { return kind == WaveKind::Propagating; }
  double magnitude() const noexcept { return std::abs(value); }

  static WaveVector from_squared(double k2) noexcept {
    if (k2 > 0.0) return {complex(std::sqrt(k2), 0.0), WaveKind::Propagating};
    return {complex(0.0, std::sqrt(-k2)), WaveKind::Evanescent};
  }
};

/// kz / kz_prime: effective spin-up / spin-down channels left of the step.
/// qz / qz_prime: the same channels inside the barrier.
struct WaveVectorSet {
  WaveVector kz;
  WaveVector kz_prime;
  WaveVector qz;
  WaveVector qz_prime;
};

struct SoeContext {
  double delta = 0.0;  // half of the spin splitting [eV]

  void validate() const {
    if (!(delta >= 0.0)) throw error(errc::invalid_input, "spin-orbit energy must be >= 0");
  }
};

namespace detail {

inline void check_channel_inputs(double energy, double delta, double vb) {
  SoeContext{delta}.validate();
  if (!std::isfinite(energy)) throw error(errc::invalid_input, "energy must be finite");
  require_klein_guard(energy, vb);
}

inline WaveVectorSet classify(double kz2, double kzp2, double qz2, double qzp2) {
  if (!(kz2 > 0.0))
    throw error(errc::evanescent_incident, "no propagating incident wave at this E, delta, kx");
  return {WaveVector::from_squared(kz2), WaveVector::from_squared(kzp2),
          WaveVector::from_squared(qz2), WaveVector::from_squared(qzp2)};
}

}  // namespace detail

/// Relativistic channel wave vectors:
///   kz^2  = [(E - D)(E + 2mc^2) - (hc kx)^2] / (hc)^2
///   kz'^2 = [(E + D)(E + 2mc^2) - (hc kx)^2] / (hc)^2
///   qz^2  = [(E - D - Vb)(E - Vb + 2mc^2) - (hc kx)^2] / (hc)^2
///   qz'^2 = [(E + D - Vb)(E - Vb + 2mc^2) - (hc kx)^2] / (hc)^2
inline WaveVectorSet wave_vectors_rel(double energy, double delta, double kx, double vb) {
  detail::check_channel_inputs(energy, delta, vb);
  const double ee = energy + 2.0 * kRestEnergy;
  const double ev = energy - vb + 2.0 * kRestEnergy;
  const double kx2 = kx * kx;
  return detail::classify(((energy - delta) * ee) / kHbarC2 - kx2,
                          ((energy + delta) * ee) / kHbarC2 - kx2,
                          ((energy - delta - vb) * ev) / kHbarC2 - kx2,
                          ((energy + delta - vb) * ev) / kHbarC2 - kx2);
}

/// Nonrelativistic channels: k^2 = (E -+ D - V) 2 m0 / hbar^2 - kx^2.
inline WaveVectorSet wave_vectors_nonrel(double energy, double delta, double kx, double vb) {
  detail::check_channel_inputs(energy, delta, vb);
  const double f = 2.0 * kRestEnergy / kHbarC2;
  const double kx2 = kx * kx;
  return detail::classify((energy - delta) * f - kx2, (energy + delta) * f - kx2,
                          (energy - delta - vb) * f - kx2, (energy + delta - vb) * f - kx2);
}

/// Energy of the effective spin-up branch with wave vector (kx, kz): the
/// positive root of (E - D)(E + 2mc^2) = (hc k)^2.
inline double energy_from_k_rel(double kx, double kz, double delta) {
  SoeContext{delta}.validate();
  if (!std::isfinite(kx) || !std::isfinite(kz))
    throw error(errc::invalid_input, "wave vector components must be finite");
  if (!(delta < 2.0 * kRestEnergy)) throw error(errc::invalid_input, "delta exceeds 2 m0c^2");
  // E^2 + b E - c = 0 with b > 0, c >= 0; the cancellation-free form of the
  // positive root is 2c / (b + sqrt(b^2 + 4c)).
  const double b = 2.0 * kRestEnergy - delta;
  const double c = 2.0 * kRestEnergy * delta + kHbarC2 * (kx * kx + kz * kz);
  return 2.0 * c / (b + std::sqrt(b * b + 4.0 * c));
}

/// E = (hbar k)^2 / 2 m0 + D.
inline double energy_from_k_nonrel(double kx, double kz, double delta) {
  SoeContext{delta}.validate();
  return kHbarC2 * (kx * kx + kz * kz) / (2.0 * kRestEnergy) + delta;
}

struct ReflectionAngles {
  double alpha_deg = 0.0;        // spin-conserving outgoing angle
  double alpha_prime_deg = 0.0;  // spin-flip outgoing angle

  double difference_deg() const noexcept { return alpha_deg - alpha_prime_deg; }
};

/// Angles to the barrier normal, arccot(kz/kx) evaluated as atan(kx/kz).
inline ReflectionAngles reflection_angles(double kx, double kz, double kz_prime) {
  if (!(kz > 0.0) || !(kz_prime > 0.0))
    throw error(errc::not_propagating, "reflection angles need real positive kz and kz'");
  return {to_degrees(std::atan(kx / kz)), to_degrees(std::atan(kx / kz_prime))};
}

inline ReflectionAngles reflection_angles(double kx, const WaveVectorSet& wv) {
  if (!wv.kz.propagating() || !wv.kz_prime.propagating())
    throw error(errc::not_propagating, "reflected channels are not propagating");
  return reflection_angles(kx, wv.kz.value.real(), wv.kz_prime.value.real());
}

}  // namespace relspin

#endif
