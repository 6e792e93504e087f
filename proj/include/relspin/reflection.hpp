#ifndef RELSPIN_REFLECTION_HPP
#define RELSPIN_REFLECTION_HPP

#include <algorithm>
#include <cmath>

#include "relspin/core.hpp"
#include "relspin/dispersion.hpp"

namespace relspin {

/// Coupling constants of the step: derivative ratio M = m(0-)/m(0+) and the
/// spin-orbit strength S that mixes the two components at z = 0.
struct StepCoupling {
  double M = 1.0;
  double S = 0.0;  // 1/cm
};

struct MatchingParams {
  double M = 1.0;
  double S = 0.0;    // 1/cm
  double E_E = 0.0;  // E + 2 m0c^2
  double E_V = 0.0;  // E - Vb + 2 m0c^2

  StepCoupling coupling() const noexcept { return {M, S}; }
};

inline MatchingParams matching_params(double energy, double kx, double vb) {
  const double ee = energy + 2.0 * kRestEnergy;
  const double ev = energy - vb + 2.0 * kRestEnergy;
  if (!(ev > 0.0)) throw error(errc::klein_regime, "E - Vb + 2 m0c^2 must be positive");
  return {ee / ev, kx * vb / ev, ee, ev};
}

/// Nonrelativistic step: M = 1 and S = kx Vb / (2 m0c^2).
inline StepCoupling nonrel_coupling(double kx, double vb) {
  return {1.0, kx * vb / (2.0 * kRestEnergy)};
}

/// R, R', T, T' belong to an incident effective spin-up electron; P, P', F,
/// F' to an incident effective spin-down electron (primed = flipped channel).
struct AmplitudeSet {
  complex R, R_prime, T, T_prime;
  complex P, P_prime, F, F_prime;
  StepCoupling coupling;
};

namespace detail {

struct ChannelAmplitudes {
  complex reflected, flipped, transmitted, transmitted_flipped;
};

// Solution of the four step conditions for a wave incident in the channel
// with wave vectors (k_in, q_in); the other channel has (k_out, q_out).
// `s` is the signed coupling seen from the incident channel.
inline ChannelAmplitudes step_solution(complex k_in, complex k_out, complex q_in, complex q_out,
                                       double M, double s) {
  const complex den = (k_in + M * q_in) * (k_out + M * q_out) + s * s;
  const complex flipped = -2.0 * s * k_in / den;
  return {((k_in - M * q_in) * (k_out + M * q_out) - s * s) / den, flipped,
          2.0 * k_in * (k_out + M * q_out) / den, flipped};
}

}  // namespace detail

/// Closed-form amplitudes for a given set of channel wave vectors.
///
/// The spin-up set is the familiar
///   R  = [(kz - M qz)(kz' + M qz') - S^2] / D,   R' = -2 S kz / D,
///   T  = 2 kz (kz' + M qz') / D,                   T' = R',
///   D  = (kz + M qz)(kz' + M qz') + S^2.
/// The spin-down set solves the same conditions for an incident (1,-1) wave:
/// it is the spin-up solution with the channels exchanged and S -> -S.  It
/// reduces to P = R, P' = -R', F = T, F' = -T' only when kz = kz' and
/// qz = qz' (no splitting).
inline AmplitudeSet step_amplitudes(const WaveVectorSet& wv, StepCoupling c) {
  const auto up = detail::step_solution(wv.kz.value, wv.kz_prime.value, wv.qz.value,
                                        wv.qz_prime.value, c.M, c.S);
  const auto down = detail::step_solution(wv.kz_prime.value, wv.kz.value, wv.qz_prime.value,
                                          wv.qz.value, c.M, -c.S);
  return {up.reflected,   up.flipped,      up.transmitted,   up.transmitted_flipped,
          down.reflected, down.flipped,    down.transmitted, down.transmitted_flipped,
          c};
}

inline AmplitudeSet amplitudes_rel(double energy, double delta, double kx, double vb) {
  const auto wv = wave_vectors_rel(energy, delta, kx, vb);
  return step_amplitudes(wv, matching_params(energy, kx, vb).coupling());
}

inline AmplitudeSet amplitudes_nonrel(double energy, double delta, double kx, double vb) {
  const auto wv = wave_vectors_nonrel(energy, delta, kx, vb);
  return step_amplitudes(wv, nonrel_coupling(kx, vb));
}

/// Value and z-derivative of a two-component wavefunction.
struct SpinorJet {
  Spinor value{};
  Spinor derivative{};
};

namespace detail {

inline const Spinor& up_vector() {
  static const Spinor v{1.0, 1.0};
  return v;
}
inline const Spinor& down_vector() {
  static const Spinor v{1.0, -1.0};
  return v;
}

inline void accumulate(SpinorJet& jet, complex amp, complex k, double z, const Spinor& dir) {
  const complex w = amp * std::exp(complex(0.0, 1.0) * k * z);
  for (int i = 0; i < 2; ++i) {
    jet.value[i] += w * dir[i];
    jet.derivative[i] += complex(0.0, 1.0) * k * w * dir[i];
  }
}

// Left (z <= 0) or right (z > 0) branch of the scattering state, without the
// exp(i kx x) factor.  `right` selects the branch independently of z so that
// both one-sided limits at z = 0 are available.
inline SpinorJet branch(const AmplitudeSet& a, const WaveVectorSet& wv, SpinChannel channel,
                        double z, bool right) {
  SpinorJet jet;
  const complex kz = wv.kz.value, kzp = wv.kz_prime.value;
  const complex qz = wv.qz.value, qzp = wv.qz_prime.value;
  if (channel == SpinChannel::EffUp) {
    if (!right) {
      accumulate(jet, 1.0, kz, z, up_vector());
      accumulate(jet, a.R, -kz, z, up_vector());
      accumulate(jet, a.R_prime, -kzp, z, down_vector());
    } else {
      accumulate(jet, a.T, qz, z, up_vector());
      accumulate(jet, a.T_prime, qzp, z, down_vector());
    }
  } else {
    if (!right) {
      accumulate(jet, 1.0, kzp, z, down_vector());
      accumulate(jet, a.P, -kzp, z, down_vector());
      accumulate(jet, a.P_prime, -kz, z, up_vector());
    } else {
      accumulate(jet, a.F, qzp, z, down_vector());
      accumulate(jet, a.F_prime, qz, z, up_vector());
    }
  }
  return jet;
}

}  // namespace detail

/// Scattering state at (x, z) with unit normalisation constant; left branch
/// for z <= 0, barrier branch for z > 0.
inline Spinor reconstruct_wavefunction(const AmplitudeSet& amps, const WaveVectorSet& wv,
                                       SpinChannel channel, double kx, double x, double z) {
  const auto jet = detail::branch(amps, wv, channel, z, z > 0.0);
  const complex phase = std::exp(complex(0.0, kx * x));
  return {phase * jet.value[0], phase * jet.value[1]};
}

/// Relative residuals of the matching conditions at z = 0:
///   psi continuous (upper, lower),
///   psi'_up(0-)  = M psi'_up(0+)  + i S psi_low(0),
///   psi'_low(0-) = M psi'_low(0+) - i S psi_up(0).
struct BoundaryResiduals {
  double continuity_up = 0.0;
  double continuity_low = 0.0;
  double derivative_up = 0.0;
  double derivative_low = 0.0;

  double max() const noexcept {
    return std::max({continuity_up, continuity_low, derivative_up, derivative_low});
  }
};

inline BoundaryResiduals boundary_residuals(const AmplitudeSet& amps, const WaveVectorSet& wv,
                                            StepCoupling c,
                                            SpinChannel channel = SpinChannel::EffUp) {
  const auto left = detail::branch(amps, wv, channel, 0.0, false);
  const auto right = detail::branch(amps, wv, channel, 0.0, true);
  const complex i(0.0, 1.0);

  auto rel = [](complex lhs, complex rhs, double floor) {
    const double scale = std::max({floor, std::abs(lhs), std::abs(rhs)});
    return std::abs(lhs - rhs) / scale;
  };
  const double kscale = std::abs(channel == SpinChannel::EffUp ? wv.kz.value : wv.kz_prime.value);
  const complex up0 = right.value[0], low0 = right.value[1];
  return {rel(left.value[0], right.value[0], 1.0), rel(left.value[1], right.value[1], 1.0),
          rel(left.derivative[0], c.M * right.derivative[0] + i * c.S * low0, kscale),
          rel(left.derivative[1], c.M * right.derivative[1] - i * c.S * up0, kscale)};
}

inline BoundaryResiduals boundary_residuals(const AmplitudeSet& amps, const WaveVectorSet& wv,
                                            const MatchingParams& params,
                                            SpinChannel channel = SpinChannel::EffUp) {
  return boundary_residuals(amps, wv, params.coupling(), channel);
}

/// Angles and probability-current fractions of the outgoing beams for an
/// incident effective spin-up electron.  Same-side channels are weighted by
/// kz'/kz; transmitted channels additionally by the mass ratio M.
struct BeamReport {
  double alpha_deg = 0.0;
  double alpha_prime_deg = 0.0;
  double refl_conserving_fraction = 0.0;
  double refl_flip_fraction = 0.0;
  double transmitted_fraction = 0.0;
  double flux_imbalance = 0.0;
  bool transmission_propagating = false;
};

inline BeamReport beam_report(const WaveVectorSet& wv, const AmplitudeSet& amps, double kx) {
  const auto angles = reflection_angles(kx, wv);
  const double kz = wv.kz.value.real();
  const double kzp = wv.kz_prime.value.real();

  BeamReport r;
  r.alpha_deg = angles.alpha_deg;
  r.alpha_prime_deg = angles.alpha_prime_deg;
  r.refl_conserving_fraction = std::norm(amps.R);
  r.refl_flip_fraction = std::norm(amps.R_prime) * kzp / kz;
  const double M = amps.coupling.M;
  if (wv.qz.propagating()) {
    r.transmitted_fraction += M * wv.qz.value.real() / kz * std::norm(amps.T);
    r.transmission_propagating = true;
  }
  if (wv.qz_prime.propagating()) {
    r.transmitted_fraction += M * wv.qz_prime.value.real() / kz * std::norm(amps.T_prime);
    r.transmission_propagating = true;
  }
  r.flux_imbalance = std::abs(1.0 - (r.refl_conserving_fraction + r.refl_flip_fraction +
                                     r.transmitted_fraction));
  return r;
}

inline BeamReport beam_report(double energy, double delta, double kx, double vb) {
  const auto wv = wave_vectors_rel(energy, delta, kx, vb);
  return beam_report(wv, step_amplitudes(wv, matching_params(energy, kx, vb).coupling()), kx);
}

}  // namespace relspin

#endif
