// Spin-conserving and spin-flip reflection from a 6e4 eV barrier whose
// spin-orbit energy comes from a 1e-9 cm slope, for a range of incidence
// angles at fixed normal wave vector.

#include <cstdio>

#include "relspin/relspin.hpp"

int main() {
  using namespace relspin;
  const double kz = 5e9, vb = 6e4, slope = 1e-9;

  std::printf("%10s %10s %10s %10s %10s %10s %10s\n", "kx[1/cm]", "delta[eV]", "E[eV]", "alpha",
              "alpha'", "|R'|/|R|", "flip");
  for (double kx = 1e9; kx <= 1e10 + 1.0; kx += 1e9) {
    const double delta = barrier_soe(kx, vb, slope);
    const double e = energy_from_k_rel(kx, kz, delta);
    const auto wv = wave_vectors_rel(e, delta, kx, vb);
    const auto amps = step_amplitudes(wv, matching_params(e, kx, vb).coupling());
    const auto beam = beam_report(wv, amps, kx);
    std::printf("%10.3g %10.4g %10.6g %10.4f %10.4f %10.5f %10.3e\n", kx, delta, e, beam.alpha_deg,
                beam.alpha_prime_deg, std::abs(amps.R_prime) / std::abs(amps.R),
                beam.refl_flip_fraction);
  }

  // The step amplitudes are the zero-slope limit of the ramp.
  const double delta = barrier_soe(1e10, vb, slope);
  const double e = energy_from_k_rel(1e10, kz, delta);
  std::printf("\nslope width [cm]   max deviation from step amplitudes\n");
  for (const auto& row : slope_convergence_sweep(e, delta, 1e10, vb, default_sweep_widths()))
    std::printf("%16.1e   %.3e\n", row.width, row.deviation.max_spin_up());
}
