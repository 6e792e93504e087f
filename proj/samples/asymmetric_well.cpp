// Ground state of an asymmetric well and its spin-orbit energy as the right
// barrier grows.  Writes the wide-well wavefunction to well_wavefunction.dat.

#include <cstdio>
#include <fstream>

#include "relspin/relspin.hpp"

int main() {
  using namespace relspin;

  const WellSpec wide{1e-8, 1e4, 5e5};
  const double k = 4.7e8;
  const auto r = solve_bound_state(wide, k);
  std::printf("a = %.1e cm: E0 = %.4f eV, delta = %.4e eV (%zu bisection steps)\n", wide.width, r.e0,
              r.delta, r.iterations);
  std::ofstream dump("well_wavefunction.dat");
  write_wavefunction(dump, r, wide, k);

  const WellSpec narrow{1e-9, 1e4, 5e5};
  const auto n = solve_bound_state(narrow, 3.9e9);
  std::printf("a = %.1e cm: E0 = %.4f eV, delta = %.4e eV\n\n", narrow.width, n.e0, n.delta);

  std::printf("%12s %12s %14s\n", "V_r [eV]", "E0 [eV]", "delta [eV]");
  for (double vr : {1e4, 2e4, 5e4, 1e5, 2e5, 5e5}) {
    const auto s = solve_bound_state(WellSpec{1e-8, 1e4, vr}, k);
    std::printf("%12.3g %12.5f %14.5e\n", vr, s.e0, s.delta);
  }
}
