#include <gtest/gtest.h>

#include <random>

#include "relspin/soc.hpp"

namespace relspin {
namespace {

TEST(BarrierSoe, ReferenceValue) {
  const double d = barrier_soe(1e10, 6e4, 1e-9);
  EXPECT_NEAR(d, 223.65, 0.001 * 223.65);
  // (hc)^2 / (4 (m0c^2)^2) * kx * vb / a, by hand
  EXPECT_NEAR(d, 223.67847021033444, 1e-10);
}

TEST(BarrierSoe, NormalIncidenceAndLinearity) {
  EXPECT_EQ(barrier_soe(0.0, 6e4, 1e-9), 0.0);
  EXPECT_NEAR(barrier_soe(2e10, 6e4, 1e-9), 447.3, 0.1);
  EXPECT_DOUBLE_EQ(barrier_soe(2e10, 6e4, 1e-9), 2.0 * barrier_soe(1e10, 6e4, 1e-9));
}

TEST(BarrierSoe, BilinearAndInverseInWidth) {
  std::mt19937_64 rng(5);
  std::uniform_real_distribution<double> u(0.1, 10.0);
  for (int n = 0; n < 500; ++n) {
    const double kx = 1e9 * u(rng), vb = 1e4 * u(rng), a = 1e-9 * u(rng), s = u(rng);
    const double base = barrier_soe(kx, vb, a);
    EXPECT_NEAR(barrier_soe(s * kx, vb, a), s * base, 4e-16 * s * base);
    EXPECT_NEAR(barrier_soe(kx, s * vb, a), s * base, 4e-16 * s * base);
    EXPECT_NEAR(barrier_soe(kx, vb, 2.0 * a), 0.5 * base, 4e-16 * base);
  }
}

TEST(BarrierSoe, RejectsBadSlope) {
  EXPECT_THROW(barrier_soe(1e10, 6e4, 0.0), error);
  EXPECT_THROW(barrier_soe(1e10, SlopedBarrier{-1.0, 1e-9}), error);
  EXPECT_EQ((SlopedBarrier{6e4, 1e-9}.field_strength()), 6e4 / 1e-9);
}

TEST(SpinStates, OrthonormalEigenstatesOfSigmaX) {
  const auto [up, down] = effective_spin_states();
  EXPECT_NEAR(std::abs(inner(up, up) - 1.0), 0.0, 1e-15);
  EXPECT_NEAR(std::abs(inner(down, down) - 1.0), 0.0, 1e-15);
  EXPECT_EQ(inner(up, down), complex(0.0));
  const auto sx_up = multiply(sigma_x(), up);
  const auto sx_down = multiply(sigma_x(), down);
  for (int i = 0; i < 2; ++i) {
    EXPECT_EQ(sx_up[i], up[i]);
    EXPECT_EQ(sx_down[i], -down[i]);
  }
}

TEST(SpinStates, PauliAlgebra) {
  // sigma_x sigma_y = i sigma_z on both basis vectors
  for (const Spinor v : {Spinor{1.0, 0.0}, Spinor{0.0, 1.0}}) {
    const auto lhs = multiply(sigma_x(), multiply(sigma_y(), v));
    const auto rhs = multiply(sigma_z(), v);
    for (int i = 0; i < 2; ++i) EXPECT_EQ(lhs[i], complex(0.0, 1.0) * rhs[i]);
  }
}

TEST(PerturbedEnergies, Examples) {
  auto p = perturbed_energies(100.0, 0.0);
  EXPECT_EQ(p.e1, 100.0);
  EXPECT_EQ(p.e2, 100.0);
  p = perturbed_energies(4.58e4, 223.65);
  EXPECT_NEAR(p.e1, 4.6024e4, 0.5);
  EXPECT_NEAR(p.e2, 4.5576e4, 0.5);
  p = perturbed_energies(0.0, 1.0);
  EXPECT_EQ(p.e1, 1.0);
  EXPECT_EQ(p.e2, -1.0);
  EXPECT_EQ(p.splitting(), 2.0);
  EXPECT_THROW(perturbed_energies(1.0, -0.5), error);
}

TEST(PerturbedEnergies, SymmetricAboutCentre) {
  std::mt19937_64 rng(6);
  std::uniform_real_distribution<double> u(0.0, 1e4);
  for (int n = 0; n < 200; ++n) {
    const double e0 = u(rng), d = u(rng);
    const auto p = perturbed_energies(e0, d);
    EXPECT_NEAR(p.e1 - e0, e0 - p.e2, 1e-15 * (e0 + d));
    EXPECT_NEAR(0.5 * p.splitting(), d, 1e-15 * (e0 + d));
  }
}

}  // namespace
}  // namespace relspin
