#include <gtest/gtest.h>

#include <cmath>
#include <array>
#include <random>
#include <utility>

#include "relspin/dispersion.hpp"
#include "relspin/soc.hpp"

namespace relspin {
namespace {

constexpr double kx3 = 1e10, kz3 = 5e9, vb3 = 6e4;

// Textbook quadratic-formula root in extended precision; independent of the
// cancellation-free form in the library.
double energy_oracle(double kx, double kz, double delta) {
  const long double mc2 = kRestEnergy, hc = kHbarC;
  const long double b = 2 * mc2 - delta;
  const long double c = 2 * mc2 * delta + hc * hc * ((long double)kx * kx + (long double)kz * kz);
  return static_cast<double>((-b + std::sqrt(b * b + 4 * c)) / 2);
}

double rel(double a, double b) { return std::abs(a - b) / std::abs(b); }

TEST(EnergyFromK, ReferencePointRoot) {
  const double delta = barrier_soe(kx3, vb3, 1e-9);
  const double e = energy_from_k_rel(kx3, kz3, delta);
  EXPECT_NEAR(e, 45805.49774069653, 1e-6);
  EXPECT_NEAR(e, energy_oracle(kx3, kz3, delta), 1e-9);
  // A delta of 223.65 eV gives the same root within a fraction of an eV.
  EXPECT_NEAR(energy_from_k_rel(kx3, kz3, 223.65), 45805.47, 0.01);
}

// The usual nonrelativistic estimate of 4.76e4 eV is the kinetic term
// alone; adding the splitting gives 4.785e4.
TEST(EnergyFromK, BelowNonrelativisticEstimate) {
  EXPECT_NEAR(energy_from_k_nonrel(kx3, kz3, 0.0), 4.76e4, 50.0);
  const double nonrel = energy_from_k_nonrel(kx3, kz3, 223.65);
  EXPECT_NEAR(nonrel, 47848.43, 0.01);
  EXPECT_LT(energy_from_k_rel(kx3, kz3, 223.65), nonrel);
}

TEST(EnergyFromK, ZeroMomentumZeroSplitting) {
  EXPECT_EQ(energy_from_k_rel(0.0, 0.0, 0.0), 0.0);
  EXPECT_EQ(energy_from_k_rel(0.0, 0.0, 5.0), 5.0);
}

TEST(EnergyFromK, InvalidInputs) {
  EXPECT_THROW(energy_from_k_rel(1e9, 1e9, -1.0), error);
  EXPECT_THROW(energy_from_k_rel(NAN, 1e9, 0.0), error);
}

TEST(WaveVectors, ReferencePointValues) {
  const double delta = barrier_soe(kx3, vb3, 1e-9);
  const double e = energy_from_k_rel(kx3, kz3, delta);
  const auto wv = wave_vectors_rel(e, delta, kx3, vb3);
  EXPECT_NEAR(wv.kz.value.real(), kz3, 1e-12 * kz3);
  EXPECT_NEAR(wv.kz_prime.value.real(), 5121210455.204915, 1e-3);
  EXPECT_EQ(wv.qz.kind, WaveKind::Evanescent);
  EXPECT_EQ(wv.qz_prime.kind, WaveKind::Evanescent);
  EXPECT_LT(rel(wv.qz.value.imag(), 11718257928.078035), 1e-12);
  EXPECT_LT(rel(wv.qz_prime.value.imag(), 11668749126.84692), 1e-12);
  EXPECT_EQ(wv.qz.value.real(), 0.0);
}

TEST(WaveVectors, DegenerateAtZeroSplittingAndNormalIncidence) {
  const double e = 300.0;
  const auto wv = wave_vectors_rel(e, 0.0, 0.0, 1e3);
  const double expected = std::sqrt(e * (e + 2.0 * kRestEnergy)) / kHbarC;
  EXPECT_LT(rel(wv.kz.value.real(), expected), 1e-14);
  EXPECT_EQ(wv.kz.value, wv.kz_prime.value);
  EXPECT_EQ(wv.qz.value, wv.qz_prime.value);
}

TEST(WaveVectors, PropagatingTransmissionAboveBarrier) {
  const auto wv = wave_vectors_rel(5e3, 1.0, 1e8, 1e3);
  EXPECT_TRUE(wv.qz.propagating());
  EXPECT_TRUE(wv.qz_prime.propagating());
  EXPECT_GT(wv.qz.value.real(), 0.0);
}

TEST(WaveVectors, Errors) {
  try {
    wave_vectors_rel(10.0, 0.0, 1e10, 100.0);
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::evanescent_incident);
  }
  try {
    wave_vectors_rel(10.0, 0.0, 1e6, 1.1e6);
    FAIL();
  } catch (const error& e) {
    EXPECT_EQ(e.code(), errc::klein_regime);
  }
  EXPECT_THROW(wave_vectors_rel(10.0, -1.0, 1e6, 100.0), error);
}

TEST(WaveVectors, NonrelativisticExample) {
  const auto r = wave_vectors_rel(100.0, 1e-3, 1e6, 200.0);
  const auto n = wave_vectors_nonrel(100.0, 1e-3, 1e6, 200.0);
  EXPECT_LT(rel(n.kz.magnitude(), r.kz.magnitude()), 1e-3);
  EXPECT_LT(rel(n.kz_prime.magnitude(), r.kz_prime.magnitude()), 1e-3);
  EXPECT_LT(rel(n.qz.magnitude(), r.qz.magnitude()), 1e-3);
  EXPECT_LT(rel(n.qz_prime.magnitude(), r.qz_prime.magnitude()), 1e-3);
}

TEST(WaveVectors, RoundTripRandom) {
  std::mt19937_64 rng(1);
  std::uniform_real_distribution<double> lk(7.0, 10.5), ratio(-1.0, 1.0), ld(-4.0, 2.5);
  for (int n = 0; n < 2000; ++n) {
    const double kz = std::pow(10.0, lk(rng));
    const double kx = kz * std::pow(10.0, ratio(rng));
    const double delta = std::pow(10.0, ld(rng));
    const double e = energy_from_k_rel(kx, kz, delta);
    const auto wv = wave_vectors_rel(e, delta, kx, 0.5 * e);
    ASSERT_LT(rel(wv.kz.value.real(), kz), 1e-12) << kx << ' ' << kz << ' ' << delta;
  }
}

TEST(WaveVectors, SplitChannelIsFaster) {
  std::mt19937_64 rng(2);
  std::uniform_real_distribution<double> le(1.0, 5.0), ld(-3.0, 1.0), f(0.0, 0.9);
  for (int n = 0; n < 1000; ++n) {
    const double e = std::pow(10.0, le(rng));
    const double delta = std::pow(10.0, ld(rng)) * 1e-3 * e;
    const double kmax = std::sqrt((e - delta) * (e + 2 * kRestEnergy)) / kHbarC;
    const double kx = f(rng) * kmax;
    const auto wv = wave_vectors_rel(e, delta, kx, 2.0 * e);
    ASSERT_GT(wv.kz_prime.value.real(), wv.kz.value.real());
  }
}

// k'^2 - k^2 is set by the splitting alone: 4 m0 delta / hbar^2 in the
// nonrelativistic module, 2 delta (E + 2 m0c^2) / (hbar c)^2 relativistically.
TEST(WaveVectors, SplittingIdentity) {
  std::mt19937_64 rng(3);
  std::uniform_real_distribution<double> le(0.0, 5.0), f(0.0, 0.9);
  for (int n = 0; n < 1000; ++n) {
    const double e = std::pow(10.0, le(rng));
    const double delta = f(rng) * 0.1 * e;
    const double kx = f(rng) * std::sqrt((e - delta) * 2 * kRestEnergy) / kHbarC;
    const auto nr = wave_vectors_nonrel(e, delta, kx, 3.0 * e);
    const double lhs = std::norm(nr.kz_prime.value) - std::norm(nr.kz.value);
    const double rhs = 4.0 * kRestEnergy * delta / kHbarC2;
    ASSERT_LT(std::abs(lhs - rhs), 8 * 2.3e-16 * (std::norm(nr.kz_prime.value) + rhs));
    const auto r = wave_vectors_rel(e, delta, kx, 3.0 * e);
    const double lr = std::norm(r.kz_prime.value) - std::norm(r.kz.value);
    const double rr = 2.0 * delta * (e + 2.0 * kRestEnergy) / kHbarC2;
    ASSERT_LT(std::abs(lr - rr), 8 * 2.3e-16 * (std::norm(r.kz_prime.value) + rr));
  }
}

// Channel by channel, k^2_rel - k^2_nonrel = (E -+ D - V)(E - V) / (hc)^2
// exactly, so the relative error is (E - V)/(2 m0c^2) times the ratio of
// the kinetic scale (E -+ D - V) 2 m0c^2 / (hc)^2 to k^2.  That ratio blows
// up at channel thresholds; where it stays below 2 the 1e-3 bound holds.
TEST(WaveVectors, NonrelativisticReduction) {
  std::mt19937_64 rng(4);
  const double cap = 1e-3 * 2.0 * kRestEnergy;
  const double f = 2.0 * kRestEnergy / kHbarC2;
  std::uniform_real_distribution<double> u(0.0, 1.0);
  int tested = 0, guarded = 0;
  while (tested < 2000) {
    const double e = cap * u(rng), vb = cap * u(rng), delta = e * u(rng);
    const double kx = u(rng) * std::sqrt((e - delta) * f);
    if (!(vb > 0.0) || !(e > delta) || !((e - delta) * f - kx * kx > 0.0)) continue;
    ++tested;
    const auto r = wave_vectors_rel(e, delta, kx, vb);
    const auto n = wave_vectors_nonrel(e, delta, kx, vb);
    const std::array<std::pair<double, double>, 4> eps_v{
        {{e - delta, 0.0}, {e + delta, 0.0}, {e - delta - vb, vb}, {e + delta - vb, vb}}};
    const std::array<std::pair<WaveVector, WaveVector>, 4> ch{
        {{r.kz, n.kz}, {r.kz_prime, n.kz_prime}, {r.qz, n.qz}, {r.qz_prime, n.qz_prime}}};
    bool clear = true;
    for (std::size_t c = 0; c < 4; ++c) {
      const auto [eps, v] = eps_v[c];
      const double k2r = std::norm(ch[c].first.value) * (ch[c].first.propagating() ? 1 : -1);
      const double k2n = std::norm(ch[c].second.value) * (ch[c].second.propagating() ? 1 : -1);
      const double diff = eps * (e - v) / kHbarC2;
      ASSERT_NEAR(k2r - k2n, diff, 1e-9 * (std::abs(k2r) + kx * kx + std::abs(eps) * f));
      clear = clear && std::abs(k2r) >= 0.5 * std::abs(eps) * f;
    }
    if (!clear) continue;
    ++guarded;
    for (const auto& [a, b] : ch) {
      ASSERT_EQ(a.kind, b.kind);
      ASSERT_LT(rel(b.magnitude(), a.magnitude()), 1e-3) << e << ' ' << vb << ' ' << delta;
    }
  }
  EXPECT_GT(guarded, 20);
}

TEST(WaveVectors, NonrelativisticReductionOnSpecialisedInput) {
  // normal incidence: no transverse cancellation in any channel
  const auto r = wave_vectors_rel(1000.0, 5.0, 0.0, 300.0);
  const auto n = wave_vectors_nonrel(1000.0, 5.0, 0.0, 300.0);
  EXPECT_LT(rel(n.kz.magnitude(), r.kz.magnitude()), 1e-3);
  EXPECT_LT(rel(n.qz_prime.magnitude(), r.qz_prime.magnitude()), 1e-3);
}

TEST(Angles, ReferencePoint) {
  const auto ang = reflection_angles(kx3, kz3, 5121210455.204915);
  EXPECT_NEAR(ang.alpha_deg, 63.43494882292201, 1e-10);
  EXPECT_NEAR(ang.alpha_prime_deg, 62.88205890828292, 1e-10);
  EXPECT_NEAR(ang.difference_deg(), 0.55288991463909, 1e-10);
}

TEST(Angles, RoundedSplitWaveVector) {
  const auto ang = reflection_angles(kx3, kz3, 5.125e9);
  EXPECT_NEAR(ang.alpha_prime_deg, 62.87, 0.05);
}

TEST(Angles, NormalIncidence) {
  const auto ang = reflection_angles(0.0, 1e9, 1.1e9);
  EXPECT_EQ(ang.alpha_deg, 0.0);
  EXPECT_EQ(ang.alpha_prime_deg, 0.0);
}

TEST(Angles, RejectsEvanescentChannel) {
  EXPECT_THROW(reflection_angles(1e9, 0.0, 1e9), error);
  WaveVectorSet wv{WaveVector::from_squared(1e18), WaveVector::from_squared(-1e18),
                   WaveVector::from_squared(-1.0), WaveVector::from_squared(-1.0)};
  EXPECT_THROW(reflection_angles(1e9, wv), error);
}

TEST(WaveVector, BranchConvention) {
  const auto w = WaveVector::from_squared(-4.0);
  EXPECT_EQ(w.value, complex(0.0, 2.0));
  EXPECT_FALSE(w.propagating());
  // exp(i q z) decays for z > 0
  EXPECT_LT(std::abs(std::exp(complex(0.0, 1.0) * w.value * 1.0)), 1.0);
}

}  // namespace
}  // namespace relspin
