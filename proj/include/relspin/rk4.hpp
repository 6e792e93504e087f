#ifndef RELSPIN_RK4_HPP
#define RELSPIN_RK4_HPP

#include <array>
#include <cstddef>

namespace relspin::numerics {

namespace detail {

template <typename T, std::size_t N>
std::array<T, N> add_scaled(const std::array<T, N>& y, double h, const std::array<T, N>& k) {
  std::array<T, N> out;
  for (std::size_t i = 0; i < N; ++i) out[i] = y[i] + h * k[i];
  return out;
}

}  // namespace detail

/// One classical fourth-order Runge-Kutta step of dy/dz = f(z, y).
template <typename T, std::size_t N, typename Rhs>
std::array<T, N> rk4_step(Rhs& f, double z, const std::array<T, N>& y, double h) {
  const auto k1 = f(z, y);
  const auto k2 = f(z + 0.5 * h, detail::add_scaled(y, 0.5 * h, k1));
  const auto k3 = f(z + 0.5 * h, detail::add_scaled(y, 0.5 * h, k2));
  const auto k4 = f(z + h, detail::add_scaled(y, h, k3));
  std::array<T, N> out;
  for (std::size_t i = 0; i < N; ++i)
    out[i] = y[i] + (h / 6.0) * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
  return out;
}

/// Fixed-step integration from z0 to z1 (either direction).  The observer is
/// called with (z, y) at the start point and after every step.
template <typename T, std::size_t N, typename Rhs, typename Observer>
std::array<T, N> rk4_integrate(Rhs&& f, double z0, double z1, std::array<T, N> y,
                               std::size_t steps, Observer&& observe) {
  const double h = (z1 - z0) / static_cast<double>(steps);
  observe(z0, y);
  for (std::size_t i = 0; i < steps; ++i) {
    const double z = z0 + static_cast<double>(i) * h;
    y = rk4_step(f, z, y, h);
    observe(i + 1 == steps ? z1 : z + h, y);
  }
  return y;
}

template <typename T, std::size_t N, typename Rhs>
std::array<T, N> rk4_integrate(Rhs&& f, double z0, double z1, std::array<T, N> y,
                               std::size_t steps) {
  return rk4_integrate(f, z0, z1, y, steps, [](double, const std::array<T, N>&) {});
}

}  // namespace relspin::numerics

#endif
