#ifndef RELSPIN_ROOTS_HPP
#define RELSPIN_ROOTS_HPP

#include <cmath>
#include <cstddef>
#include <optional>

#include "relspin/error.hpp"

namespace relspin::numerics {

struct Bracket {
  double lo = 0.0;
  double hi = 0.0;
  double f_lo = 0.0;
  double f_hi = 0.0;
};

/// Uniform scan of [lo, hi] with `points` samples; returns the first pair of
/// consecutive finite samples with opposite signs.  Non-finite samples (trial
/// points where f is undefined) break the chain.
template <typename F>
std::optional<Bracket> first_sign_change(F&& f, double lo, double hi, std::size_t points) {
  if (points < 2 || !(hi > lo)) return std::nullopt;
  const double step = (hi - lo) / static_cast<double>(points - 1);
  bool have_prev = false;
  double x_prev = lo, f_prev = 0.0;
  for (std::size_t i = 0; i < points; ++i) {
    const double x = i + 1 == points ? hi : lo + static_cast<double>(i) * step;
    const double fx = f(x);
    if (!std::isfinite(fx)) {
      have_prev = false;
      continue;
    }
    if (fx == 0.0) return Bracket{x, x, fx, fx};
    if (have_prev && std::signbit(f_prev) != std::signbit(fx)) return Bracket{x_prev, x, f_prev, fx};
    have_prev = true;
    x_prev = x;
    f_prev = fx;
  }
  return std::nullopt;
}

struct RootResult {
  double x = 0.0;
  double fx = 0.0;
  std::size_t iterations = 0;
};

/// Bisection on a sign-changing bracket down to an absolute width `xtol`.
/// Stops early once the midpoint no longer moves in floating point.
template <typename F>
RootResult bisect(F&& f, Bracket b, double xtol, std::size_t max_iterations) {
  if (b.lo == b.hi) return {b.lo, b.f_lo, 0};
  if (std::signbit(b.f_lo) == std::signbit(b.f_hi))
    throw error(errc::invalid_input, "bisection bracket has no sign change");
  double lo = b.lo, hi = b.hi, flo = b.f_lo;
  std::size_t it = 0;
  while (hi - lo > xtol) {
    if (it == max_iterations)
      throw error(errc::no_convergence, "bisection exceeded its iteration cap");
    ++it;
    const double mid = 0.5 * (lo + hi);
    if (mid <= lo || mid >= hi) break;
    const double fm = f(mid);
    if (fm == 0.0) return {mid, fm, it};
    if (std::signbit(fm) == std::signbit(flo)) {
      lo = mid;
      flo = fm;
    } else {
      hi = mid;
    }
  }
  const double x = 0.5 * (lo + hi);
  return {x, f(x), it};
}

}  // namespace relspin::numerics

#endif
