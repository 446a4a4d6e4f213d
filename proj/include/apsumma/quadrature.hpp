#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>

namespace apsumma {

// Composite Gauss-Legendre quadrature on [a, b] with a fixed 8-point rule
// per panel.  Panel counts are chosen by the caller from the integrand's
// fastest oscillation; see oscillation_panels().

inline constexpr int kGaussOrder = 8;

inline constexpr double kGaussNodes[kGaussOrder] = {
    -0.9602898564975363, -0.7966664774136267, -0.5255324099163290,
    -0.1834346424956498, 0.1834346424956498,  0.5255324099163290,
    0.7966664774136267,  0.9602898564975363};

inline constexpr double kGaussWeights[kGaussOrder] = {
    0.1012285362903763, 0.2223810344533745, 0.3137066458778873,
    0.3626837833783620, 0.3626837833783620, 0.3137066458778873,
    0.2223810344533745, 0.1012285362903763};

// Number of panels needed so that each panel covers at most
// 1/panels_per_oscillation of a period of a frequency-`freq` factor.
inline std::size_t oscillation_panels(double a, double b, double freq,
                                      int panels_per_oscillation) {
  if (freq <= 0.0) return 1;
  const double period = 2.0 * M_PI / freq;
  const double width = period / panels_per_oscillation;
  const double n = std::ceil((b - a) / width);
  return n < 1.0 ? 1 : static_cast<std::size_t>(n);
}

template <typename F>
auto integrate_panels(F&& f, double a, double b, std::size_t n_panels)
    -> decltype(f(0.0)) {
  using R = decltype(f(0.0));
  if (n_panels == 0) n_panels = 1;
  const double h = (b - a) / static_cast<double>(n_panels);
  R total{};
  for (std::size_t p = 0; p < n_panels; ++p) {
    const double lo = a + h * static_cast<double>(p);
    const double mid = lo + 0.5 * h;
    const double half = 0.5 * h;
    R panel{};
    for (int i = 0; i < kGaussOrder; ++i) {
      panel += kGaussWeights[i] * f(mid + half * kGaussNodes[i]);
    }
    total += panel * half;
  }
  return total;
}

}  // namespace apsumma
