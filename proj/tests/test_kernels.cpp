#include <cmath>

#include <doctest.h>

#include "apsumma/fixtures.hpp"
#include "apsumma/kernels.hpp"
#include "apsumma/strong_means.hpp"

using namespace apsumma;

namespace {

// Trapezoid filter response: \int_0^\infty 2 cos(mu t) Psi_{lambda,eta} dt
// equals 1 below the passband edge, falls linearly across (lambda, eta), and
// vanishes beyond eta.  Used only as an oracle for the kernel quadrature.
double trapezoid_response(double mu, double lambda, double eta) {
  if (mu <= lambda) return 1.0;
  if (mu >= eta) return 0.0;
  return (eta - mu) / (eta - lambda);
}

}  // namespace

TEST_CASE("psi closed form") {
  CHECK(psi({1.0, 2.0}, M_PI) ==
        doctest::Approx(-2.0 / (M_PI * M_PI * M_PI)).epsilon(1e-12));
  CHECK(psi({1.0, 2.0}, 1e-9) ==
        doctest::Approx(3.0 / (2.0 * M_PI)).epsilon(1e-10));
  CHECK(psi({1.0, 3.0}, M_PI / 2.0) == doctest::Approx(0.0));
  CHECK_THROWS_AS(psi({2.0, 1.0}, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(psi({-1.0, 2.0}, 0.5), std::invalid_argument);
}

TEST_CASE("psi_k closed form and evenness") {
  CHECK(psi_k(2.0, 0, 1e-9) == doctest::Approx(1.0 / (2.0 * M_PI)));
  CHECK(psi_k(2.0, 1, M_PI) ==
        doctest::Approx(-2.0 / (M_PI * M_PI * M_PI)).epsilon(1e-12));
  for (double t : {0.3, 1.7, 12.0})
    CHECK(psi_k(1.5, 3, t) == doctest::Approx(psi_k(1.5, 3, -t)));
  CHECK_THROWS_AS(psi_k(0.0, 1, 0.5), std::invalid_argument);
  CHECK_THROWS_AS(psi_k(1.0, -1, 0.5), std::invalid_argument);
}

TEST_CASE("psi_k equals psi at the dyadic band edges") {
  for (double alpha : {1.0, 2.0, std::sqrt(2.0)}) {
    for (int k : {0, 1, 5, 32, 64}) {
      const KernelParams p{0.5 * alpha * k, 0.5 * alpha * (k + 1)};
      for (int i = 1; i <= 200; ++i) {
        const double t = 20.0 * i / (200.0 * alpha);
        const double a = psi_k(alpha, k, t);
        const double b = psi(p, t);
        CHECK(std::abs(a - b) <= 1e-12 * std::max(1.0, std::abs(b)));
      }
    }
  }
}

TEST_CASE("removable singularity matches the Taylor limit") {
  const double lambda = 1.0, eta = 2.0;
  const double t = 1e-8;
  const double limit = (eta + lambda) / (2.0 * M_PI);
  CHECK(std::abs(psi({lambda, eta}, t) - limit) < 1e-6);
}

TEST_CASE("kernel integral reproduces the trapezoid filter response") {
  // Independent oracle: integrate 2 cos(mu t) Psi_k over [0, T] with the
  // library quadrature and compare with the closed-form filter response.
  const double alpha = 1.0;
  const QuadratureConfig cfg;
  for (int k : {0, 3, 8}) {
    const double lambda = 0.5 * alpha * k;
    const double eta = 0.5 * alpha * (k + 1);
    for (double mu : {0.0, 0.3 * lambda + 1e-3, lambda, 0.5 * (lambda + eta),
                      eta, eta + 2.0}) {
      // Mid-band response via the library's own partial-sum path: a single
      // exponential e^{i mu x} has S*_k f(0) = a0 + response(mu).
      if (mu < alpha) continue;  // needs a valid separated function
      const APFunction f(
          {Term{0.0, {1.0, 0.0}, {}}, Term{mu, {1.0, 0.0}, {}}}, alpha);
      const KernelSum ks = kernel_partial_sum(f, 0.0, k, cfg);
      const double expect = 1.0 + trapezoid_response(mu, lambda, eta);
      CHECK(std::abs(ks.value - Complex{expect, 0.0}) <=
            cfg.abs_tolerance + ks.tail_bound);
      CHECK(ks.converged);
    }
  }
}

TEST_CASE("kernel_partial_sum of a constant is exact") {
  const APFunction one({Term{0.0, {2.0, 0.0}, {}}}, 1.0);
  const KernelSum ks = kernel_partial_sum(one, 0.7, 4, {});
  CHECK(ks.value.real() == doctest::Approx(2.0));
  CHECK(ks.tail_bound == 0.0);
}

TEST_CASE("kernel threshold estimate matches exact threshold sums") {
  const QuadratureConfig cfg;
  // Exponent 2.3 inside (lambda, eta) for k = 4 triggers the kappa shift.
  const APFunction f(
      {Term{0.0, {0.3, 0.0}, {}}, Term{1.0, {1.0, 0.0}, {0.5, 0.0}},
       Term{2.3, {0.7, 0.0}, {}}},
      1.0);
  KernelSumEvaluator eval(f, cfg);
  for (double x : {0.0, 1.3, 4.0}) {
    for (int k : {0, 1, 2, 3, 4, 5, 6, 10}) {
      const KernelSum ks = eval.threshold_estimate(x, k);
      const Complex exact = threshold_partial_sum(f, x, 0.5 * k);
      CHECK(std::abs(ks.value - exact) <= cfg.abs_tolerance + ks.tail_bound);
    }
  }
}

TEST_CASE("quadrature config validation") {
  QuadratureConfig cfg;
  cfg.panels_per_oscillation = 1;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg.panels_per_oscillation = 4;
  cfg.abs_tolerance = 0.0;
  CHECK_THROWS_AS(cfg.validate(), std::invalid_argument);
  cfg.abs_tolerance = 1e-6;
  CHECK(cfg.cutoff_for(2.0, 0) == doctest::Approx(5e3));
  CHECK(cfg.cutoff_for(1.0, 19) == doctest::Approx(2e4));
  cfg.tail_cutoff = 123.0;
  CHECK(cfg.cutoff_for(1.0, 19) == doctest::Approx(123.0));
}

TEST_CASE("geometric sine sum worked values") {
  CHECK(geometric_sine_sum_closed(0.0, 1.1, 0.4) ==
        doctest::Approx(std::sin(0.55) * std::sin(0.2)).epsilon(1e-14));
  CHECK(geometric_sine_sum_closed(0.5, M_PI / 2.0, M_PI / 2.0) ==
        doctest::Approx(1.0).epsilon(1e-14));
  CHECK(geometric_sine_sum_direct(0.5, M_PI / 2.0, M_PI / 2.0, 60) ==
        doctest::Approx(1.0).epsilon(1e-15));
  CHECK(geometric_sine_sum_direct(0.0, 1.1, 0.4, 1) ==
        doctest::Approx(std::sin(0.55) * std::sin(0.2)));
  CHECK(std::abs(geometric_sine_sum_closed(0.9, 1.0, 2.0) -
                 geometric_sine_sum_direct(0.9, 1.0, 2.0, 700)) < 1e-10);
  CHECK_THROWS_AS(geometric_sine_sum_closed(1.0, 1.0, 1.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(geometric_sine_sum_closed(-0.1, 1.0, 1.0),
                  std::invalid_argument);
  CHECK_THROWS_AS(geometric_sine_sum_direct(0.5, 1.0, 1.0, 0),
                  std::invalid_argument);
}

TEST_CASE("geometric sine sum truncation error bound") {
  for (double r : {0.1, 0.5, 0.9}) {
    for (int N : {5, 20, 100}) {
      const double closed = geometric_sine_sum_closed(r, 0.7, 2.1);
      const double direct = geometric_sine_sum_direct(r, 0.7, 2.1, N);
      CHECK(std::abs(closed - direct) <=
            std::pow(r, N) / (1.0 - r) + 1e-14);
    }
  }
}
