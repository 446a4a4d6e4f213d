#include "apsumma/kernels.hpp"

#include <cmath>
#include <stdexcept>

#include "apsumma/quadrature.hpp"

namespace apsumma {

namespace {
constexpr double kSingularityRadius = 1e-6;
}

double psi(const KernelParams& params, double t) {
  const double lambda = params.lambda;
  const double eta = params.eta;
  if (!(lambda >= 0.0) || !(eta > lambda))
    throw std::invalid_argument("psi requires 0 <= lambda < eta");
  if (std::abs(t) <= kSingularityRadius) {
    // Second-order expansion of (cos(lambda t) - cos(eta t)) / t^2.
    const double s2 = eta * eta + lambda * lambda;
    return (eta + lambda) / (2.0 * M_PI) * (1.0 - s2 * t * t / 12.0);
  }
  const double d = eta - lambda;
  return 2.0 * std::sin(0.5 * d * t) * std::sin(0.5 * (eta + lambda) * t) /
         (M_PI * d * t * t);
}

double psi_k(double alpha, int k, double t) {
  if (!(alpha > 0.0)) throw std::invalid_argument("alpha must be positive");
  if (k < 0) throw std::invalid_argument("k must be nonnegative");
  if (std::abs(t) <= kSingularityRadius) {
    const double lambda = 0.5 * alpha * k;
    const double eta = 0.5 * alpha * (k + 1);
    const double s2 = eta * eta + lambda * lambda;
    return (eta + lambda) / (2.0 * M_PI) * (1.0 - s2 * t * t / 12.0);
  }
  return 4.0 * std::sin(0.25 * alpha * t) *
         std::sin(0.25 * alpha * (2 * k + 1) * t) / (alpha * M_PI * t * t);
}

void QuadratureConfig::validate() const {
  if (panels_per_oscillation < 4)
    throw std::invalid_argument("panels_per_oscillation must be >= 4");
  if (!(abs_tolerance > 0.0))
    throw std::invalid_argument("abs_tolerance must be positive");
}

double QuadratureConfig::cutoff_for(double alpha, int k) const {
  if (tail_cutoff > 0.0) return tail_cutoff;
  return std::max(1e4 / alpha, 1e3 * (k + 1) / alpha);
}

KernelSumEvaluator::KernelSumEvaluator(const APFunction& f,
                                       QuadratureConfig cfg)
    : f_(f), cfg_(cfg) {
  cfg_.validate();
}

const KernelSumEvaluator::Responses& KernelSumEvaluator::responses_for(int k) {
  auto it = cache_.find(k);
  if (it != cache_.end()) return it->second;

  const double alpha = f_.alpha();
  const double T = cfg_.cutoff_for(alpha, k);
  const auto& terms = f_.terms();

  // One pass evaluates psi_k once per node and every cosine factor at that
  // node.  Within a pass the nodes of a fixed Gauss index advance in steps of
  // the panel width, so all oscillatory factors follow two-term phase
  // recurrences (one complex multiply each) instead of per-node sin/cos; the
  // accumulated phase drift over ~1e7 steps stays far below abs_tolerance and
  // is covered by the coarse/fine convergence comparison.
  const double fastest = f_.lambda_max() + 0.5 * alpha * (k + 1);
  auto run = [&](int pposc) {
    std::vector<double> out(terms.size(), 0.0);
    const std::size_t panels = oscillation_panels(0.0, T, fastest, pposc);
    const double h = T / static_cast<double>(panels);
    const double c1 = 0.25 * alpha;
    const double c2 = 0.25 * alpha * (2 * k + 1);
    std::vector<Complex> zt(terms.size()), dt(terms.size());
    for (int i = 0; i < kGaussOrder; ++i) {
      const double t0 = 0.5 * h * (1.0 + kGaussNodes[i]);
      const double w = kGaussWeights[i] * 0.5 * h;
      Complex z1 = std::polar(1.0, c1 * t0);
      Complex z2 = std::polar(1.0, c2 * t0);
      const Complex d1 = std::polar(1.0, c1 * h);
      const Complex d2 = std::polar(1.0, c2 * h);
      for (std::size_t j = 0; j < terms.size(); ++j) {
        zt[j] = std::polar(1.0, terms[j].lambda * t0);
        dt[j] = std::polar(1.0, terms[j].lambda * h);
      }
      for (std::size_t p = 0; p < panels; ++p) {
        const double t = t0 + h * static_cast<double>(p);
        const double psi_v =
            t <= kSingularityRadius
                ? psi_k(alpha, k, t)
                : 4.0 * z1.imag() * z2.imag() / (alpha * M_PI * t * t);
        const double wpsi = w * psi_v;
        for (std::size_t j = 0; j < terms.size(); ++j) {
          if (terms[j].lambda == 0.0) continue;
          out[j] += wpsi * (2.0 * zt[j].real() - 2.0);
          zt[j] *= dt[j];
        }
        z1 *= d1;
        z2 *= d2;
      }
    }
    return out;
  };

  const std::vector<double> coarse = run(cfg_.panels_per_oscillation);
  std::vector<double> fine = run(2 * cfg_.panels_per_oscillation);

  Responses r;
  r.converged = true;
  for (std::size_t j = 0; j < terms.size(); ++j)
    if (std::abs(fine[j] - coarse[j]) > cfg_.abs_tolerance) r.converged = false;
  r.integral = std::move(fine);

  double amp = 0.0;
  for (const Term& t : terms)
    if (t.lambda > 0.0) amp += std::abs(t.a_plus) + std::abs(t.a_minus);
  const double sup_phi = 4.0 * amp;
  r.tail_bound = 8.0 * sup_phi / (alpha * M_PI * T);

  return cache_.emplace(k, std::move(r)).first->second;
}

KernelSum KernelSumEvaluator::partial_sum(double x, int k) {
  if (k < 0) throw std::invalid_argument("k must be nonnegative");
  const Responses& r = responses_for(k);
  Complex v = f_.evaluate(x);
  const auto& terms = f_.terms();
  for (std::size_t j = 0; j < terms.size(); ++j) {
    if (terms[j].lambda == 0.0) continue;
    const Complex e = std::polar(1.0, terms[j].lambda * x);
    const Complex c = terms[j].a_plus * e + terms[j].a_minus * std::conj(e);
    v += c * r.integral[j];
  }
  return KernelSum{v, r.tail_bound, r.converged};
}

KernelSum KernelSumEvaluator::threshold_estimate(double x, int k) {
  const double alpha = f_.alpha();
  const double lo = 0.5 * alpha * k;
  const double hi = 0.5 * alpha * (k + 1);
  // At most one exponent fits in (lo, hi) thanks to the alpha separation.
  const Term* inside = nullptr;
  for (const Term& t : f_.terms())
    if (t.lambda > lo && t.lambda < hi) inside = &t;
  if (!inside) return partial_sum(x, k);
  KernelSum s = partial_sum(x, k + 1);
  const Complex e = std::polar(1.0, inside->lambda * x);
  s.value -= inside->a_plus * e + inside->a_minus * std::conj(e);
  return s;
}

KernelSum kernel_partial_sum(const APFunction& f, double x, int k,
                             const QuadratureConfig& cfg) {
  KernelSumEvaluator ev(f, cfg);
  return ev.partial_sum(x, k);
}

KernelSum kernel_threshold_estimate(const APFunction& f, double x, int k,
                                    const QuadratureConfig& cfg) {
  KernelSumEvaluator ev(f, cfg);
  return ev.threshold_estimate(x, k);
}

double geometric_sine_sum_closed(double r, double y, double z) {
  if (!(r >= 0.0) || !(r < 1.0))
    throw std::invalid_argument("r must lie in [0, 1)");
  const double sy = std::sin(0.5 * y);
  const double sz = std::sin(0.5 * z);
  const double num = sy * sz * (1.0 - r) *
                     ((1.0 + r) * (1.0 + r) + 2.0 * r * (std::cos(y) + std::cos(z)));
  const double sp = std::sin(0.5 * (y + z));
  const double sm = std::sin(0.5 * (y - z));
  const double den = ((1.0 - r) * (1.0 - r) + 4.0 * r * sp * sp) *
                     ((1.0 - r) * (1.0 - r) + 4.0 * r * sm * sm);
  if (den < 1e-30)
    throw std::domain_error("geometric_sine_sum_closed: denominator underflow");
  return num / den;
}

double geometric_sine_sum_direct(double r, double y, double z, int N) {
  if (!(r >= 0.0) || !(r < 1.0))
    throw std::invalid_argument("r must lie in [0, 1)");
  if (N < 1) throw std::invalid_argument("N must be >= 1");
  double s = 0.0;
  double rk = 1.0;
  for (int k = 0; k < N; ++k) {
    s += rk * std::sin(0.5 * y * (2 * k + 1)) * std::sin(0.5 * z * (2 * k + 1));
    rk *= r;
  }
  return s;
}

}  // namespace apsumma
