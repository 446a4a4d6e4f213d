#include "apsumma/apfun.hpp"

#include <algorithm>
#include <cmath>

#include "apsumma/quadrature.hpp"

namespace apsumma {

APFunction::APFunction(std::vector<Term> terms, double alpha)
    : terms_(std::move(terms)), alpha_(alpha) {
  if (!(alpha_ > 0.0)) throw std::invalid_argument("alpha must be positive");
  if (terms_.empty()) throw std::invalid_argument("at least one term required");
  if (terms_.front().lambda != 0.0)
    throw std::invalid_argument("first exponent must be 0");
  // Fold the lambda=0 pair into a_plus; both exponentials are identical.
  terms_.front().a_plus += terms_.front().a_minus;
  terms_.front().a_minus = Complex{0.0, 0.0};
  for (std::size_t i = 0; i + 1 < terms_.size(); ++i) {
    const double gap = terms_[i + 1].lambda - terms_[i].lambda;
    if (!(terms_[i + 1].lambda > terms_[i].lambda))
      throw std::invalid_argument("exponents must be strictly increasing");
    // Separation binds between positive exponents; the lambda_0 = 0 line may
    // sit closer to lambda_1 (check_omega_membership tests the full chain).
    if (i >= 1 && gap < alpha_)
      throw std::invalid_argument("exponent gap below alpha separation");
  }
  for (std::size_t i = 1; i < terms_.size(); ++i) {
    if (std::abs(terms_[i].a_plus) + std::abs(terms_[i].a_minus) <= 0.0)
      throw std::invalid_argument(
          "term with |a_plus| + |a_minus| = 0 at positive exponent");
    if (!std::isfinite(terms_[i].lambda))
      throw std::invalid_argument("non-finite exponent");
  }
  amplitude_sum_ = 0.0;
  for (const Term& t : terms_)
    amplitude_sum_ += std::abs(t.a_plus) + std::abs(t.a_minus);
}

Complex APFunction::evaluate(double x) const {
  Complex s{0.0, 0.0};
  for (const Term& t : terms_) {
    const Complex e = std::polar(1.0, t.lambda * x);
    s += t.a_plus * e + t.a_minus * std::conj(e);
  }
  return s;
}

Complex APFunction::phi(double x, double t) const {
  // f(x+t) + f(x-t) - 2 f(x) = sum_nu C_nu(x) * (2 cos(lambda_nu t) - 2).
  Complex s{0.0, 0.0};
  for (const Term& tm : terms_) {
    if (tm.lambda == 0.0) continue;
    const Complex e = std::polar(1.0, tm.lambda * x);
    const Complex c = tm.a_plus * e + tm.a_minus * std::conj(e);
    s += c * (2.0 * std::cos(tm.lambda * t) - 2.0);
  }
  return s;
}

const Term* APFunction::find_exponent(double lambda) const {
  for (const Term& t : terms_)
    if (t.lambda == lambda) return &t;
  return nullptr;
}

bool APFunction::has_exponent_in_open(double lo, double hi) const {
  for (const Term& t : terms_)
    if (t.lambda > lo && t.lambda < hi) return true;
  return false;
}

std::optional<double> APFunction::common_period() const {
  std::vector<double> freqs;
  for (const Term& t : terms_)
    if (t.lambda > 0.0) freqs.push_back(t.lambda);
  if (freqs.empty()) return std::nullopt;
  // Approximate positive gcd via the Euclidean algorithm on reals.
  double g = freqs[0];
  for (double v : freqs) {
    double a = std::max(g, v), b = std::min(g, v);
    while (b > 1e-9 * freqs[0]) {
      const double r = std::fmod(a, b);
      a = b;
      b = r;
    }
    g = a;
  }
  for (double v : freqs) {
    const double ratio = v / g;
    if (std::abs(ratio - std::round(ratio)) > 1e-9) return std::nullopt;
    if (std::round(ratio) > 1e6) return std::nullopt;
  }
  return 2.0 * M_PI / g;
}

Complex exact_coefficient(const APFunction& f, double lambda) {
  if (lambda == 0.0) {
    const Term* t = f.find_exponent(0.0);
    return t ? t->a_plus : Complex{0.0, 0.0};
  }
  const Term* t = f.find_exponent(std::abs(lambda));
  if (!t) return Complex{0.0, 0.0};
  return lambda > 0.0 ? t->a_plus : t->a_minus;
}

namespace {

// (1/L) \int_0^L e^{i mu t} dt.
Complex mean_exponential(double mu, double L) {
  if (mu == 0.0) return Complex{1.0, 0.0};
  const Complex i{0.0, 1.0};
  return (std::polar(1.0, mu * L) - 1.0) / (i * mu * L);
}

}  // namespace

Complex bohr_coefficient(const APFunction& f, double lambda, double L) {
  if (!(L > 0.0)) throw std::invalid_argument("L must be positive");
  Complex s{0.0, 0.0};
  for (const Term& t : f.terms()) {
    s += t.a_plus * mean_exponential(t.lambda - lambda, L);
    if (t.lambda > 0.0)
      s += t.a_minus * mean_exponential(-t.lambda - lambda, L);
  }
  return s;
}

double stepanov_norm(const APFunction& f, double p,
                     std::span<const double> u_grid) {
  if (u_grid.empty()) throw std::invalid_argument("u_grid must be nonempty");
  if (std::isinf(p)) {
    // Dense |f| grid over the union of sampling windows.
    double best = 0.0;
    for (double u : u_grid) {
      constexpr int kDense = 64;
      for (int i = 0; i < kDense; ++i) {
        const double x = u + M_PI * i / kDense;
        best = std::max(best, std::abs(f.evaluate(x)));
      }
    }
    return best;
  }
  if (!(p >= 1.0)) throw std::invalid_argument("p must be >= 1 or infinity");
  const double lmax = std::max(f.lambda_max(), 1.0);
  const std::size_t panels =
      static_cast<std::size_t>(std::ceil(8.0 * lmax));  // width <= pi/(8 lmax)
  double best = 0.0;
  for (double u : u_grid) {
    const double mean =
        integrate_panels(
            [&](double t) { return std::pow(std::abs(f.evaluate(t)), p); }, u,
            u + M_PI, panels) /
        M_PI;
    best = std::max(best, std::pow(mean, 1.0 / p));
  }
  return best;
}

double stepanov_norm(const APFunction& f, double p) {
  const std::vector<double> grid = default_u_grid(f);
  return stepanov_norm(f, p, grid);
}

std::vector<double> default_u_grid(const APFunction& f) {
  const std::optional<double> period = f.common_period();
  const double span = period ? *period : 100.0 * M_PI;
  constexpr int kCount = 256;
  std::vector<double> grid(kCount);
  for (int i = 0; i < kCount; ++i) grid[i] = span * i / kCount;
  return grid;
}

bool check_omega_membership(const APFunction& f, double alpha) {
  if (!(alpha > 0.0)) throw std::invalid_argument("alpha must be positive");
  const auto& ts = f.terms();
  for (std::size_t i = 0; i + 1 < ts.size(); ++i)
    if (ts[i + 1].lambda - ts[i].lambda < alpha) return false;
  return true;
}

}  // namespace apsumma
