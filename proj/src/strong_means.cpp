#include "apsumma/strong_means.hpp"

#include <cmath>
#include <stdexcept>

namespace apsumma {

Complex threshold_partial_sum(const APFunction& f, double x, double gamma) {
  Complex s{0.0, 0.0};
  for (const Term& t : f.terms()) {
    if (t.lambda > gamma) break;
    const Complex e = std::polar(1.0, t.lambda * x);
    s += t.a_plus * e + t.a_minus * std::conj(e);
  }
  return s;
}

namespace {

long k_stop_for(const APFunction& f) {
  // Smallest k with alpha k / 2 >= lambda_max.
  return static_cast<long>(std::ceil(2.0 * f.lambda_max() / f.alpha()));
}

}  // namespace

DeviationSequence deviation_sequence(const APFunction& f, double x,
                                     long k_max) {
  const long stop = k_stop_for(f);
  if (k_max < stop)
    throw std::invalid_argument("k_max below the exact-reproduction index");
  DeviationSequence seq;
  seq.k_stop = stop;
  seq.d.resize(static_cast<std::size_t>(k_max) + 1, 0.0);
  const Complex fx = f.evaluate(x);
  for (long k = 0; k < stop; ++k)
    seq.d[k] = std::abs(threshold_partial_sum(f, x, 0.5 * f.alpha() * k) - fx);
  return seq;
}

double strong_mean(const APFunction& f, double x, const MatrixRow& row,
                   double q) {
  if (!(q > 0.0)) throw std::invalid_argument("q must be positive");
  if (!check_row_stochastic(row))
    throw std::invalid_argument("row is not stochastic");
  const long stop = k_stop_for(f);
  const Complex fx = f.evaluate(x);
  double s = 0.0;
  for (long k = 0; k < stop; ++k) {
    const double a = row.entry(k);
    if (a == 0.0) continue;
    const double d =
        std::abs(threshold_partial_sum(f, x, 0.5 * f.alpha() * k) - fx);
    s += a * std::pow(d, q);
  }
  return std::pow(s, 1.0 / q);
}

double block_strong_mean(const APFunction& f, double x, long n, double q) {
  if (n < 0) throw std::invalid_argument("n must be >= 0");
  if (!(q > 0.0)) throw std::invalid_argument("q must be positive");
  const long stop = k_stop_for(f);
  const Complex fx = f.evaluate(x);
  double s = 0.0;
  for (long k = n; k <= 2 * n && k < stop; ++k) {
    const double d =
        std::abs(threshold_partial_sum(f, x, 0.5 * f.alpha() * k) - fx);
    s += std::pow(d, q);
  }
  return std::pow(s / static_cast<double>(n + 1), 1.0 / q);
}

}  // namespace apsumma
