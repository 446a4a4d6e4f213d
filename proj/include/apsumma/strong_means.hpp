#pragma once

#include "apsumma/apfun.hpp"
#include "apsumma/summability.hpp"

namespace apsumma {

// Pointwise deviations |S_{alpha k/2} f(x) - f(x)| for k = 0..k_stop; every
// later deviation is exactly 0 for a finite trigonometric sum.
struct DeviationSequence {
  std::vector<double> d;
  long k_stop = 0;
};

// S_gamma f(x) = sum over exponents with lambda_nu <= gamma (both signs).
Complex threshold_partial_sum(const APFunction& f, double x, double gamma);

DeviationSequence deviation_sequence(const APFunction& f, double x,
                                     long k_max);

// H^q_{n,A,gamma} f(x) with gamma_k = alpha k / 2; exact for infinite rows
// since the deviation tail vanishes identically.
double strong_mean(const APFunction& f, double x, const MatrixRow& row,
                   double q);

// Uniform (n..2n) block mean {(1/(n+1)) sum_{k=n}^{2n} d_k^q}^{1/q}.
double block_strong_mean(const APFunction& f, double x, long n, double q);

}  // namespace apsumma
