#pragma once

#include <complex>
#include <map>
#include <vector>

#include "apsumma/apfun.hpp"

namespace apsumma {

struct KernelParams {
  double lambda = 0.0;  // 0 <= lambda < eta; lambda = 0 admitted for k = 0
  double eta = 1.0;
};

// Psi_{lambda,eta}(t) = 2 sin((eta-lambda)t/2) sin((eta+lambda)t/2)
//                       / (pi (eta-lambda) t^2),
// with the removable-singularity limit (eta+lambda)/(2 pi) near t = 0.
double psi(const KernelParams& params, double t);

// Psi_k(t) = 4 sin(alpha t/4) sin(alpha(2k+1)t/4) / (alpha pi t^2);
// identical to psi({alpha k/2, alpha(k+1)/2}, t).
double psi_k(double alpha, int k, double t);

struct QuadratureConfig {
  double tail_cutoff = 0.0;  // <= 0: per-k default max(1e4/a, 1e3 (k+1)/a)
  int panels_per_oscillation = 4;
  double abs_tolerance = 1e-6;

  void validate() const;
  double cutoff_for(double alpha, int k) const;
};

struct KernelSum {
  Complex value{0.0, 0.0};
  double tail_bound = 0.0;
  bool converged = true;
};

// f(x) + \int_0^T phi_x(t) Psi_k(t) dt: the kernel-integral representation of
// the adjusted partial sum S*_k f(x).
KernelSum kernel_partial_sum(const APFunction& f, double x, int k,
                             const QuadratureConfig& cfg);

// Kernel-route estimate of the threshold sum S_{alpha k/2} f(x).  When the
// open interval (alpha k/2, alpha(k+1)/2) contains an exponent lambda_nu the
// paper's kappa shift applies: S*_{k+1} minus the lambda_nu line.
KernelSum kernel_threshold_estimate(const APFunction& f, double x, int k,
                                    const QuadratureConfig& cfg);

// Caches the per-frequency kernel responses so x-sweeps reuse one quadrature
// pass per (f, k).
class KernelSumEvaluator {
 public:
  KernelSumEvaluator(const APFunction& f, QuadratureConfig cfg);

  KernelSum partial_sum(double x, int k);
  KernelSum threshold_estimate(double x, int k);

 private:
  struct Responses {
    std::vector<double> integral;  // \int_0^T (2cos(lambda_nu t)-2) Psi_k dt
    double tail_bound = 0.0;
    bool converged = true;
  };
  const Responses& responses_for(int k);

  const APFunction& f_;
  QuadratureConfig cfg_;
  std::map<int, Responses> cache_;
};

// Closed form of sum_{k>=0} r^k sin(y(2k+1)/2) sin(z(2k+1)/2).
double geometric_sine_sum_closed(double r, double y, double z);
// Truncated direct summation of the same series (N terms).
double geometric_sine_sum_direct(double r, double y, double z, int N);

}  // namespace apsumma
