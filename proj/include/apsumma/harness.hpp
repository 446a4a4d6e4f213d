#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "apsumma/apfun.hpp"
#include "apsumma/kernels.hpp"
#include "apsumma/moduli.hpp"
#include "apsumma/strong_means.hpp"
#include "apsumma/summability.hpp"

namespace apsumma {

// One LHS/RHS cell of an inequality sweep.  The headline ratio divides by the
// lower RHS end (strongest bounded-ratio test); the ratio is undefined when
// both sides vanish.
struct RatioReport {
  std::string inequality_id;
  std::string f_id;
  double x = 0.0;
  long n = 0;
  double q = 0.0;
  double c = 0.0;
  std::string row_family;
  double lhs = 0.0;
  double rhs_lower = 0.0;
  double rhs_upper = 0.0;
  double ratio = 0.0;
  bool ratio_defined = true;
  std::string flags;
};

// Memoizes omega f(delta)_{S^p} per (delta, p); one cache per function.
class OmegaCache {
 public:
  explicit OmegaCache(const APFunction& f) : f_(&f) {}
  double omega(double delta, double p);

 private:
  const APFunction* f_;
  std::map<std::pair<double, double>, double> cache_;
};

RatioReport prop4_ratio(const APFunction& f, const std::string& f_id, double x,
                        long n, double q, const ModulusFunction& w);

// gm2beta_member: pass the hoisted class-check result when sweeping many
// cells over one row; nullptr runs the check inline.
RatioReport thm5_ratio(const APFunction& f, const std::string& f_id, double x,
                       long n, double q, const MatrixRow& row, double c,
                       const ModulusFunction& w,
                       const bool* gm2beta_member = nullptr);

RatioReport thm6_ratio(const APFunction& f, const std::string& f_id, double x,
                       long n, double q, const MatrixRow& row,
                       const ModulusFunction& w);

RatioReport thm3_comparison(const APFunction& f, const std::string& f_id,
                            long n, double q, std::span<const double> x_grid,
                            OmegaCache& omega_cache);

RatioReport thm2_norm_ratio(const APFunction& f, const std::string& f_id,
                            long n, double q, const MatrixRow& row, double c,
                            OmegaCache& omega_cache);

struct SweepRowSpec {
  std::string family;  // cesaro | riesz | abel
  long n_lo = 2;
  long n_hi = 64;
};

struct SweepConfig {
  std::vector<std::pair<std::string, APFunction>> functions;
  std::vector<SweepRowSpec> rows;
  std::vector<double> q_list{2.0};
  double c = 2.0;
  std::vector<double> x_grid;  // empty: per-function default (17 points)
  long n_lo = 2;
  long n_hi = 64;  // n-range for prop4/thm3
  QuadratureConfig quad;
  std::vector<std::string> inequalities{"prop4", "thm5", "thm6"};
  int threads = 1;
};

struct NonDivergenceStat {
  std::string inequality_id;
  std::string f_id;
  double lower_half_max = 0.0;  // max ratio over n in [n_lo, mid]
  double upper_half_max = 0.0;  // max ratio over n in (mid, n_hi]
};

struct SweepResult {
  std::vector<RatioReport> reports;
  std::vector<NonDivergenceStat> stats;
  std::map<std::string, double> max_ratio;  // per inequality
  std::string flags;
};

SweepResult sweep(const SweepConfig& config);

// Default per-function x grid: 17 points over one quasi-period.
std::vector<double> default_x_grid(const APFunction& f);

std::string reports_to_csv(const std::vector<RatioReport>& reports,
                           const std::string& header_comment = "");

}  // namespace apsumma
