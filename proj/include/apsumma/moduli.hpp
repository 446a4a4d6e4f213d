#pragma once

#include <span>
#include <vector>

#include "apsumma/apfun.hpp"

namespace apsumma {

// Nondecreasing subadditive grid function with w(0) = 0: linear interpolation
// on the grid, w(d_max) * ceil(d/d_max) beyond it.
class ModulusFunction {
 public:
  ModulusFunction() = default;
  ModulusFunction(std::vector<double> grid, std::vector<double> values);

  double operator()(double delta) const;
  const std::vector<double>& grid() const { return grid_; }
  const std::vector<double>& values() const { return values_; }
  bool zero() const;

 private:
  std::vector<double> grid_;
  std::vector<double> values_;
};

struct ApproxBracket {
  double lower = 0.0;
  double upper = 0.0;
  double sigma = 0.0;
};

// omega f(delta)_{S^p}: sup over |t| <= delta of ||f(.+t) - f||_{S^p},
// maximized over a nested t-grid (multiples of pi/256).
double omega_modulus(const APFunction& f, double delta, double p);

// w_x f(delta)_p = {(1/delta) \int_0^delta |phi_x|^p}^{1/p}.
double w_x_modulus(const APFunction& f, double x, double delta, double p);

// G_x f(delta)_{s,p}: block sum over k = 0..[pi/(alpha delta)].
double G_x_modulus(const APFunction& f, double x, double delta, double s,
                   double p);

// Phi_x f(delta, nu) = (1/delta) \int_nu^{nu+delta} phi_x(u) du, closed form.
Complex phi_mean(const APFunction& f, double x, double delta, double nu);

// {(1/delta) \int_0^delta |phi_x(t) - phi_x(t + sign*gamma)|^p dt}^{1/p}.
double shifted_difference_average(const APFunction& f, double x, double delta,
                                  double gamma, int sign, double p = 1.0);

// Smallest nondecreasing grid function dominating the measured shifted
// difference averages and G_x f(.)_{2,1}, regularized to the least concave
// majorant (hence subadditive) with w(0) = 0.
ModulusFunction fit_modulus(const APFunction& f, double x,
                            std::span<const double> delta_grid);

std::vector<double> default_delta_grid();

ApproxBracket best_approx_bracket(const APFunction& f, double sigma);

struct MembershipRow {
  std::string kind;  // "shift+" / "shift-" / "G"
  double gamma = 0.0;  // 0 for G rows
  double delta = 0.0;
  double lhs = 0.0;
  double w_value = 0.0;
  double ratio = 0.0;  // 0 when both sides vanish
};

std::vector<MembershipRow> omega_alpha_membership_report(
    const APFunction& f, double x, const ModulusFunction& w,
    std::span<const double> gamma_grid, std::span<const double> delta_grid);

}  // namespace apsumma
