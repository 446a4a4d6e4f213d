#pragma once

#include <complex>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <vector>

namespace apsumma {

using Complex = std::complex<double>;

// One spectral line: frequency lambda >= 0 with paired amplitudes for
// e^{+i lambda x} and e^{-i lambda x}.
struct Term {
  double lambda = 0.0;
  Complex a_plus{0.0, 0.0};
  Complex a_minus{0.0, 0.0};
};

// Finite almost-periodic trigonometric sum with alpha-separated nonnegative
// exponents.  The first exponent is always 0 (its amplitude may vanish); the
// lambda=0 amplitudes are folded into a_plus at construction since both
// exponentials coincide there.
class APFunction {
 public:
  APFunction(std::vector<Term> terms, double alpha);

  double alpha() const { return alpha_; }
  const std::vector<Term>& terms() const { return terms_; }

  double lambda_max() const { return terms_.back().lambda; }
  // Sum of |a_plus| + |a_minus| over all terms; bounds |f| pointwise.
  double amplitude_sum() const { return amplitude_sum_; }

  Complex evaluate(double x) const;
  // Symmetric second difference f(x+t) + f(x-t) - 2 f(x); exactly 0 at t=0.
  Complex phi(double x, double t) const;

  // Exact stored-value exponent lookup (exponents are inputs, never measured).
  const Term* find_exponent(double lambda) const;
  bool has_exponent_in_open(double lo, double hi) const;

  // Smallest period 2*pi/g if all exponents are integer multiples of a common
  // g (within 1e-9 relative); nullopt for incommensurate spectra.
  std::optional<double> common_period() const;

 private:
  std::vector<Term> terms_;
  double alpha_;
  double amplitude_sum_;
};

Complex exact_coefficient(const APFunction& f, double lambda);
// Finite-L Bohr mean (1/L) \int_0^L f(t) e^{-i lambda t} dt, closed form.
Complex bohr_coefficient(const APFunction& f, double lambda, double L);

// Stepanov norm estimate: for p < infinity the max over window starts u of
// {(1/pi) \int_u^{u+pi} |f|^p}^{1/p}; for p = infinity the max of |f| over a
// dense grid.  A grid-limited lower estimate of the true sup.
double stepanov_norm(const APFunction& f, double p,
                     std::span<const double> u_grid);
double stepanov_norm(const APFunction& f, double p);

// Default window-start grid: 256 points over one period for commensurate
// spectra, over [0, 100*pi] otherwise.
std::vector<double> default_u_grid(const APFunction& f);

bool check_omega_membership(const APFunction& f, double alpha);

inline constexpr double kInfinityP = std::numeric_limits<double>::infinity();

}  // namespace apsumma
