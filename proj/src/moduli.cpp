#include "apsumma/moduli.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "apsumma/quadrature.hpp"

namespace apsumma {

ModulusFunction::ModulusFunction(std::vector<double> grid,
                                 std::vector<double> values)
    : grid_(std::move(grid)), values_(std::move(values)) {
  if (grid_.size() != values_.size() || grid_.empty())
    throw std::invalid_argument("modulus grid/value size mismatch");
  for (std::size_t i = 0; i < grid_.size(); ++i) {
    if (!(grid_[i] > 0.0))
      throw std::invalid_argument("modulus grid must be positive");
    if (i > 0 && !(grid_[i] > grid_[i - 1]))
      throw std::invalid_argument("modulus grid must be increasing");
    if (values_[i] < 0.0 || (i > 0 && values_[i] < values_[i - 1] - 1e-15))
      throw std::invalid_argument("modulus values must be nondecreasing");
  }
}

double ModulusFunction::operator()(double delta) const {
  if (delta <= 0.0) return 0.0;
  const double dmax = grid_.back();
  if (delta > dmax) return values_.back() * std::ceil(delta / dmax);
  // Piecewise linear through (0, 0) and the grid points.
  auto it = std::lower_bound(grid_.begin(), grid_.end(), delta);
  const std::size_t i = static_cast<std::size_t>(it - grid_.begin());
  const double x0 = i == 0 ? 0.0 : grid_[i - 1];
  const double y0 = i == 0 ? 0.0 : values_[i - 1];
  const double x1 = grid_[i];
  const double y1 = values_[i];
  return y0 + (y1 - y0) * (delta - x0) / (x1 - x0);
}

bool ModulusFunction::zero() const {
  for (double v : values_)
    if (v != 0.0) return false;
  return true;
}

namespace {

// Shared quadrature of \int_a^b g(|phi_x(t)|) dt with oscillation-aware
// panel counts.
template <typename G>
double phi_integral(const APFunction& f, double x, double a, double b, G&& g) {
  const std::size_t panels = std::max<std::size_t>(
      oscillation_panels(a, b, std::max(f.lambda_max(), 1.0), 8), 4);
  return integrate_panels(
      [&](double t) { return g(std::abs(f.phi(x, t))); }, a, b, panels);
}

APFunction shift_difference(const APFunction& f, double t) {
  // f(.+t) - f(.): amplitudes scale by e^{+-i lambda t} - 1; terms whose
  // amplitudes vanish identically are dropped (the lambda=0 line stays).
  std::vector<Term> terms;
  for (const Term& tm : f.terms()) {
    const Complex e = std::polar(1.0, tm.lambda * t);
    Term out{tm.lambda, tm.a_plus * (e - 1.0),
             tm.a_minus * (std::conj(e) - 1.0)};
    if (tm.lambda == 0.0 || std::abs(out.a_plus) + std::abs(out.a_minus) > 0.0)
      terms.push_back(out);
  }
  if (terms.empty() || terms.front().lambda != 0.0)
    terms.insert(terms.begin(), Term{0.0, {0.0, 0.0}, {0.0, 0.0}});
  return APFunction(std::move(terms), f.alpha());
}

constexpr double kOmegaStep = M_PI / 256.0;

}  // namespace

double omega_modulus(const APFunction& f, double delta, double p) {
  if (delta < 0.0) throw std::invalid_argument("delta must be >= 0");
  if (delta == 0.0) return 0.0;
  // Nested t-grid (multiples of a fixed step) keeps omega nondecreasing in
  // delta by construction; by symmetry only t > 0 is scanned.
  std::vector<double> ts;
  for (double t = kOmegaStep; t <= delta + 1e-15; t += kOmegaStep)
    ts.push_back(std::min(t, delta));
  if (ts.empty()) ts.push_back(delta);
  double best = 0.0;
  const std::vector<double> grid = default_u_grid(f);
  for (double t : ts)
    best = std::max(best, stepanov_norm(shift_difference(f, t), p, grid));
  return best;
}

double w_x_modulus(const APFunction& f, double x, double delta, double p) {
  if (!(delta > 0.0)) throw std::invalid_argument("delta must be positive");
  if (!(p >= 1.0)) throw std::invalid_argument("p must be >= 1");
  const double mean =
      phi_integral(f, x, 0.0, delta, [&](double a) { return std::pow(a, p); }) /
      delta;
  return std::pow(mean, 1.0 / p);
}

double G_x_modulus(const APFunction& f, double x, double delta, double s,
                   double p) {
  if (!(delta > 0.0)) throw std::invalid_argument("delta must be positive");
  if (!(s > 1.0)) throw std::invalid_argument("s must be > 1");
  if (!(p >= 1.0)) throw std::invalid_argument("p must be >= 1");
  const long k_max =
      static_cast<long>(std::floor(M_PI / (f.alpha() * delta)));
  double sum = 0.0;
  for (long k = 0; k <= k_max; ++k) {
    const double mean =
        phi_integral(f, x, k * delta, (k + 1) * delta,
                     [&](double a) { return std::pow(a, p); }) /
        ((k + 1) * delta);
    sum += std::pow(mean, s / p);
  }
  return std::pow(sum, 1.0 / s);
}

Complex phi_mean(const APFunction& f, double x, double delta, double nu) {
  if (!(delta > 0.0)) throw std::invalid_argument("delta must be positive");
  Complex s{0.0, 0.0};
  for (const Term& tm : f.terms()) {
    if (tm.lambda == 0.0) continue;
    const Complex e = std::polar(1.0, tm.lambda * x);
    const Complex c = tm.a_plus * e + tm.a_minus * std::conj(e);
    const double l = tm.lambda;
    const double integral =
        2.0 * (std::sin(l * (nu + delta)) - std::sin(l * nu)) / l -
        2.0 * delta;
    s += c * (integral / delta);
  }
  return s;
}

double shifted_difference_average(const APFunction& f, double x, double delta,
                                  double gamma, int sign, double p) {
  if (!(delta > 0.0)) throw std::invalid_argument("delta must be positive");
  const double g = sign >= 0 ? gamma : -gamma;
  const std::size_t panels = std::max<std::size_t>(
      oscillation_panels(0.0, delta, std::max(f.lambda_max(), 1.0), 8), 4);
  const double mean =
      integrate_panels(
          [&](double t) {
            return std::pow(std::abs(f.phi(x, t) - f.phi(x, t + g)), p);
          },
          0.0, delta, panels) /
      delta;
  return std::pow(mean, 1.0 / p);
}

namespace {

// Least concave majorant through (0,0) of nondecreasing data, evaluated back
// on the grid.  Concavity plus w(0)=0 gives subadditivity.
std::vector<double> concave_majorant(const std::vector<double>& xs,
                                     const std::vector<double>& ys) {
  std::vector<double> hx{0.0}, hy{0.0};
  for (std::size_t i = 0; i < xs.size(); ++i) {
    hx.push_back(xs[i]);
    hy.push_back(ys[i]);
    // Upper hull: drop the middle point while it lies below the chord.
    while (hx.size() >= 3) {
      const std::size_t m = hx.size();
      const double cross =
          (hx[m - 2] - hx[m - 3]) * (hy[m - 1] - hy[m - 3]) -
          (hx[m - 1] - hx[m - 3]) * (hy[m - 2] - hy[m - 3]);
      if (cross < 0.0) break;
      hx.erase(hx.end() - 2);
      hy.erase(hy.end() - 2);
    }
  }
  std::vector<double> out(xs.size());
  std::size_t seg = 0;
  for (std::size_t i = 0; i < xs.size(); ++i) {
    while (seg + 1 < hx.size() && hx[seg + 1] < xs[i]) ++seg;
    const double x0 = hx[seg], y0 = hy[seg];
    const double x1 = hx[seg + 1], y1 = hy[seg + 1];
    out[i] = y0 + (y1 - y0) * (xs[i] - x0) / (x1 - x0);
  }
  return out;
}

}  // namespace

ModulusFunction fit_modulus(const APFunction& f, double x,
                            std::span<const double> delta_grid) {
  if (delta_grid.empty())
    throw std::invalid_argument("delta grid must be nonempty");
  std::vector<double> xs(delta_grid.begin(), delta_grid.end());
  std::vector<double> raw(xs.size(), 0.0);
  for (std::size_t i = 0; i < xs.size(); ++i) {
    double v = G_x_modulus(f, x, xs[i], 2.0, 1.0);
    for (double d : xs) {
      v = std::max(v, shifted_difference_average(f, x, d, xs[i], +1));
      v = std::max(v, shifted_difference_average(f, x, d, xs[i], -1));
    }
    raw[i] = v;
  }
  for (std::size_t i = 1; i < raw.size(); ++i)
    raw[i] = std::max(raw[i], raw[i - 1]);
  std::vector<double> values = concave_majorant(xs, raw);
  for (std::size_t i = 0; i < values.size(); ++i)
    values[i] = std::max(values[i], raw[i]);
  return ModulusFunction(std::move(xs), std::move(values));
}

std::vector<double> default_delta_grid() {
  // 25 log-spaced points from pi/512 to pi.
  std::vector<double> grid;
  constexpr int kCount = 25;
  for (int i = 0; i < kCount; ++i) {
    const double frac = static_cast<double>(i) / (kCount - 1);
    grid.push_back(M_PI * std::pow(1.0 / 512.0, 1.0 - frac));
  }
  return grid;
}

ApproxBracket best_approx_bracket(const APFunction& f, double sigma) {
  if (sigma < 0.0) throw std::invalid_argument("sigma must be >= 0");
  ApproxBracket b;
  b.sigma = sigma;
  for (const Term& t : f.terms()) {
    if (t.lambda <= sigma) continue;
    b.upper += std::abs(t.a_plus) + std::abs(t.a_minus);
    b.lower =
        std::max(b.lower, std::max(std::abs(t.a_plus), std::abs(t.a_minus)));
  }
  return b;
}

std::vector<MembershipRow> omega_alpha_membership_report(
    const APFunction& f, double x, const ModulusFunction& w,
    std::span<const double> gamma_grid, std::span<const double> delta_grid) {
  std::vector<MembershipRow> rows;
  auto ratio_of = [](double lhs, double wv) {
    return wv > 0.0 ? lhs / wv : (lhs > 0.0
                                      ? std::numeric_limits<double>::infinity()
                                      : 0.0);
  };
  for (double gamma : gamma_grid) {
    const double wv = w(gamma);
    for (double delta : delta_grid) {
      for (int sign : {+1, -1}) {
        MembershipRow r;
        r.kind = sign > 0 ? "shift+" : "shift-";
        r.gamma = gamma;
        r.delta = delta;
        r.lhs = shifted_difference_average(f, x, delta, gamma, sign);
        r.w_value = wv;
        r.ratio = ratio_of(r.lhs, wv);
        rows.push_back(std::move(r));
      }
    }
  }
  for (double delta : delta_grid) {
    MembershipRow r;
    r.kind = "G";
    r.delta = delta;
    r.lhs = G_x_modulus(f, x, delta, 2.0, 1.0);
    r.w_value = w(delta);
    r.ratio = ratio_of(r.lhs, r.w_value);
    rows.push_back(std::move(r));
  }
  return rows;
}

}  // namespace apsumma
