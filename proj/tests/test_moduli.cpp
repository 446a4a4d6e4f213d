#include <cmath>

#include <doctest.h>

#include "apsumma/fixtures.hpp"
#include "apsumma/moduli.hpp"

using namespace apsumma;

namespace {

APFunction cosine() {
  return APFunction({Term{0.0, {}, {}}, Term{1.0, {0.5, 0.0}, {0.5, 0.0}}},
                    1.0);
}

APFunction constant(double v) {
  return APFunction({Term{0.0, {v, 0.0}, {}}}, 1.0);
}

// \int 2(1 - cos t) dt = 2(t - sin t): closed-form oracle for |phi| blocks of
// the cosine at x = 0.
double cos_block_integral(double a, double b) {
  return 2.0 * ((b - std::sin(b)) - (a - std::sin(a)));
}

}  // namespace

TEST_CASE("ModulusFunction evaluation and validation") {
  const ModulusFunction w({0.5, 1.0, 2.0}, {0.25, 0.5, 0.6});
  CHECK(w(0.0) == 0.0);
  CHECK(w(-1.0) == 0.0);
  CHECK(w(0.25) == doctest::Approx(0.125));  // chord through (0, 0)
  CHECK(w(0.75) == doctest::Approx(0.375));
  CHECK(w(2.0) == doctest::Approx(0.6));
  CHECK(w(5.0) == doctest::Approx(0.6 * 3));  // ceil(5/2) copies of w(dmax)

  CHECK_THROWS_AS(ModulusFunction({1.0, 0.5}, {0.1, 0.2}),
                  std::invalid_argument);
  CHECK_THROWS_AS(ModulusFunction({0.5, 1.0}, {0.2, 0.1}),
                  std::invalid_argument);
  CHECK_THROWS_AS(ModulusFunction({0.5}, {0.1, 0.2}), std::invalid_argument);
  CHECK(ModulusFunction({1.0}, {0.0}).zero());
}

TEST_CASE("omega_modulus") {
  CHECK(omega_modulus(cosine(), 0.0, kInfinityP) == 0.0);
  CHECK(omega_modulus(cosine(), M_PI, kInfinityP) ==
        doctest::Approx(2.0).epsilon(1e-3));
  // omega <= 2 ||f||_{S^p} and nondecreasing in delta on the nested grid.
  const APFunction f = fixture_corpus()[3].f;
  double prev = 0.0;
  for (double d : {0.1, 0.5, 1.0, 2.0}) {
    const double v = omega_modulus(f, d, 1.0);
    CHECK(v + 1e-12 >= prev);
    CHECK(v <= 2.0 * stepanov_norm(f, 1.0) * (1.0 + 1e-6) + 1e-9);
    prev = v;
  }
}

TEST_CASE("w_x_modulus closed-form cases") {
  // cos, x=0, p=1, delta=pi: (1/pi) int_0^pi 2(1-cos t) = 2.
  CHECK(w_x_modulus(cosine(), 0.0, M_PI, 1.0) ==
        doctest::Approx(2.0).epsilon(1e-9));
  CHECK(w_x_modulus(constant(3.0), 1.0, 0.7, 1.0) == doctest::Approx(0.0));
  CHECK(w_x_modulus(cosine(), M_PI / 2.0, 1.3, 2.0) ==
        doctest::Approx(0.0).epsilon(1e-12));
  CHECK_THROWS_AS(w_x_modulus(cosine(), 0.0, 0.0, 1.0), std::invalid_argument);
}

TEST_CASE("w_x_modulus is continuous in delta") {
  for (const Fixture& fx : fixture_corpus(1, 6)) {
    const double tol = 1e-6 * (1.0 + fx.f.amplitude_sum());
    for (double d : {0.3, 1.1}) {
      const double v = w_x_modulus(fx.f, 0.8, d, 1.0);
      CHECK(std::abs(w_x_modulus(fx.f, 0.8, d + 1e-8, 1.0) - v) < tol);
    }
  }
}

TEST_CASE("G_x_modulus") {
  CHECK(G_x_modulus(constant(2.0), 0.0, 0.5, 2.0, 1.0) == doctest::Approx(0.0));

  // delta >= pi/alpha: single k=0 block equals w_x.
  const double d = 1.1 * M_PI;
  CHECK(G_x_modulus(cosine(), 0.0, d, 2.0, 1.0) ==
        doctest::Approx(w_x_modulus(cosine(), 0.0, d, 1.0)).epsilon(1e-12));

  // cos, x=0, alpha=1, delta=pi/2, s=2, p=1 against closed-form block
  // integrals over k = 0..2.
  const double delta = M_PI / 2.0;
  double sum = 0.0;
  for (int k = 0; k <= 2; ++k) {
    const double mean =
        cos_block_integral(k * delta, (k + 1) * delta) / ((k + 1) * delta);
    sum += mean * mean;
  }
  CHECK(G_x_modulus(cosine(), 0.0, delta, 2.0, 1.0) ==
        doctest::Approx(std::sqrt(sum)).epsilon(1e-9));
}

TEST_CASE("phi_mean closed form") {
  CHECK(std::abs(phi_mean(constant(1.0), 0.3, 0.9, 0.2)) == 0.0);
  // cos, x=0: (1/delta) int_nu^{nu+delta} 2(cos u - 1) du.
  const double delta = 0.7, nu = 0.4;
  const double expect =
      (2.0 * (std::sin(nu + delta) - std::sin(nu)) - 2.0 * delta) / delta;
  CHECK(phi_mean(cosine(), 0.0, delta, nu).real() ==
        doctest::Approx(expect).epsilon(1e-12));

  // Oracle: quadrature-free mean matches a fine Riemann sum of phi.
  const APFunction f = fixture_corpus()[4].f;
  Complex riemann{0.0, 0.0};
  constexpr int kN = 20000;
  for (int i = 0; i < kN; ++i)
    riemann += f.phi(1.1, nu + delta * (i + 0.5) / kN);
  riemann /= static_cast<double>(kN);
  CHECK(std::abs(phi_mean(f, 1.1, delta, nu) - riemann) < 1e-6);
}

TEST_CASE("shifted_difference_average basic properties") {
  CHECK(shifted_difference_average(constant(1.0), 0.0, 0.5, 0.3, +1) == 0.0);
  // gamma = 0 shifts nothing.
  CHECK(shifted_difference_average(cosine(), 0.0, 0.5, 0.0, +1) ==
        doctest::Approx(0.0));
  CHECK(shifted_difference_average(cosine(), 0.0, 0.5, 0.2, +1) > 0.0);
}

TEST_CASE("fit_modulus") {
  const std::vector<double> dgrid = default_delta_grid();
  CHECK(fit_modulus(constant(2.5), 0.0, dgrid).zero());

  const ModulusFunction w = fit_modulus(cosine(), 0.0, dgrid);
  double prev = 0.0;
  for (std::size_t i = 0; i < dgrid.size(); ++i) {
    const double v = w(dgrid[i]);
    CHECK(v + 1e-12 >= prev);
    prev = v;
    // Dominates the measured block modulus, hence w_x as its first block.
    CHECK(v + 1e-12 >= G_x_modulus(cosine(), 0.0, dgrid[i], 2.0, 1.0));
    CHECK(v + 1e-12 >= w_x_modulus(cosine(), 0.0, dgrid[i], 1.0));
  }
  // Subadditivity via concavity: w(a + b) <= w(a) + w(b) on grid pairs.
  for (double a : {dgrid[3], dgrid[10], dgrid[20]})
    for (double b : {dgrid[5], dgrid[15]})
      CHECK(w(a + b) <= w(a) + w(b) + 1e-12);
}

TEST_CASE("best_approx_bracket") {
  const APFunction f2(
      {Term{0.0, {}, {}}, Term{1.0, {1.0, 0.0}, {}}, Term{3.0, {0.5, 0.0}, {}}},
      2.0);
  const ApproxBracket t = best_approx_bracket(f2, 2.0);
  CHECK(t.lower == doctest::Approx(0.5));
  CHECK(t.upper == doctest::Approx(0.5));  // single dropped term: tight
  CHECK(best_approx_bracket(f2, 5.0).upper == 0.0);
  CHECK(best_approx_bracket(f2, 3.0).upper == 0.0);  // sigma >= lambda_max

  const APFunction f3(
      {Term{0.0, {}, {}}, Term{1.0, {1.0, 0.0}, {}}, Term{3.0, {0.5, 0.0}, {}},
       Term{5.0, {0.25, 0.0}, {}}},
      2.0);
  const ApproxBracket b = best_approx_bracket(f3, 2.0);
  CHECK(b.lower == doctest::Approx(0.5));
  CHECK(b.upper == doctest::Approx(0.75));

  // Bracket ends are nonincreasing in sigma and always ordered.
  for (const Fixture& fx : fixture_corpus()) {
    double prev_up = std::numeric_limits<double>::infinity();
    for (double sigma : {0.0, 0.5, 1.5, 4.0, 20.0}) {
      const ApproxBracket bb = best_approx_bracket(fx.f, sigma);
      CHECK(bb.lower <= bb.upper + 1e-15);
      CHECK(bb.upper <= prev_up + 1e-15);
      prev_up = bb.upper;
    }
  }
}

TEST_CASE("omega_alpha_membership_report") {
  const std::vector<double> dgrid = default_delta_grid();
  const std::vector<double> ggrid{dgrid[6], dgrid[12], dgrid[18], dgrid[24]};

  // Constant function: every measurement and ratio is zero.
  const ModulusFunction wz = fit_modulus(constant(1.0), 0.0, dgrid);
  for (const MembershipRow& r :
       omega_alpha_membership_report(constant(1.0), 0.0, wz, ggrid, dgrid)) {
    CHECK(r.lhs == 0.0);
    CHECK(r.ratio == 0.0);
  }

  // Fitted modulus: all ratios bounded by 1 by construction.
  const APFunction f = cosine();
  const ModulusFunction w = fit_modulus(f, 0.0, dgrid);
  for (const MembershipRow& r :
       omega_alpha_membership_report(f, 0.0, w, ggrid, dgrid))
    CHECK(r.ratio <= 1.0 + 1e-9);

  // Doubling the modulus halves every defined ratio.
  std::vector<double> doubled = w.values();
  for (double& v : doubled) v *= 2.0;
  const ModulusFunction w2(w.grid(), doubled);
  const auto base = omega_alpha_membership_report(f, 0.0, w, ggrid, dgrid);
  const auto twice = omega_alpha_membership_report(f, 0.0, w2, ggrid, dgrid);
  for (std::size_t i = 0; i < base.size(); ++i)
    if (base[i].ratio > 0.0)
      CHECK(twice[i].ratio == doctest::Approx(0.5 * base[i].ratio));
}
