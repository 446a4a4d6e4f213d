#include "apsumma/fixtures.hpp"

#include <cmath>
#include <random>

namespace apsumma {

namespace {

APFunction random_separated_sum(std::mt19937_64& rng, double alpha,
                                int n_terms) {
  std::uniform_real_distribution<double> unif(0.0, 1.0);
  std::vector<Term> terms;
  terms.push_back(Term{0.0, Complex{0.25 * unif(rng), 0.0}, {}});
  double lambda = alpha * (1.0 + unif(rng));
  double total = std::abs(terms[0].a_plus);
  for (int j = 1; j <= n_terms; ++j) {
    const double decay = 1.0 / static_cast<double>(j * j + 1);
    const Complex ap = std::polar(2.0 * decay * (0.5 + 0.5 * unif(rng)),
                                  2.0 * M_PI * unif(rng));
    const Complex am = std::polar(decay * unif(rng), 2.0 * M_PI * unif(rng));
    terms.push_back(Term{lambda, ap, am});
    total += std::abs(ap) + std::abs(am);
    lambda += alpha * (1.0 + unif(rng));
  }
  // Keep the total amplitude mass comfortably bounded.
  if (total > 10.0) {
    for (Term& t : terms) {
      t.a_plus *= 10.0 / total;
      t.a_minus *= 10.0 / total;
    }
  }
  return APFunction(std::move(terms), alpha);
}

}  // namespace

std::vector<Fixture> fixture_corpus(unsigned long long seed, int count) {
  std::vector<Fixture> out;
  out.push_back({"const1", APFunction({Term{0.0, {1.0, 0.0}, {}}}, 1.0)});
  out.push_back({"single_sqrt2",
                 APFunction({Term{0.0, {}, {}},
                             Term{std::sqrt(2.0), {3.0, 0.0}, {}}},
                            std::sqrt(2.0))});
  out.push_back({"cos1", APFunction({Term{0.0, {}, {}},
                                     Term{1.0, {0.5, 0.0}, {0.5, 0.0}}},
                                    1.0)});
  out.push_back({"twoterm",
                 APFunction({Term{0.0, {}, {}}, Term{1.0, {1.0, 0.0}, {}},
                             Term{3.0, {0.5, 0.0}, {}}},
                            1.0)});
  out.push_back(
      {"lacunary",
       APFunction({Term{0.0, {0.2, 0.0}, {}}, Term{1.0, {1.0, 0.0}, {0.25, 0.0}},
                   Term{3.0, {0.5, 0.0}, {0.125, 0.0}},
                   Term{7.0, {0.25, 0.0}, {}}, Term{15.0, {0.125, 0.0}, {}}},
                  1.0)});
  std::mt19937_64 rng(seed);
  for (int i = 0; static_cast<int>(out.size()) < count; ++i) {
    const double alpha = (i % 2 == 0) ? 1.0 : 1.5;
    out.push_back({"rand" + std::to_string(i + 1),
                   random_separated_sum(rng, alpha, 4 + (i % 3))});
  }
  return out;
}

}  // namespace apsumma
