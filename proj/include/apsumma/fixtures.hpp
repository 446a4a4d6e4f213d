#pragma once

#include <string>
#include <utility>
#include <vector>

#include "apsumma/apfun.hpp"

namespace apsumma {

struct Fixture {
  std::string id;
  APFunction f;
};

// Deterministic corpus: constant, single exponential, cosine, a two/three
// term sum, a lacunary-style sum, and seeded random alpha-separated sums.
// Total amplitude mass stays <= 10 for every function.
std::vector<Fixture> fixture_corpus(unsigned long long seed = 1, int count = 8);

}  // namespace apsumma
