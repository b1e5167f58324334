// Random elements of the local-model groups.
#pragma once

#include <algorithm>
#include <random>

#include "ncsing/local_models.hpp"

namespace testgen {

inline ncsing::NonzeroRational randomScalar(std::mt19937_64& rng, int bound = 12) {
  std::uniform_int_distribution<int> num(-bound, bound), den(1, bound);
  int p = 0;
  while (p == 0) p = num(rng);
  return ncsing::NonzeroRational(ncsing::Rational(p) / ncsing::Rational(den(rng)));
}

inline ncsing::EdgeAut randomEdgeAut(std::mt19937_64& rng) {
  std::uniform_int_distribution<int> coin(0, 1), twist(-6, 6);
  return {coin(rng) ? 1 : -1, twist(rng), randomScalar(rng), randomScalar(rng), {coin(rng)}};
}

inline ncsing::TwoPerE randomTwoPerE(std::mt19937_64& rng) {
  return {randomScalar(rng), std::uniform_int_distribution<int>(-6, 6)(rng)};
}

inline ncsing::Permutation3 randomPermutation(std::mt19937_64& rng) {
  ncsing::Permutation3 p;
  std::shuffle(p.image.begin(), p.image.end(), rng);
  return p;
}

inline ncsing::VertexAut randomVertexAut(std::mt19937_64& rng) {
  return {{randomScalar(rng), randomScalar(rng), randomScalar(rng)},
          randomPermutation(rng),
          {std::uniform_int_distribution<int>(0, 1)(rng)}};
}

}  // namespace testgen
