#pragma once

#include <random>

#include "heiscurve/words.hpp"

namespace heis::testutil {

/// Deterministic reduced word of length <= max_len.
inline FreeWord random_word(std::mt19937& rng, int rank, int max_len) {
  std::uniform_int_distribution<int> len_dist(0, max_len);
  std::uniform_int_distribution<int> gen_dist(0, rank - 1);
  std::uniform_int_distribution<int> sign_dist(0, 1);
  int len = len_dist(rng);
  FreeWord w(rank);
  for (int t = 0; t < len; ++t) {
    int g = gen_dist(rng);
    int e = sign_dist(rng) ? 1 : -1;
    w = multiply(w, FreeWord::generator(rank, g, e));
  }
  return w;
}

}  // namespace heis::testutil
