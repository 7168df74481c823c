#pragma once

#include <random>
#include <vector>

#include "gk/series.hpp"
#include "gk/tableaux.hpp"

namespace gk::testing {

/// Every element of T(infinity) with height(-wt) <= cap.
inline std::vector<MLTableau> domain(int r, int cap) {
  return enumerate_crystal(Rank(r), cap, Strategy::direct);
}

/// Random element with each count drawn from 0..max_count.
inline MLTableau random_tableau(std::mt19937& rng, int r, int max_count) {
  std::uniform_int_distribution<int> dist(0, max_count);
  MLTableau b{Rank(r)};
  for (int j = 1; j <= r; ++j)
    for (int k = j + 1; k <= r + 1; ++k) b.set_count(j, k, dist(rng));
  return b;
}

}  // namespace gk::testing
