#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "gex/complex.hpp"

namespace gex {

struct BettiVector {
  std::vector<std::int64_t> betti;  // beta_0..beta_kmax
  int coefficient_field = 2;

  std::string to_csv_row() const;
};

// beta_k = |F_k| - rank d_k - rank d_{k+1} over GF(p), via sparse column
// reduction. beta_0 is cross-checked against union-find on the 1-skeleton.
// Requires faces through dimension kmax+1 in the complex.
BettiVector betti(const ExcursionComplex& complex, int kmax, int p = 2);

// Rank of the boundary matrix d_dim : C_dim -> C_{dim-1} over GF(p).
std::int64_t boundary_rank(const ExcursionComplex& complex, int dim, int p);

}  // namespace gex
