#pragma once

#include "reptile/exact/rational.hpp"

namespace reptile::realize {

struct DegreeReport {
  long k = 0;
  int d = 0;
  int degree = 0;            // degree of k^(1/d) over Q
  int min_edge_lengths = 0;  // lower bound on distinct edge lengths
};

/// Degree of the real number k^(1/d): d/s for the largest s | d such that k is
/// a perfect s-th power (x^(d/s) - k^(1/s) is then irreducible because k > 0).
/// Throws std::invalid_argument for k < 2 or d < 2.
DegreeReport algebraic_degree(long k, int d);

}  // namespace reptile::realize
