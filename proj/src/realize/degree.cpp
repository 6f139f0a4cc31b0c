#include "reptile/realize/degree.hpp"

#include <stdexcept>

namespace reptile::realize {

DegreeReport algebraic_degree(long k, int d) {
  if (k < 2 || d < 2) throw std::invalid_argument("algebraic_degree: need k >= 2 and d >= 2");
  exact::Integer K(k), root;
  int s = 1;
  for (int e = d; e >= 1; --e) {
    if (d % e != 0) continue;
    if (mpz_root(root.get_mpz_t(), K.get_mpz_t(), static_cast<unsigned long>(e)) != 0) {
      s = e;
      break;
    }
  }
  DegreeReport r;
  r.k = k;
  r.d = d;
  r.degree = d / s;
  r.min_edge_lengths = r.degree;
  return r;
}

}  // namespace reptile::realize
