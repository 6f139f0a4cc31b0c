#include "reptile/realize/candidates.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <sstream>

namespace reptile::realize {

std::string EdgeCombo::to_string() const {
  std::ostringstream os;
  bool first = true;
  auto term = [&](int c, const char* name) {
    if (c == 0) return;
    if (!first) os << " + ";
    if (c != 1) os << c << "*";
    os << name;
    first = false;
  };
  term(i, "a");
  term(j, "b");
  term(k, "c");
  if (first) os << "0";
  return os.str();
}

EdgeMatch edge_combination(double x, const std::array<double, 3>& e, int bound, double tol) {
  EdgeMatch m;
  m.x = x;
  double best_below = 10, best_above = 10;
  for (int i = 0; i < bound; ++i)
    for (int j = 0; j < bound - i; ++j)
      for (int k = 0; k < bound - i - j; ++k) {
        double len = i * e[0] + j * e[1] + k * e[2];
        double t = x - len;
        if (-tol <= t && t <= best_below) {
          best_below = t;
          m.below = EdgeCombo{i, j, k, len};
        }
        if (-tol <= -t && -t <= best_above) {
          best_above = -t;
          m.above = EdgeCombo{i, j, k, len};
        }
      }
  if (m.below && std::abs(best_below) <= tol) {
    m.matched = true;
    m.match = *m.below;
  }
  if (m.matched) {
    m.below.reset();
    m.above.reset();
  }
  return m;
}

std::array<Rational, 3> Candidate::type() const {
  std::array<Rational, 3> t{tau, small_value, large_value};
  std::sort(t.begin(), t.end());
  return t;
}

std::string Candidate::to_string(const std::string& tau_name) const {
  std::ostringstream os;
  os << "n=" << n << " (" << tau_name << ", " << small.to_string() << ", " << large.to_string() << ") x=" << edge.x;
  if (edge.matched) {
    os << " = " << edge.match.to_string();
  } else {
    os << " in (" << (edge.below ? edge.below->to_string() : "-") << ", "
       << (edge.above ? edge.above->to_string() : "-") << ")";
  }
  return os.str();
}

std::vector<Candidate> enumerate_candidates(const TileSpec& tile, const Rational& tau, const Rational& phi_min) {
  const Rational& x = tile.angles[0];
  const Rational& y = tile.angles[1];
  const Rational& z = tile.angles[2];
  const Rational S = tile.area();
  const auto edges = tile.edges();
  const double tau_rad = tau.get_d() * std::numbers::pi;
  std::vector<Candidate> out;
  std::set<std::pair<Rational, Rational>> visited;

  auto floor_div = [](const Rational& a, const Rational& b) -> long {
    if (sgn(a) < 0) return -1;
    Rational q = a / b;
    exact::Integer f = q.get_num() / q.get_den();
    return f.get_si();
  };

  auto split = [&](int n, int k, int l, int m) {
    for (int i = 0; i <= k; ++i)
      for (int j = 0; j <= l; ++j)
        for (int kk = 0; kk <= m; ++kk) {
          Rational psi = i * x + j * y + kk * z;
          Rational phi = (k - i) * x + (l - j) * y + (m - kk) * z;
          std::array<Rational, 3> L{psi, phi, tau};
          std::sort(L.begin(), L.end());
          if (sgn(psi) > 0 && psi <= phi && phi < 1 && L[1] + L[2] < 1 + L[0] && phi_min < psi &&
              !visited.count({psi, phi})) {
            visited.insert({psi, phi});
            Candidate c;
            c.n = n;
            c.tau = tau;
            c.small = {i, j, kk};
            c.large = {k - i, l - j, m - kk};
            c.small_value = psi;
            c.large_value = phi;
            double ps = psi.get_d() * std::numbers::pi, ph = phi.get_d() * std::numbers::pi;
            double cx = (std::cos(tau_rad) + std::cos(ps) * std::cos(ph)) / (std::sin(ps) * std::sin(ph));
            double len = std::acos(std::clamp(cx, -1.0, 1.0));
            c.edge = edge_combination(len, edges, tile.coeff_bound, tile.tol);
            out.push_back(c);
          }
        }
  };

  for (int n = 2; n * S < 2 * tau; ++n) {
    Rational rhs = n * S + 1 - tau;
    for (long k = 0; k <= floor_div(rhs, x); ++k)
      for (long l = 0; l <= floor_div(rhs - k * x, y); ++l)
        for (long m = 0; m <= floor_div(rhs - k * x - l * y, z); ++m)
          if (k * x + l * y + m * z == rhs) split(n, static_cast<int>(k), static_cast<int>(l), static_cast<int>(m));
  }
  return out;
}

}  // namespace reptile::realize
