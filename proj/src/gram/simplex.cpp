#include "reptile/gram/simplex.hpp"

#include "reptile/exact/matrix.hpp"

namespace reptile::gram {

EuclideanSimplex::EuclideanSimplex(std::vector<std::vector<Rational>> v) : vertices(std::move(v)) {
  if (vertices.size() < 2) throw std::invalid_argument("EuclideanSimplex: need at least two vertices");
  for (const auto& p : vertices)
    if (static_cast<int>(p.size()) != dim())
      throw std::invalid_argument("EuclideanSimplex: d+1 vertices must live in R^d");
}

Eigen::MatrixXd EuclideanSimplex::to_doubles() const {
  Eigen::MatrixXd m(dim(), dim() + 1);
  for (int j = 0; j <= dim(); ++j)
    for (int i = 0; i < dim(); ++i) m(i, j) = vertices[j][i].get_d();
  return m;
}

Rational EuclideanSimplex::oriented_det() const {
  int d = dim();
  std::vector<Rational> a(static_cast<std::size_t>(d) * d);
  for (int i = 0; i < d; ++i)
    for (int j = 0; j < d; ++j) a[i * d + j] = vertices[j + 1][i] - vertices[0][i];
  return exact::bareiss_det(a, d, Rational(1), Rational(0));
}

Rational EuclideanSimplex::volume() const {
  Rational v = abs(oriented_det());
  for (int k = 2; k <= dim(); ++k) v /= k;
  return v;
}

std::vector<Rational> EuclideanSimplex::squared_distances() const {
  std::size_t n = vertices.size();
  std::vector<Rational> out(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Rational s = 0;
      for (int k = 0; k < dim(); ++k) {
        Rational t = vertices[i][k] - vertices[j][k];
        s += t * t;
      }
      out[i * n + j] = s;
    }
  return out;
}

std::string EuclideanSimplex::to_string() const {
  std::string s = "{";
  for (std::size_t i = 0; i < vertices.size(); ++i) {
    s += i ? ", (" : "(";
    for (std::size_t k = 0; k < vertices[i].size(); ++k) s += (k ? "," : "") + vertices[i][k].get_str();
    s += ")";
  }
  return s + "}";
}

}  // namespace reptile::gram
