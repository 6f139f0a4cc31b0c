#pragma once

#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "reptile/exact/rational.hpp"

namespace reptile::gram {

using exact::Rational;

struct DegenerateSimplex : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

/// d+1 points in R^d with exact rational coordinates.
struct EuclideanSimplex {
  std::vector<std::vector<Rational>> vertices;

  EuclideanSimplex() = default;
  explicit EuclideanSimplex(std::vector<std::vector<Rational>> v);

  int dim() const { return static_cast<int>(vertices.size()) - 1; }
  Eigen::MatrixXd to_doubles() const;  // one vertex per column
  /// det[v1 - v0, ..., vd - v0], exact.
  Rational oriented_det() const;
  /// |oriented_det| / d!
  Rational volume() const;
  bool degenerate() const { return sgn(oriented_det()) == 0; }
  /// Squared distances between vertex pairs, row-major (d+1)^2.
  std::vector<Rational> squared_distances() const;
  std::string to_string() const;
};

}  // namespace reptile::gram
