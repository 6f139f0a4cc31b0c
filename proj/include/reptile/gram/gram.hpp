#pragma once

#include <optional>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "reptile/coxeter/diagram.hpp"
#include "reptile/exact/matrix.hpp"
#include "reptile/exact/sturm.hpp"
#include "reptile/gram/simplex.hpp"

namespace reptile::gram {

/// Matrix with -1 on the diagonal and cos(beta_ij) elsewhere. The exact form
/// lives in the narrowest ring that holds every entry; `numeric` is filled
/// whenever a numeric value can be formed (for polynomial entries this needs
/// a value of t).
struct GramMatrix {
  std::optional<exact::ExactMatrix> exact;
  std::optional<Eigen::MatrixXd> numeric;
  std::optional<double> t;  // value of the polynomial variable, when known
  bool fallback = false;    // exact entries could not share one ring
  std::string warning;

  std::size_t size() const;
};

/// Gram matrix of a diagram. `at` supplies numeric values for symbols that the
/// diagram's relations leave free; with polynomial entries the variable is
/// t = cos(beta).
GramMatrix gram_from_diagram(const coxeter::CoxeterDiagram& d, const std::optional<angles::AngleAssignment>& at = {});

/// Numeric Gram matrix from a matrix of dihedral angles (diagonal ignored).
GramMatrix gram_from_angles(const Eigen::MatrixXd& angles);

struct FiedlerReport {
  std::optional<exact::RingElement> det_exact;
  double det = 0;
  bool singular = false;
  int rank = -1;  // -1 when no numeric matrix was available
  bool negative_semidefinite = false;
  std::vector<double> eigenvalues;
  Eigen::VectorXd kernel;  // unit vector, signed so that its sum is >= 0
  bool kernel_positive = false;
  bool can_be_simplex = false;
  std::string verdict;
};

/// Singularity is decided exactly when an exact matrix exists; rank, sign and
/// kernel come from a symmetric eigen-decomposition at tolerance `tol`.
FiedlerReport fiedler_check(const GramMatrix& m, double tol = 1e-9);

struct ParametricReport {
  exact::Poly det;
  std::size_t roots_in_interval = 0;
  bool excluded = false;  // no root in the interval
  std::vector<exact::RootInterval> real_roots;
};

/// Determinant polynomial of a polynomial Gram matrix and its roots in the
/// open interval (lo, hi); all real roots are isolated to `precision`.
ParametricReport parametric_fiedler(const GramMatrix& m, const Rational& lo, const Rational& hi,
                                    const Rational& precision = Rational(1, 1000000));

/// Interior dihedral angles (radians) between facets; facet i is opposite
/// vertex i, the diagonal is pi. Uses gradients of barycentric coordinates.
Eigen::MatrixXd dihedral_angles(const EuclideanSimplex& s);

}  // namespace reptile::gram
