#include "reptile/gram/gram.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <set>
#include <stdexcept>

namespace reptile::gram {

using angles::CosValue;
using exact::ExactMatrix;
using exact::Poly;
using exact::QuadExt;
using exact::RingElement;

std::size_t GramMatrix::size() const {
  if (exact) return exact->size();
  if (numeric) return static_cast<std::size_t>(numeric->rows());
  return 0;
}

namespace {

Eigen::MatrixXd to_eigen(const ExactMatrix& m, double t) {
  auto v = m.to_doubles(t);
  auto n = static_cast<Eigen::Index>(m.size());
  Eigen::MatrixXd out(n, n);
  for (Eigen::Index i = 0; i < n; ++i)
    for (Eigen::Index j = 0; j < n; ++j) out(i, j) = v[i * n + j];
  return out;
}

}  // namespace

GramMatrix gram_from_diagram(const coxeter::CoxeterDiagram& d, const std::optional<angles::AngleAssignment>& at) {
  const auto& r = d.relations();
  const int n = d.size();
  GramMatrix g;
  angles::AngleAssignment a = at ? *at : angles::assignment_from(r);
  if (!a.alpha || !a.beta || !a.gamma) {
    auto base = angles::assignment_from(r);
    if (!a.alpha) a.alpha = base.alpha;
    if (!a.beta) a.beta = base.beta;
    if (!a.gamma) a.gamma = base.gamma;
  }
  if (a.beta) g.t = std::cos(*a.beta);

  // exact cosines where possible
  std::vector<std::optional<CosValue>> cv(static_cast<std::size_t>(n) * n);
  bool all_exact = true, any_poly = false;
  std::set<long> fields;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) {
        cv[i * n + j] = CosValue(Rational(-1));
        continue;
      }
      try {
        cv[i * n + j] = angles::exact_cos(d.label(i, j), r);
      } catch (const angles::NoExactCosine&) {
        all_exact = false;
        continue;
      }
      if (auto* q = std::get_if<QuadExt>(&*cv[i * n + j])) {
        if (!q->is_rational()) fields.insert(q->field());
      }
      any_poly = any_poly || std::holds_alternative<Poly>(*cv[i * n + j]);
    }

  if (all_exact && fields.size() <= 1 && !(any_poly && !fields.empty())) {
    long m = fields.empty() ? 0 : *fields.begin();
    std::vector<RingElement> e;
    for (const auto& c : cv) {
      const CosValue& x = *c;
      if (any_poly) {
        if (auto* q = std::get_if<Rational>(&x)) e.emplace_back(Poly(*q));
        else if (auto* qe = std::get_if<QuadExt>(&x)) e.emplace_back(Poly(qe->a()));
        else e.emplace_back(std::get<Poly>(x));
      } else if (m != 0) {
        if (auto* q = std::get_if<Rational>(&x)) e.emplace_back(QuadExt::rational(*q, m));
        else {
          const auto& qe = std::get<QuadExt>(x);
          e.emplace_back(qe.is_rational() ? QuadExt::rational(qe.a(), m) : qe);
        }
      } else {
        if (auto* q = std::get_if<Rational>(&x)) e.emplace_back(*q);
        else e.emplace_back(std::get<QuadExt>(x).a());
      }
    }
    g.exact = ExactMatrix(static_cast<std::size_t>(n), std::move(e));
    if (!any_poly) g.numeric = to_eigen(*g.exact, 0.0);
    else if (g.t) g.numeric = to_eigen(*g.exact, *g.t);
    return g;
  }

  // no common exact ring: binary64
  g.fallback = true;
  g.warning = all_exact ? "entries span several quadratic fields; using binary64"
                        : "some cosines have no exact form; using binary64";
  Eigen::MatrixXd num(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) {
        num(i, j) = -1;
        continue;
      }
      try {
        num(i, j) = std::cos(angles::eval(d.label(i, j), a));
      } catch (const angles::MissingSymbol&) {
        g.warning += "; unassigned symbol, no numeric matrix";
        return g;
      }
    }
  g.numeric = num;
  return g;
}

GramMatrix gram_from_angles(const Eigen::MatrixXd& ang) {
  if (ang.rows() != ang.cols()) throw std::invalid_argument("gram_from_angles: matrix is not square");
  GramMatrix g;
  Eigen::MatrixXd m = ang.array().cos().matrix();
  m.diagonal().setConstant(-1);
  g.numeric = m;
  return g;
}

FiedlerReport fiedler_check(const GramMatrix& m, double tol) {
  FiedlerReport rep;
  if (m.exact) {
    rep.det_exact = m.exact->det();
    rep.singular = std::visit([](const auto& x) { return exact::is_zero(x); }, *rep.det_exact);
    if (m.t || !std::holds_alternative<Poly>(*rep.det_exact)) rep.det = exact::to_double(*rep.det_exact, m.t.value_or(0.0));
  }
  if (!m.numeric) {
    rep.verdict = rep.singular ? "singular; no numeric matrix for the sign test" : "nonsingular";
    return rep;
  }
  const Eigen::MatrixXd& a = *m.numeric;
  if (!m.exact) {
    rep.det = a.determinant();
  }
  Eigen::SelfAdjointEigenSolver<Eigen::MatrixXd> es(a);
  const auto& ev = es.eigenvalues();
  rep.eigenvalues.assign(ev.data(), ev.data() + ev.size());
  rep.rank = 0;
  Eigen::Index k0 = 0;
  for (Eigen::Index i = 0; i < ev.size(); ++i) {
    if (std::abs(ev[i]) > tol) ++rep.rank;
    if (std::abs(ev[i]) < std::abs(ev[k0])) k0 = i;
  }
  if (!m.exact) rep.singular = rep.rank < a.rows();
  rep.negative_semidefinite = ev.maxCoeff() <= tol;
  rep.kernel = es.eigenvectors().col(k0);
  if (rep.kernel.sum() < 0) rep.kernel = -rep.kernel;
  rep.kernel_positive = rep.singular && (rep.kernel.array() > tol).all();
  rep.can_be_simplex = rep.singular && rep.rank == a.rows() - 1 && rep.negative_semidefinite && rep.kernel_positive;
  if (!rep.singular) rep.verdict = "nonsingular: not a Euclidean simplex";
  else if (rep.rank != a.rows() - 1) rep.verdict = "kernel has dimension > 1";
  else if (!rep.negative_semidefinite) rep.verdict = "has a positive eigenvalue";
  else if (!rep.kernel_positive) rep.verdict = "kernel vector is not positive";
  else rep.verdict = "passes";
  return rep;
}

ParametricReport parametric_fiedler(const GramMatrix& m, const Rational& lo, const Rational& hi,
                                    const Rational& precision) {
  if (!m.exact || m.exact->ring() != exact::Ring::polynomial)
    throw std::invalid_argument("parametric_fiedler: needs a polynomial Gram matrix");
  ParametricReport rep;
  rep.det = std::get<Poly>(m.exact->det());
  if (rep.det.is_zero()) throw std::invalid_argument("parametric_fiedler: determinant vanishes identically");
  rep.real_roots = exact::isolate_roots(rep.det, precision);
  rep.roots_in_interval = exact::sturm_count(rep.det, lo, hi);
  rep.excluded = rep.roots_in_interval == 0;
  return rep;
}

Eigen::MatrixXd dihedral_angles(const EuclideanSimplex& s) {
  const int d = s.dim();
  if (s.degenerate()) throw DegenerateSimplex("dihedral_angles: degenerate simplex " + s.to_string());
  Eigen::MatrixXd v = s.to_doubles();
  Eigen::MatrixXd e(d, d);
  for (int j = 0; j < d; ++j) e.col(j) = v.col(j + 1) - v.col(0);
  // rows of e^{-1} are gradients of barycentric coordinates 1..d
  Eigen::MatrixXd inv = e.inverse();
  std::vector<Eigen::VectorXd> g(d + 1);
  g[0] = Eigen::VectorXd::Zero(d);
  for (int i = 1; i <= d; ++i) {
    g[i] = inv.row(i - 1).transpose();
    g[0] -= g[i];
  }
  Eigen::MatrixXd out(d + 1, d + 1);
  for (int i = 0; i <= d; ++i)
    for (int j = 0; j <= d; ++j) {
      if (i == j) {
        out(i, j) = std::numbers::pi;
        continue;
      }
      double c = -g[i].dot(g[j]) / (g[i].norm() * g[j].norm());
      out(i, j) = std::acos(std::clamp(c, -1.0, 1.0));
    }
  return out;
}

}  // namespace reptile::gram
