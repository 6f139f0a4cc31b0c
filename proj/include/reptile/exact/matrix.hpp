#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <variant>
#include <vector>

#include "reptile/exact/poly.hpp"
#include "reptile/exact/quadext.hpp"
#include "reptile/exact/rational.hpp"

namespace reptile::exact {

struct RingMismatch : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

enum class Ring { rational, polynomial, quadratic };

using RingElement = std::variant<Rational, Poly, QuadExt>;

std::string to_string(const RingElement& x);

/// Numeric value of a ring element. Polynomials are evaluated at t.
double to_double(const RingElement& x, double t = 0.0);

// Ring traits used by the fraction-free elimination below.
inline bool is_zero(const Rational& x) { return sgn(x) == 0; }
inline bool is_zero(const Poly& x) { return x.is_zero(); }
inline bool is_zero(const QuadExt& x) { return x.is_zero(); }
inline Rational exact_quotient(const Rational& a, const Rational& b) { return a / b; }
inline Poly exact_quotient(const Poly& a, const Poly& b) { return exact_div(a, b); }
inline QuadExt exact_quotient(const QuadExt& a, const QuadExt& b) { return a / b; }

/// Determinant of a dense row-major n x n matrix by Bareiss elimination. Every
/// division is exact in an integral domain, so no fractions of ring elements
/// appear; rows are swapped when a pivot vanishes.
template <class T>
T bareiss_det(std::vector<T> a, std::size_t n, const T& one, const T& zero) {
  if (a.size() != n * n) throw std::invalid_argument("bareiss_det: matrix is not square");
  if (n == 0) return one;
  auto at = [&](std::size_t i, std::size_t j) -> T& { return a[i * n + j]; };
  bool negate = false;
  T prev = one;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (is_zero(at(k, k))) {
      std::size_t r = k + 1;
      while (r < n && is_zero(at(r, k))) ++r;
      if (r == n) return zero;
      for (std::size_t j = 0; j < n; ++j) std::swap(at(k, j), at(r, j));
      negate = !negate;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        T num = at(i, j) * at(k, k) - at(i, k) * at(k, j);
        at(i, j) = exact_quotient(num, prev);
      }
    }
    prev = at(k, k);
  }
  T d = at(n - 1, n - 1);
  return negate ? zero - d : d;
}

/// Square matrix whose entries all live in one exact ring: Q, Q[t] or Q(sqrt m).
class ExactMatrix {
 public:
  ExactMatrix() = default;
  ExactMatrix(std::size_t n, std::vector<RingElement> entries);
  static ExactMatrix identity(std::size_t n);

  std::size_t size() const { return n_; }
  const RingElement& operator()(std::size_t i, std::size_t j) const { return entries_[i * n_ + j]; }
  RingElement& operator()(std::size_t i, std::size_t j) { return entries_[i * n_ + j]; }
  const std::vector<RingElement>& entries() const { return entries_; }

  /// Ring shared by every entry; throws RingMismatch for mixed rings or mixed
  /// quadratic fields.
  Ring ring() const;
  /// Field tag for quadratic matrices, 0 otherwise.
  long field() const;

  RingElement det() const;
  ExactMatrix operator*(const ExactMatrix& o) const;

  std::vector<double> to_doubles(double t = 0.0) const;

 private:
  std::size_t n_ = 0;
  std::vector<RingElement> entries_;
};

/// Free-function form of ExactMatrix::det.
inline RingElement det(const ExactMatrix& m) { return m.det(); }

}  // namespace reptile::exact
