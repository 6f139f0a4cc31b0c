#pragma once

#include <cstddef>
#include <vector>

#include "reptile/exact/poly.hpp"

namespace reptile::exact {

/// Sturm chain of the square-free part of p.
std::vector<Poly> sturm_sequence(const Poly& p);

/// Number of distinct real roots of p in the open interval (lo, hi).
/// Multiplicities are ignored. Throws std::invalid_argument for the zero
/// polynomial or lo >= hi.
std::size_t sturm_count(const Poly& p, const Rational& lo, const Rational& hi);

/// Number of distinct real roots of p on the whole real line.
std::size_t count_real_roots(const Poly& p);

/// Open isolating interval (lo, hi) holding exactly one root, or the degenerate
/// interval lo == hi when the root is rational and was hit exactly.
struct RootInterval {
  Rational lo;
  Rational hi;
  bool exact() const { return lo == hi; }
  Rational midpoint() const { return (lo + hi) / 2; }
};

/// Strict bound: every real root r of p has |r| < root_bound(p).
Rational root_bound(const Poly& p);

/// One interval per distinct real root, sorted ascending, each of width at most
/// `precision`.
std::vector<RootInterval> isolate_roots(const Poly& p, const Rational& precision);

/// As above but restricted to roots in the open interval (lo, hi).
std::vector<RootInterval> isolate_roots(const Poly& p, const Rational& lo, const Rational& hi,
                                        const Rational& precision);

}  // namespace reptile::exact
