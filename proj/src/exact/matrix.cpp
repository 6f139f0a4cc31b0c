#include "reptile/exact/matrix.hpp"

namespace reptile::exact {

std::string to_string(const RingElement& x) {
  return std::visit(
      [](const auto& v) -> std::string {
        using V = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<V, Rational>) return v.get_str();
        else return v.to_string();
      },
      x);
}

double to_double(const RingElement& x, double t) {
  return std::visit(
      [t](const auto& v) -> double {
        using V = std::decay_t<decltype(v)>;
        if constexpr (std::is_same_v<V, Rational>) return v.get_d();
        else if constexpr (std::is_same_v<V, Poly>) return v.eval(t);
        else return v.to_double();
      },
      x);
}

ExactMatrix::ExactMatrix(std::size_t n, std::vector<RingElement> entries) : n_(n), entries_(std::move(entries)) {
  if (entries_.size() != n * n) throw std::invalid_argument("ExactMatrix: expected n*n entries");
  if (n_ > 0) ring();
}

ExactMatrix ExactMatrix::identity(std::size_t n) {
  std::vector<RingElement> e(n * n, Rational(0));
  for (std::size_t i = 0; i < n; ++i) e[i * n + i] = Rational(1);
  return ExactMatrix(n, std::move(e));
}

Ring ExactMatrix::ring() const {
  if (entries_.empty()) return Ring::rational;
  std::size_t idx = entries_.front().index();
  long m = 0;
  for (const auto& e : entries_) {
    if (e.index() != idx) throw RingMismatch("ExactMatrix: entries from different rings");
    if (const auto* q = std::get_if<QuadExt>(&e)) {
      if (m == 0) m = q->field();
      else if (q->field() != m) throw RingMismatch("ExactMatrix: entries from different quadratic fields");
    }
  }
  return static_cast<Ring>(idx);
}

long ExactMatrix::field() const {
  if (ring() != Ring::quadratic) return 0;
  return std::get<QuadExt>(entries_.front()).field();
}

namespace {

template <class T>
std::vector<T> unwrap(const std::vector<RingElement>& e) {
  std::vector<T> out;
  out.reserve(e.size());
  for (const auto& x : e) out.push_back(std::get<T>(x));
  return out;
}

}  // namespace

RingElement ExactMatrix::det() const {
  switch (ring()) {
    case Ring::rational:
      return bareiss_det(unwrap<Rational>(entries_), n_, Rational(1), Rational(0));
    case Ring::polynomial:
      return bareiss_det(unwrap<Poly>(entries_), n_, Poly(1L), Poly());
    case Ring::quadratic: {
      long m = field();
      return bareiss_det(unwrap<QuadExt>(entries_), n_, QuadExt(1, 0, m), QuadExt(0, 0, m));
    }
  }
  throw std::logic_error("ExactMatrix::det: unknown ring");
}

ExactMatrix ExactMatrix::operator*(const ExactMatrix& o) const {
  if (n_ != o.n_) throw std::invalid_argument("ExactMatrix: size mismatch");
  Ring r = ring();
  if (o.ring() != r || field() != o.field()) throw RingMismatch("ExactMatrix: product of different rings");
  std::vector<RingElement> out(n_ * n_);
  auto product = [&](auto zero) {
    using T = decltype(zero);
    for (std::size_t i = 0; i < n_; ++i)
      for (std::size_t j = 0; j < n_; ++j) {
        T acc = zero;
        for (std::size_t k = 0; k < n_; ++k)
          acc = acc + std::get<T>((*this)(i, k)) * std::get<T>(o(k, j));
        out[i * n_ + j] = acc;
      }
  };
  if (r == Ring::rational) product(Rational(0));
  else if (r == Ring::polynomial) product(Poly());
  else product(QuadExt(0, 0, field()));
  return ExactMatrix(n_, std::move(out));
}

std::vector<double> ExactMatrix::to_doubles(double t) const {
  std::vector<double> v;
  v.reserve(entries_.size());
  for (const auto& e : entries_) v.push_back(to_double(e, t));
  return v;
}

}  // namespace reptile::exact
