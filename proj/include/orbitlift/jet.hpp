#pragma once

#include "orbitlift/errors.hpp"
#include "orbitlift/rational.hpp"

#include <algorithm>
#include <optional>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace orbitlift {

// Order of vanishing of a truncated series. Exact(m) certifies the first
// nonzero coefficient sits at t^m; FlatToTruncation means every stored
// coefficient is zero, which certifies nothing beyond the truncation order
// and must never be silently promoted to Exact(N+1).
class Flatness {
 public:
  static Flatness exact(int m) { return Flatness(m); }
  static Flatness flat() { return Flatness(); }

  bool is_exact() const { return order_.has_value(); }
  bool flat_to_truncation() const { return !order_.has_value(); }
  int order() const {
    if (!order_) fail(Errc::InternalInconsistency, "Flatness::order on FlatToTruncation");
    return *order_;
  }
  // Does the certified information imply order of vanishing >= m, given the
  // truncation order of the jet it was computed from?
  bool at_least(int m, int trunc_order) const {
    return order_ ? *order_ >= m : trunc_order + 1 >= m;
  }
  friend bool operator==(const Flatness& a, const Flatness& b) { return a.order_ == b.order_; }

 private:
  Flatness() = default;
  explicit Flatness(int m) : order_(m) {}
  std::optional<int> order_;
};

// Truncated formal power series in one variable t. Coefficients run from t^0
// to t^trunc_order and are exact; arithmetic truncates to the shorter input,
// so every stored coefficient of a result is honest.
template <class Scalar = Rational>
class Jet {
 public:
  Jet() : coeffs_(1, Scalar(0)) {}
  explicit Jet(std::vector<Scalar> coeffs) : coeffs_(std::move(coeffs)) {
    if (coeffs_.empty()) fail(Errc::DimensionMismatch, "Jet needs at least the t^0 coefficient");
  }
  static Jet zero(int trunc_order) { return Jet(std::vector<Scalar>(trunc_order + 1, Scalar(0))); }
  static Jet constant(const Scalar& c, int trunc_order) {
    Jet j = zero(trunc_order);
    j.coeffs_[0] = c;
    return j;
  }
  // c * t^k
  static Jet monomial(const Scalar& c, int k, int trunc_order) {
    Jet j = zero(trunc_order);
    if (k <= trunc_order) j.coeffs_[k] = c;
    return j;
  }

  int trunc_order() const { return static_cast<int>(coeffs_.size()) - 1; }
  const Scalar& coeff(int k) const { return coeffs_[static_cast<size_t>(k)]; }
  Scalar& coeff(int k) { return coeffs_[static_cast<size_t>(k)]; }
  const std::vector<Scalar>& coeffs() const { return coeffs_; }

  bool is_zero() const {
    return std::all_of(coeffs_.begin(), coeffs_.end(), [](const Scalar& c) { return c == Scalar(0); });
  }

  friend bool operator==(const Jet& a, const Jet& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const Jet& a, const Jet& b) { return !(a == b); }

 private:
  std::vector<Scalar> coeffs_;
};

using QJet = Jet<Rational>;

template <class Scalar>
Jet<Scalar> truncated(const Jet<Scalar>& a, int order) {
  if (order >= a.trunc_order()) return a;
  if (order < 0) fail(Errc::OrderExhausted, "truncated: negative order");
  std::vector<Scalar> c(a.coeffs().begin(), a.coeffs().begin() + order + 1);
  return Jet<Scalar>(std::move(c));
}

template <class Scalar>
Jet<Scalar> add(const Jet<Scalar>& a, const Jet<Scalar>& b) {
  const int n = std::min(a.trunc_order(), b.trunc_order());
  std::vector<Scalar> c(static_cast<size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) c[static_cast<size_t>(k)] = a.coeff(k) + b.coeff(k);
  return Jet<Scalar>(std::move(c));
}

template <class Scalar>
Jet<Scalar> sub(const Jet<Scalar>& a, const Jet<Scalar>& b) {
  const int n = std::min(a.trunc_order(), b.trunc_order());
  std::vector<Scalar> c(static_cast<size_t>(n) + 1);
  for (int k = 0; k <= n; ++k) c[static_cast<size_t>(k)] = a.coeff(k) - b.coeff(k);
  return Jet<Scalar>(std::move(c));
}

template <class Scalar>
Jet<Scalar> negate(const Jet<Scalar>& a) {
  std::vector<Scalar> c(a.coeffs());
  for (auto& x : c) x = -x;
  return Jet<Scalar>(std::move(c));
}

// Cauchy product truncated to the shorter input.
template <class Scalar>
Jet<Scalar> mul(const Jet<Scalar>& a, const Jet<Scalar>& b) {
  const int n = std::min(a.trunc_order(), b.trunc_order());
  std::vector<Scalar> c(static_cast<size_t>(n) + 1, Scalar(0));
  for (int i = 0; i <= n; ++i) {
    if (a.coeff(i) == Scalar(0)) continue;
    for (int j = 0; i + j <= n; ++j) {
      if (b.coeff(j) == Scalar(0)) continue;
      c[static_cast<size_t>(i + j)] += a.coeff(i) * b.coeff(j);
    }
  }
  return Jet<Scalar>(std::move(c));
}

template <class Scalar>
Jet<Scalar> scale(const Jet<Scalar>& a, const Scalar& s) {
  std::vector<Scalar> c(a.coeffs());
  for (auto& x : c) x = x * s;
  return Jet<Scalar>(std::move(c));
}

template <class Scalar>
Jet<Scalar> operator+(const Jet<Scalar>& a, const Jet<Scalar>& b) { return add(a, b); }
template <class Scalar>
Jet<Scalar> operator-(const Jet<Scalar>& a, const Jet<Scalar>& b) { return sub(a, b); }
template <class Scalar>
Jet<Scalar> operator-(const Jet<Scalar>& a) { return negate(a); }
template <class Scalar>
Jet<Scalar> operator*(const Jet<Scalar>& a, const Jet<Scalar>& b) { return mul(a, b); }
template <class Scalar>
Jet<Scalar> operator*(const Scalar& s, const Jet<Scalar>& a) { return scale(a, s); }
template <class Scalar>
Jet<Scalar> operator*(const Jet<Scalar>& a, const Scalar& s) { return scale(a, s); }

template <class Scalar>
Flatness order_of_vanishing(const Jet<Scalar>& a) {
  for (int k = 0; k <= a.trunc_order(); ++k)
    if (a.coeff(k) != Scalar(0)) return Flatness::exact(k);
  return Flatness::flat();
}

// b(t) = a(t) / t^k; the first k coefficients must vanish.
template <class Scalar>
Jet<Scalar> shift_down(const Jet<Scalar>& a, int k) {
  if (k < 0) fail(Errc::IndexOutOfRange, "shift_down: negative shift");
  if (k == 0) return a;
  if (k > a.trunc_order())
    fail(Errc::OrderExhausted, "shift_down by " + std::to_string(k) + " exceeds truncation order " +
                                   std::to_string(a.trunc_order()));
  for (int i = 0; i < k; ++i)
    if (a.coeff(i) != Scalar(0))
      fail(Errc::NonDivisible, "shift_down: coefficient of t^" + std::to_string(i) + " is nonzero");
  std::vector<Scalar> c(a.coeffs().begin() + k, a.coeffs().end());
  return Jet<Scalar>(std::move(c));
}

// t^(r*d) * a(t). Every coefficient of the product through order
// trunc_order + r*d is determined by a's stored coefficients, so the result
// carries that extended order; this is what makes
// shift_down(scale_parameter(a, r, d), r*d) == a hold exactly.
template <class Scalar>
Jet<Scalar> scale_parameter(const Jet<Scalar>& a, int r, int d) {
  if (r <= 0 || d <= 0) fail(Errc::IndexOutOfRange, "scale_parameter: r and d must be positive");
  const int s = r * d;
  const int n = a.trunc_order();
  std::vector<Scalar> c(static_cast<size_t>(n + s) + 1, Scalar(0));
  for (int k = 0; k <= n; ++k) c[static_cast<size_t>(k + s)] = a.coeff(k);
  return Jet<Scalar>(std::move(c));
}

// Horner evaluation of the stored truncation.
template <class Scalar>
Scalar eval_at(const Jet<Scalar>& a, const Scalar& t0) {
  Scalar acc = a.coeff(a.trunc_order());
  for (int k = a.trunc_order() - 1; k >= 0; --k) acc = acc * t0 + a.coeff(k);
  return acc;
}

template <class Scalar>
Jet<Scalar> derivative(const Jet<Scalar>& a) {
  if (a.trunc_order() == 0) return Jet<Scalar>::zero(0);
  std::vector<Scalar> c(static_cast<size_t>(a.trunc_order()));
  for (int k = 1; k <= a.trunc_order(); ++k)
    c[static_cast<size_t>(k - 1)] = Scalar(k) * a.coeff(k);
  return Jet<Scalar>(std::move(c));
}

// Coefficients of a(s + t) as a polynomial in t. Exact for polynomial data;
// callers holding genuine truncations must account for the lost tail.
template <class Scalar>
Jet<Scalar> recenter(const Jet<Scalar>& a, const Scalar& s) {
  const int n = a.trunc_order();
  std::vector<Scalar> c(static_cast<size_t>(n) + 1, Scalar(0));
  // binomial expansion, row by row of Pascal's triangle
  for (int i = 0; i <= n; ++i) {
    if (a.coeff(i) == Scalar(0)) continue;
    Scalar term = a.coeff(i);  // a_i * C(i,j) * s^(i-j), built from j = i downward
    c[static_cast<size_t>(i)] += term;
    Scalar binom(1);
    Scalar spow(1);
    for (int j = i - 1; j >= 0; --j) {
      binom = binom * Scalar(j + 1) / Scalar(i - j);
      spow = spow * s;
      c[static_cast<size_t>(j)] += a.coeff(i) * binom * spow;
    }
  }
  return Jet<Scalar>(std::move(c));
}

// 1 / a(t); requires a(0) != 0.
template <class Scalar>
Jet<Scalar> reciprocal(const Jet<Scalar>& a) {
  if (a.coeff(0) == Scalar(0)) fail(Errc::NonDivisible, "reciprocal: constant term is zero");
  const int n = a.trunc_order();
  std::vector<Scalar> c(static_cast<size_t>(n) + 1, Scalar(0));
  const Scalar inv0 = Scalar(1) / a.coeff(0);
  c[0] = inv0;
  for (int k = 1; k <= n; ++k) {
    Scalar s(0);
    for (int j = 1; j <= k; ++j) s += a.coeff(j) * c[static_cast<size_t>(k - j)];
    c[static_cast<size_t>(k)] = -inv0 * s;
  }
  return Jet<Scalar>(std::move(c));
}

template <class Scalar>
Jet<Scalar> divide(const Jet<Scalar>& a, const Jet<Scalar>& b) {
  return mul(a, reciprocal(truncated(b, std::min(a.trunc_order(), b.trunc_order()))));
}

template <class Scalar>
std::string jet_to_string(const Jet<Scalar>& a, const std::string& var = "t") {
  std::ostringstream os;
  bool first = true;
  for (int k = 0; k <= a.trunc_order(); ++k) {
    const Scalar& c = a.coeff(k);
    if (c == Scalar(0)) continue;
    Scalar mag = c < Scalar(0) ? -c : c;
    if (first) {
      if (c < Scalar(0)) os << "-";
      first = false;
    } else {
      os << (c < Scalar(0) ? " - " : " + ");
    }
    const bool unit = (mag == Scalar(1));
    if (k == 0) {
      os << mag;
    } else {
      if (!unit) os << mag << "*";
      os << var;
      if (k > 1) os << "^" << k;
    }
  }
  if (first) os << "0";
  return os.str();
}

template <class Scalar>
std::ostream& operator<<(std::ostream& os, const Jet<Scalar>& a) {
  return os << jet_to_string(a);
}

}  // namespace orbitlift
