#pragma once

#include "orbitlift/jet.hpp"
#include "orbitlift/rational.hpp"

#include <utility>
#include <vector>

namespace orbitlift {

// Dense univariate polynomial over the exact rationals, coefficient of z^k at
// index k. Backs preimage-point solving: square-free splitting, Sturm root
// isolation, and exact recovery of rational roots.
class UniPoly {
 public:
  UniPoly() = default;  // zero polynomial
  explicit UniPoly(std::vector<Rational> c) : c_(std::move(c)) { trim(); }
  static UniPoly constant(const Rational& c) { return UniPoly({c}); }

  int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
  bool is_zero() const { return c_.empty(); }
  const Rational& coeff(int k) const { return c_[static_cast<size_t>(k)]; }
  const std::vector<Rational>& coeffs() const { return c_; }
  const Rational& leading() const { return c_.back(); }

  Rational eval(const Rational& x) const;
  UniPoly derivative() const;
  UniPoly monic() const;

  friend UniPoly operator+(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator-(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const UniPoly& a, const UniPoly& b);
  friend UniPoly operator*(const Rational& s, const UniPoly& a);

  // Euclidean division, exact over the rationals.
  std::pair<UniPoly, UniPoly> divmod(const UniPoly& d) const;

  friend bool operator==(const UniPoly& a, const UniPoly& b) { return a.c_ == b.c_; }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<Rational> c_;
};

UniPoly gcd(const UniPoly& a, const UniPoly& b);  // monic gcd

// Yun's square-free decomposition: p = lc * prod f_k^k with f_k monic
// square-free and pairwise coprime. Returned as (f_k, k) pairs, k ascending,
// trivial factors omitted.
std::vector<std::pair<UniPoly, int>> square_free_decomposition(const UniPoly& p);

// The rational with smallest denominator (then smallest numerator) in the
// closed interval [lo, hi].
Rational simplest_rational_in(const Rational& lo, const Rational& hi);

struct RealRoot {
  Rational value;
  int multiplicity = 1;
  bool exact = true;  // false: value approximates an irrational root to tol
};

// All real roots with multiplicities, sorted non-increasing. Rational roots
// are recovered exactly (via simplest-rational hunting inside isolating
// brackets); irrational ones are bisected to width <= tol and flagged.
// Throws InconsistentCurve if the polynomial has non-real roots and
// require_all_real is set.
std::vector<RealRoot> real_roots(const UniPoly& p, const Rational& tol, bool require_all_real);

// Jet-coefficient polynomial helpers for the symmetric-group engine: a curve
// of monic polynomials P(z, t) is held as coefficients-of-z^k jets.
using JetPoly = std::vector<QJet>;  // index k = coefficient of z^k

QJet jetpoly_eval(const JetPoly& p, const QJet& x);
JetPoly jetpoly_derivative(const JetPoly& p);
JetPoly jetpoly_mul(const JetPoly& a, const JetPoly& b);

}  // namespace orbitlift
