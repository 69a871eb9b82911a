#pragma once

#include "orbitlift/errors.hpp"
#include "orbitlift/jet.hpp"
#include "orbitlift/rational.hpp"

#include <map>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace orbitlift {

// Sparse exact multivariate polynomial. Terms are keyed by exponent vectors
// of fixed length dim; std::vector's lexicographic ordering doubles as the
// lex monomial order (x1 most significant), which the symmetric-function
// rewriter relies on. No zero coefficients are ever stored.
template <class Scalar = Rational>
class MultiPoly {
 public:
  using Exponents = std::vector<unsigned>;
  using TermMap = std::map<Exponents, Scalar>;

  explicit MultiPoly(int dim = 0) : dim_(dim) {}

  static MultiPoly constant(int dim, const Scalar& c) {
    MultiPoly p(dim);
    if (!(c == Scalar(0))) p.terms_[Exponents(static_cast<size_t>(dim), 0)] = c;
    return p;
  }
  static MultiPoly variable(int dim, int i) {
    if (i < 0 || i >= dim) fail(Errc::IndexOutOfRange, "MultiPoly::variable");
    MultiPoly p(dim);
    Exponents e(static_cast<size_t>(dim), 0);
    e[static_cast<size_t>(i)] = 1;
    p.terms_[std::move(e)] = Scalar(1);
    return p;
  }
  static MultiPoly monomial(int dim, Exponents e, const Scalar& c) {
    if (static_cast<int>(e.size()) != dim) fail(Errc::DimensionMismatch, "MultiPoly::monomial");
    MultiPoly p(dim);
    if (!(c == Scalar(0))) p.terms_[std::move(e)] = c;
    return p;
  }

  int dim() const { return dim_; }
  bool is_zero() const { return terms_.empty(); }
  const TermMap& terms() const { return terms_; }
  size_t term_count() const { return terms_.size(); }

  void add_term(const Exponents& e, const Scalar& c) {
    if (static_cast<int>(e.size()) != dim_) fail(Errc::DimensionMismatch, "MultiPoly::add_term");
    auto it = terms_.find(e);
    if (it == terms_.end()) {
      if (!(c == Scalar(0))) terms_[e] = c;
    } else {
      it->second += c;
      if (it->second == Scalar(0)) terms_.erase(it);
    }
  }

  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
    check_same_dim(a, b);
    MultiPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, c);
    return r;
  }
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) {
    check_same_dim(a, b);
    MultiPoly r = a;
    for (const auto& [e, c] : b.terms_) r.add_term(e, -c);
    return r;
  }
  friend MultiPoly operator-(const MultiPoly& a) {
    MultiPoly r(a.dim_);
    for (const auto& [e, c] : a.terms_) r.terms_[e] = -c;
    return r;
  }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
    check_same_dim(a, b);
    MultiPoly r(a.dim_);
    for (const auto& [ea, ca] : a.terms_) {
      for (const auto& [eb, cb] : b.terms_) {
        Exponents e(ea);
        for (size_t i = 0; i < e.size(); ++i) e[i] += eb[i];
        r.add_term(e, ca * cb);
      }
    }
    return r;
  }
  friend MultiPoly operator*(const Scalar& s, const MultiPoly& a) {
    MultiPoly r(a.dim_);
    if (s == Scalar(0)) return r;
    for (const auto& [e, c] : a.terms_) r.terms_[e] = s * c;
    return r;
  }
  friend MultiPoly operator*(const MultiPoly& a, const Scalar& s) { return s * a; }

  MultiPoly& operator+=(const MultiPoly& b) { *this = *this + b; return *this; }
  MultiPoly& operator-=(const MultiPoly& b) { *this = *this - b; return *this; }
  MultiPoly& operator*=(const MultiPoly& b) { *this = *this * b; return *this; }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.dim_ == b.dim_ && a.terms_ == b.terms_;
  }
  friend bool operator!=(const MultiPoly& a, const MultiPoly& b) { return !(a == b); }

  MultiPoly pow(unsigned k) const {
    MultiPoly acc = constant(dim_, Scalar(1));
    MultiPoly base = *this;
    while (k) {
      if (k & 1u) acc *= base;
      k >>= 1u;
      if (k) base *= base;
    }
    return acc;
  }

  int total_degree() const {
    int d = -1;  // degree of the zero polynomial, by convention here
    for (const auto& [e, c] : terms_) {
      int s = static_cast<int>(std::accumulate(e.begin(), e.end(), 0u));
      d = std::max(d, s);
    }
    return d;
  }

  bool is_homogeneous(int degree) const {
    for (const auto& [e, c] : terms_) {
      if (static_cast<int>(std::accumulate(e.begin(), e.end(), 0u)) != degree) return false;
    }
    return true;
  }

  MultiPoly partial(int j) const {
    if (j < 0 || j >= dim_) fail(Errc::IndexOutOfRange, "partial: variable index " + std::to_string(j));
    MultiPoly r(dim_);
    for (const auto& [e, c] : terms_) {
      const unsigned k = e[static_cast<size_t>(j)];
      if (k == 0) continue;
      Exponents d(e);
      d[static_cast<size_t>(j)] = k - 1;
      r.add_term(d, c * Scalar(static_cast<int>(k)));
    }
    return r;
  }

  std::vector<MultiPoly> gradient() const {
    std::vector<MultiPoly> g;
    g.reserve(static_cast<size_t>(dim_));
    for (int j = 0; j < dim_; ++j) g.push_back(partial(j));
    return g;
  }

  // Evaluate over any commutative ring: vars[i] substitutes variable i and
  // make_const embeds coefficients. Powers of each substituted value are
  // cached across terms.
  template <class Ring, class ConstFn>
  Ring evaluate(const std::vector<Ring>& vars, ConstFn make_const) const {
    if (static_cast<int>(vars.size()) != dim_)
      fail(Errc::DimensionMismatch, "evaluate: expected " + std::to_string(dim_) + " values, got " +
                                        std::to_string(vars.size()));
    std::vector<std::vector<Ring>> powers(vars.size());
    for (size_t i = 0; i < vars.size(); ++i) powers[i].push_back(make_const(Scalar(1)));  // v^0
    auto power = [&](size_t i, unsigned k) -> const Ring& {
      while (powers[i].size() <= k) powers[i].push_back(powers[i].back() * vars[i]);
      return powers[i][k];
    };
    Ring acc = make_const(Scalar(0));
    for (const auto& [e, c] : terms_) {
      Ring term = make_const(c);
      for (size_t i = 0; i < e.size(); ++i)
        if (e[i] > 0) term = term * power(i, e[i]);
      acc = acc + term;
    }
    return acc;
  }

  Scalar eval_point(const VecR& x) const
    requires std::same_as<Scalar, Rational>
  {
    std::vector<Rational> v(x.data(), x.data() + x.size());
    return evaluate<Rational>(v, [](const Rational& c) { return c; });
  }

  MultiPoly compose(const std::vector<MultiPoly>& args) const {
    if (args.empty()) {
      if (dim_ != 0) fail(Errc::DimensionMismatch, "compose: no arguments");
      return *this;
    }
    const int target_dim = args[0].dim();
    for (const auto& a : args)
      if (a.dim() != target_dim) fail(Errc::DimensionMismatch, "compose: mixed dimensions");
    return evaluate<MultiPoly>(args, [&](const Scalar& c) { return constant(target_dim, c); });
  }

  // p(A z): substitute old variable i by the linear form given by row i of A.
  MultiPoly substitute_linear(const MatR& a) const
    requires std::same_as<Scalar, Rational>
  {
    if (a.rows() != dim_) fail(Errc::ShapeMismatch, "substitute_linear: row count");
    const int m = static_cast<int>(a.cols());
    std::vector<MultiPoly> rows;
    rows.reserve(static_cast<size_t>(dim_));
    for (int i = 0; i < dim_; ++i) {
      MultiPoly li(m);
      for (int j = 0; j < m; ++j)
        if (!a(i, j).is_zero()) li += a(i, j) * variable(m, j);
      rows.push_back(std::move(li));
    }
    return compose(rows);
  }

  std::string str(const std::string& var_prefix = "x") const {
    if (terms_.empty()) return "0";
    std::ostringstream os;
    bool first = true;
    // print highest lex term first, the usual human order
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
      const auto& [e, c] = *it;
      Scalar mag = c < Scalar(0) ? -c : c;
      if (first) {
        if (c < Scalar(0)) os << "-";
        first = false;
      } else {
        os << (c < Scalar(0) ? " - " : " + ");
      }
      bool any_var = false;
      std::ostringstream vs;
      for (size_t i = 0; i < e.size(); ++i) {
        if (e[i] == 0) continue;
        if (any_var) vs << "*";
        vs << var_prefix << (i + 1);
        if (e[i] > 1) vs << "^" << e[i];
        any_var = true;
      }
      if (!any_var) {
        os << mag;
      } else {
        if (!(mag == Scalar(1))) os << mag << "*";
        os << vs.str();
      }
    }
    return os.str();
  }

 private:
  static void check_same_dim(const MultiPoly& a, const MultiPoly& b) {
    if (a.dim_ != b.dim_) fail(Errc::DimensionMismatch, "MultiPoly arithmetic: mixed dimensions");
  }

  int dim_;
  TermMap terms_;
};

using QPoly = MultiPoly<Rational>;

// Realizes sigma∘c on jets: polynomial composition, exact to the common
// truncation order of the inputs (which must agree).
template <class Scalar>
Jet<Scalar> eval_at_jets(const MultiPoly<Scalar>& p, const std::vector<Jet<Scalar>>& v) {
  if (static_cast<int>(v.size()) != p.dim())
    fail(Errc::DimensionMismatch, "eval_at_jets: expected " + std::to_string(p.dim()) +
                                      " components, got " + std::to_string(v.size()));
  int order = v.empty() ? 0 : v[0].trunc_order();
  for (const auto& j : v)
    if (j.trunc_order() != order)
      fail(Errc::DimensionMismatch, "eval_at_jets: jets must share one truncation order");
  return p.template evaluate<Jet<Scalar>>(
      v, [&](const Scalar& c) { return Jet<Scalar>::constant(c, order); });
}

template <class Scalar>
MultiPoly<Scalar> partial(const MultiPoly<Scalar>& p, int j) {
  return p.partial(j);
}

// Expression of an invariant polynomial in the generator coordinates y:
// composing poly_in_y with sigma reproduces the source exactly.
struct GeneratorExpression {
  QPoly poly_in_y;
};

template <class Scalar>
std::ostream& operator<<(std::ostream& os, const MultiPoly<Scalar>& p) {
  return os << p.str();
}

}  // namespace orbitlift
