#pragma once

#include <algorithm>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cayley/multipoly.hpp"
#include "cayley/rational.hpp"

namespace cayley {

/// Coefficient-ring operations required by Series. Every instance is a
/// commutative ring with unit containing the rationals.
template <class R>
struct RingOps;

template <>
struct RingOps<Rational> {
  static Rational zero() { return Rational(0); }
  static Rational one() { return Rational(1); }
  static Rational from_rational(const Rational& r) { return r; }
  static bool is_zero(const Rational& x) { return x.is_zero(); }
  static Rational invert(const Rational& x) { return x.inverse(); }
  static Rational scale(const Rational& x, const Rational& c) { return x * c; }
  static std::string str(const Rational& x) { return x.str(); }
};

template <>
struct RingOps<MultiPoly> {
  static MultiPoly zero() { return MultiPoly(); }
  static MultiPoly one() { return MultiPoly::constant(Rational(1)); }
  static MultiPoly from_rational(const Rational& r) { return MultiPoly::constant(r); }
  static bool is_zero(const MultiPoly& x) { return x.is_zero(); }
  static MultiPoly invert(const MultiPoly& x) {
    if (!x.is_constant() || x.is_zero())
      throw std::domain_error("Series: coefficient not invertible: " + x.str());
    return MultiPoly::constant(x.constant_value().inverse());
  }
  static MultiPoly scale(const MultiPoly& x, const Rational& c) { return x.scale(c); }
  static std::string str(const MultiPoly& x) { return x.str(); }
};

/// Truncated formal power series in one variable over R. The truncation
/// order is exclusive and always records the guaranteed-valid order:
/// coefficients 0 .. order()-1 are exact. Reading past it throws.
template <class R>
class Series {
 public:
  Series(std::string var, int order) : var_(std::move(var)), order_(order) {
    if (order_ < 1) throw std::invalid_argument("Series: order must be >= 1");
  }
  Series(std::string var, int order, std::vector<R> coeffs)
      : var_(std::move(var)), order_(order), c_(std::move(coeffs)) {
    if (order_ < 1) throw std::invalid_argument("Series: order must be >= 1");
    if (static_cast<int>(c_.size()) > order_) c_.resize(order_);
  }

  static Series zero(const std::string& var, int order) { return Series(var, order); }
  static Series constant(const std::string& var, int order, R value) {
    Series s(var, order);
    s.set(0, std::move(value));
    return s;
  }
  /// The series "z" itself (with unit coefficient).
  static Series identity(const std::string& var, int order) {
    Series s(var, order);
    if (order > 1) s.set(1, RingOps<R>::one());
    return s;
  }

  const std::string& var() const { return var_; }
  int order() const { return order_; }

  const R& coeff(int k) const {
    if (k < 0 || k >= order_)
      throw std::out_of_range("Series: coefficient beyond truncation order");
    static const R kZero = RingOps<R>::zero();
    return k < static_cast<int>(c_.size()) ? c_[k] : kZero;
  }

  void set(int k, R value) {
    if (k < 0 || k >= order_)
      throw std::out_of_range("Series: coefficient beyond truncation order");
    if (k >= static_cast<int>(c_.size())) c_.resize(k + 1, RingOps<R>::zero());
    c_[k] = std::move(value);
  }

  /// Index of the first nonzero stored coefficient; order() when the series
  /// is zero to its available order.
  int valuation() const {
    for (int k = 0; k < static_cast<int>(c_.size()); ++k)
      if (!RingOps<R>::is_zero(c_[k])) return k;
    return order_;
  }

  bool is_zero_to_order() const { return valuation() == order_; }

  Series truncate(int new_order) const {
    if (new_order > order_) throw std::invalid_argument("Series: cannot extend truncation order");
    Series s(var_, new_order, c_);
    return s;
  }

  Series operator-() const {
    Series s = *this;
    for (auto& x : s.c_) x = RingOps<R>::zero() - x;
    return s;
  }

  friend Series operator+(const Series& a, const Series& b) {
    a.check_var(b);
    Series s(a.var_, std::min(a.order_, b.order_));
    for (int k = 0; k < s.order_; ++k) s.set(k, a.coeff(k) + b.coeff(k));
    return s;
  }

  friend Series operator-(const Series& a, const Series& b) {
    a.check_var(b);
    Series s(a.var_, std::min(a.order_, b.order_));
    for (int k = 0; k < s.order_; ++k) s.set(k, a.coeff(k) - b.coeff(k));
    return s;
  }

  friend Series operator*(const Series& a, const Series& b) {
    a.check_var(b);
    int va = std::min(a.valuation(), a.order_);
    int vb = std::min(b.valuation(), b.order_);
    // c_k depends on a_0..a_{k-vb} and b_0..b_{k-va}.
    int ord = std::min(a.order_ + vb, b.order_ + va);
    Series s(a.var_, ord);
    for (int k = 0; k < ord; ++k) {
      R acc = RingOps<R>::zero();
      for (int i = std::max(va, k - (b.order_ - 1)); i <= k - vb; ++i) {
        if (i >= a.order_) break;
        if (RingOps<R>::is_zero(a.coeff(i))) continue;
        acc = acc + a.coeff(i) * b.coeff(k - i);
      }
      s.set(k, std::move(acc));
    }
    return s;
  }

  Series& operator+=(const Series& o) { return *this = *this + o; }
  Series& operator-=(const Series& o) { return *this = *this - o; }
  Series& operator*=(const Series& o) { return *this = *this * o; }

  Series scale(const Rational& c) const {
    Series s = *this;
    for (auto& x : s.c_) x = RingOps<R>::scale(x, c);
    return s;
  }

  Series scale_ring(const R& c) const {
    Series s = *this;
    for (auto& x : s.c_) x = x * c;
    return s;
  }

  /// Multiplication by var^k (k >= 0): shifts exponents up, order grows.
  Series shift_up(int k) const {
    Series s(var_, order_ + k);
    for (int i = 0; i < static_cast<int>(c_.size()); ++i) s.set(i + k, c_[i]);
    return s;
  }

  Series derivative() const {
    Series s(var_, std::max(1, order_ - 1));
    for (int k = 1; k < order_ && k < static_cast<int>(c_.size()) + 1; ++k)
      if (k < order_ && k - 1 < s.order_)
        s.set(k - 1, RingOps<R>::scale(coeff(k), Rational(k)));
    return s;
  }

  /// Termwise antiderivative with zero constant term.
  Series integrate() const {
    Series s(var_, order_ + 1);
    for (int k = 0; k < order_; ++k)
      s.set(k + 1, RingOps<R>::scale(coeff(k), Rational(1, k + 1)));
    return s;
  }

  Series pow(unsigned e) const {
    Series r = constant(var_, order_, RingOps<R>::one());
    Series b = *this;
    while (e) {
      if (e & 1) r *= b;
      e >>= 1;
      if (e) b *= b;
    }
    return r;
  }

  /// Substitutes inner (constant term zero) for the variable.
  Series compose(const Series& inner) const {
    if (!RingOps<R>::is_zero(inner.coeff(0)))
      throw std::invalid_argument("Series::compose: inner constant term must vanish");
    int ord = std::min(order_, inner.order_);
    Series acc = constant(inner.var_, ord, RingOps<R>::zero());
    for (int k = order_ - 1; k >= 0; --k) {
      acc = acc * inner.truncate(std::min(ord, inner.order_));
      acc = acc + constant(inner.var_, acc.order(), coeff(k));
    }
    return acc.truncate(ord);
  }

  /// Compares coefficients on the shared valid range (and variable names).
  friend bool operator==(const Series& a, const Series& b) {
    if (a.var_ != b.var_) return false;
    int ord = std::min(a.order_, b.order_);
    for (int k = 0; k < ord; ++k)
      if (!(a.coeff(k) == b.coeff(k))) return false;
    return true;
  }

  std::string str() const {
    std::string out;
    for (int k = 0; k < order_; ++k) {
      if (RingOps<R>::is_zero(coeff(k))) continue;
      std::string cs = RingOps<R>::str(coeff(k));
      bool composite = cs.find(' ') != std::string::npos;
      if (k > 0) {
        std::string mono = var_ + (k > 1 ? "^" + std::to_string(k) : "");
        if (cs == "1")
          cs = mono;
        else if (cs == "-1")
          cs = "-" + mono;
        else
          cs = (composite ? "(" + cs + ")" : cs) + "*" + mono;
      }
      if (out.empty())
        out = cs;
      else if (!cs.empty() && cs[0] == '-')
        out += " - " + cs.substr(1);
      else
        out += " + " + cs;
    }
    if (out.empty()) out = "0";
    return out + " + O(" + var_ + "^" + std::to_string(order_) + ")";
  }

  std::vector<std::string> coeff_strings() const {
    std::vector<std::string> out;
    for (int k = 0; k < order_; ++k) out.push_back(RingOps<R>::str(coeff(k)));
    return out;
  }

 private:
  void check_var(const Series& o) const {
    if (var_ != o.var_) throw std::invalid_argument("Series: variable mismatch");
  }

  std::string var_;
  int order_;
  std::vector<R> c_;
};

/// Truncated Laurent series: coefficients for exponents low() .. order()-1.
template <class R>
class LaurentSeries {
 public:
  LaurentSeries(std::string var, int low, int order, std::vector<R> coeffs)
      : var_(std::move(var)), low_(low), order_(order), c_(std::move(coeffs)) {
    if (order_ <= low_) throw std::invalid_argument("LaurentSeries: empty exponent range");
    c_.resize(order_ - low_, RingOps<R>::zero());
    normalize();
  }

  static LaurentSeries zero(const std::string& var, int order) {
    return LaurentSeries(var, 0, order, {});
  }

  const std::string& var() const { return var_; }
  int low() const { return low_; }
  int order() const { return order_; }

  const R& coeff(int k) const {
    if (k >= order_) throw std::out_of_range("LaurentSeries: coefficient beyond order");
    static const R kZero = RingOps<R>::zero();
    if (k < low_) return kZero;
    return c_[k - low_];
  }

  friend LaurentSeries operator+(const LaurentSeries& a, const LaurentSeries& b) {
    if (a.var_ != b.var_) throw std::invalid_argument("LaurentSeries: variable mismatch");
    int low = std::min(a.low_, b.low_);
    int order = std::min(a.order_, b.order_);
    if (order <= low) throw std::invalid_argument("LaurentSeries: vanishing overlap");
    std::vector<R> c;
    c.reserve(order - low);
    for (int k = low; k < order; ++k) c.push_back(a.coeff(k) + b.coeff(k));
    return LaurentSeries(a.var_, low, order, std::move(c));
  }

  /// True when every negative-exponent coefficient vanishes.
  bool is_power_series() const { return low_ >= 0; }

  /// The nonnegative-exponent part; only valid when is_power_series().
  Series<R> power_series_part() const {
    Series<R> s(var_, order_);
    for (int k = std::max(0, low_); k < order_; ++k) s.set(k, coeff(k));
    return s;
  }

  std::string str() const {
    std::string out;
    for (int k = low_; k < order_; ++k) {
      if (RingOps<R>::is_zero(coeff(k))) continue;
      std::string cs = RingOps<R>::str(coeff(k));
      bool composite = cs.find(' ') != std::string::npos;
      if (k != 0) {
        std::string mono = var_ + "^" + std::to_string(k);
        if (k == 1) mono = var_;
        if (cs == "1")
          cs = mono;
        else if (cs == "-1")
          cs = "-" + mono;
        else
          cs = (composite ? "(" + cs + ")" : cs) + "*" + mono;
      }
      if (out.empty())
        out = cs;
      else if (!cs.empty() && cs[0] == '-')
        out += " - " + cs.substr(1);
      else
        out += " + " + cs;
    }
    if (out.empty()) out = "0";
    return out + " + O(" + var_ + "^" + std::to_string(order_) + ")";
  }

 private:
  void normalize() {
    while (low_ < 0 && !c_.empty() && RingOps<R>::is_zero(c_.front())) {
      c_.erase(c_.begin());
      ++low_;
    }
  }

  std::string var_;
  int low_;
  int order_;
  std::vector<R> c_;
};

/// Multiplicative inverse of a series with invertible constant term.
template <class R>
Series<R> series_invert_unit(const Series<R>& u) {
  R i0 = RingOps<R>::invert(u.coeff(0));
  Series<R> inv(u.var(), u.order());
  inv.set(0, i0);
  for (int n = 1; n < u.order(); ++n) {
    R acc = RingOps<R>::zero();
    for (int k = 1; k <= n; ++k) acc = acc + u.coeff(k) * inv.coeff(n - k);
    inv.set(n, RingOps<R>::zero() - (i0 * acc));
  }
  return inv;
}

/// Exact Laurent quotient num/den, valid to the order the inputs allow.
/// Throws "indeterminate quotient" when den vanishes to its whole order.
template <class R>
LaurentSeries<R> series_div(const Series<R>& num, const Series<R>& den) {
  if (num.var() != den.var()) throw std::invalid_argument("series_div: variable mismatch");
  int vd = den.valuation();
  if (vd == den.order()) throw std::domain_error("indeterminate quotient");
  // den = z^vd * u with u a unit.
  Series<R> u(den.var(), den.order() - vd);
  for (int k = 0; k < u.order(); ++k) u.set(k, den.coeff(k + vd));
  Series<R> q = num * series_invert_unit(u);
  std::vector<R> c;
  c.reserve(q.order());
  for (int k = 0; k < q.order(); ++k) c.push_back(q.coeff(k));
  return LaurentSeries<R>(num.var(), -vd, q.order() - vd, std::move(c));
}

/// Formal exponential of a series with zero constant term.
template <class R>
Series<R> exp_series(const Series<R>& s) {
  if (!RingOps<R>::is_zero(s.coeff(0)))
    throw std::invalid_argument("exp_series: constant term must vanish");
  Series<R> e(s.var(), s.order());
  e.set(0, RingOps<R>::one());
  for (int n = 1; n < s.order(); ++n) {
    R acc = RingOps<R>::zero();
    for (int k = 1; k <= n; ++k)
      acc = acc + RingOps<R>::scale(s.coeff(k), Rational(k)) * e.coeff(n - k);
    e.set(n, RingOps<R>::scale(acc, Rational(1, n)));
  }
  return e;
}

/// Formal logarithm of a series with constant term one.
template <class R>
Series<R> log_series(const Series<R>& s) {
  if (!(s.coeff(0) == RingOps<R>::one()))
    throw std::invalid_argument("log_series: constant term must be one");
  Series<R> l(s.var(), s.order());
  for (int n = 1; n < s.order(); ++n) {
    R acc = RingOps<R>::scale(s.coeff(n), Rational(n));
    for (int k = 1; k < n; ++k)
      acc = acc - RingOps<R>::scale(l.coeff(k), Rational(k)) * s.coeff(n - k);
    l.set(n, RingOps<R>::scale(acc, Rational(1, n)));
  }
  return l;
}

/// Compositional inverse of s = z + O(z^2), by Lagrange inversion:
/// [z^n] s^{<-1>} = (1/n) [z^{n-1}] (z/s)^n.
template <class R>
Series<R> revert(const Series<R>& s) {
  if (!RingOps<R>::is_zero(s.coeff(0)))
    throw std::invalid_argument("revert: constant term must vanish");
  if (s.order() < 2 || !(s.coeff(1) == RingOps<R>::one()))
    throw std::invalid_argument("revert: linear coefficient must be one");
  // q = z/s, a unit power series.
  Series<R> u(s.var(), s.order() - 1);
  for (int k = 0; k < u.order(); ++k) u.set(k, s.coeff(k + 1));
  Series<R> q = series_invert_unit(u);
  Series<R> t(s.var(), s.order());
  Series<R> power = q;  // q^n as n grows
  for (int n = 1; n < s.order(); ++n) {
    t.set(n, RingOps<R>::scale(power.coeff(n - 1), Rational(1, n)));
    if (n + 1 < s.order()) power *= q;
  }
  return t;
}

/// Sums exact Laurent quotients num_i/den_i; asserts that every
/// negative-exponent coefficient cancels and returns the power series.
/// Throws "pole does not cancel" otherwise.
template <class R>
Series<R> laurent_limit_sum(const std::vector<std::pair<Series<R>, Series<R>>>& terms) {
  if (terms.empty()) throw std::invalid_argument("laurent_limit_sum: no terms");
  bool first = true;
  LaurentSeries<R> acc = LaurentSeries<R>::zero(terms[0].first.var(), terms[0].first.order());
  for (const auto& [num, den] : terms) {
    LaurentSeries<R> q = series_div(num, den);
    acc = first ? q : acc + q;
    first = false;
  }
  for (int k = acc.low(); k < 0; ++k)
    if (!RingOps<R>::is_zero(acc.coeff(k))) throw std::domain_error("pole does not cancel");
  return acc.power_series_part();
}

}  // namespace cayley
