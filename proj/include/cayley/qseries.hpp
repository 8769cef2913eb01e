#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "cayley/multipoly.hpp"
#include "cayley/rational.hpp"
#include "cayley/series.hpp"

namespace cayley {

/// Truncated q-expansion with rational coefficients and an optional modular
/// weight annotation. Values produced from polynomial data carry the "exact"
/// order sentinel; arithmetic propagates the minimum guaranteed order and
/// adds weights under multiplication when both are annotated.
class QSeries {
 public:
  static constexpr int kExactOrder = 1 << 24;

  QSeries() : order_(kExactOrder) {}
  explicit QSeries(const Rational& c, std::optional<int> weight = std::nullopt);
  QSeries(int order, std::vector<Rational> coeffs, std::optional<int> weight = std::nullopt);

  int order() const { return order_; }
  bool exact() const { return order_ == kExactOrder; }
  std::optional<int> weight() const { return weight_; }
  QSeries with_weight(int w) const;

  /// Coefficient of q^k; requires k < order().
  Rational coeff(int k) const;

  bool is_zero() const;
  bool is_constant() const;
  int valuation() const;  // order() when zero to available order

  QSeries operator-() const;
  friend QSeries operator+(const QSeries& a, const QSeries& b);
  friend QSeries operator-(const QSeries& a, const QSeries& b);
  friend QSeries operator*(const QSeries& a, const QSeries& b);
  QSeries& operator+=(const QSeries& o) { return *this = *this + o; }
  QSeries& operator-=(const QSeries& o) { return *this = *this - o; }
  QSeries& operator*=(const QSeries& o) { return *this = *this * o; }
  QSeries scale(const Rational& c) const;
  QSeries pow(unsigned e) const;
  QSeries truncate(int order) const;

  /// Equality of coefficients over the shared valid range.
  friend bool operator==(const QSeries& a, const QSeries& b);

  std::string str(int max_order = 10) const;

 private:
  int order_;
  std::vector<Rational> c_;
  std::optional<int> weight_;
};

template <>
struct RingOps<QSeries> {
  static QSeries zero() { return QSeries(); }
  static QSeries one() { return QSeries(Rational(1)); }
  static QSeries from_rational(const Rational& r) { return QSeries(r); }
  static bool is_zero(const QSeries& x) { return x.is_zero(); }
  static QSeries invert(const QSeries& x);
  static QSeries scale(const QSeries& x, const Rational& c) { return x.scale(c); }
  static std::string str(const QSeries& x) { return x.str(); }
};

/// Eisenstein q-expansion, B_k-normalized:
///   level 1: -B_k/(2k) + sum_n ( sum_{d|n} d^{k-1} ) q^n
///   level 2: -B_k/(2k) + sum_n ( sum_{d|n} (-1)^{n/d} d^{k-1} ) q^n
/// Weight annotation k; requires k even and >= 2.
QSeries eisenstein(unsigned k, int level, int order);

/// delta = 3*Gt2, epsilon = (12*Gt2^2 - 5*Gt4)/6 (level-2 combinations).
QSeries delta_qseries(int order);
QSeries epsilon_qseries(int order);

struct BasisGen {
  std::string name;
  QSeries series;  // weight annotation required
};

/// Writes a weight-annotated q-series as the unique weighted-homogeneous
/// polynomial in the generators, by exact linear solve over the first
/// (dim + 10) coefficients followed by verification against every further
/// available coefficient. Throws "not in span" / "basis degenerate".
MultiPoly express_in_basis(const QSeries& f, const std::vector<BasisGen>& gens);

/// Evaluates a polynomial at q-series bindings (all variables bound).
QSeries eval_poly_qseries(const MultiPoly& p, const std::map<std::string, QSeries>& bindings);

}  // namespace cayley
