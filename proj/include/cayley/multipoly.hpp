#pragma once

#include <map>
#include <string>
#include <vector>

#include "cayley/rational.hpp"

namespace cayley {

/// Orders variable names naturally: digit runs compare numerically, so
/// p2 < p10 and G2 < G4 < G6.
bool natural_name_less(const std::string& a, const std::string& b);

using Exponents = std::vector<unsigned>;

/// Graded lexicographic order on exponent vectors of equal length.
struct GradedLexLess {
  bool operator()(const Exponents& a, const Exponents& b) const;
};

/// Sparse multivariate polynomial over Rational. Stored in canonical form:
/// no zero coefficients, no unused variables, variables in natural name
/// order, terms in graded-lex order. Equality is structural.
class MultiPoly {
 public:
  using TermMap = std::map<Exponents, Rational, GradedLexLess>;

  MultiPoly() = default;  // zero
  static MultiPoly constant(const Rational& c);
  static MultiPoly variable(const std::string& name);
  static MultiPoly from_terms(std::vector<std::string> vars, TermMap terms);

  const std::vector<std::string>& vars() const { return vars_; }
  const TermMap& terms() const { return terms_; }

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Constant term (the coefficient of the all-zero exponent vector).
  Rational constant_value() const;

  MultiPoly operator-() const;
  friend MultiPoly operator+(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator-(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  MultiPoly& operator+=(const MultiPoly& o) { return *this = *this + o; }
  MultiPoly& operator-=(const MultiPoly& o) { return *this = *this - o; }
  MultiPoly& operator*=(const MultiPoly& o) { return *this = *this * o; }
  MultiPoly scale(const Rational& c) const;
  MultiPoly pow(unsigned e) const;

  friend bool operator==(const MultiPoly& a, const MultiPoly& b) {
    return a.vars_ == b.vars_ && a.terms_ == b.terms_;
  }

  int total_degree() const;  // -1 for the zero polynomial
  bool is_homogeneous(int* degree = nullptr) const;

  /// Exact evaluation homomorphism; every variable of *this must be bound.
  MultiPoly substitute(const std::map<std::string, MultiPoly>& bindings) const;
  Rational eval(const std::map<std::string, Rational>& point) const;

  /// Exact quotient *this / d. Throws std::domain_error when d does not
  /// divide *this.
  MultiPoly exact_div(const MultiPoly& d) const;

  /// Coefficient of the monomial described by bindings of a subset of
  /// variables (all other exponents zero).
  Rational coefficient(const std::map<std::string, unsigned>& monomial) const;

  /// Deterministic rendering, highest graded-lex term first, e.g.
  /// "2*G2^2 - 5/6*G4". parse() accepts the same grammar.
  std::string str() const;
  static MultiPoly parse(const std::string& text);

 private:
  void normalize();
  static void unify(const MultiPoly& a, const MultiPoly& b, MultiPoly& ua, MultiPoly& ub);
  MultiPoly with_vars(const std::vector<std::string>& vars) const;

  std::vector<std::string> vars_;
  TermMap terms_;
};

/// Quotient of polynomials. Not reduced to lowest terms; the denominator is
/// nonzero. Zero test and random-point evaluation are exact.
class RationalFn {
 public:
  RationalFn(MultiPoly num, MultiPoly den);

  const MultiPoly& num() const { return num_; }
  const MultiPoly& den() const { return den_; }

  bool is_zero() const { return num_.is_zero(); }

  RationalFn operator-() const { return RationalFn(-num_, den_); }
  friend RationalFn operator+(const RationalFn& a, const RationalFn& b);
  friend RationalFn operator*(const RationalFn& a, const RationalFn& b);

  /// Evaluates at a point; throws std::domain_error when the denominator
  /// vanishes there.
  Rational eval(const std::map<std::string, Rational>& point) const;

 private:
  MultiPoly num_, den_;
};

}  // namespace cayley
