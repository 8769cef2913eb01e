#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <string>

namespace cayley {

/// Exact rational scalar backed by GMP. Values are always canonical:
/// gcd(|numerator|, denominator) = 1, denominator > 0, zero is 0/1.
class Rational {
 public:
  Rational() : v_(0) {}
  Rational(long n) : v_(static_cast<signed long>(n)) {}
  Rational(int n) : v_(static_cast<signed long>(n)) {}
  Rational(long num, long den);
  explicit Rational(const mpz_class& z) : v_(z) {}
  Rational(const mpz_class& num, const mpz_class& den);

  /// Parses "a" or "a/b" (optional sign). Round-trips with str().
  static Rational parse(const std::string& text);

  const mpz_class& num() const { return v_.get_num(); }
  const mpz_class& den() const { return v_.get_den(); }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }

  Rational operator-() const;
  Rational& operator+=(const Rational& o) { v_ += o.v_; return *this; }
  Rational& operator-=(const Rational& o) { v_ -= o.v_; return *this; }
  Rational& operator*=(const Rational& o) { v_ *= o.v_; return *this; }
  Rational& operator/=(const Rational& o);

  friend Rational operator+(Rational a, const Rational& b) { a += b; return a; }
  friend Rational operator-(Rational a, const Rational& b) { a -= b; return a; }
  friend Rational operator*(Rational a, const Rational& b) { a *= b; return a; }
  friend Rational operator/(Rational a, const Rational& b) { a /= b; return a; }

  /// x^e; e < 0 requires x != 0.
  Rational pow(long e) const;
  Rational inverse() const;
  Rational abs() const;

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less
                 : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

  /// "a/b", or "a" when the denominator is 1.
  std::string str() const;
  friend std::ostream& operator<<(std::ostream& os, const Rational& r);

 private:
  mpq_class v_;  // invariant: canonical
};

/// Bernoulli number B_k in the convention B_1 = -1/2 (all odd B_k vanish
/// for k >= 3). Memoized.
Rational bernoulli(unsigned k);

/// Generalized binomial coefficient x(x-1)...(x-k+1)/k! for rational x.
Rational binomial(const Rational& x, unsigned k);

mpz_class binomial_int(unsigned long n, unsigned long k);
mpz_class factorial_int(unsigned long n);

}  // namespace cayley
