#include "cayley/rational.hpp"

#include <mutex>
#include <ostream>
#include <stdexcept>
#include <vector>

namespace cayley {

Rational::Rational(long num, long den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  v_ = mpq_class(num, den);
  v_.canonicalize();
}

Rational::Rational(const mpz_class& num, const mpz_class& den) {
  if (den == 0) throw std::domain_error("Rational: zero denominator");
  v_ = mpq_class(num) / mpq_class(den);
}

Rational Rational::parse(const std::string& text) {
  if (text.empty()) throw std::invalid_argument("Rational: empty string");
  // Validate by hand; mpq_class otherwise accepts whitespace and base prefixes.
  size_t i = 0;
  auto digits = [&](size_t from) {
    size_t j = from;
    while (j < text.size() && std::isdigit(static_cast<unsigned char>(text[j]))) ++j;
    return j;
  };
  bool negative = false;
  if (text[i] == '-' || text[i] == '+') {
    negative = text[i] == '-';
    ++i;
  }
  size_t start = i;
  size_t end_num = digits(i);
  if (end_num == i) throw std::invalid_argument("Rational: expected digits in '" + text + "'");
  mpz_class num(text.substr(start, end_num - start));
  if (negative) num = -num;
  if (end_num == text.size()) return Rational(num);
  if (text[end_num] != '/') throw std::invalid_argument("Rational: bad character in '" + text + "'");
  size_t end_den = digits(end_num + 1);
  if (end_den != text.size() || end_den == end_num + 1)
    throw std::invalid_argument("Rational: bad denominator in '" + text + "'");
  mpz_class den(text.substr(end_num + 1));
  return Rational(num, den);
}

Rational Rational::operator-() const {
  Rational r;
  r.v_ = -v_;
  return r;
}

Rational& Rational::operator/=(const Rational& o) {
  if (o.is_zero()) throw std::domain_error("Rational: division by zero");
  v_ /= o.v_;
  return *this;
}

Rational Rational::pow(long e) const {
  if (e == 0) return Rational(1);
  if (is_zero()) {
    if (e < 0) throw std::domain_error("Rational: inverse of zero");
    return Rational(0);
  }
  mpz_class n, d;
  unsigned long a = static_cast<unsigned long>(e < 0 ? -e : e);
  mpz_pow_ui(n.get_mpz_t(), num().get_mpz_t(), a);
  mpz_pow_ui(d.get_mpz_t(), den().get_mpz_t(), a);
  return e > 0 ? Rational(n, d) : Rational(d, n);
}

Rational Rational::inverse() const {
  if (is_zero()) throw std::domain_error("Rational: inverse of zero");
  return Rational(den(), num());
}

Rational Rational::abs() const { return sign() < 0 ? -*this : *this; }

std::string Rational::str() const {
  return is_integer() ? num().get_str() : num().get_str() + "/" + den().get_str();
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational bernoulli(unsigned k) {
  static std::mutex mu;
  static std::vector<Rational> cache{Rational(1)};  // B_0 = 1
  std::lock_guard<std::mutex> lock(mu);
  // sum_{j<m} C(m+1, j) B_j = -(m+1) B_m  <=>  sum_{j<=m} C(m+1,j) B_j = 0.
  while (cache.size() <= k) {
    unsigned m = static_cast<unsigned>(cache.size());
    Rational acc(0);
    for (unsigned j = 0; j < m; ++j)
      acc += Rational(binomial_int(m + 1, j)) * cache[j];
    cache.push_back(-acc / Rational(static_cast<long>(m) + 1));
  }
  return cache[k];
}

Rational binomial(const Rational& x, unsigned k) {
  Rational r(1);
  for (unsigned i = 0; i < k; ++i)
    r *= (x - Rational(static_cast<long>(i))) / Rational(static_cast<long>(i) + 1);
  return r;
}

mpz_class binomial_int(unsigned long n, unsigned long k) {
  mpz_class r;
  mpz_bin_uiui(r.get_mpz_t(), n, k);
  return r;
}

mpz_class factorial_int(unsigned long n) {
  mpz_class r;
  mpz_fac_ui(r.get_mpz_t(), n);
  return r;
}

}  // namespace cayley
