#include "cayley/charnum.hpp"

#include <stdexcept>

#include "cayley/symfun.hpp"

namespace cayley {

CharNumbers::CharNumbers() { s_.emplace(Partition(), Rational(1)); }

CharNumbers CharNumbers::from_s(unsigned n, std::map<Partition, Rational> s) {
  CharNumbers m;
  m.weight_ = n;
  m.s_.clear();
  for (const Partition& I : partitions_of(n)) {
    auto it = s.find(I);
    m.s_.emplace(I, it == s.end() ? Rational(0) : it->second);
  }
  for (const auto& [I, v] : s)
    if (I.weight() != n) throw std::invalid_argument("CharNumbers: partition of wrong weight");
  return m;
}

CharNumbers CharNumbers::from_p(unsigned n, std::map<Partition, Rational> p) {
  if (n == 0) return CharNumbers();
  for (const auto& [I, v] : p)
    if (I.weight() != n) throw std::invalid_argument("CharNumbers: partition of wrong weight");
  const SymTables& t = elementary_to_monomial(n);
  std::map<Partition, Rational> s;
  for (size_t i = 0; i < t.parts.size(); ++i) {
    Rational acc(0);
    for (size_t j = 0; j < t.parts.size(); ++j) {
      auto it = p.find(t.parts[j]);
      if (it != p.end()) acc += t.m_in_e[i][j] * it->second;
    }
    s.emplace(t.parts[i], acc);
  }
  return from_s(n, std::move(s));
}

Rational CharNumbers::s_number(const Partition& I) const {
  auto it = s_.find(I);
  if (it == s_.end()) throw std::invalid_argument("CharNumbers: partition of wrong weight");
  return it->second;
}

Rational CharNumbers::p_number(const Partition& I) const {
  if (I.weight() != weight_) throw std::invalid_argument("CharNumbers: partition of wrong weight");
  if (weight_ == 0) return Rational(1);
  const SymTables& t = elementary_to_monomial(weight_);
  size_t row = 0;
  while (!(t.parts[row] == I)) ++row;
  Rational acc(0);
  for (size_t j = 0; j < t.parts.size(); ++j) acc += t.e_in_m[row][j] * s_.at(t.parts[j]);
  return acc;
}

std::map<Partition, Rational> CharNumbers::p_numbers() const {
  std::map<Partition, Rational> out;
  for (const Partition& I : partitions_of(weight_)) out.emplace(I, p_number(I));
  return out;
}

CharNumbers CharNumbers::product(const CharNumbers& other) const {
  unsigned n = weight_ + other.weight_;
  std::map<Partition, Rational> s;
  for (const Partition& I : partitions_of(n)) {
    Rational acc(0);
    for (const auto& [J, K] : I.splits()) {
      if (J.weight() != weight_ || K.weight() != other.weight_) continue;
      acc += s_.at(J) * other.s_.at(K);
    }
    s.emplace(I, acc);
  }
  return from_s(n, std::move(s));
}

CharNumbers CharNumbers::scale(const Rational& c) const {
  CharNumbers m = *this;
  for (auto& [I, v] : m.s_) v *= c;
  return m;
}

CharNumbers operator+(const CharNumbers& a, const CharNumbers& b) {
  if (a.weight_ != b.weight_) throw std::invalid_argument("CharNumbers: dimension mismatch");
  CharNumbers m = a;
  for (auto& [I, v] : m.s_) v += b.s_.at(I);
  return m;
}

CharNumbers operator-(const CharNumbers& a, const CharNumbers& b) { return a + b.scale(Rational(-1)); }

CharNumbers cp_numbers(unsigned n) {
  if (n < 2 || n % 2 != 0)
    throw std::invalid_argument("cp_numbers: only even complex projective spaces carry 4k-dimensional classes");
  unsigned w = n / 2;
  std::map<Partition, Rational> p;
  for (const Partition& I : partitions_of(w)) {
    Rational v(1);
    for (unsigned part : I.parts()) v *= Rational(binomial_int(n + 1, part));
    p.emplace(I, v);
  }
  return CharNumbers::from_p(w, std::move(p));
}

CharNumbers hp_numbers(unsigned n) {
  if (n < 1) throw std::invalid_argument("hp_numbers: n must be positive");
  // (1+u)^{2n+2} (1+4u)^{-1} mod u^{n+1}
  std::vector<Rational> c(n + 1, Rational(0));
  for (unsigned i = 0; i <= n; ++i) {
    Rational acc(0);
    Rational pow4(1);
    for (unsigned b = 0; b <= i; ++b) {
      Rational term = Rational(binomial_int(2 * n + 2, i - b)) * pow4;
      acc += (b % 2) ? -term : term;
      pow4 *= Rational(4);
    }
    c[i] = acc;
  }
  std::map<Partition, Rational> p;
  for (const Partition& I : partitions_of(n)) {
    Rational v(1);
    for (unsigned part : I.parts()) v *= c[part];
    p.emplace(I, v);
  }
  return CharNumbers::from_p(n, std::move(p));
}

CharNumbers kummer_numbers() { return cp_numbers(2).scale(Rational(16)); }

}  // namespace cayley
