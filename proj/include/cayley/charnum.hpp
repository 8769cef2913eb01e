#pragma once

#include <map>

#include "cayley/partition.hpp"
#include "cayley/rational.hpp"

namespace cayley {

/// Characteristic numbers of a rational bordism class of dimension 4n,
/// stored on the s-basis (values of the monomial symmetric classes s_I,
/// I ranging over partitions of n). The Pontrjagin-monomial basis is reached
/// through the weight-n transition tables; conversions round-trip exactly.
class CharNumbers {
 public:
  CharNumbers();  // the point: weight 0, s_() = 1
  static CharNumbers from_s(unsigned n, std::map<Partition, Rational> s);
  static CharNumbers from_p(unsigned n, std::map<Partition, Rational> p);

  unsigned weight() const { return weight_; }
  unsigned dimension() const { return 4 * weight_; }

  Rational s_number(const Partition& I) const;
  Rational p_number(const Partition& I) const;
  const std::map<Partition, Rational>& s_numbers() const { return s_; }
  std::map<Partition, Rational> p_numbers() const;

  /// Product bordism class: s_I(a x b) = sum over juxtapositions JK = I of
  /// s_J(a) s_K(b), dimensions adding.
  CharNumbers product(const CharNumbers& other) const;

  CharNumbers scale(const Rational& c) const;
  friend CharNumbers operator+(const CharNumbers& a, const CharNumbers& b);
  friend CharNumbers operator-(const CharNumbers& a, const CharNumbers& b);

  friend bool operator==(const CharNumbers& a, const CharNumbers& b) {
    return a.weight_ == b.weight_ && a.s_ == b.s_;
  }

 private:
  unsigned weight_ = 0;
  std::map<Partition, Rational> s_;
};

/// CP^n for even n, from the total class (1+g^2)^{n+1} with the orientation
/// normalized so that the signature of every CP^{2k} is +1.
CharNumbers cp_numbers(unsigned n);

/// HP^n from the total class (1+u)^{2n+2}(1+4u)^{-1} with int u^n = 1.
CharNumbers hp_numbers(unsigned n);

/// The Kummer surface, defined as the bordism class 16 CP^2.
CharNumbers kummer_numbers();

}  // namespace cayley
