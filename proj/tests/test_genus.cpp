#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "cayley/charnum.hpp"
#include "cayley/genus.hpp"

using namespace cayley;

TEST_CASE("catalog characteristic numbers") {
  CharNumbers hp2 = hp_numbers(2);
  CHECK(hp2.p_number(Partition({1, 1})) == Rational(4));
  CHECK(hp2.p_number(Partition({2})) == Rational(7));
  CharNumbers cp2 = cp_numbers(2);
  CHECK(cp2.p_number(Partition({1})) == Rational(3));
  CHECK(cp2.s_number(Partition({1})) == Rational(3));
  CHECK(kummer_numbers().p_number(Partition({1})) == Rational(48));
  CHECK_THROWS_AS(cp_numbers(3), std::invalid_argument);
  // s_n[HP^n] = -4^n + 2n + 2
  for (unsigned n = 1; n <= 8; ++n) {
    Rational expected = -Rational(4).pow(n) + Rational(2 * static_cast<long>(n) + 2);
    CHECK(hp_numbers(n).s_number(Partition({n})) == expected);
  }
  // s_n[CP^n] = n + 1 on the even projective spaces
  for (unsigned n = 2; n <= 8; n += 2)
    CHECK(cp_numbers(n).s_number(Partition({n / 2})) ==
          Rational(static_cast<long>(n) + 1));
}

TEST_CASE("product via Thom convolution matches direct class expansion") {
  CharNumbers prod = cp_numbers(2).product(cp_numbers(2));
  CHECK(prod.s_number(Partition({1, 1})) == Rational(9));
  CHECK(prod.s_number(Partition({2})) == Rational(0));
  // direct oracle: p(CP^2 x CP^2) = (1+g1^2)^3 (1+g2^2)^3 gives
  // p_1^2 -> 18 and p_2 -> 9
  CHECK(prod.p_number(Partition({1, 1})) == Rational(18));
  CHECK(prod.p_number(Partition({2})) == Rational(9));
  // dimensions add; mismatched sums reject
  CHECK(prod.dimension() == 16);
  CHECK_THROWS_AS(cp_numbers(2) + hp_numbers(2), std::invalid_argument);
}

TEST_CASE("p and s basis conversions round-trip") {
  for (unsigned n = 1; n <= 6; ++n) {
    CharNumbers m = hp_numbers(n);
    CHECK(CharNumbers::from_p(n, m.p_numbers()) == m);
  }
}

TEST_CASE("multiplicative sequences") {
  auto k1 = signature_genus().multiplicative_sequence(1);
  CHECK(k1.at(Partition({1})) == Rational(1, 3));
  auto k2 = signature_genus().multiplicative_sequence(2);
  CHECK(k2.at(Partition({2})) == Rational(7, 45));
  CHECK(k2.at(Partition({1, 1})) == Rational(-1, 45));
  auto kw = witten_genus().multiplicative_sequence(1);
  CHECK(kw.at(Partition({1})) == MultiPoly::variable("G2"));
}

TEST_CASE("signature values") {
  CHECK(signature_genus().eval(cp_numbers(2)) == Rational(1));
  CHECK(signature_genus().eval(hp_numbers(2)) == Rational(1));
  for (unsigned n = 1; n <= 4; ++n)
    CHECK(signature_genus().eval(cp_numbers(2 * n)) == Rational(1));
}

TEST_CASE("signature logarithm") {
  Series<Rational> g = signature_genus().logarithm(8);
  CHECK(g.coeff(1) == Rational(1));
  CHECK(g.coeff(3) == Rational(1, 3));
  CHECK(g.coeff(5) == Rational(1, 5));
  CHECK(g.coeff(7) == Rational(1, 7));
}

TEST_CASE("elliptic integral logarithm") {
  Series<MultiPoly> g = elliptic_logarithm(8);
  CHECK(g.coeff(1) == MultiPoly::constant(Rational(1)));
  CHECK(g.coeff(3) == MultiPoly::parse("1/3*delta"));
  // at delta = epsilon = 1 this is the signature logarithm
  Series<Rational> spec = specialize_de(g, Rational(1), Rational(1));
  CHECK(spec == signature_genus().logarithm(8));
  // the (delta, epsilon)-genus logarithm matches the integral coefficientwise
  CHECK(elliptic_genus().logarithm(8) == g);
}

TEST_CASE("ahat is the [-1/8, 0] branch") {
  CHECK(ahat_genus().value_on_cp(2) == Rational(-1, 8));
  for (unsigned n = 1; n <= 4; ++n) CHECK(ahat_genus().eval(hp_numbers(n)) == Rational(0));
}

TEST_CASE("printed genus values on the small catalog") {
  CHECK(elliptic_genus().eval(hp_numbers(2)) == MultiPoly::variable("epsilon"));
  CHECK(elliptic_genus().eval(hp_numbers(3)).is_zero());
  CHECK(elliptic_genus().eval(kummer_numbers()) == MultiPoly::parse("16*delta"));
  CHECK(witten_genus().eval(kummer_numbers()) == MultiPoly::parse("48*G2"));
  CHECK(witten_genus().eval(hp_numbers(2)) == MultiPoly::parse("2*G2^2 - 5/6*G4"));
  // Independent oracle: with p(THP^3) = 1 + 4u + 12u^2 + 8u^3 the root power
  // sums are (4u, -8u^2, -56u^3), so the value is
  // [u^3] exp(4*G2*u - 2/3*G4*u^2 - 7/45*G6*u^3).
  CHECK(witten_genus().eval(hp_numbers(3)) ==
        MultiPoly::parse("32/3*G2^3 - 8/3*G2*G4 - 7/45*G6"));
}

TEST_CASE("logarithm derivative extracts projective-space values") {
  for (unsigned n = 1; n <= 5; ++n) {
    CHECK(signature_genus().value_on_cp(2 * n) == signature_genus().eval(cp_numbers(2 * n)));
    CHECK(ahat_genus().value_on_cp(2 * n) == ahat_genus().eval(cp_numbers(2 * n)));
    CHECK(elliptic_genus().value_on_cp(2 * n) == elliptic_genus().eval(cp_numbers(2 * n)));
    CHECK(witten_genus().value_on_cp(2 * n) == witten_genus().eval(cp_numbers(2 * n)));
  }
}

TEST_CASE("genus multiplicativity on products") {
  auto check_mult = [](const auto& genus) {
    CharNumbers a = hp_numbers(2), b = cp_numbers(4), c = kummer_numbers();
    CHECK(genus.eval(a.product(b)) == genus.eval(a) * genus.eval(b));
    CHECK(genus.eval(a.product(c)) == genus.eval(a) * genus.eval(c));
    CHECK(genus.eval(b.product(c)) == genus.eval(b) * genus.eval(c));
  };
  check_mult(signature_genus());
  check_mult(ahat_genus());
  check_mult(elliptic_genus());
  check_mult(witten_genus());
}

TEST_CASE("characteristic series suppliers agree across orders") {
  auto agree = [](const auto& genus) {
    auto q8 = genus.char_series(8);
    auto q12 = genus.char_series(12);
    for (int k = 0; k < 8; ++k) CHECK(q8.coeff(k) == q12.coeff(k));
  };
  agree(signature_genus());
  agree(ahat_genus());
  agree(elliptic_genus());
  agree(witten_genus());
}

TEST_CASE("q-expansion genera") {
  const Genus<QSeries>& wq = witten_genus_q(20);
  // phi_W(CP^2) = 3 G_2 as a q-series
  QSeries v = wq.eval(cp_numbers(2));
  QSeries g2 = eisenstein(2, 1, 20);
  CHECK(v == g2.scale(Rational(3)));
  // elliptic-q value of HP^2 equals epsilon's q-expansion
  const Genus<QSeries>& eq = elliptic_genus_q(20);
  CHECK(eq.eval(hp_numbers(2)) == epsilon_qseries(20));
  CHECK(eq.eval(kummer_numbers()) == delta_qseries(20).scale(Rational(16)));
}
