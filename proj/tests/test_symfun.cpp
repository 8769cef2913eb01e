#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "cayley/multipoly.hpp"
#include "cayley/partition.hpp"
#include "cayley/symfun.hpp"

using namespace cayley;

namespace {

MultiPoly var(const std::string& n) { return MultiPoly::variable(n); }

MultiPoly random_poly(std::mt19937_64& rng, const std::vector<std::string>& vars) {
  std::uniform_int_distribution<int> coeff(-4, 4);
  std::uniform_int_distribution<unsigned> expo(0, 2);
  MultiPoly p;
  for (int t = 0; t < 4; ++t) {
    MultiPoly mono = MultiPoly::constant(Rational(coeff(rng)));
    for (const auto& v : vars) mono *= var(v).pow(expo(rng));
    p += mono;
  }
  return p;
}

// Direct expansion of e_j in k variables, used as the independent oracle
// for the transition tables.
MultiPoly elementary_poly(unsigned j, const std::vector<MultiPoly>& xs) {
  // coefficient of t^j in prod (1 + t x_i), accumulated column by column
  std::vector<MultiPoly> e(j + 1);
  e[0] = MultiPoly::constant(Rational(1));
  for (const auto& x : xs)
    for (unsigned d = j; d >= 1; --d) e[d] += e[d - 1] * x;
  return e[j];
}

}  // namespace

TEST_CASE("partition basics") {
  Partition p({3, 4, 1});
  CHECK(p.parts() == std::vector<unsigned>({4, 3, 1}));
  CHECK(p.weight() == 8);
  CHECK(p.str() == "(4,3,1)");
  CHECK(Partition().str() == "()");
  CHECK(Partition::parse("4,3") == Partition({4, 3}));
  CHECK(Partition::parse("(7)") == Partition({7}));
  CHECK(Partition::parse("") == Partition());
  CHECK(Partition({2, 1}).juxtapose(Partition({3, 1})) == Partition({3, 2, 1, 1}));
  CHECK(partitions_of(5).size() == 7);
  CHECK(partitions_of(10).size() == 42);
  CHECK(partitions_of(12).size() == 77);
  CHECK_THROWS_AS(Partition({0, 1}), std::invalid_argument);
}

TEST_CASE("partition splits are distinct and complete") {
  Partition p({4, 4, 1});
  auto s = p.splits();
  CHECK(s.size() == 6);  // (mult(4)+1) * (mult(1)+1)
  for (const auto& [j, k] : s) CHECK(j.juxtapose(k) == p);
  std::sort(s.begin(), s.end());
  CHECK(std::adjacent_find(s.begin(), s.end()) == s.end());
  CHECK(Partition().splits().size() == 1);
}

TEST_CASE("multipoly structural arithmetic") {
  MultiPoly x = var("x"), y = var("y");
  CHECK((x + y) * (x - y) == x * x - y * y);
  CHECK((x + y) - y == x);  // unused variable dropped, equality structural
  CHECK(MultiPoly().is_zero());
  CHECK((x * x + y).total_degree() == 2);
  int deg = 0;
  CHECK(!(x * x + y).is_homogeneous());
  CHECK((x * x + x * y).is_homogeneous(&deg));
  CHECK(deg == 2);
  CHECK(MultiPoly::constant(Rational(0)).is_zero());
}

TEST_CASE("multipoly rendering and parsing") {
  MultiPoly p = var("G2").pow(2).scale(Rational(2)) - var("G4").scale(Rational(5, 6));
  CHECK(p.str() == "2*G2^2 - 5/6*G4");
  CHECK(MultiPoly::parse("2*G2^2 - 5/6*G4") == p);
  CHECK(MultiPoly::parse(p.str()) == p);
  CHECK(MultiPoly::parse("-x + 3").str() == "-x + 3");
  CHECK(MultiPoly::parse("(x+y)^2") == var("x").pow(2) + var("x") * var("y").scale(Rational(2)) + var("y").pow(2));
  CHECK(MultiPoly::parse("0").is_zero());
  CHECK_THROWS_AS(MultiPoly::parse("x +"), std::invalid_argument);
  CHECK_THROWS_AS(MultiPoly::parse("x ^ y"), std::invalid_argument);
  // natural variable order: p2 before p10
  MultiPoly q = MultiPoly::parse("p10 + p2");
  CHECK(q.vars() == std::vector<std::string>({"p2", "p10"}));
}

TEST_CASE("multipoly exact division") {
  MultiPoly x = var("x"), y = var("y");
  MultiPoly a = (x + y).pow(3) * (x - y.scale(Rational(2)));
  CHECK(a.exact_div(x + y) == (x + y).pow(2) * (x - y.scale(Rational(2))));
  CHECK_THROWS_AS((x * x + y).exact_div(x + y), std::domain_error);
}

TEST_CASE("monomial symmetric functions") {
  MultiPoly x = var("x"), y = var("y"), z = var("z");
  std::vector<MultiPoly> xy = {x, y};
  std::vector<MultiPoly> xyz = {x, y, z};
  CHECK(monomial_symmetric(Partition({1}), xy) == x + y);
  CHECK(monomial_symmetric(Partition({2}), xy) == x * x + y * y);
  CHECK(monomial_symmetric(Partition({1, 1}), xyz) == x * y + x * z + y * z);
  CHECK(monomial_symmetric(Partition({2, 1}), xy) == x * x * y + y * y * x);
  CHECK_THROWS_AS(monomial_symmetric(Partition({1, 1, 1}), xy), std::invalid_argument);
  // invariance under argument permutations (all 3! orders)
  std::vector<size_t> idx = {0, 1, 2};
  MultiPoly ref = monomial_symmetric(Partition({2, 1}), xyz);
  do {
    std::vector<MultiPoly> perm = {xyz[idx[0]], xyz[idx[1]], xyz[idx[2]]};
    CHECK(monomial_symmetric(Partition({2, 1}), perm) == ref);
  } while (std::next_permutation(idx.begin(), idx.end()));
}

TEST_CASE("transition tables against direct expansion") {
  // Oracle: expand e_J in n variables and read the coefficient of the
  // leading monomial of each m_I.
  for (unsigned n = 1; n <= 5; ++n) {
    const SymTables& t = elementary_to_monomial(n);
    std::vector<MultiPoly> xs;
    for (unsigned i = 1; i <= n; ++i) xs.push_back(var("x" + std::to_string(i)));
    for (size_t j = 0; j < t.parts.size(); ++j) {
      MultiPoly ej = MultiPoly::constant(Rational(1));
      for (unsigned part : t.parts[j].parts()) ej *= elementary_poly(part, xs);
      for (size_t i = 0; i < t.parts.size(); ++i) {
        std::map<std::string, unsigned> mono;
        const auto& parts = t.parts[i].parts();
        for (size_t k = 0; k < parts.size(); ++k) mono["x" + std::to_string(k + 1)] = parts[k];
        CHECK(ej.coefficient(mono) == t.e_in_m[j][i]);
      }
    }
  }
}

TEST_CASE("transition tables named entries") {
  {
    const SymTables& t = elementary_to_monomial(1);
    CHECK(t.m_in_e[0][0] == Rational(1));  // m_(1) = e_1
  }
  {
    const SymTables& t = elementary_to_monomial(2);
    // order: (2), (1,1)
    CHECK(t.parts[0] == Partition({2}));
    CHECK(t.m_in_e[0][0] == Rational(-2));  // m_(2) = e_1^2 - 2 e_2
    CHECK(t.m_in_e[0][1] == Rational(1));
    CHECK(t.m_in_e[1][0] == Rational(1));  // m_(1,1) = e_2
    CHECK(t.m_in_e[1][1] == Rational(0));
  }
  {
    const SymTables& t = elementary_to_monomial(4);
    auto at = [&](const Partition& I, const Partition& J) {
      size_t i = 0, j = 0;
      while (!(t.parts[i] == I)) ++i;
      while (!(t.parts[j] == J)) ++j;
      return t.m_in_e[i][j];
    };
    CHECK(at(Partition({4}), Partition({2, 2})) == Rational(2));
    CHECK(at(Partition({4}), Partition({4})) == Rational(-4));
    // s_4 with p-monomial numbers (p_2^2 -> 36, p_4 -> 39, p_1-involving -> 0)
    std::map<Partition, Rational> pnum = {
        {Partition({4}), Rational(39)},      {Partition({3, 1}), Rational(0)},
        {Partition({2, 2}), Rational(36)},   {Partition({2, 1, 1}), Rational(0)},
        {Partition({1, 1, 1, 1}), Rational(0)}};
    Rational s4(0);
    size_t row = 0;
    while (!(t.parts[row] == Partition({4}))) ++row;
    for (size_t j = 0; j < t.parts.size(); ++j) s4 += t.m_in_e[row][j] * pnum.at(t.parts[j]);
    CHECK(s4 == Rational(-84));
  }
}

TEST_CASE("transition tables round-trip up to n = 10") {
  for (unsigned n = 1; n <= 10; ++n) {
    const SymTables& t = elementary_to_monomial(n);
    Mat prod = mat_mul(t.e_in_m, t.m_in_e);
    for (size_t i = 0; i < prod.size(); ++i)
      for (size_t j = 0; j < prod.size(); ++j)
        CHECK(prod[i][j] == Rational(i == j ? 1 : 0));
  }
}

TEST_CASE("power sums in elementary basis") {
  const ElementaryCombo& p2 = powersum_in_elementary(2);
  CHECK(p2.at(Partition({1, 1})) == Rational(1));
  CHECK(p2.at(Partition({2})) == Rational(-2));
  const ElementaryCombo& p3 = powersum_in_elementary(3);
  CHECK(p3.at(Partition({1, 1, 1})) == Rational(1));
  CHECK(p3.at(Partition({2, 1})) == Rational(-3));
  CHECK(p3.at(Partition({3})) == Rational(3));
}

TEST_CASE("apply_linear") {
  std::vector<std::string> evars = {"e1", "e2", "e3", "e4"};
  Mat id(4, Vec(4, Rational(0)));
  for (int i = 0; i < 4; ++i) id[i][i] = Rational(1);
  Mat s4(4, Vec(4));
  // the reflection sending e1 to (e1+e2+e3+e4)/2
  Rational h(1, 2);
  s4 = {{h, h, h, h}, {h, h, -h, -h}, {h, -h, h, -h}, {h, -h, -h, h}};
  Mat s434 = {{h, h, h, -h}, {h, h, -h, h}, {h, -h, h, h}, {-h, h, h, h}};

  MultiPoly p = MultiPoly::parse("e1*e2 - e3^2");
  CHECK(apply_linear(id, evars, p) == p);
  CHECK(apply_linear(s4, evars, MultiPoly::parse("e1")) ==
        MultiPoly::parse("1/2*e1 + 1/2*e2 + 1/2*e3 + 1/2*e4"));
  CHECK(apply_linear(s434, evars, MultiPoly::parse("e4")) ==
        MultiPoly::parse("1/2*e2 + 1/2*e3 + 1/2*e4 - 1/2*e1"));
  CHECK_THROWS_AS(apply_linear(Mat(3, Vec(3, Rational(0))), evars, p), std::invalid_argument);

  // ring homomorphism on random polynomials
  std::mt19937_64 rng(7);
  for (int i = 0; i < 20; ++i) {
    MultiPoly f = random_poly(rng, evars), g = random_poly(rng, evars);
    CHECK(apply_linear(s4, evars, f * g) ==
          apply_linear(s4, evars, f) * apply_linear(s4, evars, g));
    CHECK(apply_linear(s4, evars, f + g) ==
          apply_linear(s4, evars, f) + apply_linear(s4, evars, g));
  }
}

TEST_CASE("substitution") {
  MultiPoly p = MultiPoly::parse("e1*e2");
  std::map<std::string, MultiPoly> bind = {{"e1", MultiPoly::constant(Rational(1))},
                                           {"e2", MultiPoly::parse("1+z")}};
  CHECK(p.substitute(bind) == MultiPoly::parse("1+z"));
  std::map<std::string, MultiPoly> bind4 = {{"e1", MultiPoly::constant(Rational(1))},
                                            {"e2", MultiPoly::parse("1+z")},
                                            {"e3", var("z")},
                                            {"e4", var("z")}};
  CHECK(MultiPoly::parse("e1+e2+e3+e4").substitute(bind4) == MultiPoly::parse("2+3*z"));
  std::map<std::string, MultiPoly> bindg = {{"e1", var("g1")},
                                            {"e2", var("g1")},
                                            {"e3", var("g2")},
                                            {"e4", -var("g2")}};
  CHECK(MultiPoly::parse("e3-e4").substitute(bindg) == var("g2").scale(Rational(2)));
  CHECK_THROWS_AS(p.substitute({{"e1", var("z")}}), std::invalid_argument);
}
