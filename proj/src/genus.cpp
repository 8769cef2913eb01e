#include "cayley/genus.hpp"

#include <memory>
#include <mutex>
#include <stdexcept>

namespace cayley {

namespace {

const char* kVar = "z";

Series<Rational> signature_char_series(int order) {
  // z/tanh z = (z cosh z) / sinh z
  Series<Rational> sinh(kVar, order + 2), zcosh(kVar, order + 2);
  for (int k = 1; k < order + 2; k += 2) sinh.set(k, Rational(1) / Rational(factorial_int(k)));
  for (int k = 0; k + 1 < order + 2; k += 2)
    zcosh.set(k + 1, Rational(1) / Rational(factorial_int(k)));
  return series_div(zcosh, sinh).power_series_part().truncate(order);
}

Series<MultiPoly> elliptic_char_series(int order) {
  Series<MultiPoly> g = elliptic_logarithm(order + 1);
  Series<MultiPoly> ghat = revert(g);
  Series<MultiPoly> z = Series<MultiPoly>::identity(kVar, order + 2);
  return series_div(z, ghat).power_series_part().truncate(order);
}

Series<Rational> ahat_char_series(int order) {
  Series<Rational> g = specialize_de(elliptic_logarithm(order + 1), Rational(-1, 8), Rational(0));
  Series<Rational> ghat = revert(g);
  Series<Rational> z = Series<Rational>::identity(kVar, order + 2);
  return series_div(z, ghat).power_series_part().truncate(order);
}

// G_{2k} at level 1 as a polynomial in G2, G4, G6 (weights >= 8 are honest
// modular forms, expressed in G4 and G6 by exact linear algebra on
// q-expansions and verified against every available coefficient).
const MultiPoly& eisenstein_level1_poly(unsigned k2) {
  static std::mutex mu;
  static std::map<unsigned, MultiPoly> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(k2);
  if (it != cache.end()) return it->second;
  MultiPoly value;
  if (k2 == 2 || k2 == 4 || k2 == 6) {
    value = MultiPoly::variable("G" + std::to_string(k2));
  } else {
    int qorder = static_cast<int>(k2) + 24;
    std::vector<BasisGen> gens = {{"G4", eisenstein(4, 1, qorder)},
                                  {"G6", eisenstein(6, 1, qorder)}};
    value = express_in_basis(eisenstein(k2, 1, qorder), gens);
  }
  return cache.emplace(k2, std::move(value)).first->second;
}

// Gt_{2k} at level 2 as a polynomial in Gt2, Gt4 (the ring of modular forms
// on the congruence subgroup is polynomial on the weight-2 and weight-4
// series).
const MultiPoly& eisenstein_level2_poly(unsigned k2) {
  static std::mutex mu;
  static std::map<unsigned, MultiPoly> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(k2);
  if (it != cache.end()) return it->second;
  MultiPoly value;
  if (k2 == 2 || k2 == 4) {
    value = MultiPoly::variable("Gt" + std::to_string(k2));
  } else {
    int qorder = static_cast<int>(k2) + 24;
    std::vector<BasisGen> gens = {{"Gt2", eisenstein(2, 2, qorder)},
                                  {"Gt4", eisenstein(4, 2, qorder)}};
    value = express_in_basis(eisenstein(k2, 2, qorder), gens);
  }
  return cache.emplace(k2, std::move(value)).first->second;
}

Series<MultiPoly> witten_char_series(int order) {
  Series<MultiPoly> s(kVar, order);
  for (unsigned k2 = 2; static_cast<int>(k2) < order; k2 += 2)
    s.set(k2, eisenstein_level1_poly(k2).scale(Rational(2) / Rational(factorial_int(k2))));
  return exp_series(s);
}

Series<QSeries> exp_sum_char_series(int order, int level, int qorder) {
  Series<QSeries> s(kVar, order);
  for (unsigned k2 = 2; static_cast<int>(k2) < order; k2 += 2)
    s.set(k2, eisenstein(k2, level, qorder).scale(Rational(2) / Rational(factorial_int(k2))));
  return exp_series(s);
}

}  // namespace

Series<MultiPoly> elliptic_logarithm(int order) {
  if (order < 2) throw std::invalid_argument("elliptic_logarithm: order must be >= 2");
  MultiPoly delta = MultiPoly::variable("delta"), epsilon = MultiPoly::variable("epsilon");
  Series<MultiPoly> x(kVar, order);  // -2 delta t^2 + epsilon t^4
  if (order > 2) x.set(2, delta.scale(Rational(-2)));
  if (order > 4) x.set(4, epsilon);
  Series<MultiPoly> integrand(kVar, order);
  Series<MultiPoly> xpow = Series<MultiPoly>::constant(kVar, order, RingOps<MultiPoly>::one());
  for (unsigned k = 0; 2 * k < static_cast<unsigned>(order); ++k) {
    integrand += xpow.scale(binomial(Rational(-1, 2), k));
    if (2 * (k + 1) < static_cast<unsigned>(order)) xpow *= x;
  }
  return integrand.integrate().truncate(order);
}

Series<Rational> specialize_de(const Series<MultiPoly>& s, const Rational& delta,
                               const Rational& epsilon) {
  Series<Rational> out(s.var(), s.order());
  std::map<std::string, Rational> point = {{"delta", delta}, {"epsilon", epsilon}};
  for (int k = 0; k < s.order(); ++k) out.set(k, s.coeff(k).eval(point));
  return out;
}

const Genus<Rational>& signature_genus() {
  static const Genus<Rational> g("signature", signature_char_series);
  return g;
}

const Genus<Rational>& ahat_genus() {
  static const Genus<Rational> g("ahat", ahat_char_series);
  return g;
}

const Genus<MultiPoly>& elliptic_genus() {
  static const Genus<MultiPoly> g("elliptic", elliptic_char_series);
  return g;
}

const Genus<MultiPoly>& witten_genus() {
  static const Genus<MultiPoly> g("witten", witten_char_series);
  return g;
}

const Genus<QSeries>& elliptic_genus_q(int qorder) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<Genus<QSeries>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[qorder];
  if (!slot)
    slot = std::make_unique<Genus<QSeries>>("elliptic-q", [qorder](int order) {
      return exp_sum_char_series(order, 2, qorder);
    });
  return *slot;
}

const Genus<QSeries>& witten_genus_q(int qorder) {
  static std::mutex mu;
  static std::map<int, std::unique_ptr<Genus<QSeries>>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto& slot = cache[qorder];
  if (!slot)
    slot = std::make_unique<Genus<QSeries>>("witten-q", [qorder](int order) {
      return exp_sum_char_series(order, 1, qorder);
    });
  return *slot;
}

}  // namespace cayley
