#pragma once

#include <functional>
#include <map>
#include <mutex>
#include <string>

#include "cayley/charnum.hpp"
#include "cayley/qseries.hpp"
#include "cayley/series.hpp"
#include "cayley/symfun.hpp"

namespace cayley {

/// A genus, determined by its characteristic power series
/// Q(z) = 1 + a_2 z^2 + a_4 z^4 + ... over the coefficient ring R.
/// The multiplicative sequence, genus values and logarithm all derive from
/// the supplier; suppliers must agree on shared coefficients across orders.
template <class R>
class Genus {
 public:
  Genus(std::string name, std::function<Series<R>(int)> supplier)
      : name_(std::move(name)), supplier_(std::move(supplier)) {}

  const std::string& name() const { return name_; }

  Series<R> char_series(int order) const {
    Series<R> q = supplier_(order);
    if (!(q.coeff(0) == RingOps<R>::one()))
      throw std::logic_error("Genus: characteristic series must start at 1");
    return q;
  }

  /// Degree-n term K_n of the multiplicative sequence, as coefficients on
  /// the Pontrjagin monomials p_I. Derivation: the z^{2k} coefficients b_2k
  /// of log Q weight the power-sum monomials of the Chern-root squares with
  /// prod b / prod mult!, and Newton's identities convert power sums to the
  /// elementary (Pontrjagin) basis.
  std::map<Partition, R> multiplicative_sequence(unsigned n) const {
    {
      std::lock_guard<std::mutex> lock(mu_);
      auto it = k_cache_.find(n);
      if (it != k_cache_.end()) return it->second;
    }
    Series<R> logq = log_series(char_series(2 * n + 1));
    std::map<Partition, R> out;
    for (const Partition& J : partitions_of(n)) out.emplace(J, RingOps<R>::zero());
    for (const Partition& lambda : partitions_of(n)) {
      R coeff = RingOps<R>::one();
      for (unsigned part : lambda.parts()) coeff = coeff * logq.coeff(2 * part);
      Rational aut(1);
      for (auto [value, count] : lambda.multiplicities()) aut *= Rational(factorial_int(count));
      coeff = RingOps<R>::scale(coeff, aut.inverse());
      for (const auto& [J, c] : powersum_monomial_in_elementary(lambda))
        out[J] = out[J] + RingOps<R>::scale(coeff, c);
    }
    std::lock_guard<std::mutex> lock(mu_);
    return k_cache_.emplace(n, std::move(out)).first->second;
  }

  /// Genus value sum_I coeff_I(K_n) p_I[M].
  R eval(const CharNumbers& m) const {
    if (m.weight() == 0) return RingOps<R>::one();
    std::map<Partition, R> k = multiplicative_sequence(m.weight());
    auto p = m.p_numbers();
    R acc = RingOps<R>::zero();
    for (const auto& [J, c] : k) acc = acc + RingOps<R>::scale(c, p.at(J));
    return acc;
  }

  /// The logarithm g = (z/Q)^{<-1>}; g(z/Q(z)) = z to truncation order, and
  /// the coefficients of g' are the genus values of the even projective
  /// spaces.
  Series<R> logarithm(int order) const {
    if (order < 2) throw std::invalid_argument("Genus::logarithm: order must be >= 2");
    Series<R> q = char_series(order);
    Series<R> z = Series<R>::identity(q.var(), order + 1);
    Series<R> zq = series_div(z, q).power_series_part().truncate(order);
    return revert(zq);
  }

  /// Genus value of CP^{2n}, read from the logarithm derivative.
  R value_on_cp(unsigned two_n) const {
    if (two_n % 2) throw std::invalid_argument("value_on_cp: index must be even");
    Series<R> g = logarithm(static_cast<int>(two_n) + 2);
    return RingOps<R>::scale(g.coeff(static_cast<int>(two_n) + 1),
                             Rational(static_cast<long>(two_n) + 1));
  }

 private:
  std::string name_;
  std::function<Series<R>(int)> supplier_;
  mutable std::mutex mu_;
  mutable std::map<unsigned, std::map<Partition, R>> k_cache_;
};

/// Termwise integral of the binomial expansion of
/// (1 - 2 delta t^2 + epsilon t^4)^{-1/2}; coefficients are polynomials in
/// delta and epsilon.
Series<MultiPoly> elliptic_logarithm(int order);

/// Specializes a series over Q[delta, epsilon] at rational values.
Series<Rational> specialize_de(const Series<MultiPoly>& s, const Rational& delta,
                               const Rational& epsilon);

/// Q(z) = z/tanh(z).
const Genus<Rational>& signature_genus();
/// The elliptic-integral logarithm at [delta, epsilon] = [-1/8, 0].
const Genus<Rational>& ahat_genus();
/// Values in Q[delta, epsilon], from the elliptic-integral logarithm.
const Genus<MultiPoly>& elliptic_genus();
/// Values in Q[G2, G4, G6]; Eisenstein coefficients of weight >= 8 are
/// expressed in G4, G6 by exact basis expression.
const Genus<MultiPoly>& witten_genus();
/// q-expansion-valued instances (level 2 and level 1 Eisenstein data).
const Genus<QSeries>& elliptic_genus_q(int qorder);
const Genus<QSeries>& witten_genus_q(int qorder);

}  // namespace cayley
