#include "cayley/symfun.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <stdexcept>

namespace cayley {

MultiPoly monomial_symmetric(const Partition& I, std::span<const MultiPoly> args) {
  if (args.size() < I.size())
    throw std::invalid_argument("monomial_symmetric: fewer arguments than parts");
  // Pad the exponent list with zeros and walk its distinct permutations.
  std::vector<unsigned> expo(I.parts());
  expo.resize(args.size(), 0);
  std::sort(expo.begin(), expo.end());
  MultiPoly out;
  do {
    MultiPoly term = MultiPoly::constant(Rational(1));
    for (size_t i = 0; i < args.size(); ++i)
      if (expo[i]) term *= args[i].pow(expo[i]);
    out += term;
  } while (std::next_permutation(expo.begin(), expo.end()));
  return out;
}

const ElementaryCombo& powersum_in_elementary(unsigned r) {
  if (r == 0) throw std::invalid_argument("powersum_in_elementary: r must be positive");
  static std::mutex mu;
  static std::map<unsigned, ElementaryCombo> cache;
  std::lock_guard<std::mutex> lock(mu);
  // Newton: p_k = sum_{i=1}^{k-1} (-1)^{i-1} e_i p_{k-i} + (-1)^{k-1} k e_k.
  for (unsigned k = static_cast<unsigned>(cache.size()) + 1; k <= r; ++k) {
    ElementaryCombo out;
    if (k == 1) {
      out[Partition::single(1)] = Rational(1);
    } else {
      for (unsigned i = 1; i < k; ++i) {
        const ElementaryCombo& prev = cache.at(k - i);
        Rational sign((i % 2) ? 1 : -1);
        Partition ei = Partition::single(i);
        for (const auto& [J, c] : prev) {
          Partition key = J.juxtapose(ei);
          auto [jt, fresh] = out.emplace(key, sign * c);
          if (!fresh) jt->second += sign * c;
        }
      }
      Rational top((k % 2) ? Rational(static_cast<long>(k)) : Rational(-static_cast<long>(k)));
      auto [jt, fresh] = out.emplace(Partition::single(k), top);
      if (!fresh) jt->second += top;
    }
    for (auto jt = out.begin(); jt != out.end();)
      jt = jt->second.is_zero() ? out.erase(jt) : std::next(jt);
    cache.emplace(k, std::move(out));
  }
  return cache.at(r);
}

const ElementaryCombo& powersum_monomial_in_elementary(const Partition& lambda) {
  static std::mutex mu;
  static std::map<Partition, ElementaryCombo> cache;
  // Take the needed power sums first; combo_mul below never re-enters.
  for (unsigned part : lambda.parts()) powersum_in_elementary(part);
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(lambda);
  if (it != cache.end()) return it->second;
  ElementaryCombo out;
  out[Partition()] = Rational(1);
  for (unsigned part : lambda.parts()) out = combo_mul(out, powersum_in_elementary(part));
  return cache.emplace(lambda, std::move(out)).first->second;
}

ElementaryCombo combo_mul(const ElementaryCombo& a, const ElementaryCombo& b) {
  ElementaryCombo out;
  for (const auto& [J, cj] : a) {
    for (const auto& [K, ck] : b) {
      Partition key = J.juxtapose(K);
      Rational c = cj * ck;
      auto [it, fresh] = out.emplace(std::move(key), c);
      if (!fresh) it->second += c;
    }
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

namespace {

// p_lambda = prod p_{lambda_i} on the m basis. Multiplication by a power sum
// obeys: coeff of m_nu in m_mu * p_r counts the parts v of nu (positions,
// i.e. with multiplicity) such that removing one copy of v and, when
// v > r, adding back v - r recovers mu.
using MonomialCombo = std::map<Partition, Rational>;

MonomialCombo mul_powersum_m(const MonomialCombo& f, unsigned r) {
  MonomialCombo out;
  for (const auto& [mu, c] : f) {
    // Append r as a new part.
    {
      Partition nu = mu.juxtapose(Partition::single(r));
      auto [it, fresh] = out.emplace(nu, Rational(0));
      (void)fresh;
      // multiplicity of r in nu = ways this nu arises from mu by the new part
      unsigned m = 0;
      for (unsigned p : nu.parts())
        if (p == r) ++m;
      it->second += c * Rational(static_cast<long>(m));
    }
    // Add r onto an existing part value v (one representative per value).
    for (auto [v, count] : mu.multiplicities()) {
      std::vector<unsigned> parts = mu.parts();
      auto pos = std::find(parts.begin(), parts.end(), v);
      *pos = v + r;
      Partition nu(parts);
      unsigned m = 0;
      for (unsigned p : nu.parts())
        if (p == v + r) ++m;
      auto [it, fresh] = out.emplace(nu, Rational(0));
      (void)fresh;
      it->second += c * Rational(static_cast<long>(m));
    }
  }
  for (auto it = out.begin(); it != out.end();)
    it = it->second.is_zero() ? out.erase(it) : std::next(it);
  return out;
}

}  // namespace

const SymTables& elementary_to_monomial(unsigned n) {
  static std::mutex mu;
  static std::map<unsigned, SymTables> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;
  if (n < 1 || n > 16) throw std::invalid_argument("elementary_to_monomial: n out of range");

  SymTables t;
  t.n = n;
  t.parts = partitions_of(n);
  size_t dim = t.parts.size();
  std::map<Partition, size_t> index;
  for (size_t i = 0; i < dim; ++i) index.emplace(t.parts[i], i);

  // e_r on the p basis, then p_lambda on the m basis, composed.
  std::map<unsigned, std::map<Partition, Rational>> e_in_p;  // weight r -> combo of p_lambda
  for (unsigned r = 1; r <= n; ++r) {
    // e_r = (1/r) sum_{i=1}^{r} (-1)^{i-1} p_i e_{r-i}
    std::map<Partition, Rational> combo;
    if (r == 1) {
      combo[Partition::single(1)] = Rational(1);
    } else {
      for (unsigned i = 1; i <= r; ++i) {
        Rational sign((i % 2) ? 1 : -1);
        if (i == r) {
          auto [jt, fresh] = combo.emplace(Partition::single(r), sign);
          if (!fresh) jt->second += sign;
          continue;
        }
        for (const auto& [lam, c] : e_in_p.at(r - i)) {
          Partition key = lam.juxtapose(Partition::single(i));
          Rational v = sign * c;
          auto [jt, fresh] = combo.emplace(key, v);
          if (!fresh) jt->second += v;
        }
      }
      for (auto& [lam, c] : combo) c /= Rational(static_cast<long>(r));
    }
    e_in_p.emplace(r, std::move(combo));
  }

  std::map<Partition, MonomialCombo> p_in_m;  // p_lambda -> m combo, memoized below
  std::function<const MonomialCombo&(const Partition&)> p_to_m =
      [&](const Partition& lam) -> const MonomialCombo& {
    auto found = p_in_m.find(lam);
    if (found != p_in_m.end()) return found->second;
    MonomialCombo combo;
    combo[Partition()] = Rational(1);
    for (unsigned part : lam.parts()) combo = mul_powersum_m(combo, part);
    return p_in_m.emplace(lam, std::move(combo)).first->second;
  };

  t.e_in_m.assign(dim, Vec(dim, Rational(0)));
  for (size_t j = 0; j < dim; ++j) {
    // e_J = prod e_{J_i}: multiply the p-basis combos, then map to m.
    std::map<Partition, Rational> p_combo;
    p_combo[Partition()] = Rational(1);
    for (unsigned part : t.parts[j].parts()) {
      std::map<Partition, Rational> next;
      for (const auto& [lam, c] : p_combo) {
        for (const auto& [mu, d] : e_in_p.at(part)) {
          Partition key = lam.juxtapose(mu);
          Rational v = c * d;
          auto [jt, fresh] = next.emplace(key, v);
          if (!fresh) jt->second += v;
        }
      }
      p_combo = std::move(next);
    }
    for (const auto& [lam, c] : p_combo) {
      for (const auto& [nu, d] : p_to_m(lam)) {
        t.e_in_m[j][index.at(nu)] += c * d;
      }
    }
  }

  auto inv = invert(t.e_in_m);
  if (!inv) throw std::logic_error("elementary_to_monomial: transition matrix not invertible");
  t.m_in_e = std::move(*inv);
  return cache.emplace(n, std::move(t)).first->second;
}

ElementaryCombo monomial_in_elementary(const Partition& I) {
  if (I.empty()) {
    ElementaryCombo out;
    out[Partition()] = Rational(1);
    return out;
  }
  const SymTables& t = elementary_to_monomial(I.weight());
  size_t row = 0;
  while (row < t.parts.size() && !(t.parts[row] == I)) ++row;
  if (row == t.parts.size()) throw std::logic_error("monomial_in_elementary: partition not found");
  ElementaryCombo out;
  for (size_t j = 0; j < t.parts.size(); ++j)
    if (!t.m_in_e[row][j].is_zero()) out.emplace(t.parts[j], t.m_in_e[row][j]);
  return out;
}

MultiPoly apply_linear(const Mat& m, const std::vector<std::string>& vars, const MultiPoly& p) {
  if (m.size() != vars.size())
    throw std::invalid_argument("apply_linear: matrix dimension mismatch");
  for (const auto& row : m)
    if (row.size() != vars.size())
      throw std::invalid_argument("apply_linear: matrix dimension mismatch");
  for (const auto& v : p.vars())
    if (std::find(vars.begin(), vars.end(), v) == vars.end())
      throw std::invalid_argument("apply_linear: polynomial variable not in list: " + v);
  std::map<std::string, MultiPoly> bindings;
  for (size_t i = 0; i < vars.size(); ++i) {
    MultiPoly image;
    for (size_t j = 0; j < vars.size(); ++j)
      image += MultiPoly::variable(vars[j]).scale(m[j][i]);
    bindings.emplace(vars[i], std::move(image));
  }
  return p.substitute(bindings);
}

}  // namespace cayley
