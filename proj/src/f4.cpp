#include "cayley/f4.hpp"

#include <algorithm>
#include <mutex>
#include <random>
#include <stdexcept>

#include "cayley/symfun.hpp"

namespace cayley {

namespace {

RootVector make_root(long c1, long c2, long c3, long c4, long den = 1) {
  return {Rational(c1, den), Rational(c2, den), Rational(c3, den), Rational(c4, den)};
}

RootVector neg(const RootVector& r) { return {-r[0], -r[1], -r[2], -r[3]}; }

bool root_is_zero(const RootVector& r) {
  return r[0].is_zero() && r[1].is_zero() && r[2].is_zero() && r[3].is_zero();
}

}  // namespace

const RootData& RootData::instance() {
  static const RootData data = [] {
    RootData d;
    d.evars = {"e1", "e2", "e3", "e4"};
    for (int i = 0; i < 4; ++i) {
      RootVector r = make_root(0, 0, 0, 0);
      r[i] = Rational(1);
      d.spin9_positive.push_back(r);
    }
    for (int i = 0; i < 4; ++i) {
      for (int j = i + 1; j < 4; ++j) {
        RootVector diff = make_root(0, 0, 0, 0), sum = make_root(0, 0, 0, 0);
        diff[i] = Rational(1);
        diff[j] = Rational(-1);
        sum[i] = Rational(1);
        sum[j] = Rational(1);
        d.spin9_positive.push_back(diff);
        d.spin9_positive.push_back(sum);
      }
    }
    for (int s2 = -1; s2 <= 1; s2 += 2)
      for (int s3 = -1; s3 <= 1; s3 += 2)
        for (int s4 = -1; s4 <= 1; s4 += 2)
          d.complementary.push_back(make_root(1, s2, s3, s4, 2));
    d.f4_positive = d.spin9_positive;
    d.f4_positive.insert(d.f4_positive.end(), d.complementary.begin(), d.complementary.end());

    d.simple = {make_root(0, 1, -1, 0), make_root(0, 0, 1, -1), make_root(0, 0, 0, 1),
                make_root(1, -1, -1, -1, 2)};
    d.a_tilde = make_root(1, 1, 0, 0);
    d.b_tilde = make_root(1, -1, 0, 0);  // 2 a4 + 2 a3 + a2

    Rational h(1, 2);
    Mat id = {{Rational(1), Rational(0), Rational(0), Rational(0)},
              {Rational(0), Rational(1), Rational(0), Rational(0)},
              {Rational(0), Rational(0), Rational(1), Rational(0)},
              {Rational(0), Rational(0), Rational(0), Rational(1)}};
    Mat s4 = {{h, h, h, h}, {h, h, -h, -h}, {h, -h, h, -h}, {h, -h, -h, h}};
    Mat s434 = {{h, h, h, -h}, {h, h, -h, h}, {h, -h, h, h}, {-h, h, h, h}};
    d.coset = {id, s4, s434};
    d.coset_sign = {1, -1, -1};
    return d;
  }();
  return data;
}

RootVector RootData::apply(const Mat& m, const RootVector& r) {
  RootVector out = make_root(0, 0, 0, 0);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) out[i] += m[i][j] * r[j];
  return out;
}

MultiPoly RootData::root_poly(const RootVector& r) {
  const RootData& d = instance();
  MultiPoly p;
  for (int i = 0; i < 4; ++i)
    if (!r[i].is_zero()) p += MultiPoly::variable(d.evars[i]).scale(r[i]);
  return p;
}

const MultiPoly& euler_class_f4() {
  static std::mutex mu;
  static MultiPoly cached;
  static bool ready = false;
  std::lock_guard<std::mutex> lock(mu);
  if (!ready) {
    MultiPoly p = MultiPoly::constant(Rational(1));
    for (const auto& r : RootData::instance().f4_positive) p *= RootData::root_poly(r);
    cached = std::move(p);
    ready = true;
  }
  return cached;
}

const MultiPoly& euler_class_spin9() {
  static std::mutex mu;
  static MultiPoly cached;
  static bool ready = false;
  std::lock_guard<std::mutex> lock(mu);
  if (!ready) {
    MultiPoly p = MultiPoly::constant(Rational(1));
    for (const auto& r : RootData::instance().spin9_positive) p *= RootData::root_poly(r);
    cached = std::move(p);
    ready = true;
  }
  return cached;
}

const MultiPoly& elementary_in_roots(unsigned j) {
  static std::mutex mu;
  static std::vector<MultiPoly> cache;
  if (j > 8) throw std::invalid_argument("elementary_in_roots: only 8 complementary roots");
  std::lock_guard<std::mutex> lock(mu);
  if (cache.empty()) {
    cache.assign(9, MultiPoly());
    cache[0] = MultiPoly::constant(Rational(1));
    for (const auto& r : RootData::instance().complementary) {
      MultiPoly sq = RootData::root_poly(r);
      sq *= sq;
      for (unsigned d = 8; d >= 1; --d) {
        if (!cache[d - 1].is_zero() || d == 1) cache[d] += cache[d - 1] * sq;
      }
    }
  }
  return cache[j];
}

MultiPoly vertical_class_s(const Partition& I) {
  if (I.empty()) return MultiPoly::constant(Rational(1));
  if (I.size() > 8) return MultiPoly();  // more parts than roots
  MultiPoly out;
  for (const auto& [L, c] : monomial_in_elementary(I)) {
    MultiPoly term = MultiPoly::constant(c);
    bool dead = false;
    for (unsigned part : L.parts()) {
      if (part > 8) {
        dead = true;
        break;
      }
      term *= elementary_in_roots(part);
    }
    if (!dead) out += term;
  }
  return out;
}

MultiPoly vertical_from_p_poly(const MultiPoly& p_poly) {
  std::map<std::string, MultiPoly> bind;
  for (const auto& v : p_poly.vars()) {
    if (v.size() < 2 || v[0] != 'p')
      throw std::invalid_argument("vertical class: variables must be p1..p8, got " + v);
    unsigned j = static_cast<unsigned>(std::stoul(v.substr(1)));
    if (j < 1 || j > 8)
      throw std::invalid_argument("vertical class: variables must be p1..p8, got " + v);
    bind.emplace(v, elementary_in_roots(j));
  }
  return p_poly.substitute(bind);
}

bool check_invariance(const MultiPoly& p) {
  const RootData& d = RootData::instance();
  for (const auto& v : p.vars())
    if (std::find(d.evars.begin(), d.evars.end(), v) == d.evars.end())
      throw std::invalid_argument("check_invariance: polynomial not in e1..e4");
  auto identity = [] {
    Mat m(4, Vec(4, Rational(0)));
    for (int i = 0; i < 4; ++i) m[i][i] = Rational(1);
    return m;
  };
  std::vector<Mat> gens;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) {
      Mat m = identity();
      std::swap(m[i], m[j]);
      gens.push_back(std::move(m));
    }
  for (int i = 0; i < 4; ++i) {
    Mat m = identity();
    m[i][i] = Rational(-1);
    gens.push_back(std::move(m));
  }
  for (const Mat& m : gens)
    if (!(apply_linear(m, d.evars, p) == p)) return false;
  return true;
}

std::array<RationalFn, 3> coset_terms(const MultiPoly& p) {
  if (!check_invariance(p)) throw std::invalid_argument("coset_terms: class is not Weyl invariant");
  const RootData& d = RootData::instance();
  auto term = [&](size_t w) {
    MultiPoly num = apply_linear(d.coset[w], d.evars, p);
    MultiPoly den = MultiPoly::constant(Rational(1));
    for (const auto& r : d.complementary)
      den *= RootData::root_poly(RootData::apply(d.coset[w], r));
    return RationalFn(std::move(num), std::move(den));
  };
  return {term(0), term(1), term(2)};
}

namespace {

std::map<std::string, Rational> random_regular_point(std::mt19937_64& rng) {
  const RootData& d = RootData::instance();
  std::uniform_int_distribution<long> dist(-40, 40);
  for (int attempt = 0; attempt < 200; ++attempt) {
    RootVector x = {Rational(dist(rng)), Rational(dist(rng)), Rational(dist(rng)),
                    Rational(dist(rng))};
    bool regular = true;
    for (const auto& r : d.f4_positive) {
      Rational v(0);
      for (int i = 0; i < 4; ++i) v += r[i] * x[i];
      if (v.is_zero()) {
        regular = false;
        break;
      }
    }
    if (regular)
      return {{"e1", x[0]}, {"e2", x[1]}, {"e3", x[2]}, {"e4", x[3]}};
  }
  throw std::runtime_error("pushforward: failed to sample a regular point");
}

}  // namespace

Rational pushforward_to_point(const MultiPoly& p, uint64_t seed) {
  int degree = 0;
  if (!p.is_homogeneous(&degree))
    throw std::invalid_argument("pushforward_to_point: class must be homogeneous");
  if (p.is_zero()) return Rational(0);
  if (degree < 8) return Rational(0);  // pushforward lowers degree by 16
  if (degree > 8)
    throw std::invalid_argument("pushforward_to_point: class degree exceeds the fiber dimension");
  auto terms = coset_terms(p);
  std::mt19937_64 rng(seed);
  std::vector<Rational> values;
  for (int trial = 0; trial < 3; ++trial) {
    auto point = random_regular_point(rng);
    Rational v(0);
    for (const auto& t : terms) v += t.eval(point);
    values.push_back(v);
  }
  if (!(values[0] == values[1] && values[1] == values[2]))
    throw std::runtime_error("pushforward evaluation points disagree");
  return values[0];
}

const CharNumbers& cap2_char_numbers() {
  static std::mutex mu;
  static CharNumbers cached;
  static bool ready = false;
  std::lock_guard<std::mutex> lock(mu);
  if (!ready) {
    std::map<Partition, Rational> p;
    for (const Partition& I : partitions_of(4)) {
      MultiPoly cls = MultiPoly::constant(Rational(1));
      for (unsigned part : I.parts()) cls *= elementary_in_roots(part);
      p.emplace(I, pushforward_to_point(cls));
    }
    cached = CharNumbers::from_p(4, std::move(p));
    ready = true;
  }
  return cached;
}

namespace {

// A linear-in-z substitution e_i -> a_i + b_i z.
using AffineSub = std::array<std::pair<Rational, Rational>, 4>;

struct CosetSeries {
  std::vector<Series<Rational>> elem;  // e_0..e_8 of the squared root images
  Series<Rational> den;                // product of the root images
};

Series<Rational> root_series(const RootVector& r, const AffineSub& sub, int order) {
  Rational a(0), b(0);
  for (int i = 0; i < 4; ++i) {
    a += r[i] * sub[i].first;
    b += r[i] * sub[i].second;
  }
  Series<Rational> s("z", order);
  s.set(0, a);
  if (order > 1) s.set(1, b);
  return s;
}

CosetSeries substitute_coset(size_t w, const AffineSub& sub, int order) {
  const RootData& d = RootData::instance();
  CosetSeries out{{}, Series<Rational>::constant("z", order, Rational(1))};
  out.elem.assign(9, Series<Rational>::zero("z", order));
  out.elem[0] = Series<Rational>::constant("z", order, Rational(1));
  for (const auto& r : d.complementary) {
    RootVector image = RootData::apply(d.coset[w], r);
    Series<Rational> rho = root_series(image, sub, order);
    if (rho.is_zero_to_order())
      throw std::domain_error("substitution kills a denominator root");
    Series<Rational> sq = rho * rho;
    for (int deg = 8; deg >= 1; --deg)
      out.elem[deg] = (out.elem[deg] + out.elem[deg - 1] * sq).truncate(order);
    out.den = (out.den * rho).truncate(order);
  }
  for (auto& e : out.elem) e = e.truncate(order);
  return out;
}

Series<Rational> s_class_series(const Partition& J, const CosetSeries& cs, int order) {
  Series<Rational> acc = Series<Rational>::zero("z", order);
  for (const auto& [L, c] : monomial_in_elementary(J)) {
    Series<Rational> term = Series<Rational>::constant("z", order, c);
    bool dead = false;
    for (unsigned part : L.parts()) {
      if (part > 8) {
        dead = true;
        break;
      }
      term = (term * cs.elem[part]).truncate(order);
    }
    if (!dead) acc += term;
  }
  return acc;
}

// Constant term of the coset sum under the given substitution; poles must
// cancel exactly.
Rational limit_at_substitution(const Partition& J, const AffineSub& sub) {
  int order = 2 * static_cast<int>(J.weight()) + 12;
  std::vector<std::pair<Series<Rational>, Series<Rational>>> terms;
  for (size_t w = 0; w < 3; ++w) {
    CosetSeries cs = substitute_coset(w, sub, order);
    terms.emplace_back(s_class_series(J, cs, order), cs.den);
  }
  return laurent_limit_sum(terms).coeff(0);
}

AffineSub hp_substitution() {
  // (e1, e2, e3, e4) -> (1, 1+z, z, z)
  return {{{Rational(1), Rational(0)},
           {Rational(1), Rational(1)},
           {Rational(0), Rational(1)},
           {Rational(0), Rational(1)}}};
}

AffineSub hp_hp_substitution(const Rational& t) {
  // (e1, e2, e3, e4) -> (1, 1+z, t+z, -t+z); the limit z -> 0 realizes the
  // substitution (g1, g1, g2, -g2) at g1 = 1, g2 = t.
  return {{{Rational(1), Rational(0)},
           {Rational(1), Rational(1)},
           {t, Rational(1)},
           {-t, Rational(1)}}};
}

}  // namespace

Rational fiber_pushforward_hp(const Partition& J) {
  static std::mutex mu;
  static std::map<Partition, Rational> cache;
  if (J.weight() < 4) return Rational(0);
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(J);
  if (it != cache.end()) return it->second;
  Rational v = limit_at_substitution(J, hp_substitution());
  cache.emplace(J, v);
  return v;
}

std::vector<Rational> fiber_pushforward_hp_hp(const Partition& J) {
  static std::mutex mu;
  static std::map<Partition, std::vector<Rational>> cache;
  if (J.weight() < 4) return {};
  {
    std::lock_guard<std::mutex> lock(mu);
    auto it = cache.find(J);
    if (it != cache.end()) return it->second;
  }
  unsigned a = J.weight() - 4;
  // Sample the even polynomial S(1, t) of degree 2a at a+1 points and solve
  // the Vandermonde system in t^2; one extra point cross-checks the result.
  std::vector<Rational> samples, ysq;
  for (unsigned s = 0; s <= a + 1; ++s) {
    Rational t(static_cast<long>(s) + 1);
    samples.push_back(limit_at_substitution(J, hp_hp_substitution(t)));
    ysq.push_back(t * t);
  }
  Mat vand(a + 1, Vec(a + 1));
  Vec rhs(a + 1);
  for (unsigned r = 0; r <= a; ++r) {
    Rational p(1);
    for (unsigned c = 0; c <= a; ++c) {
      vand[r][c] = p;
      p *= ysq[r];
    }
    rhs[r] = samples[r];
  }
  auto coeffs = solve(vand, rhs);
  if (!coeffs) throw std::runtime_error("fiber pushforward: interpolation failed");
  Rational check(0), p(1);
  for (unsigned c = 0; c <= a; ++c) {
    check += (*coeffs)[c] * p;
    p *= ysq[a + 1];
  }
  if (!(check == samples[a + 1]))
    throw std::runtime_error("fiber pushforward: interpolation disagrees at the check point");
  std::lock_guard<std::mutex> lock(mu);
  return cache.emplace(J, std::move(*coeffs)).first->second;
}

namespace {

// Coefficient of u^{|K|} in s_K(T HP^m); zero above the top degree.
Rational hp_s_class_coeff(unsigned m, const Partition& K) {
  if (K.empty()) return Rational(1);
  if (K.weight() > m) return Rational(0);
  std::vector<Rational> c(m + 1, Rational(0));
  for (unsigned i = 0; i <= m; ++i) {
    Rational acc(0), pow4(1);
    for (unsigned b = 0; b <= i; ++b) {
      Rational term = Rational(binomial_int(2 * m + 2, i - b)) * pow4;
      acc += (b % 2) ? -term : term;
      pow4 *= Rational(4);
    }
    c[i] = acc;
  }
  Rational out(0);
  for (const auto& [L, coeff] : monomial_in_elementary(K)) {
    Rational prod = coeff;
    for (unsigned part : L.parts()) prod *= part <= m ? c[part] : Rational(0);
    out += prod;
  }
  return out;
}

}  // namespace

Rational s_number_E(unsigned n, const Partition& I) {
  if (n < 4) throw std::invalid_argument("s_number_E: bundle requires n >= 4");
  if (I.weight() > n) throw std::invalid_argument("s_number_E: partition exceeds dimension");
  if (I.weight() < n) return Rational(0);  // class below the top degree
  unsigned m = n - 4;
  Rational acc(0);
  for (const auto& [J, K] : I.splits()) {
    if (J.weight() < 4 || K.weight() > m) continue;
    Rational fiber = fiber_pushforward_hp(J);
    if (fiber.is_zero()) continue;
    acc += fiber * hp_s_class_coeff(m, K);
  }
  return acc;
}

Rational s_number_Eprime(unsigned n, const Partition& I) {
  if (n < 6) throw std::invalid_argument("s_number_Eprime: bundle requires n >= 6");
  if (I.weight() > n) throw std::invalid_argument("s_number_Eprime: partition exceeds dimension");
  if (I.weight() < n) return Rational(0);
  unsigned m1 = n - 5;
  Rational acc(0);
  for (const auto& [J, K] : I.splits()) {
    if (J.weight() < 5 || K.weight() > m1) continue;
    std::vector<Rational> fiber = fiber_pushforward_hp_hp(J);
    if (fiber.size() < 2 || fiber[1].is_zero()) continue;  // needs the u2 part
    acc += fiber[1] * hp_s_class_coeff(m1, K);
  }
  return acc;
}

CharNumbers full_char_numbers_E(unsigned n) {
  if (n < 4 || n > 8) throw std::invalid_argument("full_char_numbers_E: supported for 4 <= n <= 8");
  std::map<Partition, Rational> s;
  for (const Partition& I : partitions_of(n)) s.emplace(I, s_number_E(n, I));
  return CharNumbers::from_s(n, std::move(s));
}

CharNumbers full_char_numbers_Eprime(unsigned n) {
  if (n < 6 || n > 8)
    throw std::invalid_argument("full_char_numbers_Eprime: supported for 6 <= n <= 8");
  std::map<Partition, Rational> s;
  for (const Partition& I : partitions_of(n)) s.emplace(I, s_number_Eprime(n, I));
  return CharNumbers::from_s(n, std::move(s));
}

}  // namespace cayley
