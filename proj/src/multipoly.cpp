#include "cayley/multipoly.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "cayley/parse_util.hpp"

namespace cayley {

bool natural_name_less(const std::string& a, const std::string& b) {
  size_t i = 0, j = 0;
  auto is_digit = [](char c) { return std::isdigit(static_cast<unsigned char>(c)); };
  while (i < a.size() && j < b.size()) {
    if (is_digit(a[i]) && is_digit(b[j])) {
      size_t i2 = i, j2 = j;
      while (i2 < a.size() && is_digit(a[i2])) ++i2;
      while (j2 < b.size() && is_digit(b[j2])) ++j2;
      // Compare digit runs numerically (no leading-zero subtleties needed here).
      std::string da = a.substr(i, i2 - i), db = b.substr(j, j2 - j);
      da.erase(0, std::min(da.find_first_not_of('0'), da.size() - 1));
      db.erase(0, std::min(db.find_first_not_of('0'), db.size() - 1));
      if (da.size() != db.size()) return da.size() < db.size();
      if (da != db) return da < db;
      i = i2;
      j = j2;
    } else {
      if (a[i] != b[j]) return a[i] < b[j];
      ++i;
      ++j;
    }
  }
  return a.size() - i < b.size() - j;
}

bool GradedLexLess::operator()(const Exponents& a, const Exponents& b) const {
  unsigned da = std::accumulate(a.begin(), a.end(), 0u);
  unsigned db = std::accumulate(b.begin(), b.end(), 0u);
  if (da != db) return da < db;
  return a < b;
}

MultiPoly MultiPoly::constant(const Rational& c) {
  MultiPoly p;
  if (!c.is_zero()) p.terms_.emplace(Exponents{}, c);
  return p;
}

MultiPoly MultiPoly::variable(const std::string& name) {
  if (name.empty()) throw std::invalid_argument("MultiPoly: empty variable name");
  MultiPoly p;
  p.vars_ = {name};
  p.terms_.emplace(Exponents{1}, Rational(1));
  return p;
}

MultiPoly MultiPoly::from_terms(std::vector<std::string> vars, TermMap terms) {
  MultiPoly p;
  p.vars_ = std::move(vars);
  for (auto& [e, c] : terms) {
    if (e.size() != p.vars_.size())
      throw std::invalid_argument("MultiPoly: exponent vector length mismatch");
  }
  p.terms_ = std::move(terms);
  // Re-sort variables into natural order if needed.
  std::vector<std::string> sorted = p.vars_;
  std::sort(sorted.begin(), sorted.end(), natural_name_less);
  if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end())
    throw std::invalid_argument("MultiPoly: duplicate variable");
  if (sorted != p.vars_) p = p.with_vars(sorted);
  p.normalize();
  return p;
}

bool MultiPoly::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.begin()->first == Exponents(vars_.size(), 0));
}

Rational MultiPoly::constant_value() const {
  auto it = terms_.find(Exponents(vars_.size(), 0));
  return it == terms_.end() ? Rational(0) : it->second;
}

void MultiPoly::normalize() {
  for (auto it = terms_.begin(); it != terms_.end();)
    it = it->second.is_zero() ? terms_.erase(it) : std::next(it);
  if (vars_.empty()) return;
  std::vector<bool> used(vars_.size(), false);
  for (const auto& [e, c] : terms_)
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i]) used[i] = true;
  if (std::all_of(used.begin(), used.end(), [](bool b) { return b; })) return;
  std::vector<std::string> vars;
  for (size_t i = 0; i < vars_.size(); ++i)
    if (used[i]) vars.push_back(vars_[i]);
  TermMap terms;
  for (const auto& [e, c] : terms_) {
    Exponents ne;
    for (size_t i = 0; i < e.size(); ++i)
      if (used[i]) ne.push_back(e[i]);
    terms.emplace(std::move(ne), c);
  }
  vars_ = std::move(vars);
  terms_ = std::move(terms);
}

MultiPoly MultiPoly::with_vars(const std::vector<std::string>& vars) const {
  std::vector<size_t> where(vars_.size());
  for (size_t i = 0; i < vars_.size(); ++i) {
    auto it = std::find(vars.begin(), vars.end(), vars_[i]);
    if (it == vars.end()) throw std::invalid_argument("MultiPoly: variable not in target list");
    where[i] = static_cast<size_t>(it - vars.begin());
  }
  MultiPoly p;
  p.vars_ = vars;
  for (const auto& [e, c] : terms_) {
    Exponents ne(vars.size(), 0);
    for (size_t i = 0; i < e.size(); ++i) ne[where[i]] = e[i];
    p.terms_.emplace(std::move(ne), c);
  }
  return p;
}

void MultiPoly::unify(const MultiPoly& a, const MultiPoly& b, MultiPoly& ua, MultiPoly& ub) {
  std::vector<std::string> vars = a.vars_;
  for (const auto& v : b.vars_)
    if (std::find(vars.begin(), vars.end(), v) == vars.end()) vars.push_back(v);
  std::sort(vars.begin(), vars.end(), natural_name_less);
  ua = a.with_vars(vars);
  ub = b.with_vars(vars);
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly p = *this;
  for (auto& [e, c] : p.terms_) c = -c;
  return p;
}

MultiPoly operator+(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly ua, ub;
  MultiPoly::unify(a, b, ua, ub);
  for (const auto& [e, c] : ub.terms_) {
    auto [it, fresh] = ua.terms_.emplace(e, c);
    if (!fresh) it->second += c;
  }
  ua.normalize();
  return ua;
}

MultiPoly operator-(const MultiPoly& a, const MultiPoly& b) { return a + (-b); }

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  MultiPoly ua, ub;
  MultiPoly::unify(a, b, ua, ub);
  MultiPoly p;
  p.vars_ = ua.vars_;
  for (const auto& [ea, ca] : ua.terms_) {
    for (const auto& [eb, cb] : ub.terms_) {
      Exponents e(ea.size());
      for (size_t i = 0; i < e.size(); ++i) e[i] = ea[i] + eb[i];
      Rational c = ca * cb;
      auto [it, fresh] = p.terms_.emplace(std::move(e), c);
      if (!fresh) it->second += c;
    }
  }
  p.normalize();
  return p;
}

MultiPoly MultiPoly::scale(const Rational& c) const {
  if (c.is_zero()) return MultiPoly();
  MultiPoly p = *this;
  for (auto& [e, coeff] : p.terms_) coeff *= c;
  return p;
}

MultiPoly MultiPoly::pow(unsigned e) const {
  MultiPoly r = constant(Rational(1));
  MultiPoly base = *this;
  while (e) {
    if (e & 1) r *= base;
    e >>= 1;
    if (e) base *= base;
  }
  return r;
}

int MultiPoly::total_degree() const {
  int d = -1;
  for (const auto& [e, c] : terms_)
    d = std::max(d, static_cast<int>(std::accumulate(e.begin(), e.end(), 0u)));
  return d;
}

bool MultiPoly::is_homogeneous(int* degree) const {
  int d = -1;
  for (const auto& [e, c] : terms_) {
    int t = static_cast<int>(std::accumulate(e.begin(), e.end(), 0u));
    if (d == -1)
      d = t;
    else if (t != d)
      return false;
  }
  if (degree) *degree = d;
  return true;
}

MultiPoly MultiPoly::substitute(const std::map<std::string, MultiPoly>& bindings) const {
  for (const auto& v : vars_)
    if (!bindings.count(v))
      throw std::invalid_argument("MultiPoly::substitute: unbound variable " + v);
  // Memoize powers of each binding.
  std::vector<std::vector<MultiPoly>> powers(vars_.size());
  auto power = [&](size_t i, unsigned e) -> const MultiPoly& {
    auto& cache = powers[i];
    if (cache.empty()) cache.push_back(MultiPoly::constant(Rational(1)));
    const MultiPoly& base = bindings.at(vars_[i]);
    while (cache.size() <= e) cache.push_back(cache.back() * base);
    return cache[e];
  };
  MultiPoly out;
  for (const auto& [e, c] : terms_) {
    MultiPoly term = MultiPoly::constant(c);
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i]) term *= power(i, e[i]);
    out += term;
  }
  return out;
}

Rational MultiPoly::eval(const std::map<std::string, Rational>& point) const {
  for (const auto& v : vars_)
    if (!point.count(v)) throw std::invalid_argument("MultiPoly::eval: unbound variable " + v);
  Rational out(0);
  for (const auto& [e, c] : terms_) {
    Rational t = c;
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i]) t *= point.at(vars_[i]).pow(e[i]);
    out += t;
  }
  return out;
}

MultiPoly MultiPoly::exact_div(const MultiPoly& d) const {
  if (d.is_zero()) throw std::domain_error("MultiPoly::exact_div: division by zero");
  MultiPoly ua, ub;
  unify(*this, d, ua, ub);
  const std::vector<std::string> all_vars = ua.vars_;
  MultiPoly q;
  q.vars_ = all_vars;
  const auto& dlead = *ub.terms_.rbegin();
  while (!ua.terms_.empty()) {
    const auto& rlead = *ua.terms_.rbegin();
    Exponents e(rlead.first.size());
    for (size_t i = 0; i < e.size(); ++i) {
      if (rlead.first[i] < dlead.first[i])
        throw std::domain_error("MultiPoly::exact_div: not divisible");
      e[i] = rlead.first[i] - dlead.first[i];
    }
    Rational c = rlead.second / dlead.second;
    MultiPoly t;
    t.vars_ = all_vars;
    t.terms_.emplace(std::move(e), c);
    q = q + t;
    // Keep the exponent layout aligned with dlead across iterations.
    ua = (ua - t * ub).with_vars(all_vars);
  }
  q.normalize();
  return q;
}

Rational MultiPoly::coefficient(const std::map<std::string, unsigned>& monomial) const {
  for (const auto& [name, e] : monomial)
    if (e && std::find(vars_.begin(), vars_.end(), name) == vars_.end()) return Rational(0);
  Exponents target(vars_.size(), 0);
  for (size_t i = 0; i < vars_.size(); ++i) {
    auto it = monomial.find(vars_[i]);
    if (it != monomial.end()) target[i] = it->second;
  }
  auto it = terms_.find(target);
  return it == terms_.end() ? Rational(0) : it->second;
}

std::string MultiPoly::str() const {
  if (terms_.empty()) return "0";
  std::string out;
  for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
    const auto& [e, c] = *it;
    bool first = out.empty();
    bool neg = c.sign() < 0;
    if (first)
      out += neg ? "-" : "";
    else
      out += neg ? " - " : " + ";
    std::string mono;
    for (size_t i = 0; i < e.size(); ++i) {
      if (!e[i]) continue;
      if (!mono.empty()) mono += "*";
      mono += vars_[i];
      if (e[i] > 1) mono += "^" + std::to_string(e[i]);
    }
    Rational a = c.abs();
    if (mono.empty())
      out += a.str();
    else if (a.is_one())
      out += mono;
    else
      out += a.str() + "*" + mono;
  }
  return out;
}

namespace {

struct PolyAlgebra {
  using Value = MultiPoly;
  Value from_rational(const Rational& r) { return MultiPoly::constant(r); }
  Value symbol(const std::string& name, size_t) { return MultiPoly::variable(name); }
  Value add(Value a, Value b) { return a + b; }
  Value sub(Value a, Value b) { return a - b; }
  Value mul(Value a, Value b) { return a * b; }
  Value neg(Value a) { return -a; }
  Value pow(Value a, unsigned long e, size_t) { return a.pow(static_cast<unsigned>(e)); }
};

}  // namespace

MultiPoly MultiPoly::parse(const std::string& text) {
  PolyAlgebra alg;
  return detail::ExprParser<PolyAlgebra>(text, alg).run();
}

RationalFn::RationalFn(MultiPoly num, MultiPoly den) : num_(std::move(num)), den_(std::move(den)) {
  if (den_.is_zero()) throw std::domain_error("RationalFn: zero denominator");
}

RationalFn operator+(const RationalFn& a, const RationalFn& b) {
  return RationalFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RationalFn operator*(const RationalFn& a, const RationalFn& b) {
  return RationalFn(a.num_ * b.num_, a.den_ * b.den_);
}

Rational RationalFn::eval(const std::map<std::string, Rational>& point) const {
  Rational d = den_.eval(point);
  if (d.is_zero()) throw std::domain_error("RationalFn: denominator vanishes at point");
  return num_.eval(point) / d;
}

}  // namespace cayley
