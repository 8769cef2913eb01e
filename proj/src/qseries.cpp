#include "cayley/qseries.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "cayley/linalg.hpp"

namespace cayley {

QSeries::QSeries(const Rational& c, std::optional<int> weight)
    : order_(kExactOrder), weight_(weight) {
  if (!c.is_zero()) c_.push_back(c);
}

QSeries::QSeries(int order, std::vector<Rational> coeffs, std::optional<int> weight)
    : order_(order), c_(std::move(coeffs)), weight_(weight) {
  if (order_ < 1) throw std::invalid_argument("QSeries: order must be >= 1");
  if (static_cast<int>(c_.size()) > order_) c_.resize(order_);
  while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
}

QSeries QSeries::with_weight(int w) const {
  QSeries s = *this;
  s.weight_ = w;
  return s;
}

Rational QSeries::coeff(int k) const {
  if (k < 0 || k >= order_) throw std::out_of_range("QSeries: coefficient beyond order");
  return k < static_cast<int>(c_.size()) ? c_[k] : Rational(0);
}

bool QSeries::is_zero() const {
  return std::all_of(c_.begin(), c_.end(), [](const Rational& r) { return r.is_zero(); });
}

bool QSeries::is_constant() const {
  for (size_t k = 1; k < c_.size(); ++k)
    if (!c_[k].is_zero()) return false;
  return true;
}

int QSeries::valuation() const {
  for (int k = 0; k < static_cast<int>(c_.size()); ++k)
    if (!c_[k].is_zero()) return k;
  return order_;
}

QSeries QSeries::operator-() const {
  QSeries s = *this;
  for (auto& x : s.c_) x = -x;
  return s;
}

namespace {
std::optional<int> weight_add(const std::optional<int>& a, const std::optional<int>& b) {
  if (a && b) return *a + *b;
  return std::nullopt;
}
std::optional<int> weight_join(const std::optional<int>& a, const std::optional<int>& b) {
  if (a && b && *a == *b) return a;
  return std::nullopt;
}
}  // namespace

QSeries operator+(const QSeries& a, const QSeries& b) {
  int order = std::min(a.order_, b.order_);
  size_t n = std::min<size_t>(std::max(a.c_.size(), b.c_.size()), order);
  std::vector<Rational> c(n, Rational(0));
  for (size_t k = 0; k < n; ++k) {
    if (k < a.c_.size()) c[k] += a.c_[k];
    if (k < b.c_.size()) c[k] += b.c_[k];
  }
  return QSeries(order, std::move(c), weight_join(a.weight_, b.weight_));
}

QSeries operator-(const QSeries& a, const QSeries& b) { return a + (-b); }

QSeries operator*(const QSeries& a, const QSeries& b) {
  int va = a.valuation() == a.order_ ? a.order_ : a.valuation();
  int vb = b.valuation() == b.order_ ? b.order_ : b.valuation();
  long order = std::min<long>(static_cast<long>(a.order_) + vb, static_cast<long>(b.order_) + va);
  order = std::min<long>(order, QSeries::kExactOrder);
  size_t n = a.c_.empty() || b.c_.empty()
                 ? 0
                 : std::min<size_t>(a.c_.size() + b.c_.size() - 1, static_cast<size_t>(order));
  std::vector<Rational> c(n, Rational(0));
  for (size_t i = 0; i < a.c_.size(); ++i) {
    if (a.c_[i].is_zero()) continue;
    for (size_t j = 0; j < b.c_.size() && i + j < n; ++j) c[i + j] += a.c_[i] * b.c_[j];
  }
  return QSeries(static_cast<int>(order), std::move(c), weight_add(a.weight_, b.weight_));
}

QSeries QSeries::scale(const Rational& r) const {
  QSeries s = *this;
  if (r.is_zero()) {
    s.c_.clear();
    return s;
  }
  for (auto& x : s.c_) x *= r;
  return s;
}

QSeries QSeries::pow(unsigned e) const {
  QSeries r(Rational(1));
  r.weight_ = weight_ ? std::optional<int>(0) : std::nullopt;
  QSeries b = *this;
  while (e) {
    if (e & 1) r *= b;
    e >>= 1;
    if (e) b *= b;
  }
  return r;
}

QSeries QSeries::truncate(int order) const {
  if (order > order_) throw std::invalid_argument("QSeries: cannot extend order");
  return QSeries(order, c_, weight_);
}

bool operator==(const QSeries& a, const QSeries& b) {
  int order = std::min(a.order_, b.order_);
  for (int k = 0; k < order && k < static_cast<int>(std::max(a.c_.size(), b.c_.size())); ++k)
    if (!(a.coeff(k) == b.coeff(k))) return false;
  return true;
}

std::string QSeries::str(int max_order) const {
  int shown = std::min(order_, max_order);
  std::string out;
  for (int k = 0; k < shown; ++k) {
    Rational c = coeff(k);
    if (c.is_zero()) continue;
    std::string cs = c.abs().str();
    std::string mono = k == 0 ? "" : (k == 1 ? "q" : "q^" + std::to_string(k));
    std::string term = mono.empty() ? cs : (cs == "1" ? mono : cs + "*" + mono);
    if (out.empty())
      out = (c.sign() < 0 ? "-" : "") + term;
    else
      out += (c.sign() < 0 ? " - " : " + ") + term;
  }
  if (out.empty()) out = "0";
  if (!exact() || shown < static_cast<int>(c_.size()))
    out += " + O(q^" + std::to_string(shown) + ")";
  return out;
}

QSeries RingOps<QSeries>::invert(const QSeries& x) {
  Rational c0 = x.coeff(0);
  if (c0.is_zero()) throw std::domain_error("QSeries: cannot invert, constant term vanishes");
  if (x.exact()) {
    if (!x.is_constant())
      throw std::domain_error("QSeries: cannot invert exact non-constant series");
    return QSeries(c0.inverse());
  }
  int order = x.order();
  std::vector<Rational> inv(order, Rational(0));
  inv[0] = c0.inverse();
  for (int n = 1; n < order; ++n) {
    Rational acc(0);
    for (int k = 1; k <= n; ++k) acc += x.coeff(k) * inv[n - k];
    inv[n] = -(inv[0] * acc);
  }
  return QSeries(order, std::move(inv));
}

QSeries eisenstein(unsigned k, int level, int order) {
  if (k % 2 != 0 || k < 2) throw std::invalid_argument("eisenstein: weight must be even and >= 2");
  if (level != 1 && level != 2) throw std::invalid_argument("eisenstein: level must be 1 or 2");
  if (order < 1) throw std::invalid_argument("eisenstein: order must be >= 1");
  std::vector<Rational> c(order, Rational(0));
  c[0] = -bernoulli(k) / Rational(2 * static_cast<long>(k));
  for (int d = 1; d < order; ++d) {
    mpz_class dk;
    mpz_ui_pow_ui(dk.get_mpz_t(), d, k - 1);
    Rational term{mpz_class(dk)};
    for (int n = d; n < order; n += d) {
      bool negate = level == 2 && ((n / d) % 2 == 1);
      c[n] += negate ? -term : term;
    }
  }
  return QSeries(order, std::move(c), static_cast<int>(k));
}

QSeries delta_qseries(int order) { return eisenstein(2, 2, order).scale(Rational(3)); }

QSeries epsilon_qseries(int order) {
  QSeries g2 = eisenstein(2, 2, order);
  QSeries g4 = eisenstein(4, 2, order);
  return (g2 * g2).scale(Rational(2)) - g4.scale(Rational(5, 6));
}

namespace {

void enumerate_monomials(const std::vector<int>& weights, int target, size_t i,
                         std::vector<unsigned>& cur, std::vector<std::vector<unsigned>>& out) {
  if (i == weights.size()) {
    if (target == 0) out.push_back(cur);
    return;
  }
  for (int e = 0; e * weights[i] <= target; ++e) {
    cur[i] = static_cast<unsigned>(e);
    enumerate_monomials(weights, target - e * weights[i], i + 1, cur, out);
  }
  cur[i] = 0;
}

}  // namespace

MultiPoly express_in_basis(const QSeries& f, const std::vector<BasisGen>& gens) {
  if (!f.weight()) throw std::invalid_argument("express_in_basis: series lacks weight annotation");
  int w = *f.weight();
  std::vector<int> weights;
  for (const auto& g : gens) {
    if (!g.series.weight())
      throw std::invalid_argument("express_in_basis: generator lacks weight annotation");
    weights.push_back(*g.series.weight());
  }
  std::vector<std::vector<unsigned>> monomials;
  std::vector<unsigned> cur(gens.size(), 0);
  enumerate_monomials(weights, w, 0, cur, monomials);
  if (monomials.empty()) throw std::domain_error("not in span");

  size_t dim = monomials.size();
  int need = static_cast<int>(dim) + 10;
  int avail = f.order();
  std::vector<QSeries> cols;
  for (const auto& expo : monomials) {
    QSeries m(Rational(1), 0);
    for (size_t i = 0; i < gens.size(); ++i)
      if (expo[i]) m *= gens[i].series.pow(expo[i]);
    avail = std::min(avail, m.order());
    cols.push_back(std::move(m));
  }
  if (avail < need) throw std::invalid_argument("express_in_basis: insufficient q-order");

  Mat a(need, Vec(dim));
  Vec b(need);
  for (int r = 0; r < need; ++r) {
    for (size_t j = 0; j < dim; ++j) a[r][j] = cols[j].coeff(r);
    b[r] = f.coeff(r);
  }
  bool deficient = false;
  auto x = solve(a, b, &deficient);
  if (deficient) throw std::domain_error("basis degenerate");
  if (!x) throw std::domain_error("not in span");

  // Verify against every further available coefficient.
  for (int r = need; r < avail; ++r) {
    Rational acc(0);
    for (size_t j = 0; j < dim; ++j) acc += (*x)[j] * cols[j].coeff(r);
    if (!(acc == f.coeff(r))) throw std::domain_error("not in span");
  }

  MultiPoly out;
  for (size_t j = 0; j < dim; ++j) {
    if ((*x)[j].is_zero()) continue;
    MultiPoly mono = MultiPoly::constant((*x)[j]);
    for (size_t i = 0; i < gens.size(); ++i)
      if (monomials[j][i]) mono *= MultiPoly::variable(gens[i].name).pow(monomials[j][i]);
    out += mono;
  }
  return out;
}

QSeries eval_poly_qseries(const MultiPoly& p, const std::map<std::string, QSeries>& bindings) {
  for (const auto& v : p.vars())
    if (!bindings.count(v))
      throw std::invalid_argument("eval_poly_qseries: unbound variable " + v);
  QSeries out(Rational(0));
  for (const auto& [e, c] : p.terms()) {
    QSeries term{c};
    for (size_t i = 0; i < e.size(); ++i)
      if (e[i]) term *= bindings.at(p.vars()[i]).pow(e[i]);
    out += term;
  }
  return out;
}

}  // namespace cayley
