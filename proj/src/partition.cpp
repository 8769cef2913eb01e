#include "cayley/partition.hpp"

#include <algorithm>
#include <functional>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace cayley {

Partition::Partition(std::vector<unsigned> parts) : parts_(std::move(parts)) {
  for (unsigned p : parts_)
    if (p == 0) throw std::invalid_argument("Partition: parts must be positive");
  std::sort(parts_.begin(), parts_.end(), std::greater<unsigned>());
}

Partition Partition::single(unsigned part) { return Partition(std::vector<unsigned>{part}); }

unsigned Partition::weight() const {
  return std::accumulate(parts_.begin(), parts_.end(), 0u);
}

Partition Partition::juxtapose(const Partition& other) const {
  std::vector<unsigned> all = parts_;
  all.insert(all.end(), other.parts_.begin(), other.parts_.end());
  return Partition(std::move(all));
}

std::vector<std::pair<unsigned, unsigned>> Partition::multiplicities() const {
  std::vector<std::pair<unsigned, unsigned>> out;
  for (unsigned p : parts_) {
    if (!out.empty() && out.back().first == p)
      ++out.back().second;
    else
      out.emplace_back(p, 1);
  }
  return out;
}

std::vector<std::pair<Partition, Partition>> Partition::splits() const {
  auto mult = multiplicities();
  std::vector<std::pair<Partition, Partition>> out;
  std::vector<unsigned> left, right;
  std::function<void(size_t)> rec = [&](size_t i) {
    if (i == mult.size()) {
      out.emplace_back(Partition(left), Partition(right));
      return;
    }
    auto [value, count] = mult[i];
    for (unsigned take = 0; take <= count; ++take) {
      size_t l0 = left.size(), r0 = right.size();
      left.insert(left.end(), take, value);
      right.insert(right.end(), count - take, value);
      rec(i + 1);
      left.resize(l0);
      right.resize(r0);
    }
  };
  rec(0);
  return out;
}

std::strong_ordering operator<=>(const Partition& a, const Partition& b) {
  if (auto c = a.weight() <=> b.weight(); c != 0) return c;
  if (auto c = a.parts_.size() <=> b.parts_.size(); c != 0) return c;
  return a.parts_ <=> b.parts_;
}

std::string Partition::str() const {
  std::string s = "(";
  for (size_t i = 0; i < parts_.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(parts_[i]);
  }
  return s + ")";
}

Partition Partition::parse(const std::string& text) {
  std::string t = text;
  if (!t.empty() && t.front() == '(' && t.back() == ')') t = t.substr(1, t.size() - 2);
  std::vector<unsigned> parts;
  size_t i = 0;
  while (i < t.size()) {
    size_t j = i;
    while (j < t.size() && std::isdigit(static_cast<unsigned char>(t[j]))) ++j;
    if (j == i) throw std::invalid_argument("Partition: bad syntax in '" + text + "'");
    parts.push_back(static_cast<unsigned>(std::stoul(t.substr(i, j - i))));
    if (j < t.size()) {
      if (t[j] != ',') throw std::invalid_argument("Partition: bad syntax in '" + text + "'");
      ++j;
      if (j == t.size()) throw std::invalid_argument("Partition: trailing comma in '" + text + "'");
    }
    i = j;
  }
  return Partition(std::move(parts));
}

const std::vector<Partition>& partitions_of(unsigned n) {
  static std::mutex mu;
  static std::map<unsigned, std::vector<Partition>> cache;
  std::lock_guard<std::mutex> lock(mu);
  auto it = cache.find(n);
  if (it != cache.end()) return it->second;

  std::vector<Partition> out;
  std::vector<unsigned> cur;
  std::function<void(unsigned, unsigned)> rec = [&](unsigned rest, unsigned maxpart) {
    if (rest == 0) {
      out.emplace_back(Partition(cur));
      return;
    }
    for (unsigned p = std::min(rest, maxpart); p >= 1; --p) {
      cur.push_back(p);
      rec(rest - p, p);
      cur.pop_back();
    }
  };
  rec(n, n == 0 ? 1 : n);
  return cache.emplace(n, std::move(out)).first->second;
}

}  // namespace cayley
