#pragma once

#include <compare>
#include <cstddef>
#include <map>
#include <string>
#include <utility>
#include <vector>

namespace cayley {

/// Integer partition: a weakly decreasing sequence of positive parts.
/// The empty partition has weight 0.
class Partition {
 public:
  Partition() = default;
  explicit Partition(std::vector<unsigned> parts);
  static Partition single(unsigned part);

  const std::vector<unsigned>& parts() const { return parts_; }
  unsigned weight() const;
  size_t size() const { return parts_.size(); }
  bool empty() const { return parts_.empty(); }

  /// Multiset union of the parts.
  Partition juxtapose(const Partition& other) const;

  /// All ordered pairs (J, K) of sub-multisets with J u K = this, each
  /// distinct pair listed once.
  std::vector<std::pair<Partition, Partition>> splits() const;

  /// Distinct part values with multiplicities, descending by value.
  std::vector<std::pair<unsigned, unsigned>> multiplicities() const;

  friend bool operator==(const Partition& a, const Partition& b) { return a.parts_ == b.parts_; }
  friend std::strong_ordering operator<=>(const Partition& a, const Partition& b);

  /// "(4,3)"; the empty partition renders as "()".
  std::string str() const;
  /// Accepts "4,3", "(4,3)" or "" / "()".
  static Partition parse(const std::string& text);

 private:
  std::vector<unsigned> parts_;
};

/// All partitions of n in a fixed deterministic order. Memoized.
const std::vector<Partition>& partitions_of(unsigned n);

}  // namespace cayley
