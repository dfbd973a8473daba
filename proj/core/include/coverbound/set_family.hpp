#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <unordered_map>
#include <vector>

#include "coverbound/graph.hpp"
#include "coverbound/metric_space.hpp"

namespace coverbound {

// Enumerating a truncated family would exceed the configured cap.
struct FamilyCapError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class FamilyPredicate { All, Independent, Separated };

// Truncated subset family over ground set {0..n-1}, n <= 30, bitmask encoded.
// Members are ordered by cardinality, then lexicographically by element
// sequence within each cardinality ({0,3} before {1,2}; this differs from
// numeric mask order). Downward closed by construction: predicates constrain
// pairs only.
class SetFamily {
 public:
  static constexpr std::size_t kDefaultCap = 200000;

  static SetFamily all_subsets(int ground, int max_size, std::size_t cap = kDefaultCap);
  static SetFamily independent_sets(const Graph& g, int max_size,
                                    std::size_t cap = kDefaultCap);
  // Keeps subsets whose points are pairwise farther than eps apart
  // (a pair at distance <= eps disqualifies; the threshold is closed).
  static SetFamily separated_sets(const FiniteMetricSpace& space, double eps,
                                  int max_size, std::size_t cap = kDefaultCap);

  int ground_size() const { return ground_; }
  int max_size() const { return max_size_; }
  FamilyPredicate predicate() const { return predicate_; }
  std::size_t size() const { return members_.size(); }
  std::uint32_t subset(std::size_t pos) const { return members_[pos]; }

  // Position of mask in the family, -1 if absent.
  int index_of(std::uint32_t mask) const {
    auto it = index_.find(mask);
    return it == index_.end() ? -1 : it->second;
  }

  // Number of members with cardinality <= t; they form a prefix of the order.
  std::size_t prefix_size(int t) const {
    if (t < 0) return 0;
    if (t > max_size_) throw std::out_of_range("SetFamily: prefix level above max_size");
    return prefix_[t];
  }

 private:
  template <typename PairOk>
  static SetFamily enumerate(int ground, int max_size, FamilyPredicate pred,
                             std::size_t cap, PairOk&& pair_ok);

  int ground_ = 0;
  int max_size_ = 0;
  FamilyPredicate predicate_ = FamilyPredicate::All;
  std::vector<std::uint32_t> members_;
  std::vector<std::size_t> prefix_;  // prefix_[k] = members of size <= k
  std::unordered_map<std::uint32_t, int> index_;
};

}  // namespace coverbound
