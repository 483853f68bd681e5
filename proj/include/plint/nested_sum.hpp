#pragma once

#include <cstddef>
#include <functional>
#include <utility>
#include <vector>

namespace plint {

/// Enumerates index chains (i_1, ..., i_depth) in lexicographic order, where
/// each level's inclusive range may depend on the indices chosen above it.
/// Empty ranges contribute nothing; depth 0 yields the single empty chain.
class NestedSumPlan {
 public:
  using Bounds = std::function<std::pair<int, int>(std::size_t level, const std::vector<int>& outer)>;
  using Body = std::function<void(const std::vector<int>& chain)>;

  NestedSumPlan(std::size_t depth, Bounds bounds) : depth_(depth), bounds_(std::move(bounds)) {}

  std::size_t depth() const noexcept { return depth_; }
  void for_each(const Body& body) const;
  /// Number of chains enumerated.
  long count() const;

 private:
  void descend(std::vector<int>& chain, const Body& body) const;

  std::size_t depth_;
  Bounds bounds_;
};

}  // namespace plint
