#include "plint/nested_sum.hpp"

namespace plint {

void NestedSumPlan::descend(std::vector<int>& chain, const Body& body) const {
  if (chain.size() == depth_) {
    body(chain);
    return;
  }
  const auto [lo, hi] = bounds_(chain.size(), chain);
  for (int i = lo; i <= hi; ++i) {
    chain.push_back(i);
    descend(chain, body);
    chain.pop_back();
  }
}

void NestedSumPlan::for_each(const Body& body) const {
  std::vector<int> chain;
  chain.reserve(depth_);
  descend(chain, body);
}

long NestedSumPlan::count() const {
  long n = 0;
  for_each([&n](const std::vector<int>&) { ++n; });
  return n;
}

}  // namespace plint
