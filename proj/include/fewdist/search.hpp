#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "fewdist/geometry.hpp"

namespace fewdist {

inline constexpr std::uint64_t kUnlimitedBudget =
    std::numeric_limits<std::uint64_t>::max();

struct SearchResult {
  std::vector<std::size_t> best_indices;  // into the ground set, ascending
  PointSet best_subset;
  std::size_t best_size = 0;
  std::uint64_t nodes_explored = 0;
  std::uint64_t pruned_by_bound = 0;
  /// True iff the pruned tree was fully explored within the node budget,
  /// in which case best_size is the exact maximum.
  bool exhaustive = false;
};

/// Largest subset of the ground set realizing at most s distinct
/// distances. Backtracking over points in input order with three cuts:
/// a branch dies when its spectrum exceeds s values, when it cannot beat
/// the incumbent even taking every remaining point, and the whole search
/// stops once the incumbent reaches C(d+s,s), which no s-distance set can
/// exceed. Running out of budget is not an error; the incumbent is
/// returned with exhaustive = false.
SearchResult max_s_distance_subset(const PointSet& ground, unsigned s,
                                   std::uint64_t budget = kUnlimitedBudget);

/// Exact maximum by brute force over all 2^|ground| subsets. Test oracle;
/// |ground| <= 16 or SetTooLargeError.
std::size_t exhaustive_oracle(const PointSet& ground, unsigned s);

}  // namespace fewdist
