#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <vector>

namespace perfcodes {

enum class SearchStatus { complete, budget_exhausted };

inline constexpr std::uint64_t kUnlimited = std::numeric_limits<std::uint64_t>::max();

struct ExactCoverInstance {
  std::vector<int> universe;                  // distinct points, at most 64
  std::vector<std::vector<int>> subsets;      // indexed family; duplicates allowed
};

struct ExactCoverResult {
  std::vector<std::vector<std::size_t>> solutions;  // sorted subset indices
  std::uint64_t nodes_visited = 0;
  SearchStatus status = SearchStatus::complete;
};

/// Enumerates families of pairwise disjoint subsets whose union is the
/// universe. Deterministic: branches on the uncovered point with the fewest
/// usable subsets (ties to the smallest point) and tries candidates in index
/// order. `node_budget` caps search-tree node expansions; when it runs out the
/// partial solution list is returned with status budget_exhausted. With
/// status complete and unlimited `max_solutions` the list is exhaustive.
ExactCoverResult solve_exact_cover(const ExactCoverInstance& instance,
                                   std::uint64_t max_solutions = kUnlimited,
                                   std::uint64_t node_budget = kUnlimited);

const char* to_string(SearchStatus status);

}  // namespace perfcodes
