#include "perfcodes/exact_cover.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>
#include <unordered_map>

namespace perfcodes {

namespace {

struct Search {
  int point_count = 0;
  std::uint64_t full = 0;
  std::vector<std::uint64_t> masks;                 // one per subset
  std::vector<std::vector<std::size_t>> by_point;   // subsets through each point index
  std::uint64_t max_solutions = kUnlimited;
  std::uint64_t node_budget = kUnlimited;

  ExactCoverResult result;
  std::vector<std::size_t> chosen;
  bool stop = false;          // max_solutions reached
  bool out_of_budget = false;

  void run(std::uint64_t covered) {
    if (stop || out_of_budget) return;
    if (result.nodes_visited >= node_budget) {
      out_of_budget = true;
      return;
    }
    ++result.nodes_visited;

    if (covered == full) {
      std::vector<std::size_t> solution = chosen;
      std::sort(solution.begin(), solution.end());
      result.solutions.push_back(std::move(solution));
      if (result.solutions.size() >= max_solutions) stop = true;
      return;
    }

    // Branch on the uncovered point with the fewest usable subsets; points
    // are scanned in ascending order, so ties resolve to the smallest point.
    int best_point = -1;
    int best_count = -1;
    for (int p = 0; p < point_count; ++p) {
      if ((covered >> p) & 1) continue;
      int count = 0;
      for (std::size_t s : by_point[static_cast<std::size_t>(p)])
        if (!(masks[s] & covered)) ++count;
      if (best_count < 0 || count < best_count) {
        best_count = count;
        best_point = p;
        if (count == 0) break;
      }
    }
    if (best_count == 0) return;

    for (std::size_t s : by_point[static_cast<std::size_t>(best_point)]) {
      if (masks[s] & covered) continue;
      chosen.push_back(s);
      run(covered | masks[s]);
      chosen.pop_back();
      if (stop || out_of_budget) return;
    }
  }
};

}  // namespace

ExactCoverResult solve_exact_cover(const ExactCoverInstance& instance,
                                   std::uint64_t max_solutions,
                                   std::uint64_t node_budget) {
  std::vector<int> points = instance.universe;
  std::sort(points.begin(), points.end());
  if (std::adjacent_find(points.begin(), points.end()) != points.end())
    throw std::invalid_argument("universe points must be distinct");
  if (points.size() > 64) throw std::invalid_argument("universe exceeds 64 points");

  std::unordered_map<int, int> index_of;
  for (std::size_t i = 0; i < points.size(); ++i) index_of[points[i]] = static_cast<int>(i);

  Search search;
  search.point_count = static_cast<int>(points.size());
  search.full = points.empty() ? 0 : (~0ull >> (64 - points.size()));
  search.by_point.resize(points.size());
  search.max_solutions = max_solutions == 0 ? kUnlimited : max_solutions;
  search.node_budget = node_budget == 0 ? kUnlimited : node_budget;

  for (std::size_t s = 0; s < instance.subsets.size(); ++s) {
    const std::vector<int>& subset = instance.subsets[s];
    if (subset.empty()) throw std::invalid_argument("subsets must be non-empty");
    std::uint64_t mask = 0;
    for (int p : subset) {
      auto it = index_of.find(p);
      if (it == index_of.end()) throw std::invalid_argument("subset point is not in the universe");
      mask |= 1ull << it->second;
    }
    search.masks.push_back(mask);
    for (std::uint64_t m = mask; m; m &= m - 1)
      search.by_point[static_cast<std::size_t>(std::countr_zero(m))].push_back(s);
  }

  search.run(0);
  search.result.status = search.out_of_budget ? SearchStatus::budget_exhausted : SearchStatus::complete;
  return search.result;
}

const char* to_string(SearchStatus status) {
  return status == SearchStatus::complete ? "complete" : "budget_exhausted";
}

}  // namespace perfcodes
