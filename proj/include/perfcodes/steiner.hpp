#pragma once

#include <array>
#include <optional>
#include <vector>

#include "json.hpp"
#include "perfcodes/exact_cover.hpp"
#include "perfcodes/oracle.hpp"
#include "perfcodes/word.hpp"

namespace perfcodes {

using Triple = std::array<int, 3>;  // ascending points in 1..n

/// A family of 3-subsets of {1..n}, kept sorted and duplicate-free.
struct TripleSystem {
  int n = 0;
  std::vector<Triple> triples;

  static TripleSystem normalized(int n, std::vector<Triple> triples);

  nlohmann::json to_json() const;                       // {"n": int, "triples": [[i,j,k], ...]}
  static TripleSystem from_json(const nlohmann::json& j);
};

/// Supports of b + alpha over codewords b at distance 3 from alpha. For a
/// perfect code of distance 3 this is a Steiner triple system on {1..n}.
TripleSystem neighborhood_sts(const CodeOracle& code, const Word& alpha);

/// True when every pair of points lies in exactly one triple.
bool validate_sts(const TripleSystem& ts);

struct PartitionConditionReport {
  bool holds = false;
  TripleSystem triples;
};

/// For a subcode P of `code` and a codeword alpha outside P: collects the
/// supports of b + alpha over b in P at distance 3 from alpha and reports
/// whether they partition {1..n}.
PartitionConditionReport preparata_partition_condition(const CodeOracle& code,
                                                       const std::vector<Word>& subcode,
                                                       const Word& alpha);

struct PartitionConstraints {
  std::optional<Triple> required_triple;
  std::vector<int> excluded_points;
};

struct PartitionSearchResult {
  std::vector<std::vector<Triple>> partitions;  // canonical order
  std::uint64_t nodes_visited = 0;
  SearchStatus status = SearchStatus::complete;
};

/// Partitions of {1..n} minus the excluded points into triples of `ts`,
/// containing the required triple when one is given. Backed by the exact
/// cover solver, so results are deterministic and budget-guarded.
PartitionSearchResult find_triple_partitions(const TripleSystem& ts,
                                             const PartitionConstraints& constraints,
                                             std::uint64_t max_solutions = kUnlimited,
                                             std::uint64_t node_budget = kUnlimited);

}  // namespace perfcodes
