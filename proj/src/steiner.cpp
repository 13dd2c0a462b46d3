#include "perfcodes/steiner.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace perfcodes {

namespace {

Triple triple_from_support(const std::vector<int>& support) {
  if (support.size() != 3) throw std::invalid_argument("support is not a triple");
  return Triple{support[0], support[1], support[2]};
}

void check_triple(int n, const Triple& t) {
  if (t[0] < 1 || t[0] >= t[1] || t[1] >= t[2] || t[2] > n)
    throw std::invalid_argument("triple points must be ascending and within 1..n");
}

}  // namespace

TripleSystem TripleSystem::normalized(int n, std::vector<Triple> triples) {
  if (n < 1) throw std::invalid_argument("n must be positive");
  for (Triple& t : triples) {
    std::sort(t.begin(), t.end());
    check_triple(n, t);
  }
  std::sort(triples.begin(), triples.end());
  triples.erase(std::unique(triples.begin(), triples.end()), triples.end());
  return TripleSystem{n, std::move(triples)};
}

nlohmann::json TripleSystem::to_json() const {
  nlohmann::json j;
  j["n"] = n;
  j["triples"] = nlohmann::json::array();
  for (const Triple& t : triples) j["triples"].push_back({t[0], t[1], t[2]});
  return j;
}

TripleSystem TripleSystem::from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("n") || !j.at("n").is_number_integer() || !j.contains("triples") ||
      !j.at("triples").is_array())
    throw std::invalid_argument("triple system must be {\"n\": int, \"triples\": [[i,j,k], ...]}");
  std::vector<Triple> triples;
  for (const nlohmann::json& item : j.at("triples")) {
    if (!item.is_array() || item.size() != 3) throw std::invalid_argument("each triple must have three points");
    triples.push_back(Triple{item[0].get<int>(), item[1].get<int>(), item[2].get<int>()});
  }
  return normalized(j.at("n").get<int>(), std::move(triples));
}

TripleSystem neighborhood_sts(const CodeOracle& code, const Word& alpha) {
  std::vector<Triple> triples;
  for (const Word& b : codewords_at_distance(code, alpha, 3))
    triples.push_back(triple_from_support((b + alpha).support()));
  return TripleSystem::normalized(code.length, std::move(triples));
}

bool validate_sts(const TripleSystem& ts) {
  int n = ts.n;
  std::vector<int> pair_count(static_cast<std::size_t>(n * n), 0);
  auto at = [&](int a, int b) -> int& { return pair_count[static_cast<std::size_t>((a - 1) * n + (b - 1))]; };
  for (const Triple& t : ts.triples) {
    ++at(t[0], t[1]);
    ++at(t[0], t[2]);
    ++at(t[1], t[2]);
  }
  for (int a = 1; a <= n; ++a)
    for (int b = a + 1; b <= n; ++b)
      if (at(a, b) != 1) return false;
  return true;
}

PartitionConditionReport preparata_partition_condition(const CodeOracle& code,
                                                       const std::vector<Word>& subcode,
                                                       const Word& alpha) {
  for (const Word& w : subcode)
    if (!code.contains(w)) throw std::invalid_argument("subcode is not contained in the code");
  if (!code.contains(alpha)) throw std::invalid_argument("alpha is not a codeword");
  if (std::find(subcode.begin(), subcode.end(), alpha) != subcode.end())
    throw std::invalid_argument("alpha must lie outside the subcode");

  std::vector<Triple> triples;
  for (const Word& b : subcode)
    if (distance(b, alpha) == 3) triples.push_back(triple_from_support((b + alpha).support()));

  int n = code.length;
  TripleSystem ts = TripleSystem::normalized(n, triples);
  PartitionConditionReport report;
  report.triples = ts;
  std::vector<int> covered(static_cast<std::size_t>(n) + 1, 0);
  for (const Triple& t : ts.triples)
    for (int p : t) ++covered[static_cast<std::size_t>(p)];
  report.holds = ts.triples.size() * 3 == static_cast<std::size_t>(n) &&
                 std::all_of(covered.begin() + 1, covered.end(), [](int c) { return c == 1; });
  return report;
}

PartitionSearchResult find_triple_partitions(const TripleSystem& ts,
                                             const PartitionConstraints& constraints,
                                             std::uint64_t max_solutions,
                                             std::uint64_t node_budget) {
  std::set<int> blocked(constraints.excluded_points.begin(), constraints.excluded_points.end());
  for (int p : blocked)
    if (p < 1 || p > ts.n) throw std::invalid_argument("excluded point out of range");

  std::optional<Triple> required;
  if (constraints.required_triple) {
    required = *constraints.required_triple;
    std::sort(required->begin(), required->end());
    check_triple(ts.n, *required);
    for (int p : *required)
      if (blocked.count(p)) throw std::invalid_argument("required triple meets an excluded point");
    // A partition drawn from ts can contain the required triple only if ts does.
    if (!std::binary_search(ts.triples.begin(), ts.triples.end(), *required))
      return PartitionSearchResult{{}, 0, SearchStatus::complete};
    for (int p : *required) blocked.insert(p);
  }

  ExactCoverInstance instance;
  for (int p = 1; p <= ts.n; ++p)
    if (!blocked.count(p)) instance.universe.push_back(p);
  std::vector<std::size_t> origin;  // instance subset -> ts triple
  for (std::size_t i = 0; i < ts.triples.size(); ++i) {
    const Triple& t = ts.triples[i];
    if (blocked.count(t[0]) || blocked.count(t[1]) || blocked.count(t[2])) continue;
    instance.subsets.push_back({t[0], t[1], t[2]});
    origin.push_back(i);
  }

  ExactCoverResult cover = solve_exact_cover(instance, max_solutions, node_budget);

  PartitionSearchResult out;
  out.nodes_visited = cover.nodes_visited;
  out.status = cover.status;
  for (const std::vector<std::size_t>& chosen : cover.solutions) {
    std::vector<Triple> partition;
    if (required) partition.push_back(*required);
    for (std::size_t s : chosen) partition.push_back(ts.triples[origin[s]]);
    std::sort(partition.begin(), partition.end());
    out.partitions.push_back(std::move(partition));
  }
  std::sort(out.partitions.begin(), out.partitions.end());
  return out;
}

}  // namespace perfcodes
