#include "perfcodes/nordstrom_robinson.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>
#include <unordered_map>

#include "perfcodes/components.hpp"
#include "perfcodes/vasilev.hpp"

namespace perfcodes {

namespace {

// Generator rows: shifts of 3 + x + 2x^2 + x^3 across coordinates 1..7, each
// closed by a parity symbol at coordinate 8. The factorization
// x^7 - 1 = (x - 1)(x^3 + 2x^2 + x + 3)(x^3 + 3x^2 + 2x + 3) over Z4 makes
// the unextended rows a cyclic code of size 4^4.
constexpr std::uint8_t kOctacodeGenerator[4][8] = {
    {3, 1, 2, 1, 0, 0, 0, 1},
    {0, 3, 1, 2, 1, 0, 0, 1},
    {0, 0, 3, 1, 2, 1, 0, 1},
    {0, 0, 0, 3, 1, 2, 1, 1},
};

QuaternaryWord scaled_row(int r, int c) {
  QuaternaryWord out;
  for (std::size_t i = 0; i < 8; ++i) out.symbols[i] = static_cast<std::uint8_t>((kOctacodeGenerator[r][i] * c) & 3);
  return out;
}

}  // namespace

std::vector<QuaternaryWord> octacode_words() {
  std::vector<QuaternaryWord> out;
  out.reserve(256);
  for (int m = 0; m < 256; ++m) {
    QuaternaryWord w;
    for (int r = 0; r < 4; ++r) w = w + scaled_row(r, (m >> (2 * r)) & 3);
    out.push_back(w);
  }
  std::sort(out.begin(), out.end());
  if (std::unique(out.begin(), out.end()) != out.end())
    throw std::logic_error("octacode generator rows are not independent over Z4");
  return out;
}

Word gray_map(const QuaternaryWord& q) {
  static constexpr std::uint64_t kPair[4] = {0b00, 0b10, 0b11, 0b01};  // low bit first
  std::uint64_t bits = 0;
  for (std::size_t i = 0; i < 8; ++i) bits |= kPair[q.symbols[i]] << (2 * i);
  return Word(16, bits);
}

NRCode nordstrom_robinson() {
  std::vector<Word> extended;
  extended.reserve(256);
  for (const QuaternaryWord& q : octacode_words()) extended.push_back(gray_map(q));
  if (min_pairwise_distance(extended) != 6)
    throw std::logic_error("Gray image of the octacode is not a distance-6 code");

  NRCode code;
  for (const Word& w : extended) code.words.push_back(w.slice(1, 15));
  std::sort(code.words.begin(), code.words.end());
  if (std::unique(code.words.begin(), code.words.end()) != code.words.end())
    throw std::logic_error("puncturing collapsed two codewords");

  // The octacode contains zero, so no translation is needed; translate by the
  // smallest word otherwise to keep the contract explicit.
  Word zero = Word::zero(15);
  if (!std::binary_search(code.words.begin(), code.words.end(), zero)) {
    Word shift = code.words.front();
    for (Word& w : code.words) w = w + shift;
    std::sort(code.words.begin(), code.words.end());
  }
  code.origin_included = true;

  if (code.words.size() != 256 || min_pairwise_distance(code.words) != 5)
    throw std::logic_error("punctured code is not a (15, 256, 5) code");
  return code;
}

bool verify_preparata_parameters(const std::vector<Word>& words, int n) {
  if (words.empty()) return false;
  for (const Word& w : words)
    if (w.length() != n) throw std::invalid_argument("word length mismatch");
  std::uint64_t expected = (1ull << (n + 1)) / (static_cast<std::uint64_t>(n + 1) * static_cast<std::uint64_t>(n + 1));
  std::set<Word> distinct(words.begin(), words.end());
  return distinct.size() == expected && min_pairwise_distance(words) >= 5;
}

LinearCode enclosing_hamming(const NRCode& code) {
  LinearCode span = span_of(15, code.words);
  BitMatrix dual = span.generator().nullspace();
  if (dual.rows() < 4) throw std::logic_error("dual of the span has dimension below 4");

  BitMatrix check(0, 15);
  for (int r = 1; r <= 4; ++r) check.append_row(dual.row_bits(r));
  std::set<std::uint64_t> seen;
  for (int j = 1; j <= 15; ++j) {
    std::uint64_t v = check.column_value(j);
    if (v == 0 || !seen.insert(v).second)
      throw std::logic_error("parity-check columns are not 15 distinct nonzero vectors");
  }

  LinearCode enclosing = LinearCode::from_parity_check(check);
  for (const Word& w : code.words)
    if (!enclosing.contains(w)) throw std::logic_error("code word escapes the enclosing code");
  if (enclosing.size() != 2048 || enclosing.min_distance() != 3)
    throw std::logic_error("enclosing code is not a (15, 2048, 3) code");
  return enclosing;
}

std::vector<int> match_parity_columns(const BitMatrix& from, const BitMatrix& to) {
  if (from.rows() != to.rows() || from.cols() != to.cols())
    throw std::invalid_argument("matrices must have equal shape");
  std::unordered_map<std::uint64_t, int> position;
  for (int j = 1; j <= to.cols(); ++j) {
    std::uint64_t v = to.column_value(j);
    if (v == 0 || !position.emplace(v, j).second)
      throw std::invalid_argument("target columns must be distinct and nonzero");
  }
  std::vector<int> perm(static_cast<std::size_t>(from.cols()));
  std::set<int> used;
  for (int j = 1; j <= from.cols(); ++j) {
    auto it = position.find(from.column_value(j));
    if (it == position.end()) throw std::invalid_argument("source column has no matching target column");
    perm[static_cast<std::size_t>(j - 1)] = it->second;
    used.insert(it->second);
  }
  if (static_cast<int>(used.size()) != from.cols()) throw std::invalid_argument("column matching is not a bijection");
  return perm;
}

Word permute_coordinates(const Word& w, const std::vector<int>& perm) {
  if (static_cast<std::size_t>(w.length()) != perm.size()) throw std::invalid_argument("permutation length mismatch");
  Word out = Word::zero(w.length());
  for (int j = 1; j <= w.length(); ++j)
    if (w.bit(j)) out = out.with_bit(perm[static_cast<std::size_t>(j - 1)], true);
  return out;
}

std::vector<TransportedComponent> transported_components(const LinearCode& enclosing) {
  // Both parity checks carry all 15 nonzero 4-bit columns after row
  // reduction, so matching columns by value is a coordinate permutation that
  // maps the canonical H_15 onto the enclosing code.
  BitMatrix from = canonical_hamming_check_matrix(15).rref();
  BitMatrix to = enclosing.parity_check().rref();
  std::vector<int> perm = match_parity_columns(from, to);

  std::vector<Word> betas = canonical_hamming(7).enumerate();
  std::vector<TransportedComponent> out;
  std::vector<CodeOracle> components = hamming_partition_into_components(7);
  for (std::size_t i = 0; i < components.size(); ++i) {
    TransportedComponent tc;
    tc.beta = betas[i];
    for (const Word& w : components[i].enumerate()) tc.words.push_back(permute_coordinates(w, perm));
    std::sort(tc.words.begin(), tc.words.end());
    out.push_back(std::move(tc));
  }
  return out;
}

TraceReport component_trace_check(const NRCode& code, const std::vector<Word>& component) {
  LinearCode enclosing = enclosing_hamming(code);
  for (const Word& w : component)
    if (!enclosing.contains(w)) throw std::invalid_argument("component is not a subset of the enclosing code");

  std::vector<Word> trace;
  for (const Word& w : component)
    if (std::binary_search(code.words.begin(), code.words.end(), w)) trace.push_back(w);

  TraceReport report;
  report.trace_size = static_cast<int>(trace.size());
  report.is_perfect_in_graph = true;
  for (const Word& v : component) {
    int degree = 0;
    for (const Word& u : component)
      if (distance(u, v) == 3) ++degree;
    ++report.degree_histogram[degree];
    int covering = 0;
    for (const Word& c : trace)
      if (c == v || distance(c, v) == 3) ++covering;
    if (covering != 1) report.is_perfect_in_graph = false;
  }
  return report;
}

}  // namespace perfcodes
