#include "perfcodes/gf2.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace perfcodes {

BitMatrix::BitMatrix(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows), 0) {
  if (rows < 0 || cols < 0 || cols > Word::kMaxLength)
    throw std::invalid_argument("matrix shape out of range");
}

BitMatrix BitMatrix::identity(int n) {
  BitMatrix m(n, n);
  for (int i = 1; i <= n; ++i) m.set(i, i, true);
  return m;
}

BitMatrix BitMatrix::from_rows(int cols, const std::vector<std::uint64_t>& rows) {
  BitMatrix m(static_cast<int>(rows.size()), cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r] & ~Word::mask(cols)) throw std::invalid_argument("row bits exceed column count");
    m.data_[r] = rows[r];
  }
  return m;
}

BitMatrix BitMatrix::from_words(const std::vector<Word>& rows) {
  if (rows.empty()) throw std::invalid_argument("cannot infer column count from no rows");
  BitMatrix m(static_cast<int>(rows.size()), rows.front().length());
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].length() != m.cols_) throw std::invalid_argument("row length mismatch");
    m.data_[r] = rows[r].bits();
  }
  return m;
}

bool BitMatrix::get(int r, int c) const {
  if (r < 1 || r > rows_ || c < 1 || c > cols_) throw std::invalid_argument("matrix index out of range");
  return (data_[static_cast<std::size_t>(r - 1)] >> (c - 1)) & 1;
}

void BitMatrix::set(int r, int c, bool value) {
  if (r < 1 || r > rows_ || c < 1 || c > cols_) throw std::invalid_argument("matrix index out of range");
  std::uint64_t bit = 1ull << (c - 1);
  if (value)
    data_[static_cast<std::size_t>(r - 1)] |= bit;
  else
    data_[static_cast<std::size_t>(r - 1)] &= ~bit;
}

std::uint64_t BitMatrix::row_bits(int r) const {
  if (r < 1 || r > rows_) throw std::invalid_argument("row index out of range");
  return data_[static_cast<std::size_t>(r - 1)];
}

Word BitMatrix::row_word(int r) const { return Word(cols_, row_bits(r)); }

void BitMatrix::append_row(std::uint64_t bits) {
  if (bits & ~Word::mask(cols_)) throw std::invalid_argument("row bits exceed column count");
  data_.push_back(bits);
  ++rows_;
}

BitMatrix BitMatrix::rref(std::vector<int>* pivot_cols) const {
  std::vector<std::uint64_t> rows = data_;
  std::vector<int> pivots;
  std::size_t r = 0;
  for (int c = 1; c <= cols_ && r < rows.size(); ++c) {
    std::uint64_t bit = 1ull << (c - 1);
    std::size_t pivot = r;
    while (pivot < rows.size() && !(rows[pivot] & bit)) ++pivot;
    if (pivot == rows.size()) continue;
    std::swap(rows[r], rows[pivot]);
    for (std::size_t i = 0; i < rows.size(); ++i)
      if (i != r && (rows[i] & bit)) rows[i] ^= rows[r];
    pivots.push_back(c);
    ++r;
  }
  rows.resize(r);
  if (pivot_cols) *pivot_cols = pivots;
  BitMatrix out(static_cast<int>(r), cols_);
  out.data_ = rows;
  return out;
}

int BitMatrix::rank() const { return rref().rows(); }

BitMatrix BitMatrix::nullspace() const {
  std::vector<int> pivots;
  BitMatrix red = rref(&pivots);
  std::vector<bool> is_pivot(static_cast<std::size_t>(cols_) + 1, false);
  for (int c : pivots) is_pivot[static_cast<std::size_t>(c)] = true;

  std::vector<std::uint64_t> basis;
  for (int f = 1; f <= cols_; ++f) {
    if (is_pivot[static_cast<std::size_t>(f)]) continue;
    std::uint64_t v = 1ull << (f - 1);
    for (std::size_t p = 0; p < pivots.size(); ++p)
      if (red.get(static_cast<int>(p) + 1, f)) v |= 1ull << (pivots[p] - 1);
    basis.push_back(v);
  }
  return from_rows(cols_, basis).rref();
}

std::uint64_t BitMatrix::column_value(int c) const {
  std::uint64_t v = 0;
  for (int r = 1; r <= rows_; ++r) v = (v << 1) | (get(r, c) ? 1u : 0u);
  return v;
}

std::string BitMatrix::to_text() const {
  std::string out;
  for (int r = 1; r <= rows_; ++r) {
    out += row_word(r).to_string();
    out += '\n';
  }
  return out;
}

BitMatrix BitMatrix::from_text(std::string_view text) {
  std::vector<Word> rows;
  std::size_t pos = 0;
  while (pos < text.size()) {
    std::size_t nl = text.find('\n', pos);
    std::string_view line = text.substr(pos, nl == std::string_view::npos ? text.size() - pos : nl - pos);
    if (!line.empty()) rows.push_back(Word::from_string(line));
    if (nl == std::string_view::npos) break;
    pos = nl + 1;
  }
  return from_words(rows);
}

LinearCode LinearCode::from_parity_check(const BitMatrix& h) {
  if (h.rank() != h.rows()) throw std::invalid_argument("parity-check rows must be linearly independent");
  LinearCode code;
  code.length_ = h.cols();
  code.parity_check_ = h;
  code.generator_ = h.nullspace();
  code.dimension_ = code.generator_.rows();
  return code;
}

LinearCode LinearCode::from_generator(int length, const BitMatrix& g) {
  if (g.rows() > 0 && g.cols() != length) throw std::invalid_argument("generator width does not match code length");
  LinearCode code;
  code.length_ = length;
  code.generator_ = g.rows() > 0 ? g.rref() : BitMatrix(0, length);
  code.dimension_ = code.generator_.rows();
  BitMatrix dual = code.dimension_ > 0 ? code.generator_.nullspace() : BitMatrix::identity(length);
  code.parity_check_ = dual;
  return code;
}

bool LinearCode::contains(const Word& w) const {
  if (w.length() != length_) throw std::invalid_argument("word length does not match code length");
  for (int r = 1; r <= parity_check_.rows(); ++r)
    if (std::popcount(parity_check_.row_bits(r) & w.bits()) & 1) return false;
  return true;
}

std::vector<Word> LinearCode::codewords(int dimension_limit) const {
  if (dimension_ > dimension_limit) throw std::invalid_argument("code dimension exceeds enumeration limit");
  int k = dimension_;
  std::vector<Word> out;
  out.reserve(1ull << k);
  for (std::uint64_t m = 0; m < (1ull << k); ++m) {
    std::uint64_t bits = 0;
    for (int i = 0; i < k; ++i)
      if ((m >> (k - 1 - i)) & 1) bits ^= generator_.row_bits(i + 1);
    out.emplace_back(length_, bits);
  }
  return out;
}

int LinearCode::min_distance(int dimension_limit) const {
  if (dimension_ == 0) throw std::invalid_argument("minimum distance undefined for the zero code");
  if (dimension_ > dimension_limit) throw std::invalid_argument("code dimension exceeds enumeration limit");
  int best = length_ + 1;
  int k = dimension_;
  for (std::uint64_t m = 1; m < (1ull << k); ++m) {
    std::uint64_t bits = 0;
    for (int i = 0; i < k; ++i)
      if ((m >> (k - 1 - i)) & 1) bits ^= generator_.row_bits(i + 1);
    best = std::min(best, std::popcount(bits));
  }
  return best;
}

bool LinearCode::same_code(const LinearCode& other) const {
  return length_ == other.length_ && generator_.rref() == other.generator_.rref();
}

LinearCode hamming_code(int t) {
  if (t < 1 || t > 6) throw std::invalid_argument("hamming_code requires 1 <= t <= 6");
  int n = (1 << t) - 1;
  BitMatrix h(t, n);
  for (int i = 1; i <= t; ++i)
    for (int j = 1; j <= n; ++j)
      if ((j >> (t - i)) & 1) h.set(i, j, true);
  return LinearCode::from_parity_check(h);
}

LinearCode span_of(int length, const std::vector<Word>& words) {
  BitMatrix stack(0, length);
  for (const Word& w : words) {
    if (w.length() != length) throw std::invalid_argument("word length does not match span length");
    stack.append_row(w.bits());
  }
  return LinearCode::from_generator(length, stack.rref());
}

}  // namespace perfcodes
