#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "perfcodes/word.hpp"

namespace perfcodes {

/// Dense matrix over GF(2) with up to 63 columns; each row is one 64-bit
/// limb using the same bit layout as Word (column j lives in machine bit
/// j-1). Rows and columns are 1-based.
class BitMatrix {
 public:
  BitMatrix() = default;
  BitMatrix(int rows, int cols);

  static BitMatrix identity(int n);
  static BitMatrix from_rows(int cols, const std::vector<std::uint64_t>& rows);
  static BitMatrix from_words(const std::vector<Word>& rows);

  int rows() const { return rows_; }
  int cols() const { return cols_; }

  bool get(int r, int c) const;
  void set(int r, int c, bool value);
  std::uint64_t row_bits(int r) const;
  Word row_word(int r) const;
  void append_row(std::uint64_t bits);

  /// Row-reduced echelon form with zero rows removed.
  BitMatrix rref(std::vector<int>* pivot_cols = nullptr) const;
  int rank() const;

  /// RREF basis of {v : M v = 0}, one vector per row.
  BitMatrix nullspace() const;

  /// Column as an integer with row 1 in the most significant position.
  std::uint64_t column_value(int c) const;

  bool operator==(const BitMatrix&) const = default;

  /// One row per line of '0'/'1' characters.
  std::string to_text() const;
  static BitMatrix from_text(std::string_view text);

 private:
  int rows_ = 0;
  int cols_ = 0;
  std::vector<std::uint64_t> data_;
};

/// Linear code presented by a full-row-rank parity-check matrix. The parity
/// check is kept exactly as given (presentations matter here); the generator
/// is its RREF nullspace basis.
class LinearCode {
 public:
  static constexpr int kDefaultEnumerationLimit = 24;

  LinearCode() = default;

  static LinearCode from_parity_check(const BitMatrix& h);
  static LinearCode from_generator(int length, const BitMatrix& g);

  int length() const { return length_; }
  int dimension() const { return dimension_; }
  std::uint64_t size() const { return 1ull << dimension_; }
  const BitMatrix& parity_check() const { return parity_check_; }
  const BitMatrix& generator() const { return generator_; }

  bool contains(const Word& w) const;

  /// All codewords in lexicographic order of information tuples over the
  /// generator rows (row 1 is the most significant position).
  std::vector<Word> codewords(int dimension_limit = kDefaultEnumerationLimit) const;

  int min_distance(int dimension_limit = kDefaultEnumerationLimit) const;

  /// Set equality, independent of presentation.
  bool same_code(const LinearCode& other) const;

 private:
  int length_ = 0;
  int dimension_ = 0;
  BitMatrix parity_check_;
  BitMatrix generator_;
};

/// Hamming code of length 2^t - 1 in the column presentation: parity-check
/// column j is the t-bit binary representation of j, most significant bit in
/// row 1.
LinearCode hamming_code(int t);

/// Smallest linear code containing the given words.
LinearCode span_of(int length, const std::vector<Word>& words);

}  // namespace perfcodes
