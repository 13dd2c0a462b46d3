#pragma once

#include <bit>
#include <cstdint>
#include <functional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace perfcodes {

/// Binary word of length up to 63 over GF(2). Coordinates are 1-based and
/// coordinate 1 is the leftmost character of the textual form, so "0101"
/// has support {2, 4}. All operations are pure; a Word never changes length.
class Word {
 public:
  static constexpr int kMaxLength = 63;

  Word() = default;

  Word(int length, std::uint64_t bits) : bits_(bits), len_(length) {
    if (length < 0 || length > kMaxLength)
      throw std::invalid_argument("word length out of range");
    if (bits & ~mask(length))
      throw std::invalid_argument("bits exceed word length");
  }

  static Word zero(int length) { return Word(length, 0); }
  static Word ones(int length) { return Word(length, mask(length)); }

  /// Weight-1 word e_i.
  static Word unit(int length, int i) { return Word(length, 0).with_bit(i, true); }

  static Word from_string(std::string_view text) {
    if (text.size() > static_cast<std::size_t>(kMaxLength))
      throw std::invalid_argument("word too long");
    std::uint64_t bits = 0;
    for (std::size_t p = 0; p < text.size(); ++p) {
      if (text[p] == '1')
        bits |= 1ull << p;
      else if (text[p] != '0')
        throw std::invalid_argument("word characters must be '0' or '1'");
    }
    return Word(static_cast<int>(text.size()), bits);
  }

  int length() const { return len_; }
  std::uint64_t bits() const { return bits_; }

  bool bit(int i) const {
    check_coordinate(i);
    return (bits_ >> (i - 1)) & 1;
  }

  Word with_bit(int i, bool value) const {
    check_coordinate(i);
    std::uint64_t b = value ? (bits_ | (1ull << (i - 1))) : (bits_ & ~(1ull << (i - 1)));
    return Word(len_, b);
  }

  int weight() const { return std::popcount(bits_); }
  int parity() const { return weight() & 1; }

  std::vector<int> support() const {
    std::vector<int> s;
    for (std::uint64_t b = bits_; b; b &= b - 1)
      s.push_back(std::countr_zero(b) + 1);
    return s;
  }

  /// Coordinatewise GF(2) sum; lengths must agree.
  Word operator+(const Word& rhs) const {
    if (len_ != rhs.len_) throw std::invalid_argument("word length mismatch");
    return Word(len_, bits_ ^ rhs.bits_);
  }

  /// Subword of `count` coordinates starting at coordinate `first`.
  Word slice(int first, int count) const {
    if (first < 1 || count < 0 || first + count - 1 > len_)
      throw std::invalid_argument("slice out of range");
    return Word(count, (bits_ >> (first - 1)) & mask(count));
  }

  std::string to_string() const {
    std::string s(static_cast<std::size_t>(len_), '0');
    for (int i = 0; i < len_; ++i)
      if ((bits_ >> i) & 1) s[static_cast<std::size_t>(i)] = '1';
    return s;
  }

  bool operator==(const Word&) const = default;

  /// Orders by length, then by textual form (coordinate 1 most significant).
  bool operator<(const Word& rhs) const {
    if (len_ != rhs.len_) return len_ < rhs.len_;
    std::uint64_t diff = bits_ ^ rhs.bits_;
    if (!diff) return false;
    int i = std::countr_zero(diff);  // first differing coordinate
    return ((rhs.bits_ >> i) & 1) != 0;
  }

  static std::uint64_t mask(int length) {
    return length == 0 ? 0 : ~0ull >> (64 - length);
  }

 private:
  void check_coordinate(int i) const {
    if (i < 1 || i > len_) throw std::invalid_argument("coordinate out of range");
  }

  std::uint64_t bits_ = 0;
  int len_ = 0;
};

inline Word concat(const Word& a, const Word& b) {
  if (a.length() + b.length() > Word::kMaxLength)
    throw std::invalid_argument("concatenation exceeds maximum word length");
  return Word(a.length() + b.length(), a.bits() | (b.bits() << a.length()));
}

inline int distance(const Word& a, const Word& b) { return (a + b).weight(); }

}  // namespace perfcodes

template <>
struct std::hash<perfcodes::Word> {
  std::size_t operator()(const perfcodes::Word& w) const noexcept {
    return std::hash<std::uint64_t>{}(w.bits() * 0x9e3779b97f4a7c15ull + static_cast<std::uint64_t>(w.length()));
  }
};
