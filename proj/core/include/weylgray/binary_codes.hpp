#pragma once

// Fixed-length bit strings and the two cyclic binary codes used for sign
// sequences: the reflected Gray code over all words and a two-bit-change
// code over the even-weight words.

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

namespace weylgray {

// Bit i (1-based) is the sign bit of word position i; 1 means negative.
// Up to 32 bits.
class BinaryWord {
 public:
  BinaryWord() = default;
  BinaryWord(int length, std::uint32_t bits);
  // "0110", leftmost character is bit 1.
  static BinaryWord parse(std::string_view text);

  int length() const { return length_; }
  bool bit(int i) const { return (bits_ >> (i - 1)) & 1u; }
  void set(int i, bool value);
  void flip(int i) { bits_ ^= 1u << (i - 1); }
  int weight() const;
  std::uint32_t bits() const { return bits_; }

  // b prepended as the new bit 1.
  BinaryWord prefixed(bool b) const;

  std::string to_string() const;

  friend bool operator==(const BinaryWord&, const BinaryWord&) = default;

 private:
  int length_ = 0;
  std::uint32_t bits_ = 0;
};

int bit_distance(const BinaryWord& a, const BinaryWord& b);

// BRGC_1 = (0, 1); BRGC_{n+1} = 0.BRGC_n, then 1.reversed(BRGC_n). n in 1..31.
std::vector<BinaryWord> brgc(int n);

// BCE_2 = (00, 11); for n >= 3 with u = BCE_{n-1} (k = 2^{n-2} words) and
// v = BRGC_{n-2}:
//   BCE_n = (0u_1, ..., 0u_k, 10v_k, 11v_{k-1}, 10v_{k-2}, ..., 11v_1).
// n in 2..31.
std::vector<BinaryWord> bce(int n);

// Maximum bit distance over cyclically consecutive words.
int max_cyclic_bit_distance(const std::vector<BinaryWord>& code);
int min_cyclic_bit_distance(const std::vector<BinaryWord>& code);

}  // namespace weylgray
