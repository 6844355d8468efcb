#include "weylgray/binary_codes.hpp"

#include <algorithm>
#include <bit>
#include <stdexcept>

namespace weylgray {

BinaryWord::BinaryWord(int length, std::uint32_t bits) : length_(length), bits_(bits) {
  if (length < 0 || length > 32) throw std::out_of_range("BinaryWord: length outside 0..32");
  if (length < 32 && (bits >> length) != 0) throw std::invalid_argument("BinaryWord: stray bits");
}

BinaryWord BinaryWord::parse(std::string_view text) {
  BinaryWord w(static_cast<int>(text.size()), 0);
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] != '0' && text[i] != '1') throw std::invalid_argument("BinaryWord: expected 0/1");
    w.set(static_cast<int>(i) + 1, text[i] == '1');
  }
  return w;
}

void BinaryWord::set(int i, bool value) {
  const std::uint32_t mask = 1u << (i - 1);
  bits_ = value ? (bits_ | mask) : (bits_ & ~mask);
}

int BinaryWord::weight() const { return std::popcount(bits_); }

BinaryWord BinaryWord::prefixed(bool b) const {
  return BinaryWord(length_ + 1, (bits_ << 1) | (b ? 1u : 0u));
}

std::string BinaryWord::to_string() const {
  std::string out;
  for (int i = 1; i <= length_; ++i) out += bit(i) ? '1' : '0';
  return out;
}

int bit_distance(const BinaryWord& a, const BinaryWord& b) {
  return std::popcount(a.bits() ^ b.bits());
}

std::vector<BinaryWord> brgc(int n) {
  if (n < 1 || n > 31) throw std::out_of_range("brgc: n outside 1..31");
  std::vector<BinaryWord> code{BinaryWord(1, 0), BinaryWord(1, 1)};
  for (int m = 1; m < n; ++m) {
    std::vector<BinaryWord> next;
    next.reserve(code.size() * 2);
    for (const auto& w : code) next.push_back(w.prefixed(false));
    for (auto it = code.rbegin(); it != code.rend(); ++it) next.push_back(it->prefixed(true));
    code = std::move(next);
  }
  return code;
}

std::vector<BinaryWord> bce(int n) {
  if (n < 2 || n > 31) throw std::out_of_range("bce: n outside 2..31");
  std::vector<BinaryWord> code{BinaryWord::parse("00"), BinaryWord::parse("11")};
  for (int m = 3; m <= n; ++m) {
    const std::vector<BinaryWord> v = m - 2 >= 1 ? brgc(m - 2) : std::vector<BinaryWord>{};
    std::vector<BinaryWord> next;
    next.reserve(code.size() * 2);
    for (const auto& u : code) next.push_back(u.prefixed(false));
    bool second = false;  // 10 first, then 11, alternating
    for (auto it = v.rbegin(); it != v.rend(); ++it) {
      next.push_back(it->prefixed(second).prefixed(true));
      second = !second;
    }
    code = std::move(next);
  }
  return code;
}

int max_cyclic_bit_distance(const std::vector<BinaryWord>& code) {
  int best = 0;
  for (std::size_t i = 0; i < code.size(); ++i) {
    best = std::max(best, bit_distance(code[i], code[(i + 1) % code.size()]));
  }
  return best;
}

int min_cyclic_bit_distance(const std::vector<BinaryWord>& code) {
  if (code.empty()) return 0;
  int best = 64;
  for (std::size_t i = 0; i < code.size(); ++i) {
    best = std::min(best, bit_distance(code[i], code[(i + 1) % code.size()]));
  }
  return best;
}

}  // namespace weylgray
