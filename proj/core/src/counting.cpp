#include "weylgray/counting.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace weylgray {

namespace {

BigInt count_a(int n) {
  BigInt prev = 1, cur = 1;  // i_0, i_1
  if (n == 0) return prev;
  for (int m = 2; m <= n; ++m) {
    BigInt next = cur + (m - 1) * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

BigInt count_b(int n) {
  BigInt prev = 1, cur = 2;  // i_0, i_1
  if (n == 0) return prev;
  for (int m = 1; m < n; ++m) {
    BigInt next = 2 * cur + 2 * m * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

BigInt count_d(int n) {
  if (n == 1) return 1;
  BigInt prev = 1, cur = 4;  // i_1, i_2
  for (int m = 2; m < n; ++m) {
    BigInt next = count_b(m) + 2 * m * prev;
    prev = cur;
    cur = next;
  }
  return cur;
}

// Pairs the smallest open letter with itself or a larger open letter.
void build(GroupType type, std::vector<int>& word, std::vector<SignedPerm>& out) {
  const int n = static_cast<int>(word.size());
  const auto open = std::find(word.begin(), word.end(), 0);
  if (open == word.end()) {
    SignedPerm w(word);
    if (is_member(w, type)) out.push_back(std::move(w));
    return;
  }
  const int a = static_cast<int>(open - word.begin()) + 1;
  const int signs = type == GroupType::A ? 1 : 2;
  for (int s = 0; s < signs; ++s) {
    const int sign = s == 0 ? 1 : -1;
    *open = sign * a;
    build(type, word, out);
    for (int b = a + 1; b <= n; ++b) {
      int& slot = word[static_cast<std::size_t>(b - 1)];
      if (slot != 0) continue;
      *open = sign * b;
      slot = sign * a;
      build(type, word, out);
      slot = 0;
    }
    *open = 0;
  }
}

}  // namespace

BigInt count(GroupType type, int n) {
  const int min_rank = type == GroupType::D ? 1 : 0;
  if (n < min_rank) {
    throw std::out_of_range("count: n=" + std::to_string(n) + " below " +
                            std::to_string(min_rank) + " for type " + to_char(type));
  }
  switch (type) {
    case GroupType::A: return count_a(n);
    case GroupType::B: return count_b(n);
    case GroupType::D: return count_d(n);
  }
  return 0;
}

CodeList enumerate(GroupType type, int n, const EnumerationLimits& limits) {
  if (n < (type == GroupType::D ? 1 : 0)) throw std::out_of_range("enumerate: rank too small");
  if (n > limits.cap(type)) {
    throw CapExceeded("enumerate: n=" + std::to_string(n) + " exceeds cap " +
                      std::to_string(limits.cap(type)) + " for type " + to_char(type));
  }
  CodeList out{type, n, {}};
  std::vector<int> word(static_cast<std::size_t>(n), 0);
  build(type, word, out.entries);
  std::sort(out.entries.begin(), out.entries.end());
  return out;
}

long long even_odd_excess(int n, const EnumerationLimits& limits) {
  long long excess = 0;
  for (const SignedPerm& w : enumerate(GroupType::A, n, limits)) {
    excess += to_cycles(w).transposition_count() % 2 == 0 ? 1 : -1;
  }
  return excess;
}

}  // namespace weylgray
