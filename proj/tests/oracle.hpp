#pragma once

// Brute-force references used only by the tests: every signed permutation of
// rank n is generated (n! orderings times 2^n sign masks) and filtered.

#include <algorithm>
#include <cstdint>
#include <numeric>
#include <set>
#include <vector>

namespace weylgray::testing {

using Word = std::vector<int>;

inline bool word_is_involution(const Word& w) {
  const int n = static_cast<int>(w.size());
  for (int i = 1; i <= n; ++i) {
    const int x = w[i - 1];
    const int back = x > 0 ? w[x - 1] : -w[-x - 1];
    if (back != i) return false;
  }
  return true;
}

// type: 'A', 'B' or 'D'.
inline std::set<Word> brute_force_involutions(char type, int n) {
  std::set<Word> out;
  Word perm(static_cast<std::size_t>(n));
  std::iota(perm.begin(), perm.end(), 1);
  const std::uint32_t masks = type == 'A' ? 1u : (1u << n);
  do {
    for (std::uint32_t m = 0; m < masks; ++m) {
      Word w = perm;
      int negatives = 0;
      for (int i = 0; i < n; ++i) {
        if (m >> i & 1u) {
          w[i] = -w[i];
          ++negatives;
        }
      }
      if (type == 'D' && negatives % 2 != 0) continue;
      if (word_is_involution(w)) out.insert(w);
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

inline int word_hamming(const Word& a, const Word& b) {
  int d = 0;
  for (std::size_t i = 0; i < a.size(); ++i) d += a[i] != b[i];
  return d;
}

// (u v)(i) = u(v(i)) computed directly on words.
inline Word word_compose(const Word& u, const Word& v) {
  Word out(u.size());
  for (std::size_t i = 0; i < v.size(); ++i) {
    const int x = v[i];
    out[i] = x > 0 ? u[x - 1] : -u[-x - 1];
  }
  return out;
}

}  // namespace weylgray::testing
