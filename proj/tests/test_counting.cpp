#include <gtest/gtest.h>

#include "oracle.hpp"
#include "weylgray/counting.hpp"

namespace weylgray {
namespace {

// Closed form by number k of transpositions: n! / (k! (n-2k)! 2^k) cycle
// structures, times the admissible signings.
BigInt closed_form(char type, int n) {
  auto fact = [](int m) {
    BigInt f = 1;
    for (int i = 2; i <= m; ++i) f *= i;
    return f;
  };
  BigInt total = 0;
  for (int k = 0; 2 * k <= n; ++k) {
    const int fixed = n - 2 * k;
    BigInt shapes = fact(n) / (fact(k) * fact(fixed) * (BigInt(1) << k));
    if (type == 'B') shapes *= BigInt(1) << (k + fixed);
    if (type == 'D') shapes *= fixed > 0 ? BigInt(1) << (k + fixed - 1) : BigInt(1) << k;
    total += shapes;
  }
  return total;
}

TEST(Counting, PrintedSequences) {
  const std::vector<int> a{1, 1, 2, 4, 10, 26, 76, 232, 764};
  for (int n = 0; n < static_cast<int>(a.size()); ++n) EXPECT_EQ(count(GroupType::A, n), a[n]);
  const std::vector<int> b{1, 2, 6, 20, 76, 312, 1384};
  for (int n = 0; n < static_cast<int>(b.size()); ++n) EXPECT_EQ(count(GroupType::B, n), b[n]);
  const std::vector<int> d{1, 4, 10, 44, 156, 752, 3256};
  for (int n = 1; n <= static_cast<int>(d.size()); ++n) EXPECT_EQ(count(GroupType::D, n), d[n - 1]);
}

TEST(Counting, RecursionsMatchClosedForm) {
  for (int n = 1; n <= 40; ++n) {
    EXPECT_EQ(count(GroupType::A, n), closed_form('A', n)) << n;
    EXPECT_EQ(count(GroupType::B, n), closed_form('B', n)) << n;
    EXPECT_EQ(count(GroupType::D, n), closed_form('D', n)) << n;
  }
}

TEST(Counting, RangeErrors) {
  EXPECT_THROW(count(GroupType::A, -1), std::out_of_range);
  EXPECT_THROW(count(GroupType::D, 0), std::out_of_range);
}

TEST(Enumerate, MatchesBruteForce) {
  for (char t : {'A', 'B', 'D'}) {
    for (int n = (t == 'D' ? 1 : 0); n <= 6; ++n) {
      const GroupType type = parse_group_type(std::string(1, t));
      const CodeList l = enumerate(type, n);
      std::set<testing::Word> got;
      for (const SignedPerm& w : l) got.emplace(w.word().begin(), w.word().end());
      EXPECT_EQ(got.size(), l.size()) << "duplicates " << t << n;
      EXPECT_EQ(got, testing::brute_force_involutions(t, n)) << t << n;
      EXPECT_TRUE(std::is_sorted(l.begin(), l.end()));
    }
  }
}

TEST(Enumerate, CapIsEnforced) {
  EXPECT_THROW(enumerate(GroupType::A, 9), CapExceeded);
  EXPECT_THROW(enumerate(GroupType::B, 8), CapExceeded);
  EXPECT_NO_THROW(enumerate(GroupType::B, 8, EnumerationLimits{8, 8}));
}

TEST(Enumerate, EvenOddExcessMatchesBruteForce) {
  for (int n = 1; n <= 7; ++n) {
    long long expected = 0;
    for (const auto& w : testing::brute_force_involutions('A', n)) {
      int moved = 0;
      for (int i = 0; i < n; ++i) moved += w[i] != i + 1;
      expected += (moved / 2) % 2 == 0 ? 1 : -1;
    }
    EXPECT_EQ(even_odd_excess(n), expected) << n;
  }
  EXPECT_EQ(even_odd_excess(2), 0);
  EXPECT_EQ(even_odd_excess(3), -2);
}

}  // namespace
}  // namespace weylgray
