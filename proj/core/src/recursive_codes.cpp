#include "weylgray/recursive_codes.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>
#include <string>

namespace weylgray {

namespace {

CodeList from_cycle_strings(GroupType type, int rank, std::initializer_list<const char*> items) {
  CodeList out{type, rank, {}};
  for (const char* item : items) out.entries.push_back(parse_cycle_notation(item, rank));
  return out;
}

// F(1) = first (0 to omit), followed by 1..top without the excluded letters.
Relabeling relabeling(int first, int top, std::initializer_list<int> excluded) {
  std::vector<int> images;
  if (first != 0) images.push_back(first);
  for (int k = 1; k <= top; ++k) {
    if (k == first) continue;
    if (std::find(excluded.begin(), excluded.end(), k) != excluded.end()) continue;
    images.push_back(k);
  }
  return Relabeling(std::move(images));
}

// 2 3 ... top 1
Relabeling rotate_left(int top) {
  std::vector<int> images(static_cast<std::size_t>(top));
  std::iota(images.begin(), images.end(), 2);
  images.back() = 1;
  return Relabeling(std::move(images));
}

CodeList extend_fixed_barred(const CodeList& list, int k) {
  CodeList out = extend_fixed(list, k);
  for (SignedPerm& w : out.entries) {
    std::vector<int> word(w.word().begin(), w.word().end());
    word[static_cast<std::size_t>(k - 1)] = -k;
    w = SignedPerm(std::move(word));
  }
  return out;
}

CodeList gca_odd(int n, const CodeList& prev, const CodeList& prev2) {
  CodeList out = extend_fixed(relabel_list(prev, rotate_left(n - 1)), n);
  for (int i = 1; i <= (n - 1) / 2; ++i) {
    const CodeList a = relabel_list(prev2, relabeling(2 * i, n - 1, {2 * i - 1}));
    append(out, append_transposition(a, 2 * i - 1, n, false));
    const CodeList b = relabel_list(prev2, relabeling(2 * i - 1, n - 1, {2 * i}));
    append(out, reverse_list(append_transposition(b, 2 * i, n, false)));
  }
  return out;
}

CodeList gca_even(int n, const CodeList& prev, const CodeList& prev2) {
  CodeList out = extend_fixed(prev, n);
  const CodeList first = relabel_list(prev2, relabeling(0, n - 1, {1}));
  append(out, reverse_list(append_transposition(first, 1, n, false)));
  for (int i = 1; i <= n / 2 - 1; ++i) {
    const CodeList a = relabel_list(prev2, relabeling(2 * i + 1, n - 1, {2 * i}));
    append(out, append_transposition(a, 2 * i, n, false));
    const CodeList b = relabel_list(prev2, relabeling(2 * i, n - 1, {2 * i + 1}));
    append(out, reverse_list(append_transposition(b, 2 * i + 1, n, false)));
  }
  return out;
}

}  // namespace

CodeList trigger_gca3() {
  return from_cycle_strings(GroupType::A, 3, {"id", "(1 2)", "(1 3)", "(2 3)"});
}

CodeList trigger_gca4() {
  return from_cycle_strings(GroupType::A, 4,
                            {"id", "(1 3)", "(1 3)(2 4)", "(2 4)", "(1 4)", "(1 4)(2 3)", "(2 3)",
                             "(1 2)", "(1 2)(3 4)", "(3 4)"});
}

CodeList trigger_gcb2() {
  return from_cycle_strings(GroupType::B, 2,
                            {"id", "(-1)", "(-1)(-2)", "(-2)", "(-1 -2)", "(1 2)"});
}

CodeList trigger_gcb3() {
  return from_cycle_strings(
      GroupType::B, 3,
      {"id", "(-1)", "(-1)(-2)", "(-2)", "(-1 -2)", "(1 2)", "(1 2)(-3)", "(-1 -2)(-3)",
       "(-2)(-3)", "(-1)(-2)(-3)", "(-1)(-3)", "(-3)", "(-1 -3)", "(-1 -3)(-2)", "(1 3)(-2)",
       "(1 3)", "(2 3)", "(-1)(2 3)", "(-1)(-2 -3)", "(-2 -3)"});
}

CodeList trigger_gcd1() { return from_cycle_strings(GroupType::D, 1, {"id"}); }

CodeList trigger_gcd2() {
  return from_cycle_strings(GroupType::D, 2, {"id", "(-1)(-2)", "(-1 -2)", "(1 2)"});
}

CodeList gca(int n) {
  if (n < 3) throw std::invalid_argument("gca: n must be at least 3");
  if (n == 3) return trigger_gca3();
  if (n == 4) return trigger_gca4();
  const CodeList prev = gca(n - 1);
  const CodeList prev2 = n - 2 >= 3 ? gca(n - 2) : CodeList{};
  return n % 2 == 1 ? gca_odd(n, prev, prev2) : gca_even(n, prev, prev2);
}

CodeList gcb(int n) {
  if (n < 2) throw std::invalid_argument("gcb: n must be at least 2");
  if (n == 2) return trigger_gcb2();
  if (n == 3) return trigger_gcb3();
  const CodeList prev = gcb(n - 1);
  const CodeList prev2 = gcb(n - 2);
  CodeList out = extend_fixed(prev, n);
  append(out, reverse_list(extend_fixed_barred(prev, n)));
  for (int i = 1; i <= n - 1; ++i) {
    const CodeList block = relabel_list(prev2, relabeling(0, n - 1, {i}));
    const bool odd = i % 2 == 1;
    append(out, append_transposition(block, i, n, odd));
    append(out, reverse_list(append_transposition(block, i, n, !odd)));
  }
  return out;
}

CodeList gcd_code(int n) {
  if (n < 1) throw std::invalid_argument("gcd_code: n must be at least 1");
  if (n == 1) return trigger_gcd1();
  if (n == 2) return trigger_gcd2();
  CodeList out = extend_tilde(relabel_list(gcb(n - 1), rotate_left(n - 1)), n);
  const CodeList prev2 = gcd_code(n - 2);
  for (int i = 1; i <= n - 1; ++i) {
    const CodeList block = relabel_list(prev2, relabeling(0, n - 1, {i}));
    append(out, append_transposition(block, i, n, false));
    append(out, reverse_list(append_transposition(block, i, n, true)));
  }
  return out;
}

ValidationReport validate_properties(const CodeList& list, bool strict_b,
                                     const EnumerationLimits& limits) {
  ValidationReport report;
  check_coverage(list, report, limits);
  const std::size_t m = list.size();
  if (m == 0) return report;

  const int n = list.rank;
  if (!list[0].is_identity()) {
    report.add({ViolationKind::Endpoint, 0, list[0], std::nullopt, std::nullopt,
                "first entry is not the identity"});
  }
  if (n >= 2) {
    const SignedPerm& last = list[m - 1];
    const SignedPerm plain = parse_cycle_notation("(" + std::to_string(n - 1) + " " +
                                                      std::to_string(n) + ")", n);
    const SignedPerm barred = parse_cycle_notation("(-" + std::to_string(n - 1) + " -" +
                                                       std::to_string(n) + ")", n);
    if (last != plain && last != barred) {
      report.add({ViolationKind::Endpoint, m - 1, last, std::nullopt, std::nullopt,
                  "last entry is neither (n-1 n) nor its barred form"});
    }
  }

  if (m < 2) return report;
  for (std::size_t i = 0; i < m; ++i) {
    const SignedPerm& u = list[i];
    const SignedPerm& v = list[(i + 1) % m];
    if (u.rank() != v.rank()) continue;
    ++report.pairs_checked;
    report.max_distance = std::max(report.max_distance, hamming(u, v));
    const MoveClass move = classify_move(u, v);
    const bool allowed = move.kind == MoveKind::Transposition ||
                         move.kind == MoveKind::Rotation3 || move.kind == MoveKind::SignChanges;
    if (!allowed) {
      report.add({ViolationKind::Move, i, u, v, move, "not a transposition, rotation or 1-2 sign changes"});
      continue;
    }
    if (strict_b) {
      const bool bad = (move.kind == MoveKind::Rotation3 && move.sign_changes() > 0) ||
                       (move.kind == MoveKind::Transposition && move.sign_changes() > 1);
      if (bad) {
        report.add({ViolationKind::StrictMove, i, u, v, move,
                    "too many sign changes for the strict type-B rule"});
      }
    }
  }
  return report;
}

}  // namespace weylgray
