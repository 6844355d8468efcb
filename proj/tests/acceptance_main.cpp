// Acceptance suite: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Time limits below are fixed; nothing is retried.

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "reference_listings.hpp"
#include "weylgray/binary_codes.hpp"
#include "weylgray/cayley.hpp"
#include "weylgray/counting.hpp"
#include "weylgray/hamilton_search.hpp"
#include "weylgray/optimal_codes.hpp"
#include "weylgray/recursive_codes.hpp"
#include "weylgray/text_io.hpp"

namespace {

using namespace weylgray;
using Clock = std::chrono::steady_clock;

constexpr double kCountingLimitS = 60.0;
constexpr double kRecursiveLimitS = 300.0;
constexpr double kBinaryLimitS = 5.0;
constexpr double kOptimalBLimitS = 120.0;
constexpr double kTypeDLimitS = 300.0;
constexpr double kStarLimitS = 1.0;

struct Verdict {
  bool pass = true;
  std::vector<std::string> notes;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      pass = false;
      notes.push_back("FAILED: " + what);
    }
  }
  void note(const std::string& what) { notes.push_back(what); }
};

double seconds_since(Clock::time_point start) {
  return std::chrono::duration<double>(Clock::now() - start).count();
}

std::string fmt_seconds(double s) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2fs", s);
  return buf;
}

std::vector<std::vector<int>> words(const CodeList& l) {
  std::vector<std::vector<int>> out;
  for (const SignedPerm& w : l) out.emplace_back(w.word().begin(), w.word().end());
  return out;
}

CodeList listing(GroupType type, int n, const testing::Columns& cols) {
  return make_code_list(type, n, testing::flatten(cols));
}

std::string first_violation(const ValidationReport& r) {
  return r.violations.empty() ? std::string() : r.violations.front().to_string();
}

// (column, row) of a column-major index in a printed listing, both 1-based.
std::string cell_of(const testing::Columns& cols, std::size_t index) {
  for (std::size_t c = 0; c < cols.size(); ++c) {
    if (index < cols[c].size()) {
      return "(column " + std::to_string(c + 1) + ", row " + std::to_string(index + 1) + ")";
    }
    index -= cols[c].size();
  }
  return "(not in table)";
}

std::string first_violation(const ValidationReport& r, const testing::Columns& cols) {
  if (r.violations.empty()) return {};
  const Violation& v = r.violations.front();
  return cell_of(cols, v.index) + " " + v.to_string();
}

// 1 -------------------------------------------------------------------------
Verdict counting_oracle() {
  Verdict v;
  const auto start = Clock::now();
  const std::vector<long> a{1, 1, 2, 4, 10, 26, 76, 232, 764};
  const std::vector<long> b{1, 2, 6, 20, 76, 312, 1384};
  const std::vector<long> d{1, 4, 10, 44, 156, 752, 3256};
  auto check = [&](GroupType type, int n, long printed) {
    const std::string tag = std::string(1, to_char(type)) + std::to_string(n);
    const BigInt c = count(type, n);
    v.require(c == printed, tag + " count " + c.str() + " != " + std::to_string(printed));
    const std::size_t e = enumerate(type, n).size();
    v.require(BigInt(e) == c, tag + " enumerate " + std::to_string(e) + " != count " + c.str());
  };
  for (int n = 0; n <= 8; ++n) check(GroupType::A, n, a[static_cast<std::size_t>(n)]);
  for (int n = 0; n <= 6; ++n) check(GroupType::B, n, b[static_cast<std::size_t>(n)]);
  for (int n = 1; n <= 7; ++n) check(GroupType::D, n, d[static_cast<std::size_t>(n - 1)]);
  const double s = seconds_since(start);
  v.require(s < kCountingLimitS, "runtime " + fmt_seconds(s));
  v.note("A0..8, B0..6, D1..7 in " + fmt_seconds(s));
  return v;
}

// 2 -------------------------------------------------------------------------
Verdict gca_golden() {
  Verdict v;
  const auto got = words(gca(5));
  const auto table = testing::flatten(testing::kGca5Columns);
  v.require(got.size() == 26, "size " + std::to_string(got.size()));
  v.require(got == table, "gca(5) differs from the printed listing");
  v.note("26 entries compared column-major");
  return v;
}

// 3 -------------------------------------------------------------------------
Verdict recursive_suite() {
  Verdict v;
  const auto start = Clock::now();
  std::size_t literal_total = 0;
  std::size_t amended_total = 0;
  std::ostringstream literal_detail;
  std::ostringstream amended_detail;

  auto run = [&](const CodeList& l) {
    const std::string tag = std::string(1, to_char(l.type)) + std::to_string(l.rank);
    const ValidationReport props = validate_properties(l, false);
    v.require(props.passed(), tag + " coverage/A1/A2: " + first_violation(props));
    const int dist = max_hamming(l, true);
    if (l.rank >= 3) v.require(dist == 3, tag + " max cyclic distance " + std::to_string(dist));

    const ValidationReport lit =
        verify_hamilton_cycle(l, generating_set(l.type, l.rank, RangeReading::Literal));
    const ValidationReport amd =
        verify_hamilton_cycle(l, generating_set(l.type, l.rank, RangeReading::Amended));
    literal_total += lit.violations.size();
    amended_total += amd.violations.size();
    literal_detail << ' ' << tag << '=' << lit.violations.size();
    amended_detail << ' ' << tag << '=' << amd.violations.size();
  };
  for (int n = 3; n <= 9; ++n) run(gca(n));
  for (int n = 2; n <= 7; ++n) run(gcb(n));
  for (int n = 1; n <= 7; ++n) run(gcd_code(n));

  v.require(amended_total == 0,
            "quotients outside T (amended ranges): " + std::to_string(amended_total));
  v.require(literal_total == 0,
            "quotients outside T (printed ranges): " + std::to_string(literal_total));
  v.note("edge violations, printed ranges:" + literal_detail.str());
  v.note("edge violations, amended ranges:" + amended_detail.str());
  const double s = seconds_since(start);
  v.require(s < kRecursiveLimitS, "runtime " + fmt_seconds(s));
  v.note("runtime " + fmt_seconds(s));
  return v;
}

// 4 -------------------------------------------------------------------------
Verdict gcb_gcd_golden() {
  Verdict v;
  auto compare = [&](const CodeList& l, const testing::Columns& cols, const std::string& tag) {
    const auto got = words(l);
    const auto table = testing::flatten(cols);
    std::size_t mismatches = got.size() == table.size() ? 0 : 1;
    for (std::size_t i = 0; i < std::min(got.size(), table.size()); ++i) {
      if (got[i] == table[i]) continue;
      if (mismatches++ == 0) v.note(tag + " first mismatch at " + cell_of(cols, i));
    }
    v.require(mismatches == 0, tag + " mismatches " + std::to_string(mismatches));
    v.note(tag + " " + std::to_string(table.size()) + " rows");
  };
  compare(gcb(4), testing::kGcb4Columns, "GCB(4)");
  compare(gcd_code(3), testing::kGcd3Columns, "GCD(3)");
  compare(gcd_code(4), testing::kGcd4Columns, "GCD(4)");
  return v;
}

// 5 -------------------------------------------------------------------------
Verdict binary_codes() {
  Verdict v;
  const auto start = Clock::now();
  auto strings = [](const std::vector<BinaryWord>& code) {
    std::vector<std::string> out;
    for (const BinaryWord& w : code) out.push_back(w.to_string());
    return out;
  };
  using S = std::vector<std::string>;
  v.require(strings(brgc(1)) == S{"0", "1"}, "brgc(1)");
  v.require(strings(brgc(2)) == S{"00", "01", "11", "10"}, "brgc(2)");
  v.require(strings(brgc(3)) == S{"000", "001", "011", "010", "110", "111", "101", "100"},
            "brgc(3)");
  v.require(strings(bce(3)) == S{"000", "011", "101", "110"}, "bce(3)");
  v.require(strings(bce(4)) == S{"0000", "0011", "0101", "0110", "1010", "1111", "1001", "1100"},
            "bce(4)");
  v.require(strings(bce(5)) == S{"00000", "00011", "00101", "00110", "01010", "01111", "01001",
                                 "01100", "10100", "11101", "10111", "11110", "10010", "11011",
                                 "10001", "11000"},
            "bce(5)");
  for (int n = 1; n <= 12; ++n) {
    const auto g = brgc(n);
    std::vector<bool> seen(std::size_t{1} << n);
    for (const BinaryWord& w : g) seen[w.bits()] = true;
    v.require(g.size() == seen.size() && std::count(seen.begin(), seen.end(), true) ==
                                             static_cast<long>(seen.size()),
              "brgc(" + std::to_string(n) + ") coverage");
    v.require(max_cyclic_bit_distance(g) == 1 && min_cyclic_bit_distance(g) == 1,
              "brgc(" + std::to_string(n) + ") distance");
  }
  for (int n = 2; n <= 12; ++n) {
    const auto e = bce(n);
    std::vector<bool> seen(std::size_t{1} << n);
    bool even = true;
    for (const BinaryWord& w : e) {
      seen[w.bits()] = true;
      even = even && w.weight() % 2 == 0;
    }
    v.require(even && e.size() == (std::size_t{1} << (n - 1)) &&
                  std::count(seen.begin(), seen.end(), true) == static_cast<long>(e.size()),
              "bce(" + std::to_string(n) + ") even-weight coverage");
    v.require(max_cyclic_bit_distance(e) == 2 && min_cyclic_bit_distance(e) == 2,
              "bce(" + std::to_string(n) + ") distance");
  }
  const double s = seconds_since(start);
  v.require(s < kBinaryLimitS, "runtime " + fmt_seconds(s));
  v.note("brgc 1..12, bce 2..12 in " + fmt_seconds(s));
  return v;
}

// 6 -------------------------------------------------------------------------
void check_optimal_b(Verdict& v, const CodeList& l, const std::string& tag) {
  const Distance2Report r = verify_distance2(l, true);
  v.require(r.passed(), tag + " coverage/distance: " + first_violation(r.report));
  v.require(r.report.max_distance == 2, tag + " max distance " + std::to_string(r.report.max_distance));
  v.require(r.unusual_moves.empty(),
            tag + " moves outside {single flip, paired flip, sign-free transposition}: " +
                std::to_string(r.unusual_moves.size()) +
                (r.unusual_moves.empty() ? "" : " (" + r.unusual_moves.front().to_string() + ")"));
  const ValidationReport amended =
      verify_hamilton_cycle(l, generating_set(GroupType::B, l.rank, RangeReading::Amended), {1, 2});
  const ValidationReport literal =
      verify_hamilton_cycle(l, generating_set(GroupType::B, l.rank, RangeReading::Literal), {1, 2});
  v.require(amended.passed(),
            tag + " quotients outside X1 u X2: " + std::to_string(amended.violations.size()));
  v.note(tag + ": " + std::to_string(l.size()) + " entries, quotients outside X1 u X2 " +
         std::to_string(amended.violations.size()) + " (printed ranges " +
         std::to_string(literal.violations.size()) + ")");
}

Verdict optimal_b() {
  Verdict v;
  const auto start = Clock::now();
  for (int n = 2; n <= 6; ++n) check_optimal_b(v, ogcb(n), "ogcb(" + std::to_string(n) + ")");
  check_optimal_b(v, listing(GroupType::B, 4, testing::kOptimalB4Columns), "printed B4 table");
  const double s = seconds_since(start);
  v.require(s < kOptimalBLimitS, "runtime " + fmt_seconds(s));
  v.note("runtime " + fmt_seconds(s));
  return v;
}

// 7 -------------------------------------------------------------------------
Verdict type_d_facts() {
  Verdict v;
  const auto start = Clock::now();
  const Distance2Graph g3 = distance2_graph(GroupType::D, 3);
  const SearchResult cycle = find_hamilton(g3, HamiltonObject::Cycle);
  v.require(cycle.outcome == SearchOutcome::Exhausted,
            "D3 cycle search: " + std::string(to_string(cycle.outcome)));
  const SearchResult path = find_hamilton(g3, HamiltonObject::Path);
  v.require(path.outcome == SearchOutcome::Found && path.witness &&
                verify_distance2(*path.witness, false).passed(),
            "D3 path search: " + std::string(to_string(path.outcome)));
  v.note("D3: cycle " + std::string(to_string(cycle.outcome)) + " after " +
         std::to_string(cycle.nodes_expanded) + " nodes, path " +
         std::string(to_string(path.outcome)) + " after " + std::to_string(path.nodes_expanded));

  const Distance2Report printed_path =
      verify_distance2(listing(GroupType::D, 3, testing::kD3PathColumns), false);
  v.require(printed_path.passed(),
            "printed D3 path: " + first_violation(printed_path.report, testing::kD3PathColumns));

  const CodeList d4 = listing(GroupType::D, 4, testing::kD4CycleColumns);
  const Distance2Report printed_cycle = verify_distance2(d4, true);
  v.require(d4.size() == 44 && printed_cycle.passed() && printed_cycle.report.max_distance == 2,
            "printed D4 cycle: " +
                first_violation(printed_cycle.report, testing::kD4CycleColumns));

  const CodeList d5 = listing(GroupType::D, 5, testing::kD5CycleColumns);
  const Distance2Report printed_d5 = verify_distance2(d5, true);
  v.note("printed D5 cycle (informational): " + std::to_string(d5.size()) + " of 156 entries, " +
         std::to_string(printed_d5.report.violations.size()) + " coverage gaps, max distance " +
         std::to_string(printed_d5.report.max_distance));

  for (int n : {4, 5}) {
    const std::string tag = "build_d_distance2(" + std::to_string(n) + ")";
    DConstructionStats stats;
    const CodeList l = build_d_distance2(n, &stats);
    const Distance2Report r = verify_distance2(l, true);
    const std::size_t expected = n == 4 ? 44 : 156;
    v.require(l.size() == expected && r.passed() && r.report.max_distance == 2,
              tag + ": " + first_violation(r.report));
    const ValidationReport q =
        verify_hamilton_cycle(l, generating_set(GroupType::D, n, RangeReading::Amended), {1, 2});
    v.require(q.passed(), tag + " quotients outside X1 u X2: " + std::to_string(q.violations.size()));
    v.note(tag + ": " + std::to_string(l.size()) + " entries, " + std::to_string(stats.nodes) +
           " nodes");
  }
  const double s = seconds_since(start);
  v.require(s < kTypeDLimitS, "runtime " + fmt_seconds(s));
  v.note("runtime " + fmt_seconds(s));
  return v;
}

// 8 -------------------------------------------------------------------------
Verdict type_a_star() {
  Verdict v;
  const auto start = Clock::now();
  const Distance2Graph g = distance2_graph(GroupType::A, 3);
  int centre = -1;
  for (std::size_t i = 0; i < g.size(); ++i)
    if (g.adjacency[i].size() == 3) centre = static_cast<int>(i);
  bool leaves = true;
  for (std::size_t i = 0; i < g.size(); ++i)
    if (static_cast<int>(i) != centre) leaves = leaves && g.adjacency[i].size() == 1;
  v.require(g.size() == 4 && g.edge_count() == 3 && centre >= 0 && leaves, "not a 4-vertex star");
  v.require(find_hamilton(g, HamiltonObject::Cycle).outcome == SearchOutcome::Exhausted,
            "Hamilton cycle found");
  v.require(find_hamilton(g, HamiltonObject::Path).outcome == SearchOutcome::Exhausted,
            "Hamilton path found");
  const double s = seconds_since(start);
  v.require(s < kStarLimitS, "runtime " + fmt_seconds(s));
  if (centre >= 0) v.note("centre " + g.vertices[static_cast<std::size_t>(centre)].to_string());
  return v;
}

// 9 -------------------------------------------------------------------------
std::string serialize(const CodeList& l) {
  std::ostringstream out;
  write_code_list(out, l, "");
  return out.str();
}

std::string serialize(const SearchResult& r) {
  std::ostringstream out;
  out << to_string(r.outcome) << ' ' << r.nodes_expanded << '\n';
  if (r.witness) out << serialize(*r.witness);
  return out.str();
}

Verdict determinism() {
  Verdict v;
  std::size_t runs = 0;
  auto twice = [&](const std::string& tag, const std::function<CodeList()>& make) {
    v.require(serialize(make()) == serialize(make()), tag);
    ++runs;
  };
  for (int n = 3; n <= 9; ++n) twice("gca(" + std::to_string(n) + ")", [n] { return gca(n); });
  for (int n = 2; n <= 7; ++n) twice("gcb(" + std::to_string(n) + ")", [n] { return gcb(n); });
  for (int n = 1; n <= 7; ++n)
    twice("gcd(" + std::to_string(n) + ")", [n] { return gcd_code(n); });
  for (int n = 2; n <= 6; ++n) twice("ogcb(" + std::to_string(n) + ")", [n] { return ogcb(n); });
  for (int n : {2, 4, 5, 6})
    twice("build_d_distance2(" + std::to_string(n) + ")", [n] { return build_d_distance2(n); });
  for (GroupType t : {GroupType::A, GroupType::B, GroupType::D})
    twice(std::string("enumerate ") + to_char(t), [t] { return enumerate(t, 6); });

  struct Case {
    GroupType type;
    int n;
    HamiltonObject object;
  };
  for (const Case& c : {Case{GroupType::D, 3, HamiltonObject::Cycle},
                        Case{GroupType::D, 3, HamiltonObject::Path},
                        Case{GroupType::D, 4, HamiltonObject::Cycle},
                        Case{GroupType::B, 3, HamiltonObject::Cycle},
                        Case{GroupType::A, 3, HamiltonObject::Path}}) {
    const Distance2Graph g = distance2_graph(c.type, c.n);
    const std::string tag = std::string("search ") + to_char(c.type) + std::to_string(c.n) + " " +
                            std::string(to_string(c.object));
    std::string reference;
    for (int threads : {1, 1, 2, 4, 8}) {
      SearchOptions options;
      options.threads = threads;
      const std::string out = serialize(find_hamilton(g, c.object, options));
      if (reference.empty()) reference = out;
      v.require(out == reference, tag + " threads=" + std::to_string(threads));
      ++runs;
    }
  }
  v.note(std::to_string(runs) + " repeated runs compared byte for byte (elapsed_ms excluded)");
  return v;
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<Verdict()>>> criteria{
      {"counting oracle equivalence", counting_oracle},
      {"GCA golden listing", gca_golden},
      {"recursive-code property suite", recursive_suite},
      {"GCB/GCD golden listings", gcb_gcd_golden},
      {"BRGC/BCE exactness", binary_codes},
      {"optimal type-B suite", optimal_b},
      {"type-D distance-2 facts", type_d_facts},
      {"type-A minimality witness", type_a_star},
      {"determinism", determinism},
  };
  int failures = 0;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    Verdict v;
    try {
      v = criteria[i].second();
    } catch (const std::exception& e) {
      v.require(false, std::string("exception: ") + e.what());
    }
    failures += !v.pass;
    std::cout << (v.pass ? "PASS" : "FAIL") << " criterion " << i + 1 << ": "
              << criteria[i].first << '\n';
    for (const std::string& note : v.notes) std::cout << "    " << note << '\n';
  }
  std::cout << (failures == 0 ? "all criteria passed"
                              : std::to_string(failures) + " criteria failed")
            << '\n';
  return failures == 0 ? 0 : 1;
}
