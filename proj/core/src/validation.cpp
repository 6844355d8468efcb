#include "weylgray/validation.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_set>

namespace weylgray {

std::string_view to_string(ViolationKind kind) {
  switch (kind) {
    case ViolationKind::Coverage: return "coverage";
    case ViolationKind::Endpoint: return "endpoint";
    case ViolationKind::Move: return "move";
    case ViolationKind::StrictMove: return "strict-move";
    case ViolationKind::Edge: return "edge";
    case ViolationKind::Distance: return "distance";
  }
  return "?";
}

std::string Violation::to_string() const {
  std::ostringstream out;
  out << weylgray::to_string(kind);
  if (index != static_cast<std::size_t>(-1)) out << " at " << index;
  if (from) out << " [" << from->to_string() << ']';
  if (to) out << " -> [" << to->to_string() << ']';
  if (move) out << " (" << move->to_string() << ')';
  if (!detail.empty()) out << ": " << detail;
  return out.str();
}

void ValidationReport::merge(const ValidationReport& other) {
  violations.insert(violations.end(), other.violations.begin(), other.violations.end());
  max_distance = std::max(max_distance, other.max_distance);
  pairs_checked += other.pairs_checked;
}

void check_coverage(const CodeList& list, ValidationReport& report,
                    const EnumerationLimits& limits) {
  constexpr std::size_t npos = static_cast<std::size_t>(-1);
  std::unordered_set<SignedPerm, SignedPermHash> seen;
  for (std::size_t i = 0; i < list.size(); ++i) {
    const SignedPerm& w = list[i];
    std::string problem;
    if (w.rank() != list.rank) {
      problem = "wrong rank";
    } else if (!is_involution(w)) {
      problem = "not an involution";
    } else if (!is_member(w, list.type)) {
      problem = std::string("not in type ") + to_char(list.type);
    } else if (!seen.insert(w).second) {
      problem = "repeated entry";
    }
    if (!problem.empty()) report.add({ViolationKind::Coverage, i, w, std::nullopt, std::nullopt, problem});
  }

  if (list.rank <= limits.cap(list.type)) {
    for (const SignedPerm& w : enumerate(list.type, list.rank, limits)) {
      if (!seen.count(w)) {
        report.add({ViolationKind::Coverage, npos, w, std::nullopt, std::nullopt, "missing"});
      }
    }
  } else {
    const BigInt expected = count(list.type, list.rank);
    if (BigInt(seen.size()) != expected) {
      report.add({ViolationKind::Coverage, npos, std::nullopt, std::nullopt, std::nullopt,
                  "distinct entries " + std::to_string(seen.size()) + " != count " +
                      expected.str()});
    }
  }
}

int max_hamming(const CodeList& list, bool cyclic) {
  const std::size_t m = list.size();
  if (m < 2) return 0;
  int best = 0;
  const std::size_t pairs = cyclic ? m : m - 1;
  for (std::size_t i = 0; i < pairs; ++i) {
    best = std::max(best, hamming(list[i], list[(i + 1) % m]));
  }
  return best;
}

}  // namespace weylgray
