#pragma once

// Report type shared by every verifier, plus the checks they have in common.

#include <cstddef>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "weylgray/code_list.hpp"
#include "weylgray/counting.hpp"

namespace weylgray {

enum class ViolationKind {
  Coverage,     // missing, foreign, repeated or malformed entries
  Endpoint,     // first/last entry condition
  Move,         // a consecutive pair is not an allowed move
  StrictMove,   // allowed move, but breaks the stricter type-B sign rule
  Edge,         // consecutive quotient outside the connecting set
  Distance,     // consecutive Hamming distance above the bound
};

std::string_view to_string(ViolationKind kind);

struct Violation {
  ViolationKind kind = ViolationKind::Coverage;
  // Index of the first entry of the offending pair (0-based); the pair is
  // (index, index + 1 mod size). For coverage problems, the entry index or
  // npos when the problem is a missing involution.
  std::size_t index = 0;
  std::optional<SignedPerm> from;
  std::optional<SignedPerm> to;
  std::optional<MoveClass> move;
  std::string detail;

  std::string to_string() const;
};

struct ValidationReport {
  std::vector<Violation> violations;
  int max_distance = 0;
  std::size_t pairs_checked = 0;

  bool passed() const { return violations.empty(); }
  void add(Violation v) { violations.push_back(std::move(v)); }
  void merge(const ValidationReport& other);
};

// Checks that the list is exactly I^type_rank: involutions of the right rank
// and type, pairwise distinct, and (within the enumeration cap) equal to
// enumerate() as a set; above the cap the size is compared with count().
void check_coverage(const CodeList& list, ValidationReport& report,
                    const EnumerationLimits& limits = {});

// Fills max_distance over the cyclically (or linearly) consecutive pairs.
int max_hamming(const CodeList& list, bool cyclic);

}  // namespace weylgray
