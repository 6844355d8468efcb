#pragma once

// Distance-2 codes: the layered type-B construction, the type-D cluster
// construction, and a verifier that also tallies the kinds of moves used.

#include <cstdint>
#include <stdexcept>
#include <vector>

#include "weylgray/binary_codes.hpp"
#include "weylgray/code_list.hpp"
#include "weylgray/counting.hpp"
#include "weylgray/validation.hpp"

namespace weylgray {

// Largest opener (smaller letter) among the transpositions of q; 0 for the
// identity. Signs are ignored.
int largest_opener(const SignedPerm& q);

// L_k(q) = { q (i j) : largest_opener(q) < i < j, i and j fixed by q }, for
// unsigned q with k - 1 transpositions; empty for any other k.
std::vector<SignedPerm> layer_cell(int k, const SignedPerm& q);

struct LayerCell {
  SignedPerm parent;
  std::vector<SignedPerm> children;  // lexicographic
};

struct Layer {
  int k = 0;
  std::vector<SignedPerm> members;  // lexicographic
  std::vector<LayerCell> cells;     // one per member of L_{k-1}, in its order
};

// L_0 ... L_{floor(n/2)} of unsigned involutions of rank n.
std::vector<Layer> layers(int n);

// Every signing of unsigned p in which the two letters of each transposition
// share a sign: 2^(n-k) involutions, ordered by their sign coordinates
// (transpositions and fixed points by smallest letter) read as a binary
// number.
std::vector<SignedPerm> sign_assignments(const SignedPerm& p);

class ConstructionFailed : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Cyclic code of I^B_n with Hamming distance 2 built layer by layer: the
// identity signings in reflected Gray order, then every involution with k
// transpositions inserted as a block next to its parent with one fewer
// transposition. n in 2..10; n = 2 admits no cycle of that shape and gets a
// fixed 6-entry cycle with one unpaired double sign change. Throws ConstructionFailed if the insertion search fails.
CodeList ogcb(int n);

// Cyclic code of I^D_n, n in {2..7}, whose moves are two sign changes or a
// sign-free transposition. Throws ConstructionFailed on search failure.
struct DConstructionStats {
  std::uint64_t nodes = 0;
};
CodeList build_d_distance2(int n, DConstructionStats* stats = nullptr,
                           std::uint64_t node_budget = 5'000'000);

struct MoveTally {
  std::size_t single_sign = 0;       // one sign change
  std::size_t paired_sign = 0;       // both letters of one transposition
  std::size_t unpaired_double = 0;   // two sign changes on different cycles
  std::size_t plain_transposition = 0;
  std::size_t other = 0;             // anything else (distance 2 or not)
};

struct Distance2Report {
  ValidationReport report;  // coverage + Distance violations
  MoveTally tally;
  // Moves outside {single sign change, paired sign change, sign-free
  // transposition}; informational, they do not fail the report.
  std::vector<Violation> unusual_moves;

  bool passed() const { return report.passed(); }
};

Distance2Report verify_distance2(const CodeList& list, bool cyclic,
                                 const EnumerationLimits& limits = {});

}  // namespace weylgray
