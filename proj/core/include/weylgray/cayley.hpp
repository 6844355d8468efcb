#pragma once

// Reflections t_{i,j}, the connecting sets T^A, T^B, T^D built from them,
// and Cayley-graph edge checks on lists of involutions.

#include <array>
#include <cstdint>
#include <initializer_list>
#include <unordered_map>
#include <vector>

#include "weylgray/code_list.hpp"
#include "weylgray/validation.hpp"

namespace weylgray {

// Simple generator s_k of the given type and rank: s_k swaps word positions
// k, k+1 for k < n; s_n flips position n (B) or swaps and bars positions
// n-1, n (D). Type A has no s_n.
SignedPerm simple_generator(GroupType type, int k, int n);

struct ReflectionWord {
  GroupType type = GroupType::A;
  int i = 0;
  int j = 0;
  std::vector<int> generators;  // indices k of s_k, left to right
  SignedPerm element;
};

// t_{i,j} = s_i ... s_{j-1} s_j s_{j-1} ... s_i (t_{i,i} = s_i), and in type D
// t_{i,n} = s_i ... s_{n-2} (s_{n-1} s_n) s_{n-2} ... s_i.
// Valid ranges: A 1 <= i <= j < n; B 1 <= i <= j <= n; D 1 <= i <= j < n or
// j = n with i < n. Throws std::out_of_range otherwise.
ReflectionWord reflection_word(GroupType type, int i, int j, int n);
SignedPerm reflection(GroupType type, int i, int j, int n);

// Index ranges used for the labeled subsets. Literal follows the printed
// definitions; Amended widens three ranges to the moves the recursive
// constructions actually use (see README):
//   B: X_2 pairs i < j <= n, X_3 pairs i <= j < n;  D: X_1 adds t_{i,n}.
enum class RangeReading { Literal, Amended };

class GeneratorSet {
 public:
  GeneratorSet(GroupType type, int n, RangeReading reading = RangeReading::Literal);

  GroupType type() const { return type_; }
  int rank() const { return rank_; }
  RangeReading reading() const { return reading_; }
  int subset_count() const { return static_cast<int>(subsets_.size()); }

  // Elements of X_label (1-based) as generated, deduplicated.
  const std::vector<SignedPerm>& subset(int label) const;

  // Membership in the inverse closure of the union (or of selected subsets).
  bool contains(const SignedPerm& g) const;
  bool contains_in(const SignedPerm& g, std::initializer_list<int> labels) const;
  // Bit (label - 1) set for every subset whose inverse closure holds g.
  std::uint32_t labels_of(const SignedPerm& g) const;

  std::size_t size() const { return members_.size(); }

 private:
  void add(int label, const SignedPerm& g);

  GroupType type_;
  int rank_;
  RangeReading reading_;
  std::vector<std::vector<SignedPerm>> subsets_;
  std::unordered_map<SignedPerm, std::uint32_t, SignedPermHash> members_;
};

GeneratorSet generating_set(GroupType type, int n, RangeReading reading = RangeReading::Literal);

// u != v and inverse(u) * v lies in T.
bool is_edge(const SignedPerm& u, const SignedPerm& v, const GeneratorSet& t);

// Coverage plus an Edge violation for every cyclically consecutive pair
// whose quotient is outside T. With `labels` non-empty only those subsets
// count as edges.
ValidationReport verify_hamilton_cycle(const CodeList& list, const GeneratorSet& t,
                                       std::initializer_list<int> labels = {},
                                       const EnumerationLimits& limits = {});

}  // namespace weylgray
