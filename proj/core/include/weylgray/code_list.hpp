#pragma once

// Ordered lists of involutions and the list operators used by the recursive
// constructions: reversal, relabeling, adjoining fixed letters or a new
// transposition, and the parity-fixing extension into type D.
//
// Entries always have the list's full rank. A list over a sub-alphabet is
// stored embedded: letters outside the alphabet are fixed and positive.

#include <cstddef>
#include <vector>

#include "weylgray/signed_perm.hpp"

namespace weylgray {

struct CodeList {
  GroupType type = GroupType::A;
  int rank = 0;
  std::vector<SignedPerm> entries;

  std::size_t size() const { return entries.size(); }
  bool empty() const { return entries.empty(); }
  const SignedPerm& operator[](std::size_t i) const { return entries[i]; }

  auto begin() const { return entries.begin(); }
  auto end() const { return entries.end(); }

  friend bool operator==(const CodeList&, const CodeList&) = default;
};

// Builds a list from one-line words; every word must have length `rank`.
CodeList make_code_list(GroupType type, int rank, const std::vector<std::vector<int>>& words);

// Entrywise relabel; the result has rank max(L.rank, F.max_image()).
CodeList relabel_list(const CodeList& list, const Relabeling& f);
CodeList reverse_list(const CodeList& list);

// L * k: adjoin the fixed letter k. Throws if k is moved by some entry.
CodeList extend_fixed(const CodeList& list, int k);

// L * (a b), or L * (-a -b) when barred. Both letters must be fixed and
// positive in every entry.
CodeList append_transposition(const CodeList& list, int a, int b, bool barred);

// L * ~k: adjoin k, barred exactly when the entry has an odd number of
// negative letters. The result is a type-D list.
CodeList extend_tilde(const CodeList& list, int k);

// Concatenation; both lists must share type and rank.
void append(CodeList& into, const CodeList& block);

}  // namespace weylgray
