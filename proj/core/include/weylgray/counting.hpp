#pragma once

// Involution counts by recursion, and explicit enumeration.

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>

#include "weylgray/code_list.hpp"

namespace weylgray {

using BigInt = boost::multiprecision::cpp_int;

// i^A_n = i^A_{n-1} + (n-1) i^A_{n-2},          i^A_0 = i^A_1 = 1
// i^B_{n+1} = 2 i^B_n + 2n i^B_{n-1},           i^B_0 = 1, i^B_1 = 2
// i^D_{n+1} = i^B_n + 2n i^D_{n-1},             i^D_1 = 1, i^D_2 = 4
// Throws std::out_of_range for n < 0, or n < 1 in type D.
BigInt count(GroupType type, int n);

struct EnumerationLimits {
  int max_rank_a = 8;
  int max_rank_bd = 7;

  int cap(GroupType type) const { return type == GroupType::A ? max_rank_a : max_rank_bd; }
};

class CapExceeded : public std::out_of_range {
 public:
  using std::out_of_range::out_of_range;
};

// All involutions of the type and rank in lexicographic word order.
// Throws CapExceeded above the configured rank.
CodeList enumerate(GroupType type, int n, const EnumerationLimits& limits = {});

// (#even) - (#odd) over I^A_n, parity taken as the number of transpositions.
long long even_odd_excess(int n, const EnumerationLimits& limits = {});

}  // namespace weylgray
