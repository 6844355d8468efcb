#pragma once

// Recursive cyclic Gray codes for I^A_n, I^B_n and I^D_n in which
// consecutive involutions differ by a transposition or a rotation of three
// letters, possibly with one or two sign changes, or by one or two sign
// changes alone.

#include "weylgray/code_list.hpp"
#include "weylgray/counting.hpp"
#include "weylgray/validation.hpp"

namespace weylgray {

// Base cases the recursions bottom out in.
CodeList trigger_gca3();
CodeList trigger_gca4();
CodeList trigger_gcb2();
CodeList trigger_gcb3();
CodeList trigger_gcd1();
CodeList trigger_gcd2();

// n >= 3. Odd and even n use separate block layouts. Throws
// std::invalid_argument below the range.
CodeList gca(int n);
// n >= 2.
CodeList gcb(int n);
// n >= 1.
CodeList gcd_code(int n);

// Coverage, the endpoint rule (identity first; (n-1 n) or its barred form
// last) and the move rule on every cyclically consecutive pair.
// With strict_b, rotations must carry no sign change and transpositions at
// most one.
ValidationReport validate_properties(const CodeList& list, bool strict_b,
                                     const EnumerationLimits& limits = {});

}  // namespace weylgray
