#pragma once

// Sign coordinates of an unsigned involution: one coordinate per cycle
// (fixed point or transposition), ordered by smallest letter. A signing is
// a bit mask over coordinates; bit c set means cycle c is barred.

#include <cstdint>
#include <vector>

#include "weylgray/signed_perm.hpp"

namespace weylgray::detail {

struct SignCoords {
  int rank = 0;
  std::vector<Cycle> cycles;  // positive letters; second == 0 for fixed

  explicit SignCoords(const SignedPerm& p) : rank(p.rank()), cycles(to_cycles(p.unsigned_part()).cycles) {}

  int size() const { return static_cast<int>(cycles.size()); }
  bool is_pair(int c) const { return !cycles[static_cast<std::size_t>(c)].is_fixed(); }

  // Coordinate holding letter a.
  int coord_of(int a) const {
    for (int c = 0; c < size(); ++c) {
      const Cycle& cy = cycles[static_cast<std::size_t>(c)];
      if (cy.first == a || cy.second == a) return c;
    }
    return -1;
  }

  SignedPerm apply(std::uint32_t mask) const {
    std::vector<int> word(static_cast<std::size_t>(rank));
    for (int c = 0; c < size(); ++c) {
      const Cycle& cy = cycles[static_cast<std::size_t>(c)];
      const int s = (mask >> c) & 1u ? -1 : 1;
      if (cy.is_fixed()) {
        word[static_cast<std::size_t>(cy.first - 1)] = s * cy.first;
      } else {
        word[static_cast<std::size_t>(cy.first - 1)] = s * cy.second;
        word[static_cast<std::size_t>(cy.second - 1)] = s * cy.first;
      }
    }
    return SignedPerm(std::move(word));
  }

  // Inverse of apply for any signing of the same unsigned involution.
  std::uint32_t mask_of(const SignedPerm& w) const {
    std::uint32_t mask = 0;
    for (int c = 0; c < size(); ++c) {
      if (w.at(cycles[static_cast<std::size_t>(c)].first) < 0) mask |= 1u << c;
    }
    return mask;
  }

  // Number of barred fixed points (the D parity of a signing).
  int fixed_negatives(std::uint32_t mask) const {
    int count = 0;
    for (int c = 0; c < size(); ++c) {
      if (!is_pair(c) && ((mask >> c) & 1u)) ++count;
    }
    return count;
  }
};

}  // namespace weylgray::detail
