#include "weylgray/optimal_codes.hpp"

#include <algorithm>
#include <bit>
#include <string>

#include "sign_coords.hpp"

namespace weylgray {

using detail::SignCoords;

int largest_opener(const SignedPerm& q) {
  int m = 0;
  for (const Cycle& c : to_cycles(q.unsigned_part()).cycles) {
    if (!c.is_fixed()) m = std::max(m, std::abs(c.first));
  }
  return m;
}

std::vector<SignedPerm> layer_cell(int k, const SignedPerm& q) {
  const SignedPerm u = q.unsigned_part();
  std::vector<SignedPerm> out;
  if (to_cycles(u).transposition_count() != k - 1) return out;
  const int n = u.rank();
  for (int i = largest_opener(u) + 1; i <= n; ++i) {
    if (u.at(i) != i) continue;
    for (int j = i + 1; j <= n; ++j) {
      if (u.at(j) != j) continue;
      std::vector<int> word(u.word().begin(), u.word().end());
      std::swap(word[static_cast<std::size_t>(i - 1)], word[static_cast<std::size_t>(j - 1)]);
      out.emplace_back(std::move(word));
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<Layer> layers(int n) {
  std::vector<Layer> out;
  Layer zero;
  zero.members.push_back(SignedPerm::identity(n));
  out.push_back(std::move(zero));
  for (int k = 1; k <= n / 2; ++k) {
    Layer layer;
    layer.k = k;
    for (const SignedPerm& q : out.back().members) {
      LayerCell cell{q, layer_cell(k, q)};
      layer.members.insert(layer.members.end(), cell.children.begin(), cell.children.end());
      layer.cells.push_back(std::move(cell));
    }
    std::sort(layer.members.begin(), layer.members.end());
    out.push_back(std::move(layer));
  }
  return out;
}

std::vector<SignedPerm> sign_assignments(const SignedPerm& p) {
  const SignCoords coords(p);
  const int m = coords.size();
  std::vector<SignedPerm> out;
  out.reserve(std::size_t{1} << m);
  for (std::uint32_t code = 0; code < (1u << m); ++code) {
    // First coordinate is the most significant bit of `code`.
    std::uint32_t mask = 0;
    for (int c = 0; c < m; ++c) {
      if ((code >> (m - 1 - c)) & 1u) mask |= 1u << c;
    }
    out.push_back(coords.apply(mask));
  }
  return out;
}

namespace {

SignedPerm signing_from_bits(const BinaryWord& g) {
  std::vector<int> word(static_cast<std::size_t>(g.length()));
  for (int i = 1; i <= g.length(); ++i) word[static_cast<std::size_t>(i - 1)] = g.bit(i) ? -i : i;
  return SignedPerm(std::move(word));
}

bool same_sign(int a, int b) { return (a < 0) == (b < 0); }

// Block for child = q (s t) spliced between host entries a and b of type q.
// Returns an empty vector when the hosts do not admit the splice.
std::vector<SignedPerm> splice_block(const SignedPerm& child, int s, int t, const SignedPerm& a,
                                     const SignedPerm& b) {
  if (!same_sign(a.at(s), a.at(t)) || b.at(s) != a.at(s) || b.at(t) != a.at(t)) return {};
  const SignCoords coords(child);
  const int m = coords.size();
  // Signs read off the hosts: every cycle of child is a cycle of q except
  // (s t), whose sign is the common sign of s and t.
  auto mask_from = [&](const SignedPerm& host) {
    std::uint32_t mask = 0;
    for (int c = 0; c < m; ++c) {
      if (host.at(coords.cycles[static_cast<std::size_t>(c)].first) < 0) mask |= 1u << c;
    }
    return mask;
  };
  const std::uint32_t from = mask_from(a);
  const std::uint32_t to = mask_from(b);
  const std::uint32_t diff = from ^ to;
  if (std::popcount(diff) != 1) return {};
  const int d = std::countr_zero(diff);

  // Reflected Gray code with its first bit on coordinate d.
  std::vector<int> order{d};
  for (int c = 0; c < m; ++c) {
    if (c != d) order.push_back(c);
  }
  std::vector<SignedPerm> block;
  block.reserve(std::size_t{1} << m);
  for (const BinaryWord& w : brgc(m)) {
    std::uint32_t mask = from;
    for (int i = 1; i <= m; ++i) {
      if (w.bit(i)) mask ^= 1u << order[static_cast<std::size_t>(i - 1)];
    }
    block.push_back(coords.apply(mask));
  }
  return block;
}

struct Placement {
  std::size_t gap;  // host entry index; the block goes after it
  std::vector<SignedPerm> block;
};

bool place_cell(const std::vector<SignedPerm>& seq, const std::vector<std::size_t>& gaps,
                const std::vector<SignedPerm>& children, std::size_t next,
                std::vector<char>& used, std::vector<Placement>& chosen) {
  if (next == children.size()) return true;
  const SignedPerm& child = children[next];
  const SignedPerm parent = seq[gaps.front()].unsigned_part();
  // The new transposition of child.
  int s = 0, t = 0;
  for (int i = 1; i <= child.rank(); ++i) {
    if (child.at(i) != i && parent.at(i) == i) {
      if (s == 0) s = i; else t = i;
    }
  }
  for (std::size_t g = 0; g < gaps.size(); ++g) {
    if (used[g]) continue;
    const std::size_t i = gaps[g];
    auto block = splice_block(child, s, t, seq[i], seq[(i + 1) % seq.size()]);
    if (block.empty()) continue;
    used[g] = 1;
    chosen.push_back({i, std::move(block)});
    if (place_cell(seq, gaps, children, next + 1, used, chosen)) return true;
    chosen.pop_back();
    used[g] = 0;
  }
  return false;
}

// I^B_2 has no cycle using only single flips, paired flips and sign-free
// transpositions; this one has a single unpaired double flip (1 -2 after -1 2).
CodeList ogcb_rank2() {
  return make_code_list(GroupType::B, 2,
                        {{1, 2}, {2, 1}, {-2, -1}, {-1, -2}, {-1, 2}, {1, -2}});
}

}  // namespace

CodeList ogcb(int n) {
  if (n < 2 || n > 10) throw std::out_of_range("ogcb: n outside 2..10");
  if (n == 2) return ogcb_rank2();

  std::vector<SignedPerm> seq;
  for (const BinaryWord& g : brgc(n)) seq.push_back(signing_from_bits(g));

  const std::vector<Layer> all = layers(n);
  for (std::size_t k = 1; k < all.size(); ++k) {
    for (const LayerCell& cell : all[k].cells) {
      if (cell.children.empty()) continue;
      std::vector<std::size_t> gaps;
      for (std::size_t i = 0; i < seq.size(); ++i) {
        if (seq[i].unsigned_part() == cell.parent &&
            seq[(i + 1) % seq.size()].unsigned_part() == cell.parent) {
          gaps.push_back(i);
        }
      }
      std::vector<char> used(gaps.size(), 0);
      std::vector<Placement> chosen;
      if (gaps.empty() || !place_cell(seq, gaps, cell.children, 0, used, chosen)) {
        throw ConstructionFailed("ogcb: no insertion gaps for the children of " +
                                 cell.parent.to_string());
      }
      std::sort(chosen.begin(), chosen.end(),
                [](const Placement& x, const Placement& y) { return x.gap > y.gap; });
      for (const Placement& p : chosen) {
        seq.insert(seq.begin() + static_cast<std::ptrdiff_t>(p.gap + 1), p.block.begin(),
                   p.block.end());
      }
    }
  }
  return CodeList{GroupType::B, n, std::move(seq)};
}

Distance2Report verify_distance2(const CodeList& list, bool cyclic,
                                 const EnumerationLimits& limits) {
  Distance2Report out;
  check_coverage(list, out.report, limits);
  const std::size_t m = list.size();
  if (m < 2) return out;
  const std::size_t pairs = cyclic ? m : m - 1;
  for (std::size_t i = 0; i < pairs; ++i) {
    const SignedPerm& u = list[i];
    const SignedPerm& v = list[(i + 1) % m];
    if (u.rank() != v.rank()) continue;
    ++out.report.pairs_checked;
    const int d = hamming(u, v);
    out.report.max_distance = std::max(out.report.max_distance, d);
    const MoveClass move = classify_move(u, v);
    if (d > 2) {
      out.report.add({ViolationKind::Distance, i, u, v, move,
                      "Hamming distance " + std::to_string(d)});
    }
    bool usual = true;
    if (move.kind == MoveKind::SignChanges && move.sign_changes() == 1) {
      ++out.tally.single_sign;
    } else if (move.kind == MoveKind::SignChanges && move.sign_changes() == 2) {
      const int a = move.flipped[0];
      const int b = move.flipped[1];
      if (std::abs(u.at(a)) == b) {
        ++out.tally.paired_sign;
      } else {
        ++out.tally.unpaired_double;
        usual = false;
      }
    } else if (move.kind == MoveKind::Transposition && move.sign_changes() == 0) {
      ++out.tally.plain_transposition;
    } else {
      ++out.tally.other;
      usual = false;
    }
    if (!usual) {
      out.unusual_moves.push_back({ViolationKind::Move, i, u, v, move,
                                   "not a single sign change, paired sign change or sign-free "
                                   "transposition"});
    }
  }
  return out;
}

}  // namespace weylgray
