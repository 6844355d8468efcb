#include <algorithm>
#include <bit>
#include <map>
#include <optional>
#include <string>
#include <tuple>

#include "sign_coords.hpp"
#include "weylgray/optimal_codes.hpp"

namespace weylgray {

namespace {

using detail::SignCoords;

// All D-valid signings of one unsigned involution, with moves that flip a
// transposition's paired sign or two fixed points.
struct Cluster {
  SignedPerm unsigned_form;
  SignCoords coords;
  std::vector<std::uint32_t> masks;  // valid signings, ascending
  std::map<std::pair<std::uint32_t, std::uint32_t>, std::optional<std::vector<std::uint32_t>>> paths;

  explicit Cluster(const SignedPerm& p) : unsigned_form(p), coords(p) {
    for (std::uint32_t m = 0; m < (1u << coords.size()); ++m) {
      if (coords.fixed_negatives(m) % 2 == 0) masks.push_back(m);
    }
  }

  std::vector<std::uint32_t> neighbours(std::uint32_t m) const {
    std::vector<std::uint32_t> out;
    const int k = coords.size();
    for (int c = 0; c < k; ++c) {
      if (coords.is_pair(c)) {
        out.push_back(m ^ (1u << c));
        continue;
      }
      for (int e = c + 1; e < k; ++e) {
        if (!coords.is_pair(e)) out.push_back(m ^ (1u << c) ^ (1u << e));
      }
    }
    std::sort(out.begin(), out.end());
    return out;
  }

  // Hamilton path over the signings from `from` to `to`, first in a fixed
  // depth-first order.
  const std::optional<std::vector<std::uint32_t>>& path(std::uint32_t from, std::uint32_t to) {
    const auto key = std::make_pair(from, to);
    auto it = paths.find(key);
    if (it != paths.end()) return it->second;
    std::vector<std::uint32_t> route{from};
    std::vector<char> seen(1u << coords.size(), 0);
    seen[from] = 1;
    std::optional<std::vector<std::uint32_t>> result;
    std::uint64_t budget = 2'000'000;
    if (extend(route, seen, to, budget)) result = route;
    return paths.emplace(key, std::move(result)).first->second;
  }

 private:
  bool extend(std::vector<std::uint32_t>& route, std::vector<char>& seen, std::uint32_t to,
              std::uint64_t& budget) {
    if (budget-- == 0) return false;
    if (route.size() == masks.size()) return route.back() == to;
    if (!feasible(route.back(), seen, to)) return false;
    for (std::uint32_t next : neighbours(route.back())) {
      if (seen[next]) continue;
      if (next == to && route.size() + 1 != masks.size()) continue;
      seen[next] = 1;
      route.push_back(next);
      if (extend(route, seen, to, budget)) return true;
      route.pop_back();
      seen[next] = 0;
    }
    return false;
  }

  // Every unvisited signing must keep an exit and be reachable from the head.
  bool feasible(std::uint32_t head, const std::vector<char>& seen, std::uint32_t to) const {
    std::vector<char> reached(seen.size(), 0);
    std::vector<std::uint32_t> stack{head};
    reached[head] = 1;
    std::size_t count = 0;
    while (!stack.empty()) {
      const std::uint32_t v = stack.back();
      stack.pop_back();
      for (std::uint32_t u : neighbours(v)) {
        if (seen[u] || reached[u]) continue;
        reached[u] = 1;
        ++count;
        stack.push_back(u);
      }
    }
    std::size_t unvisited = 0;
    for (std::uint32_t m : masks) {
      if (seen[m]) continue;
      ++unvisited;
      if (m == to) continue;
      int free = 0;
      for (std::uint32_t u : neighbours(m)) free += (!seen[u] || u == head) ? 1 : 0;
      if (free < 2) return false;
    }
    return count == unvisited;
  }
};

// The signing of cluster p reached from w by a sign-free transposition, if
// the unsigned forms differ by one transposition.
std::optional<SignedPerm> link(const SignedPerm& w, const SignedPerm& p) {
  const int n = w.rank();
  int s = 0, t = 0, changed = 0;
  for (int i = 1; i <= n; ++i) {
    if (std::abs(w.at(i)) != p.at(i)) {
      ++changed;
      if (s == 0) s = i; else t = i;
    }
  }
  if (changed != 2) return std::nullopt;
  std::vector<int> word(w.word().begin(), w.word().end());
  const int ws = w.at(s);
  const int wt = w.at(t);
  if ((ws < 0) != (wt < 0)) return std::nullopt;
  const int sign = ws < 0 ? -1 : 1;
  if (std::abs(ws) == s && std::abs(wt) == t && p.at(s) == t) {
    word[static_cast<std::size_t>(s - 1)] = sign * t;  // join s and t
    word[static_cast<std::size_t>(t - 1)] = sign * s;
  } else if (std::abs(ws) == t && std::abs(wt) == s && p.at(s) == s) {
    word[static_cast<std::size_t>(s - 1)] = sign * s;  // split (s t)
    word[static_cast<std::size_t>(t - 1)] = sign * t;
  } else {
    return std::nullopt;
  }
  return SignedPerm(std::move(word));
}

struct Option {
  std::size_t gap;
  std::vector<std::uint32_t> route;
};

class Builder {
 public:
  Builder(int n, std::uint64_t budget) : n_(n), budget_(budget) {
    for (const SignedPerm& p : enumerate(GroupType::A, n, {n, n}).entries) {
      if (!p.is_identity()) clusters_.emplace_back(p);
    }
    for (const BinaryWord& g : bce(n)) {
      std::vector<int> word(static_cast<std::size_t>(n));
      for (int i = 1; i <= n; ++i) word[static_cast<std::size_t>(i - 1)] = g.bit(i) ? -i : i;
      seq_.emplace_back(std::move(word));
    }
    placed_.assign(clusters_.size(), 0);
  }

  bool run() { return solve(clusters_.size()); }
  std::vector<SignedPerm> sequence() const { return seq_; }
  std::uint64_t nodes() const { return nodes_; }

 private:
  std::vector<Option> options(Cluster& c) {
    std::vector<Option> out;
    const std::size_t m = seq_.size();
    for (std::size_t i = 0; i < m; ++i) {
      const auto x = link(seq_[i], c.unsigned_form);
      if (!x) continue;
      const auto y = link(seq_[(i + 1) % m], c.unsigned_form);
      if (!y) continue;
      const std::uint32_t from = c.coords.mask_of(*x);
      const std::uint32_t to = c.coords.mask_of(*y);
      if (from == to && c.masks.size() > 1) continue;
      const auto& route = c.path(from, to);
      if (route) out.push_back({i, *route});
    }
    return out;
  }

  bool solve(std::size_t remaining) {
    if (remaining == 0) return true;
    if (++nodes_ > budget_) return false;
    // Most constrained cluster that can be placed now.
    std::optional<std::size_t> pick;
    std::vector<Option> pick_options;
    for (std::size_t k = 0; k < clusters_.size(); ++k) {
      if (placed_[k]) continue;
      auto opts = options(clusters_[k]);
      if (opts.empty()) continue;
      if (!pick || opts.size() < pick_options.size()) {
        pick = k;
        pick_options = std::move(opts);
      }
    }
    if (!pick) return false;
    Cluster& c = clusters_[*pick];
    for (const Option& opt : pick_options) {
      std::vector<SignedPerm> block;
      for (std::uint32_t mask : opt.route) block.push_back(c.coords.apply(mask));
      const auto at = seq_.begin() + static_cast<std::ptrdiff_t>(opt.gap + 1);
      seq_.insert(at, block.begin(), block.end());
      placed_[*pick] = 1;
      if (solve(remaining - 1)) return true;
      placed_[*pick] = 0;
      const auto from = seq_.begin() + static_cast<std::ptrdiff_t>(opt.gap + 1);
      seq_.erase(from, from + static_cast<std::ptrdiff_t>(block.size()));
      if (nodes_ > budget_) return false;
    }
    return false;
  }

  int n_;
  std::uint64_t budget_;
  std::uint64_t nodes_ = 0;
  std::vector<Cluster> clusters_;
  std::vector<char> placed_;
  std::vector<SignedPerm> seq_;
};

}  // namespace

CodeList build_d_distance2(int n, DConstructionStats* stats, std::uint64_t node_budget) {
  if (n < 2 || n > 7) throw std::out_of_range("build_d_distance2: n outside 2..7");
  Builder builder(n, node_budget);
  const bool ok = builder.run();
  if (stats) stats->nodes = builder.nodes();
  if (!ok) {
    throw ConstructionFailed("build_d_distance2: no cycle found for n=" + std::to_string(n) +
                             " within " + std::to_string(node_budget) + " nodes");
  }
  return CodeList{GroupType::D, n, builder.sequence()};
}

}  // namespace weylgray
