#include "weylgray/hamilton_search.hpp"

#include <algorithm>
#include <atomic>
#include <functional>
#include <mutex>
#include <thread>

namespace weylgray {

bool Distance2Graph::adjacent(int u, int v) const {
  const auto& row = adjacency[static_cast<std::size_t>(u)];
  return std::binary_search(row.begin(), row.end(), v);
}

std::size_t Distance2Graph::edge_count() const {
  std::size_t total = 0;
  for (const auto& row : adjacency) total += row.size();
  return total / 2;
}

Distance2Graph distance2_graph(GroupType type, int n, const EnumerationLimits& limits) {
  Distance2Graph g;
  g.type = type;
  g.rank = n;
  g.vertices = enumerate(type, n, limits).entries;
  const int v = static_cast<int>(g.vertices.size());
  g.adjacency.assign(static_cast<std::size_t>(v), {});
  for (int a = 0; a < v; ++a) {
    for (int b = a + 1; b < v; ++b) {
      if (hamming(g.vertices[static_cast<std::size_t>(a)], g.vertices[static_cast<std::size_t>(b)]) == 2) {
        g.adjacency[static_cast<std::size_t>(a)].push_back(b);
        g.adjacency[static_cast<std::size_t>(b)].push_back(a);
      }
    }
  }
  return g;
}

std::string_view to_string(SearchOutcome outcome) {
  switch (outcome) {
    case SearchOutcome::Found: return "found";
    case SearchOutcome::Exhausted: return "exhausted";
    case SearchOutcome::TimedOut: return "timed_out";
  }
  return "?";
}

std::string_view to_string(HamiltonObject object) {
  return object == HamiltonObject::Cycle ? "cycle" : "path";
}

namespace {

using Clock = std::chrono::steady_clock;

struct Branch {
  int start = 0;
  int second = -1;  // -1: single-vertex graph
};

enum class BranchStatus { Found, Exhausted, OverBudget, OutOfTime, Cancelled };

struct BranchResult {
  BranchStatus status = BranchStatus::Exhausted;
  std::uint64_t nodes = 0;
  std::vector<int> order;
};

class BranchSearch {
 public:
  BranchSearch(const Distance2Graph& g, HamiltonObject object, std::uint64_t cap,
               Clock::time_point deadline, const std::function<bool()>& cancelled)
      : g_(g), cycle_(object == HamiltonObject::Cycle), cap_(cap), deadline_(deadline),
        cancelled_(cancelled) {}

  BranchResult run(const Branch& b) {
    const std::size_t v = g_.size();
    visited_.assign(v, 0);
    unvisited_deg_.resize(v);
    for (std::size_t i = 0; i < v; ++i) {
      unvisited_deg_[i] = static_cast<int>(g_.adjacency[i].size());
    }
    path_.clear();
    start_ = b.start;
    visit(b.start);
    BranchResult r;
    if (b.second < 0) {
      r.status = BranchStatus::Found;
      r.order = path_;
      return r;
    }
    nodes_ = 0;
    status_ = BranchStatus::Exhausted;
    if (step(b.second)) {
      r.status = BranchStatus::Found;
      r.order = path_;
    } else {
      r.status = status_;
    }
    r.nodes = nodes_;
    return r;
  }

  // Root children of `start`, fewest unvisited neighbours first.
  static std::vector<int> root_children(const Distance2Graph& g, int start) {
    std::vector<std::pair<int, int>> keyed;
    for (int u : g.adjacency[static_cast<std::size_t>(start)]) {
      keyed.emplace_back(static_cast<int>(g.adjacency[static_cast<std::size_t>(u)].size()) - 1, u);
    }
    std::sort(keyed.begin(), keyed.end());
    std::vector<int> out;
    for (const auto& [deg, u] : keyed) out.push_back(u);
    return out;
  }

 private:
  void visit(int x) {
    visited_[static_cast<std::size_t>(x)] = 1;
    path_.push_back(x);
    for (int y : g_.adjacency[static_cast<std::size_t>(x)]) --unvisited_deg_[static_cast<std::size_t>(y)];
  }

  void unvisit(int x) {
    visited_[static_cast<std::size_t>(x)] = 0;
    path_.pop_back();
    for (int y : g_.adjacency[static_cast<std::size_t>(x)]) ++unvisited_deg_[static_cast<std::size_t>(y)];
  }

  bool out_of_resources() {
    if (nodes_ > cap_) {
      status_ = BranchStatus::OverBudget;
      return true;
    }
    if ((nodes_ & 1023u) == 0) {
      if (Clock::now() > deadline_) {
        status_ = BranchStatus::OutOfTime;
        return true;
      }
      if (cancelled_()) {
        status_ = BranchStatus::Cancelled;
        return true;
      }
    }
    return false;
  }

  // Number of ways an unvisited vertex u can still be entered or left.
  int avail(int u, int head) const {
    int a = unvisited_deg_[static_cast<std::size_t>(u)];
    if (g_.adjacent(u, head)) ++a;
    if (cycle_ && start_ != head && g_.adjacent(u, start_)) ++a;
    return a;
  }

  // Every unvisited vertex keeps enough ways in and out (two for a cycle, at
  // most one dead end for a path), and the unvisited vertices stay reachable
  // from the head.
  bool feasible(int head) {
    const std::size_t v = g_.size();
    if (path_.size() == v) return true;
    int leaves = 0;
    std::size_t unvisited = 0;
    for (std::size_t u = 0; u < v; ++u) {
      if (visited_[u]) continue;
      ++unvisited;
      const int a = avail(static_cast<int>(u), head);
      if (a == 0) return false;
      if (a == 1) {
        if (cycle_ || ++leaves > 1) return false;
      }
    }

    seen_.assign(v, 0);
    stack_.assign(1, head);
    std::size_t reached = 0;
    bool closes = !cycle_;
    while (!stack_.empty()) {
      const int x = stack_.back();
      stack_.pop_back();
      for (int y : g_.adjacency[static_cast<std::size_t>(x)]) {
        const auto yi = static_cast<std::size_t>(y);
        if (y == start_ && x != head) closes = true;
        if (visited_[yi] || seen_[yi]) continue;
        seen_[yi] = 1;
        ++reached;
        stack_.push_back(y);
      }
    }
    return reached == unvisited && closes;
  }

  bool step(int x) {
    ++nodes_;
    if (out_of_resources()) return false;
    visit(x);
    if (path_.size() == g_.size()) {
      if (!cycle_ || g_.size() < 3 || g_.adjacent(x, start_)) return true;
      unvisit(x);
      return false;
    }
    if (feasible(x)) {
      std::vector<std::pair<int, int>> children;
      for (int y : g_.adjacency[static_cast<std::size_t>(x)]) {
        if (!visited_[static_cast<std::size_t>(y)]) {
          children.emplace_back(unvisited_deg_[static_cast<std::size_t>(y)], y);
        }
      }
      std::sort(children.begin(), children.end());
      for (const auto& [deg, y] : children) {
        if (step(y)) return true;
        if (status_ != BranchStatus::Exhausted) break;
      }
    }
    unvisit(x);
    return false;
  }

  const Distance2Graph& g_;
  bool cycle_;
  std::uint64_t cap_;
  Clock::time_point deadline_;
  const std::function<bool()>& cancelled_;

  std::vector<char> visited_;
  std::vector<int> unvisited_deg_;
  std::vector<int> path_;
  std::vector<char> seen_;
  std::vector<int> stack_;
  int start_ = 0;
  std::uint64_t nodes_ = 0;
  BranchStatus status_ = BranchStatus::Exhausted;
};

}  // namespace

SearchResult find_hamilton(const Distance2Graph& graph, HamiltonObject object,
                           const SearchOptions& options) {
  const auto t0 = Clock::now();
  const auto deadline =
      t0 + std::chrono::duration_cast<Clock::duration>(
               std::chrono::duration<double>(std::max(0.0, options.timeout_seconds)));
  SearchResult result;
  auto finish = [&](SearchResult r) {
    r.elapsed_ms = std::chrono::duration<double, std::milli>(Clock::now() - t0).count();
    return r;
  };
  if (graph.size() == 0) return finish(result);

  std::vector<Branch> branches;
  const int starts = object == HamiltonObject::Cycle ? 1 : static_cast<int>(graph.size());
  for (int s = 0; s < starts; ++s) {
    if (graph.size() == 1) {
      branches.push_back({s, -1});
      continue;
    }
    for (int second : BranchSearch::root_children(graph, s)) branches.push_back({s, second});
  }

  std::vector<BranchResult> results(branches.size());
  std::vector<char> done(branches.size(), 0);
  std::atomic<std::size_t> first_found{branches.size()};
  std::atomic<std::size_t> next{0};
  std::atomic<bool> stop{false};
  std::mutex prefix_mutex;
  std::size_t prefix_end = 0;
  std::uint64_t prefix_nodes = 0;

  auto worker = [&]() {
    for (;;) {
      const std::size_t b = next.fetch_add(1);
      if (b >= branches.size() || stop.load()) return;
      if (b > first_found.load()) return;
      std::function<bool()> cancelled = [&, b]() { return stop.load() || b > first_found.load(); };
      BranchSearch search(graph, object, options.node_budget, deadline, cancelled);
      results[b] = search.run(branches[b]);
      {
        std::lock_guard<std::mutex> lock(prefix_mutex);
        done[b] = 1;
        while (prefix_end < branches.size() && done[prefix_end]) {
          prefix_nodes += results[prefix_end++].nodes;
        }
        if (prefix_nodes > options.node_budget) stop.store(true);
      }
      if (results[b].status == BranchStatus::Found) {
        std::size_t cur = first_found.load();
        while (b < cur && !first_found.compare_exchange_weak(cur, b)) {
        }
      } else if (results[b].status == BranchStatus::OutOfTime) {
        stop.store(true);
      }
    }
  };

  const int threads = std::max(1, options.threads);
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (int t = 0; t < threads; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  // Replay the branches in their fixed order.
  std::uint64_t total = 0;
  for (std::size_t b = 0; b < branches.size(); ++b) {
    const BranchResult& r = results[b];
    if (!done[b] || r.status == BranchStatus::OutOfTime || r.status == BranchStatus::Cancelled) {
      result.outcome = SearchOutcome::TimedOut;
      result.nodes_expanded = total + r.nodes;
      return finish(result);
    }
    total += r.nodes;
    if (total > options.node_budget || r.status == BranchStatus::OverBudget) {
      result.outcome = SearchOutcome::TimedOut;
      result.nodes_expanded = options.node_budget;
      return finish(result);
    }
    if (r.status == BranchStatus::Found) {
      CodeList witness{graph.type, graph.rank, {}};
      for (int x : r.order) witness.entries.push_back(graph.vertices[static_cast<std::size_t>(x)]);
      result.outcome = SearchOutcome::Found;
      result.witness = std::move(witness);
      result.nodes_expanded = total;
      return finish(result);
    }
  }
  result.outcome = SearchOutcome::Exhausted;
  result.nodes_expanded = total;
  return finish(result);
}

}  // namespace weylgray
