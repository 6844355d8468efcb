#pragma once

// Distance-2 graphs on involutions and a deterministic backtracking search
// for Hamilton cycles and paths.

#include <chrono>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

#include "weylgray/code_list.hpp"
#include "weylgray/counting.hpp"

namespace weylgray {

// Vertices are enumerate(type, n) in lexicographic order; u ~ v iff
// hamming(u, v) == 2. Adjacency lists are sorted by vertex index.
struct Distance2Graph {
  GroupType type = GroupType::B;
  int rank = 0;
  std::vector<SignedPerm> vertices;
  std::vector<std::vector<int>> adjacency;

  std::size_t size() const { return vertices.size(); }
  bool adjacent(int u, int v) const;
  std::size_t edge_count() const;
};

Distance2Graph distance2_graph(GroupType type, int n, const EnumerationLimits& limits = {});

enum class HamiltonObject { Cycle, Path };
enum class SearchOutcome { Found, Exhausted, TimedOut };

std::string_view to_string(SearchOutcome outcome);
std::string_view to_string(HamiltonObject object);

struct SearchOptions {
  std::uint64_t node_budget = 200'000'000;
  double timeout_seconds = 60.0;
  // Root branches are distributed over this many threads; the reported
  // witness and node count do not depend on it.
  int threads = 1;
};

struct SearchResult {
  SearchOutcome outcome = SearchOutcome::Exhausted;
  std::optional<CodeList> witness;
  // Nodes expanded up to and including the branch that produced the result,
  // counted in the fixed sequential branch order.
  std::uint64_t nodes_expanded = 0;
  double elapsed_ms = 0.0;
};

// Cycles start at vertex 0; paths try start vertices in index order.
// Children are ordered by fewest unvisited neighbours, then by index.
SearchResult find_hamilton(const Distance2Graph& graph, HamiltonObject object,
                           const SearchOptions& options = {});

}  // namespace weylgray
