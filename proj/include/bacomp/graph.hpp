#pragma once

#include <cstdint>
#include <vector>

namespace bacomp {

using Adjacency = std::vector<std::vector<std::uint32_t>>;

struct SccDecomposition {
  /// Component id per node. Ids follow a topological order of the
  /// condensation: an edge u -> v implies component[u] <= component[v].
  std::vector<std::uint32_t> component;
  std::vector<std::vector<std::uint32_t>> members;  // sorted ascending
};

/// Iterative Tarjan over an explicit adjacency list.
SccDecomposition strongly_connected_components(const Adjacency& adj);

/// Nodes reachable from `roots`.
std::vector<bool> reachable_from(const Adjacency& adj, const std::vector<std::uint32_t>& roots);

/// Reverses every edge.
Adjacency transpose(const Adjacency& adj);

}  // namespace bacomp
