#include "bacomp/graph.hpp"

#include <algorithm>
#include <limits>

namespace bacomp {

SccDecomposition strongly_connected_components(const Adjacency& adj) {
  constexpr std::uint32_t kUnvisited = std::numeric_limits<std::uint32_t>::max();
  const std::size_t n = adj.size();
  std::vector<std::uint32_t> index(n, kUnvisited);
  std::vector<std::uint32_t> lowlink(n, 0);
  std::vector<bool> on_stack(n, false);
  std::vector<std::uint32_t> stack;
  std::vector<std::uint32_t> finished(n, 0);
  std::vector<std::vector<std::uint32_t>> comps;  // in completion order: sinks first
  std::uint32_t next_index = 0;

  struct Frame {
    std::uint32_t node;
    std::size_t edge;
  };
  std::vector<Frame> call;

  for (std::uint32_t root = 0; root < n; ++root) {
    if (index[root] != kUnvisited) continue;
    call.push_back({root, 0});
    index[root] = lowlink[root] = next_index++;
    stack.push_back(root);
    on_stack[root] = true;
    while (!call.empty()) {
      Frame& f = call.back();
      const auto& succ = adj[f.node];
      if (f.edge < succ.size()) {
        std::uint32_t w = succ[f.edge++];
        if (index[w] == kUnvisited) {
          index[w] = lowlink[w] = next_index++;
          stack.push_back(w);
          on_stack[w] = true;
          call.push_back({w, 0});
        } else if (on_stack[w]) {
          lowlink[f.node] = std::min(lowlink[f.node], index[w]);
        }
        continue;
      }
      std::uint32_t v = f.node;
      call.pop_back();
      if (!call.empty()) {
        std::uint32_t parent = call.back().node;
        lowlink[parent] = std::min(lowlink[parent], lowlink[v]);
      }
      if (lowlink[v] == index[v]) {
        std::vector<std::uint32_t> comp;
        std::uint32_t w;
        do {
          w = stack.back();
          stack.pop_back();
          on_stack[w] = false;
          comp.push_back(w);
        } while (w != v);
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
      }
    }
  }

  SccDecomposition out;
  out.component.assign(n, 0);
  out.members.reserve(comps.size());
  for (auto it = comps.rbegin(); it != comps.rend(); ++it) {
    auto id = static_cast<std::uint32_t>(out.members.size());
    for (std::uint32_t v : *it) out.component[v] = id;
    out.members.push_back(std::move(*it));
  }
  return out;
}

std::vector<bool> reachable_from(const Adjacency& adj, const std::vector<std::uint32_t>& roots) {
  std::vector<bool> seen(adj.size(), false);
  std::vector<std::uint32_t> work;
  for (std::uint32_t r : roots) {
    if (!seen[r]) {
      seen[r] = true;
      work.push_back(r);
    }
  }
  while (!work.empty()) {
    std::uint32_t v = work.back();
    work.pop_back();
    for (std::uint32_t w : adj[v]) {
      if (!seen[w]) {
        seen[w] = true;
        work.push_back(w);
      }
    }
  }
  return seen;
}

Adjacency transpose(const Adjacency& adj) {
  Adjacency rev(adj.size());
  for (std::uint32_t v = 0; v < adj.size(); ++v)
    for (std::uint32_t w : adj[v]) rev[w].push_back(v);
  return rev;
}

}  // namespace bacomp
