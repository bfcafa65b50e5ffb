#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "bacomp/automaton.hpp"

namespace bacomp {

using NodeId = std::uint32_t;

struct ImplicitEdge {
  LetterId letter;
  NodeId target;
  ColorSet colors;
};

/// An automaton explored on demand. Node ids are handed out by the
/// implementation; outgoing() must return the same list in the same order on
/// every call for a given node.
class ImplicitSgra {
 public:
  virtual ~ImplicitSgra() = default;
  virtual unsigned num_colors() const = 0;
  virtual std::vector<NodeId> initial() = 0;
  virtual const std::vector<ImplicitEdge>& outgoing(NodeId node) = 0;
};

/// Adapter exposing an explicit automaton through ImplicitSgra.
class ExplicitView final : public ImplicitSgra {
 public:
  explicit ExplicitView(const Sgra& a);
  unsigned num_colors() const override { return colors_; }
  std::vector<NodeId> initial() override { return initial_; }
  const std::vector<ImplicitEdge>& outgoing(NodeId node) override { return edges_[node]; }

 private:
  unsigned colors_;
  std::vector<NodeId> initial_;
  std::vector<std::vector<ImplicitEdge>> edges_;
};

struct EmptinessStats {
  std::size_t explored_transitions = 0;
  std::size_t peak_stack_depth = 0;
};

/// Lazy emptiness for acceptance Fin(0) & Inf(1) & ... & Inf(k-1). A
/// Couvreur-style DFS over the color-0-free part; color-0 transitions only
/// schedule their target's outgoing transitions as new entry points. Stops
/// at the first accepting cycle. Returns true iff the language is empty.
bool is_empty(ImplicitSgra& a, EmptinessStats* stats = nullptr);
bool is_empty(const Sgra& a, EmptinessStats* stats = nullptr);

/// Reference check by full SCC decomposition of the color-0-free subgraph.
bool is_empty_oracle(const Sgra& a);

}  // namespace bacomp
