#pragma once

#include <cstddef>
#include <cstdint>
#include <deque>
#include <unordered_map>
#include <vector>

#include "bacomp/automaton.hpp"
#include "bacomp/complement.hpp"
#include "bacomp/emptiness.hpp"

namespace bacomp {

struct InclusionStats {
  std::size_t product_states = 0;
  std::size_t explored_transitions = 0;
};

/// Brings `a` onto `target`'s alphabet: identical alphabets pass through,
/// equal label sets are matched by label, equal AP sets in another order are
/// matched by permuting valuations. Throws Error(AlphabetMismatch) otherwise.
Sgra align_alphabet(const Sgra& a, const Alphabet& target);

/// Product of a BA with the complement of another BA, built as it is
/// explored. Colors 0..k-1 are the complement's; color k marks accepting
/// transitions of the left automaton.
class ProductAutomaton final : public ImplicitSgra {
 public:
  ProductAutomaton(const Sgra& left, const Sgra& right, const ComplementOptions& options);

  unsigned num_colors() const override { return left_color_ + 1; }
  std::vector<NodeId> initial() override;
  const std::vector<ImplicitEdge>& outgoing(NodeId node) override;

  std::size_t num_states() const { return nodes_.size(); }
  unsigned left_color() const { return left_color_; }

 private:
  struct Node {
    StateId left;
    std::uint32_t right;
  };

  NodeId intern(StateId left, std::uint32_t right);

  Sgra left_;
  ComplementEngine engine_;
  unsigned left_color_;
  std::vector<Node> nodes_;
  std::unordered_map<std::uint64_t, NodeId> ids_;
  std::deque<std::vector<ImplicitEdge>> edges_;  // deque: references stay valid
  std::vector<bool> expanded_;
};

/// L(a1) ⊆ L(a2), decided lazily on the product with the complement of a2.
bool included(const Sgra& a1, const Sgra& a2, const ComplementOptions& options = {},
              InclusionStats* stats = nullptr);

/// Same question through the fully materialized complement and explicit
/// product, checked by SCC analysis. `product_states` receives the size of
/// the reachable explicit product.
bool included_oracle(const Sgra& a1, const Sgra& a2, const ComplementOptions& options = {},
                     std::size_t* product_states = nullptr);

}  // namespace bacomp
