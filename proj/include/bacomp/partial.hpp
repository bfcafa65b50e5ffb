#pragma once

#include <cstdint>
#include <memory>
#include <utility>
#include <variant>
#include <vector>

#include "bacomp/automaton.hpp"
#include "bacomp/scc.hpp"

namespace bacomp {

/// Miyano-Hayashi breakpoint: runs inside the IWAC block still owing a
/// departure.
struct MhMacro {
  StateSet brk;
  bool operator==(const MhMacro&) const = default;
};

/// Check / safe / breakpoint triple for the DAC block.
struct CsbMacro {
  StateSet check;
  StateSet safe;
  StateSet brk;
  bool operator==(const CsbMacro&) const = default;
};

/// States of the IADAC block currently reached.
struct IadacMacro {
  StateSet tracked;
  bool operator==(const IadacMacro&) const = default;
};

/// Level ranking over the reached states of one NAC, plus the even-ranked
/// states still owing a rank drop since the last breakpoint.
struct RankMacro {
  std::vector<std::pair<StateId, unsigned>> rank;  // sorted by state
  StateSet obligations;
  bool operator==(const RankMacro&) const = default;
};

/// Ordered slices of the reduced split tree over one NAC. Before the guess
/// the slices are unlabeled; afterwards each slice is claimed to lie on an
/// infinite branch (Inf) or to have finitely many descendants (Die), and
/// `tracked` marks the Die slices still owed since the last breakpoint.
struct SliceMacro {
  enum class Label : std::uint8_t { None, Inf, Die };
  struct Slice {
    StateSet states;
    Label label = Label::None;
    bool tracked = false;
    bool operator==(const Slice&) const = default;
  };
  std::vector<Slice> slices;
  bool guessed = false;
  bool operator==(const SliceMacro&) const = default;
};

using PartialMacrostate = std::variant<IadacMacro, MhMacro, CsbMacro, RankMacro, SliceMacro>;

struct PartialSucc {
  PartialMacrostate macro;
  bool emit;
};

/// Shared read-only view of the input BA used by all partial algorithms.
struct BlockContext {
  const Sgra& ba;
  const SccInfo& info;
};

/// A partial complementation algorithm for one partition block. Successor
/// functions append to `out`; an empty result means the branch is blocked.
class PartialAlgorithm {
 public:
  PartialAlgorithm(BlockContext ctx, StateSet block);
  virtual ~PartialAlgorithm() = default;

  virtual BlockKind kind() const = 0;
  virtual std::vector<PartialMacrostate> init(const StateSet& top) const = 0;
  virtual void successors(const StateSet& top, const PartialMacrostate& m, LetterId a,
                          std::vector<PartialSucc>& out) const = 0;
  /// Throws Error(Invariant) when `m` violates the algorithm's macrostate
  /// invariants for reached set `top`.
  virtual void check(const StateSet& top, const PartialMacrostate& m) const = 0;
  /// Checks a single step from -> to over `a`; no-op unless overridden.
  virtual void check_step(const StateSet& /*top*/, const PartialMacrostate& /*from*/, LetterId /*a*/,
                          const PartialMacrostate& /*to*/) const {}

  const StateSet& block() const { return block_; }
  bool in_block(StateId q) const { return member_[q]; }

 protected:
  StateSet restrict_to_block(const StateSet& s) const;

  BlockContext ctx_;
  StateSet block_;
  std::vector<bool> member_;
};

class IadacAlgorithm final : public PartialAlgorithm {
 public:
  using PartialAlgorithm::PartialAlgorithm;
  BlockKind kind() const override { return BlockKind::Iadac; }
  std::vector<PartialMacrostate> init(const StateSet& top) const override;
  void successors(const StateSet& top, const PartialMacrostate& m, LetterId a,
                  std::vector<PartialSucc>& out) const override;
  void check(const StateSet& top, const PartialMacrostate& m) const override;
};

class MhAlgorithm final : public PartialAlgorithm {
 public:
  using PartialAlgorithm::PartialAlgorithm;
  BlockKind kind() const override { return BlockKind::Iwac; }
  std::vector<PartialMacrostate> init(const StateSet& top) const override;
  void successors(const StateSet& top, const PartialMacrostate& m, LetterId a,
                  std::vector<PartialSucc>& out) const override;
  void check(const StateSet& top, const PartialMacrostate& m) const override;
};

class CsbAlgorithm final : public PartialAlgorithm {
 public:
  using PartialAlgorithm::PartialAlgorithm;
  BlockKind kind() const override { return BlockKind::Dac; }
  std::vector<PartialMacrostate> init(const StateSet& top) const override;
  void successors(const StateSet& top, const PartialMacrostate& m, LetterId a,
                  std::vector<PartialSucc>& out) const override;
  void check(const StateSet& top, const PartialMacrostate& m) const override;
};

class RankAlgorithm final : public PartialAlgorithm {
 public:
  RankAlgorithm(BlockContext ctx, StateSet block);
  BlockKind kind() const override { return BlockKind::Nac; }
  std::vector<PartialMacrostate> init(const StateSet& top) const override;
  void successors(const StateSet& top, const PartialMacrostate& m, LetterId a,
                  std::vector<PartialSucc>& out) const override;
  void check(const StateSet& top, const PartialMacrostate& m) const override;
  void check_step(const StateSet& top, const PartialMacrostate& from, LetterId a,
                  const PartialMacrostate& to) const override;

  unsigned max_rank() const { return max_rank_; }

 private:
  unsigned max_rank_;
};

class SliceAlgorithm final : public PartialAlgorithm {
 public:
  using PartialAlgorithm::PartialAlgorithm;
  BlockKind kind() const override { return BlockKind::Nac; }
  std::vector<PartialMacrostate> init(const StateSet& top) const override;
  void successors(const StateSet& top, const PartialMacrostate& m, LetterId a,
                  std::vector<PartialSucc>& out) const override;
  void check(const StateSet& top, const PartialMacrostate& m) const override;
};

enum class NacAlgorithm { Slice, Rank };

std::unique_ptr<PartialAlgorithm> make_partial_algorithm(BlockContext ctx, const Block& block,
                                                         NacAlgorithm nac = NacAlgorithm::Slice);

}  // namespace bacomp
