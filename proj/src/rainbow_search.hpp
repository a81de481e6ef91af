#pragma once

#include <array>
#include <functional>

#include "bitgraph.hpp"
#include "rainbowdom/labeling.hpp"

namespace rainbowdom::detail {

// Partial labeling. Decided vertices carry a fixed label; undecided ones
// carry the colors they may still receive.
struct LabelState {
  std::array<std::int16_t, kSolverCapacity> label{};  // -1 while undecided
  std::array<std::uint8_t, kSolverCapacity> allowed{};
  std::array<std::uint8_t, kSolverCapacity> seen{};  // union over decided neighbours
  Mask undecided = 0;
  Mask forbid_full = 0;  // undecided vertices that may not take label [k]
  int weight = 0;
};

class RainbowSearch {
 public:
  using Visitor = std::function<bool(const LabelState&)>;

  RainbowSearch(const BitGraph& g, int k, NodeCounter& counter);

  LabelState initial_state() const;
  void assign(LabelState& s, int v, std::uint8_t label) const;

  void require_all_colors(bool on) { require_all_colors_ = on; }

  /// Depth-first search for completions of `s` with weight <= max_weight.
  /// `visit` is called on each leaf (undecided vertices read as empty);
  /// returning true stops the search. Returns true iff stopped.
  bool search(const LabelState& s, int max_weight, const Visitor& visit);

  /// Ceiling of the fractional bound at `s`, or -1 if infeasible.
  int lower_bound(const LabelState& s) const;

  RainbowLabeling to_labeling(const LabelState& s) const;

 private:
  Mask unsatisfied(const LabelState& s) const;
  Mask usable(const LabelState& s) const;
  double bound(const LabelState& s, Mask unsat, Mask usable_mask) const;
  bool dfs(const LabelState& s, int max_weight);
  bool branch_on_neighbours(LabelState s, int v, int max_weight);
  bool branch_missing_color(LabelState s, int max_weight);

  const BitGraph& g_;
  int k_;
  std::uint8_t full_;
  NodeCounter& counter_;
  bool require_all_colors_ = false;
  const Visitor* visit_ = nullptr;
};

}  // namespace rainbowdom::detail
