#pragma once

#include <cstdint>
#include <optional>
#include <vector>

namespace bottomless {

// Finite set system: ground elements 0..ground_size-1 and a family of
// member sets over them.
struct SetSystem {
  int ground_size = 0;
  std::vector<std::vector<int>> sets;
};

struct TwoColorResult {
  // Proper 2-coloring (values 1/2, no member set monochromatic), if one exists.
  std::optional<std::vector<int>> coloring;
  std::uint64_t examined = 0;  // candidate colorings inspected
  bool exhaustive = false;     // full enumeration vs pruned backtracking
};

// Searches for a proper 2-coloring.  Ground sets of at most 24 elements are
// enumerated exhaustively (all 2^n assignments, in an order that tries color 1
// on low elements first); larger systems fall back to backtracking with
// monochromatic-set pruning.
TwoColorResult check_set_system_2colorable(const SetSystem& sys);

}  // namespace bottomless
