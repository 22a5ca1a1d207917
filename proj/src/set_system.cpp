#include "bottomless/set_system.hpp"

#include <stdexcept>

namespace bottomless {

namespace {

bool proper(const SetSystem& sys, const std::vector<int>& colors) {
  for (const auto& set : sys.sets) {
    if (set.empty()) return false;  // empty set is monochromatic vacuously
    bool mono = true;
    for (std::size_t i = 1; i < set.size(); ++i)
      if (colors[set[i]] != colors[set[0]]) {
        mono = false;
        break;
      }
    if (mono) return false;
  }
  return true;
}

bool backtrack(const SetSystem& sys, std::vector<int>& colors, int next,
               std::uint64_t& examined) {
  if (next == sys.ground_size) {
    ++examined;
    return proper(sys, colors);
  }
  for (int c = 1; c <= 2; ++c) {
    colors[next] = c;
    bool dead = false;
    // Prune on any fully-assigned monochromatic set.
    for (const auto& set : sys.sets) {
      bool assigned = true, mono = true;
      for (int e : set) {
        if (colors[e] == 0) {
          assigned = false;
          break;
        }
        if (colors[e] != colors[set[0]]) mono = false;
      }
      if (assigned && mono && !set.empty()) {
        dead = true;
        break;
      }
    }
    if (!dead && backtrack(sys, colors, next + 1, examined)) return true;
  }
  colors[next] = 0;
  return false;
}

}  // namespace

TwoColorResult check_set_system_2colorable(const SetSystem& sys) {
  const int n = sys.ground_size;
  if (n < 0) throw std::invalid_argument("negative ground size");
  for (const auto& set : sys.sets)
    for (int e : set)
      if (e < 0 || e >= n) throw std::invalid_argument("set element out of range");

  TwoColorResult result;
  if (n <= 24) {
    result.exhaustive = true;
    std::vector<int> colors(n, 1);
    const std::uint64_t total = n >= 64 ? 0 : (std::uint64_t{1} << n);
    for (std::uint64_t mask = 0; mask < total; ++mask) {
      ++result.examined;
      // High bit = element 0, so low masks try color 2 on high elements
      // first and the first proper coloring found is lexicographically
      // smallest in element order.
      for (int i = 0; i < n; ++i)
        colors[i] = ((mask >> (n - 1 - i)) & 1u) ? 2 : 1;
      if (proper(sys, colors)) {
        result.coloring = colors;
        return result;
      }
    }
    return result;
  }

  result.exhaustive = false;
  std::vector<int> colors(n, 0);
  if (backtrack(sys, colors, 0, result.examined)) result.coloring = colors;
  return result;
}

}  // namespace bottomless
