#pragma once

#include <vector>

#include "bottomless/rational.hpp"

namespace bottomless {

// Uncolored points carry color 0; real colors are 1..k.
inline constexpr int kUncolored = 0;

struct IndexRange {
  int lo;
  int hi;  // inclusive; lo > hi encodes the empty range
};

// Contiguous index windows [s, s+w-1] over a sequence of n points, left to
// right.  w < 1 throws.
std::vector<IndexRange> windows(int n, int w);

enum class GapKind { First, Internal, Last, WholeLine };

// Maximal run of consecutive points containing no point of some color i.
// count == hi - lo + 1 (0 when lo > hi).  First = before the first occurrence
// of i, Last = after the last one, WholeLine = i does not occur at all.
struct Gap {
  GapKind kind;
  int lo;
  int hi;
  int count;
};

// Ordered point sequence with a (partial) coloring and a per-color occurrence
// index.  Positions are strictly increasing; inserting a duplicate throws.
// Colors are write-once: set_color on an already-colored index throws.
class ColoredSequence {
 public:
  explicit ColoredSequence(int k);

  int k() const { return k_; }
  int size() const { return static_cast<int>(colors_.size()); }
  const Rat& position(int idx) const { return positions_[idx]; }
  int color(int idx) const { return colors_[idx]; }
  const std::vector<int>& colors() const { return colors_; }
  const std::vector<int>& occurrences(int color) const;

  // Inserts an uncolored point, returns its index.  All later indices shift
  // up by one, including the entries of every occurrence list.
  int insert(const Rat& value);

  void set_color(int idx, int color);

  // All maximal color-free runs for color i, left to right.  When i occurs,
  // the First and Last gaps are always reported, possibly with count 0;
  // otherwise a single WholeLine gap covers everything (count == size()).
  std::vector<Gap> gaps(int color) const;

  // Audit: occurrence lists sorted, consistent with colors_, and for every
  // color the gap counts sum to size() - occ[color].size().
  bool occ_consistent() const;

 private:
  int k_;
  std::vector<Rat> positions_;
  std::vector<int> colors_;
  std::vector<std::vector<int>> occ_;  // occ_[c-1] for color c
};

}  // namespace bottomless
