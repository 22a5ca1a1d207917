#pragma once

#include <vector>

#include "bottomless/sequence.hpp"

namespace bottomless {

struct RepairEntry {
  int step;   // 1-based insertion count when the repair fired
  int index;  // sequence index that received the color, at that moment
  int color;
};

// Maintains a k-coloring of a growing point sequence so that every run of
// 3k-2 consecutive points contains all k colors.  Points arrive uncolored;
// whenever some color's gap reaches 3k-2 points the gap is repaired by
// coloring one of its middle points.  Two invariants hold after every insert:
//   (a) every gap of every color has at most 3k-3 points;
//   (b) every Internal gap of a color that occurs has at least k-1 points.
// Both are re-checked after each insertion and a breach throws; the checks
// run in release builds too.
//
// Repair of a gap with exactly 3k-2 points, labeled left to right
//   l_1 .. l_{k-1}  m_1 .. m_k  r_1 .. r_{k-1}:
// invariant (b) guarantees no other color occurs twice among m_1..m_k, so at
// least one middle point is uncolored; the leftmost such point gets the gap's
// color.  The split leaves two gaps of k-1..2k-2 points each, restoring both
// invariants.  Scan order is deterministic: colors ascending, gaps left to
// right, repeated to fixpoint.
class SemiOnlineColorer {
 public:
  explicit SemiOnlineColorer(int k);

  void insert(const Rat& value);

  const ColoredSequence& sequence() const { return seq_; }
  const std::vector<RepairEntry>& repair_log() const { return repair_log_; }
  int steps() const { return step_; }

  // Total coloring: every still-uncolored point becomes color 1.  Windows of
  // 3k-2 points already contain all k colors among their colored points, and
  // adding occurrences of a color never removes one, so the result verifies.
  ColoredSequence finalize() const;

  // Invariant audit used after every insertion; public so tests and the
  // acceptance suite can call it on demand.
  void check_invariants() const;

 private:
  bool repair_one();

  int k_;
  int step_ = 0;
  ColoredSequence seq_;
  std::vector<RepairEntry> repair_log_;
};

// Immediate coloring with 2k-1 colors: every run of at most k consecutive
// points gets pairwise distinct colors.  Each arriving point takes the
// smallest color absent among its k-1 nearest left and k-1 nearest right
// neighbors; 2k-2 neighbors cannot exhaust 2k-1 colors.
class OnlineColorer {
 public:
  explicit OnlineColorer(int k);

  void insert(const Rat& value);

  // Sequence over 2k-1 colors with no uncolored entries.
  const ColoredSequence& sequence() const { return seq_; }
  int window_k() const { return k_; }

 private:
  int k_;
  ColoredSequence seq_;
};

}  // namespace bottomless
