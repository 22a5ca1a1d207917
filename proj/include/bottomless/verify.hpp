#pragma once

#include <vector>

#include "bottomless/dynamic_set.hpp"
#include "bottomless/planar.hpp"
#include "bottomless/sequence.hpp"

namespace bottomless {

enum class Mode {
  AllColorsPresent,  // each window of size exactly w holds all k colors
  NoRepeat,          // each window of size min(w, n) holds no color twice
};

enum class ViolationKind {
  WindowMissingColor,
  WindowRepeatedColor,
  GapTooLarge,   // some color-gap has >= w points (dual of a missing color)
  InternalGapTooSmall,
};

// One concrete failure, re-checkable: `event` is the ordinal of the event
// time (equivalently the y-prefix for swept planar sets), [lo, hi] the index
// range in the snapshot at that event, `color` the missing/repeated color.
struct Violation {
  ViolationKind kind;
  long event;
  int lo;
  int hi;
  int color;

  friend bool operator==(const Violation&, const Violation&) = default;
};

bool violation_less(const Violation& a, const Violation& b);

// Checks every snapshot the set ever attains: one check per distinct event
// time, taken after that time's departures and arrivals are applied.  Each
// snapshot between events is constant, so this covers the states immediately
// before departures (they equal the previous event's snapshot) as well as the
// states departures leave behind.  Violations come out sorted by (event,
// window, color).  `coloring` is indexed like s.points; color 0 entries count
// for no color.
std::vector<Violation> verify_windows(const DynamicPointSet& s,
                                      const std::vector<int>& coloring, int w, Mode mode,
                                      int k);

// Gap-dual of AllColorsPresent: reports a GapTooLarge violation for every
// maximal color-free run with >= w points at any event time.  Empty iff
// verify_windows(.., AllColorsPresent, ..) is empty.
std::vector<Violation> verify_gaps(const DynamicPointSet& s,
                                   const std::vector<int>& coloring, int w, int k);

// Same checks driven directly by the planar set: y-rank prefixes play the
// role of event times and contiguous x-windows the role of snapshot windows.
// Produces exactly the violations of verify_windows(sweep_reduce(s), ...)
// with colors carried along the sweep order.
std::vector<Violation> verify_rectangles(const PlanarPointSet& s,
                                         const std::vector<int>& coloring, int w,
                                         Mode mode, int k);

// Re-evaluates one reported violation against the set; true iff the failure
// reproduces.
bool recheck_violation(const DynamicPointSet& s, const std::vector<int>& coloring,
                       int w, Mode mode, int k, const Violation& v);

// Invariant audit of a (partially colored) sequence: gap size cap 3k-3 for
// every color and kind, internal gaps at least k-1.  Event is reported as -1.
std::vector<Violation> audit_sequence(const ColoredSequence& seq, int k);

// Every combinatorially distinct point set a bottomless rectangle with
// exactly w points can trap: y-rank prefixes crossed with contiguous
// x-windows of size w.  Returned as sorted point-index sets, deduplicated.
std::vector<std::vector<int>> canonical_window_sets(const PlanarPointSet& s, int w);

// Reference enumeration for small n: every rectangle [a, b] x (-inf, c] with
// a, b drawn from the x-coordinates and c from the y-coordinates, filtered to
// trapped sets of exactly w points, deduplicated.  Agrees with
// canonical_window_sets on normalized sets.
std::vector<std::vector<int>> naive_rectangle_sets(const PlanarPointSet& s, int w);

struct OracleResult {
  int min_w = 0;                 // smallest w making the property satisfiable
  std::vector<int> coloring;     // witness k-coloring for min_w, input order
};

// True iff (n, k) is within the exhaustive-search budget of oracle_min_p.
bool oracle_budget_ok(int n, int k);

// Smallest w such that some total k-coloring of s gives every bottomless
// rectangle with >= w points all k colors.  Exhaustive backtracking over the
// sweep order, pruned on the first violated window; refuses (throws
// std::invalid_argument) beyond the budget instead of approximating.
OracleResult oracle_min_p(const PlanarPointSet& s, int k);

}  // namespace bottomless
