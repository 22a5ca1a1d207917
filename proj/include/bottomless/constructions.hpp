#pragma once

#include <functional>
#include <utility>
#include <vector>

#include "bottomless/planar.hpp"
#include "bottomless/set_system.hpp"

namespace bottomless {

// Recursive family of horizontal segments encoding the p-regular tree with p
// levels.  Block B^1 is p sibling segments stacked above each other sharing
// their right endpoint, the i-th spanning x in [-i/p, 0] at height i.  Block
// B^{j+1} adds, above each base segment i, a shrunken copy of B^j strictly
// inside the rectangle with bottom-left (-i/p, i) and top-right
// (-(i-1)/p, i+1); the base segments of that copy are the children of base
// segment i.  A root segment at y = -1 spanning [-1, 0] sits below
// everything.  All coordinates are multiplied by p^p, which clears every
// denominator the recursion produces, so the stored segments are integral.
//
//   y                                      Layout for p = 2 (pre-scaling):
//   2  ----------------v2                    siblings v1, v2 end at x = 0,
//   1       -----v1                          the copies (none for p = 2)
//  -1  ----------------root                  would nest above v1 and v2.
//     -1       -1/2    0   x
//
// Two facts hold by construction and are re-verified by tree_self_check:
//   * the ancestors of a segment are exactly the segments strictly below it
//     on the vertical line through its left endpoint;
//   * each sibling group is contiguous in y among the segments crossing the
//     vertical line through its shared right endpoint.
struct TreeVertex {
  int id;       // preorder; 0 is the root
  int parent;   // -1 for the root
  int depth;    // 0 for the root
  HSegment seg; // integer-scaled coordinates
};

struct TreeSystem {
  int p = 0;
  std::vector<TreeVertex> vertices;
  // Ground elements are vertex ids.  Sibling sets (children of one vertex)
  // come first, then root-to-leaf paths; every member set has p elements.
  SetSystem sets;
  int sibling_set_count = 0;
  int path_set_count = 0;
};

// Supported range: 2 <= p <= 4 (vertex count grows as (p^p - 1)/(p - 1)).
TreeSystem build_tree_segments(int p);

// True iff the elements of `member_ids` are consecutive in y-order among all
// segments whose x-extent contains x.
bool is_consecutive_at(const TreeSystem& ts, const std::vector<int>& member_ids,
                       const Rat& x);

// Scans candidate vertical lines (all segment endpoints, ascending) and
// returns the first where the set is consecutive.  Every sibling set and
// every root-to-leaf path of a well-formed tree has such a line, so finding
// none is a structural defect and throws std::logic_error.
Rat consecutive_at_some_time(const TreeSystem& ts,
                             const std::vector<int>& member_ids);

// Structural audit: cardinalities ((p^p-1)/(p-1) vertices, (p^{p-1}-1)/(p-1)
// sibling sets, p^{p-1} paths, every set of size p), ancestor geometry, and a
// consecutiveness witness for every member set.  Throws std::logic_error on
// any failure.
void tree_self_check(const TreeSystem& ts);

// Segment (x_lo, x_hi, y) reread as the corner {a<=x<=b, y<=c, z>=c}.
std::vector<Corner> tree_to_corners(const TreeSystem& ts);

// Query point in corner space for one member set: (witness x, min y, max y).
// The corners containing it are exactly the set's members.
struct CornerQuery {
  Rat x;
  Rat y;
  Rat z;
  std::vector<int> expected;  // vertex ids, sorted
};

std::vector<CornerQuery> corner_queries(const TreeSystem& ts);

// Exhaustively checks (p <= 3): for every 2-coloring of the corners some
// query point is covered by exactly p corners, all of one color.  Returns the
// number of colorings checked; throws std::logic_error if any coloring lacks
// such a point.
std::uint64_t check_corner_cover(const TreeSystem& ts);

// Lower-bound set P(n, a): an ascending left chain L at even heights, a
// bottom row B at y = 0, and a descending right chain R at odd heights.
//   L = { (i-n,     2i)      : 1 <= i <= n }
//   B = { (i,       0)       : 1 <= i <= a }
//   R = { (n+a+i,   2n+1-2i) : 1 <= i <= n }
// Emitted in that order.  Note B shares y = 0 between its points, so the set
// needs perturbation before sweeping.
PlanarPointSet build_lower_bound_set(int n, int a);

// Structural audit: cardinalities and the strict y-interleaving of L and R.
void lower_bound_self_check(const PlanarPointSet& s, int n, int a);

struct SuggestedParams {
  long long a;
  long long b;  // claimed rainbow threshold; vacuous unless k is large
};

// Parameter suggestion a = floor(0.655 k), b = floor(1.677 k - 2.5),
// computed exactly over integers.
SuggestedParams suggested_params(long long k);

// Witness set of 2k-1 points whose pairs all share a bottomless rectangle
// trapping at most k points:
//   { (i, 2i) : 0 <= i <= k-1 }  and  { (2k-i, 2i-1) : 1 <= i <= k-1 }.
PlanarPointSet build_ck_witness(int k);

// Audit of the pairwise property above (cost grows with k^3; intended for
// k <= 64).  Throws std::logic_error on failure.
void ck_witness_self_check(const PlanarPointSet& s, int k);

// Adversary against online 2-coloring strategies.  Every insertion happens
// at the boundary between the red prefix run and the blue suffix run, so
// whichever color the strategy answers extends one of the runs and the
// colors always read red^i blue^j.  After n steps max(i, j) >= ceil(n/2).
inline constexpr int kRed = 1;
inline constexpr int kBlue = 2;

struct AdversaryState {
  std::vector<int> colors;  // rank order; always matches red^i blue^j
  int red_run = 0;
  int blue_run = 0;
  // (rank position at insertion time, color) per step.
  std::vector<std::pair<int, int>> transcript;
};

// Maps the visible colored sequence to the color of the newly placed point.
using Strategy = std::function<int(const std::vector<int>&)>;

// One insertion: the new point goes between the runs, the strategy colors
// it.  Throws std::invalid_argument if the strategy answers anything but
// kRed/kBlue and std::logic_error if the run invariant ever breaks.
void adversary_step(AdversaryState& state, const Strategy& strategy);

int max_mono_run(const std::vector<int>& colors);
bool run_invariant_holds(const std::vector<int>& colors);

}  // namespace bottomless
