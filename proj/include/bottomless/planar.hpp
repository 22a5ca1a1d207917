#pragma once

#include <utility>
#include <vector>

#include "bottomless/dynamic_set.hpp"

namespace bottomless {

struct PlanarPoint {
  Rat x;
  Rat y;
};

struct PlanarPointSet {
  std::vector<PlanarPoint> points;
  bool normalized = false;  // all x distinct and all y distinct
};

// Axis-parallel rectangle with its bottom edge at y = -infinity:
// { (x, y) : a <= x <= b, y <= c }.  Boundaries are closed.
struct BottomlessRect {
  Rat a;
  Rat b;
  Rat c;
};

// Three-dimensional corner { (x, y, z) : a <= x <= b, y <= c, z >= c }.
struct Corner {
  Rat a;
  Rat b;
  Rat c;
};

// Horizontal segment from (x_lo, y) to (x_hi, y); endpoints included.
struct HSegment {
  Rat x_lo;
  Rat x_hi;
  Rat y;
};

bool rect_contains(const BottomlessRect& r, const PlanarPoint& p);

bool corner_contains(const Corner& c, const Rat& x, const Rat& y, const Rat& z);

// Vertical segment { (x, t) : y <= t <= z } (empty when y > z) against a
// horizontal segment; closed on both.
bool segments_intersect(const Rat& x, const Rat& y, const Rat& z, const HSegment& h);

// Corner membership of (x, y, z) and the equivalent segment intersection with
// the horizontal segment (a, c)-(b, c).  The two booleans are always equal;
// returning both lets tests check each side independently.
std::pair<bool, bool> corner_segment_equiv(const Corner& c, const Rat& x, const Rat& y,
                                           const Rat& z);

bool is_normalized(const PlanarPointSet& s);
PlanarPointSet normalize(PlanarPointSet s, TiePolicy policy);

// Time at which the snapshot of sweep_reduce(s) captures exactly the points
// with y-coordinate <= c: the y-rank of the highest such point (-1 = none).
Rat y_rank_time(const PlanarPointSet& s, const Rat& c);

// Sweep reduction: planar point (x, y) becomes a line point at value x that
// arrives at time (rank of y) and never departs.  A bottomless rectangle
// [a, b] x (-inf, c] then traps exactly the snapshot points with value in
// [a, b] at time y_rank_time(c).  Result points are in arrival order, so
// result.points[r] is the planar point with y-rank r.  Requires s.normalized.
DynamicPointSet sweep_reduce(const PlanarPointSet& s);

// Map from arrival order back to s.points order: inverse[r] = input index of
// the planar point with y-rank r.
std::vector<int> sweep_order(const PlanarPointSet& s);

// Colors s with k colors so that every bottomless rectangle containing at
// least 3k-2 points contains all k colors: feeds the sweep order through
// SemiOnlineColorer and finalizes.  Returned colors follow s.points order.
std::vector<int> color_bottomless(const PlanarPointSet& s, int k);

}  // namespace bottomless
