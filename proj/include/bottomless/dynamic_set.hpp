#pragma once

#include <optional>
#include <vector>

#include "bottomless/rational.hpp"

namespace bottomless {

// One point on the line: where it sits, when it appears, when it goes away.
// Presence is half-open: the point exists at time t iff arrival <= t < departure.
// No departure means the point never leaves.
struct DynamicPoint {
  Rat value;
  Rat arrival;
  std::optional<Rat> departure;  // nullopt = stays forever
};

struct DynamicPointSet {
  std::vector<DynamicPoint> points;
  bool insertion_only = false;  // true when no point ever departs
};

enum class TiePolicy { Reject, Perturb };

// True iff all values are pairwise distinct and all arrivals are pairwise
// distinct (departures may tie).
bool is_normalized(const DynamicPointSet& s);

// Enforces distinct values and distinct arrival times.  Perturb shifts each
// member of a tied group by (input-index rank within the group) * delta where
// delta is half the smallest positive gap between distinct keys divided by n,
// so relative order against all other keys is preserved and ties break by
// input order.  Reject throws std::invalid_argument when any tie exists.
DynamicPointSet normalize(DynamicPointSet s, TiePolicy policy);

// Values present at time t (arrival <= t < departure), sorted ascending.
std::vector<Rat> snapshot(const DynamicPointSet& s, const Rat& t);

// Same membership rule, but yields indices into s.points sorted by value.
// The verifier uses this to look colors up per point.
std::vector<int> snapshot_indices(const DynamicPointSet& s, const Rat& t);

}  // namespace bottomless
