#include "bottomless/planar.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

#include "bottomless/colorer.hpp"

namespace bottomless {

bool rect_contains(const BottomlessRect& r, const PlanarPoint& p) {
  return r.a <= p.x && p.x <= r.b && p.y <= r.c;
}

bool corner_contains(const Corner& c, const Rat& x, const Rat& y, const Rat& z) {
  return c.a <= x && x <= c.b && y <= c.c && c.c <= z;
}

bool segments_intersect(const Rat& x, const Rat& y, const Rat& z, const HSegment& h) {
  return h.x_lo <= x && x <= h.x_hi && y <= h.y && h.y <= z;
}

std::pair<bool, bool> corner_segment_equiv(const Corner& c, const Rat& x, const Rat& y,
                                           const Rat& z) {
  return {corner_contains(c, x, y, z), segments_intersect(x, y, z, {c.a, c.b, c.c})};
}

namespace {

bool axis_has_duplicates(const PlanarPointSet& s, bool use_x) {
  std::vector<Rat> keys;
  keys.reserve(s.points.size());
  for (const auto& p : s.points) keys.push_back(use_x ? p.x : p.y);
  std::sort(keys.begin(), keys.end());
  return std::adjacent_find(keys.begin(), keys.end()) != keys.end();
}

}  // namespace

bool is_normalized(const PlanarPointSet& s) {
  return !axis_has_duplicates(s, true) && !axis_has_duplicates(s, false);
}

PlanarPointSet normalize(PlanarPointSet s, TiePolicy policy) {
  if (policy == TiePolicy::Reject) {
    if (!is_normalized(s))
      throw std::invalid_argument("duplicate coordinates; normalization not requested");
    s.normalized = true;
    return s;
  }
  // Reuse the dynamic-set perturbation by treating x as value and y as
  // arrival; ties break by input index on each axis independently.
  DynamicPointSet d;
  for (const auto& p : s.points) d.points.push_back({p.x, p.y, std::nullopt});
  d = normalize(std::move(d), TiePolicy::Perturb);
  for (std::size_t i = 0; i < s.points.size(); ++i) {
    s.points[i].x = d.points[i].value;
    s.points[i].y = d.points[i].arrival;
  }
  s.normalized = true;
  return s;
}

std::vector<int> sweep_order(const PlanarPointSet& s) {
  std::vector<int> order(s.points.size());
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return s.points[a].y < s.points[b].y; });
  return order;
}

Rat y_rank_time(const PlanarPointSet& s, const Rat& c) {
  long long below = 0;
  for (const auto& p : s.points)
    if (p.y <= c) ++below;
  return Rat(below - 1);
}

DynamicPointSet sweep_reduce(const PlanarPointSet& s) {
  if (!s.normalized) throw std::invalid_argument("sweep_reduce needs a normalized set");
  DynamicPointSet out;
  out.insertion_only = true;
  long long rank = 0;
  for (int idx : sweep_order(s)) {
    out.points.push_back({s.points[idx].x, Rat(rank), std::nullopt});
    ++rank;
  }
  return out;
}

std::vector<int> color_bottomless(const PlanarPointSet& s, int k) {
  if (!s.normalized)
    throw std::invalid_argument("color_bottomless needs a normalized set");
  SemiOnlineColorer colorer(k);
  std::vector<int> order = sweep_order(s);
  for (int idx : order) colorer.insert(s.points[idx].x);
  ColoredSequence done = colorer.finalize();

  // done is sorted by x, so zipping against the input indices in x-order
  // recovers the per-point colors.
  std::vector<int> by_x(s.points.size());
  std::iota(by_x.begin(), by_x.end(), 0);
  std::sort(by_x.begin(), by_x.end(),
            [&](int a, int b) { return s.points[a].x < s.points[b].x; });
  std::vector<int> colors(s.points.size(), kUncolored);
  for (int i = 0; i < done.size(); ++i) colors[by_x[i]] = done.color(i);
  return colors;
}

}  // namespace bottomless
