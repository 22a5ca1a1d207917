#include "bottomless/verify.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <tuple>

namespace bottomless {

namespace {

// Window scan over one snapshot.  `present` holds point indices sorted by
// value; colors come from `coloring`.  Sliding color counts make the whole
// scan O(n + colors) plus emission cost, which is zero on clean snapshots.
void scan_windows(const std::vector<int>& present, const std::vector<int>& coloring,
                  int w, Mode mode, int k, int max_color, long event,
                  std::vector<Violation>& out) {
  const int n = static_cast<int>(present.size());
  const int w_eff = mode == Mode::NoRepeat ? std::min(w, n) : w;
  if (w_eff < 1 || n < w_eff) return;

  auto color_at = [&](int snap_idx) { return coloring[present[snap_idx]]; };

  if (mode == Mode::AllColorsPresent) {
    std::vector<int> cnt(k + 1, 0);
    int zero = k;
    auto add = [&](int c) {
      if (c >= 1 && c <= k && cnt[c]++ == 0) --zero;
    };
    auto drop = [&](int c) {
      if (c >= 1 && c <= k && --cnt[c] == 0) ++zero;
    };
    for (int i = 0; i < w_eff; ++i) add(color_at(i));
    for (int s = 0;; ++s) {
      if (zero > 0)
        for (int c = 1; c <= k; ++c)
          if (cnt[c] == 0)
            out.push_back({ViolationKind::WindowMissingColor, event, s, s + w_eff - 1, c});
      if (s + w_eff >= n) break;
      drop(color_at(s));
      add(color_at(s + w_eff));
    }
  } else {
    std::vector<int> cnt(max_color + 1, 0);
    int dup = 0;
    auto add = [&](int c) {
      if (c >= 1 && ++cnt[c] == 2) ++dup;
    };
    auto drop = [&](int c) {
      if (c >= 1 && cnt[c]-- == 2) --dup;
    };
    for (int i = 0; i < w_eff; ++i) add(color_at(i));
    for (int s = 0;; ++s) {
      if (dup > 0)
        for (int c = 1; c <= max_color; ++c)
          if (cnt[c] >= 2)
            out.push_back({ViolationKind::WindowRepeatedColor, event, s, s + w_eff - 1, c});
      if (s + w_eff >= n) break;
      drop(color_at(s));
      add(color_at(s + w_eff));
    }
  }
}

int max_color_of(const std::vector<int>& coloring) {
  int max_color = 1;
  for (int c : coloring) max_color = std::max(max_color, c);
  return max_color;
}

// Distinct event times ascending, with the indices arriving/departing at each.
struct EventTable {
  std::vector<Rat> times;
  std::vector<std::vector<int>> arrivals;
  std::vector<std::vector<int>> departures;
};

EventTable build_events(const DynamicPointSet& s) {
  std::map<Rat, std::pair<std::vector<int>, std::vector<int>>> by_time;
  for (int i = 0; i < static_cast<int>(s.points.size()); ++i) {
    const auto& p = s.points[i];
    if (p.departure && *p.departure <= p.arrival) continue;  // never present
    by_time[p.arrival].first.push_back(i);
    if (p.departure) by_time[*p.departure].second.push_back(i);
  }
  EventTable table;
  for (auto& [t, moves] : by_time) {
    table.times.push_back(t);
    table.arrivals.push_back(std::move(moves.first));
    table.departures.push_back(std::move(moves.second));
  }
  return table;
}

// Applies one event to the value-sorted presence list.
void apply_event(const DynamicPointSet& s, const EventTable& table, std::size_t e,
                 std::vector<int>& present) {
  auto value_less = [&](int a, const Rat& v) { return s.points[a].value < v; };
  for (int idx : table.departures[e]) {
    auto it = std::lower_bound(present.begin(), present.end(), s.points[idx].value,
                               value_less);
    while (it != present.end() && *it != idx) ++it;  // duplicate values
    if (it != present.end()) present.erase(it);
  }
  for (int idx : table.arrivals[e]) {
    auto it = std::lower_bound(present.begin(), present.end(), s.points[idx].value,
                               value_less);
    present.insert(it, idx);
  }
}

void check_coloring_size(const DynamicPointSet& s, const std::vector<int>& coloring) {
  if (coloring.size() != s.points.size())
    throw std::invalid_argument("coloring and point set sizes differ");
}

}  // namespace

bool violation_less(const Violation& a, const Violation& b) {
  return std::tie(a.event, a.lo, a.hi, a.color, a.kind) <
         std::tie(b.event, b.lo, b.hi, b.color, b.kind);
}

std::vector<Violation> verify_windows(const DynamicPointSet& s,
                                      const std::vector<int>& coloring, int w, Mode mode,
                                      int k) {
  if (w < 1) throw std::invalid_argument("window size must be >= 1");
  if (k < 1) throw std::invalid_argument("need k >= 1");
  check_coloring_size(s, coloring);
  EventTable table = build_events(s);
  const int max_color = max_color_of(coloring);
  std::vector<int> present;
  std::vector<Violation> out;
  for (std::size_t e = 0; e < table.times.size(); ++e) {
    apply_event(s, table, e, present);
    scan_windows(present, coloring, w, mode, k, max_color, static_cast<long>(e), out);
  }
  return out;
}

std::vector<Violation> verify_gaps(const DynamicPointSet& s,
                                   const std::vector<int>& coloring, int w, int k) {
  if (w < 1) throw std::invalid_argument("window size must be >= 1");
  if (k < 1) throw std::invalid_argument("need k >= 1");
  check_coloring_size(s, coloring);
  EventTable table = build_events(s);
  std::vector<int> present;
  std::vector<Violation> out;
  for (std::size_t e = 0; e < table.times.size(); ++e) {
    apply_event(s, table, e, present);
    const int n = static_cast<int>(present.size());
    for (int c = 1; c <= k; ++c) {
      int run_start = 0;
      for (int i = 0; i <= n; ++i) {
        if (i < n && coloring[present[i]] != c) continue;
        int run_len = i - run_start;  // maximal c-free run [run_start, i-1]
        if (run_len >= w)
          out.push_back({ViolationKind::GapTooLarge, static_cast<long>(e), run_start,
                         i - 1, c});
        run_start = i + 1;
      }
    }
  }
  std::sort(out.begin(), out.end(), violation_less);
  return out;
}

std::vector<Violation> verify_rectangles(const PlanarPointSet& s,
                                         const std::vector<int>& coloring, int w,
                                         Mode mode, int k) {
  if (w < 1) throw std::invalid_argument("window size must be >= 1");
  if (k < 1) throw std::invalid_argument("need k >= 1");
  if (coloring.size() != s.points.size())
    throw std::invalid_argument("coloring and point set sizes differ");
  if (!s.normalized)
    throw std::invalid_argument("verify_rectangles needs a normalized set");

  const int max_color = max_color_of(coloring);
  std::vector<int> present;  // input indices, sorted by x
  std::vector<Violation> out;
  long event = 0;
  for (int idx : sweep_order(s)) {
    auto it = std::lower_bound(present.begin(), present.end(), idx,
                               [&](int a, int b) { return s.points[a].x < s.points[b].x; });
    present.insert(it, idx);
    scan_windows(present, coloring, w, mode, k, max_color, event, out);
    ++event;
  }
  return out;
}

bool recheck_violation(const DynamicPointSet& s, const std::vector<int>& coloring,
                       int w, Mode mode, int k, const Violation& v) {
  check_coloring_size(s, coloring);
  EventTable table = build_events(s);
  if (v.event < 0 || v.event >= static_cast<long>(table.times.size())) return false;
  std::vector<int> present;
  for (std::size_t e = 0; e <= static_cast<std::size_t>(v.event); ++e)
    apply_event(s, table, e, present);

  const int n = static_cast<int>(present.size());
  if (v.lo < 0 || v.hi >= n || v.lo > v.hi) return false;
  switch (v.kind) {
    case ViolationKind::WindowMissingColor: {
      if (mode != Mode::AllColorsPresent) return false;
      if (v.color < 1 || v.color > k) return false;
      if (v.hi - v.lo + 1 != w) return false;
      for (int i = v.lo; i <= v.hi; ++i)
        if (coloring[present[i]] == v.color) return false;
      return true;
    }
    case ViolationKind::WindowRepeatedColor: {
      if (mode != Mode::NoRepeat) return false;
      if (v.hi - v.lo + 1 != std::min(w, n)) return false;
      int hits = 0;
      for (int i = v.lo; i <= v.hi; ++i)
        if (coloring[present[i]] == v.color) ++hits;
      return hits >= 2;
    }
    case ViolationKind::GapTooLarge: {
      if (v.color < 1 || v.color > k) return false;
      if (v.hi - v.lo + 1 < w) return false;
      for (int i = v.lo; i <= v.hi; ++i)
        if (coloring[present[i]] == v.color) return false;
      return true;
    }
    default:
      throw std::invalid_argument("violation kind is not a dynamic-set check");
  }
}

std::vector<Violation> audit_sequence(const ColoredSequence& seq, int k) {
  std::vector<Violation> out;
  const int cap = 3 * k - 3;
  for (int c = 1; c <= k; ++c) {
    for (const Gap& g : seq.gaps(c)) {
      if (g.count > cap)
        out.push_back({ViolationKind::GapTooLarge, -1, g.lo, g.hi, c});
      if (g.kind == GapKind::Internal && g.count < k - 1)
        out.push_back({ViolationKind::InternalGapTooSmall, -1, g.lo, g.hi, c});
    }
  }
  return out;
}

std::vector<std::vector<int>> canonical_window_sets(const PlanarPointSet& s, int w) {
  if (!s.normalized)
    throw std::invalid_argument("canonical_window_sets needs a normalized set");
  std::set<std::vector<int>> families;
  std::vector<int> present;
  for (int idx : sweep_order(s)) {
    auto it = std::lower_bound(present.begin(), present.end(), idx,
                               [&](int a, int b) { return s.points[a].x < s.points[b].x; });
    present.insert(it, idx);
    const int n = static_cast<int>(present.size());
    for (int st = 0; st + w <= n; ++st) {
      std::vector<int> ids(present.begin() + st, present.begin() + st + w);
      std::sort(ids.begin(), ids.end());
      families.insert(std::move(ids));
    }
  }
  return {families.begin(), families.end()};
}

std::vector<std::vector<int>> naive_rectangle_sets(const PlanarPointSet& s, int w) {
  if (!s.normalized)
    throw std::invalid_argument("naive_rectangle_sets needs a normalized set");
  std::vector<Rat> xs, ys;
  for (const auto& p : s.points) {
    xs.push_back(p.x);
    ys.push_back(p.y);
  }
  std::sort(xs.begin(), xs.end());
  std::sort(ys.begin(), ys.end());
  std::set<std::vector<int>> families;
  for (const Rat& c : ys) {
    for (std::size_t ai = 0; ai < xs.size(); ++ai) {
      for (std::size_t bi = ai; bi < xs.size(); ++bi) {
        BottomlessRect rect{xs[ai], xs[bi], c};
        std::vector<int> ids;
        for (int i = 0; i < static_cast<int>(s.points.size()); ++i)
          if (rect_contains(rect, s.points[i])) ids.push_back(i);
        if (static_cast<int>(ids.size()) == w) families.insert(std::move(ids));
      }
    }
  }
  return {families.begin(), families.end()};
}

bool oracle_budget_ok(int n, int k) {
  if (k <= 1) return n <= 20;
  if (k == 2) return n <= 14;
  if (k == 3) return n <= 10;
  return n <= 8;
}

namespace {

struct OracleSearch {
  const PlanarPointSet& s;
  int k;
  int w;
  std::vector<int> order;           // arrival order (by y)
  std::vector<int> xpos;            // insert position of arrival j in its prefix
  std::vector<int> present;         // arrival ranks, sorted by x
  std::vector<int> chosen;          // color per arrival rank
  std::vector<int> witness;

  bool windows_ok(int j) {
    // All windows of size w in the current prefix that contain the point
    // just placed; earlier windows were checked at earlier depths.
    const int n = j + 1;
    if (n < w) return true;
    int p = xpos[j];
    for (int st = std::max(0, p - w + 1); st <= std::min(p, n - w); ++st) {
      unsigned mask = 0;
      for (int i = st; i < st + w; ++i) mask |= 1u << chosen[present[i]];
      if (mask != (1u << (k + 1)) - 2u) return false;  // bits 1..k
    }
    return true;
  }

  bool descend(int j) {
    if (j == static_cast<int>(order.size())) {
      witness = chosen;
      return true;
    }
    present.insert(present.begin() + xpos[j], j);
    // Color permutations are interchangeable; pin the first point to color 1.
    const int max_c = j == 0 ? 1 : k;
    for (int c = 1; c <= max_c; ++c) {
      chosen[j] = c;
      if (windows_ok(j) && descend(j + 1)) return true;
    }
    chosen[j] = 0;
    present.erase(present.begin() + xpos[j]);
    return false;
  }
};

}  // namespace

OracleResult oracle_min_p(const PlanarPointSet& s, int k) {
  if (k < 1) throw std::invalid_argument("need k >= 1");
  if (!s.normalized) throw std::invalid_argument("oracle needs a normalized set");
  const int n = static_cast<int>(s.points.size());
  if (!oracle_budget_ok(n, k))
    throw std::invalid_argument("instance exceeds the exhaustive oracle budget");

  std::vector<int> order = sweep_order(s);
  std::vector<int> xpos(n);
  {
    std::vector<Rat> xs;
    for (int j = 0; j < n; ++j) {
      const Rat& x = s.points[order[j]].x;
      auto it = std::lower_bound(xs.begin(), xs.end(), x);
      xpos[j] = static_cast<int>(it - xs.begin());
      xs.insert(it, x);
    }
  }

  for (int w = 1;; ++w) {
    OracleSearch search{s, k, w, order, xpos, {}, std::vector<int>(n, 0), {}};
    if (search.descend(0)) {
      OracleResult result;
      result.min_w = w;
      result.coloring.assign(n, 0);
      for (int j = 0; j < n; ++j) result.coloring[order[j]] = search.witness[j];
      return result;
    }
    if (w > n) throw std::logic_error("oracle failed beyond the vacuous window size");
  }
}

}  // namespace bottomless
