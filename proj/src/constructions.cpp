#include "bottomless/constructions.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>

#include "bottomless/sequence.hpp"

namespace bottomless {

namespace {

bool integral(const Rat& r) {
  return boost::multiprecision::denominator(r) == 1;
}

struct Rect {
  Rat xa, xb, ya, yb;
};

// Emits vertices in preorder (each sibling immediately followed by its
// subtree), which coincides with ascending y.
class TreeBuilder {
 public:
  explicit TreeBuilder(int p) : p_(p) {}

  std::vector<TreeVertex> run() {
    add(-1, 0, Rat(-1), Rat(0), Rat(-1));
    for (int i = 1; i <= p_; ++i) {
      int id = add(0, 1, Rat(-i, p_), Rat(0), Rat(i));
      if (p_ >= 3)
        place_block(id, 2,
                    {Rat(-i, p_), Rat(-(i - 1), p_), Rat(i), Rat(i + 1)});
    }
    return std::move(vertices_);
  }

 private:
  int add(int parent, int depth, Rat x_lo, Rat x_hi, Rat y) {
    int id = static_cast<int>(vertices_.size());
    vertices_.push_back(
        {id, parent, depth, {std::move(x_lo), std::move(x_hi), std::move(y)}});
    return id;
  }

  // Sibling block strictly inside r: shared right endpoint inset by width/p,
  // left endpoints stepping down by width*(p-2)/p^2, heights starting at
  // height/p above the floor and stepping by height*(p-2)/p^2.  Sibling j's
  // subtree goes into [L_j, L_{j-1}] x [y_j, y_{j+1}], which lies inside r
  // with a margin of width/p resp. height/p on every side.
  void place_block(int parent, int depth, const Rect& r) {
    Rat w = r.xb - r.xa;
    Rat h = r.yb - r.ya;
    Rat x1 = r.xb - w / p_;
    Rat xstep = w * (p_ - 2) / (p_ * p_);
    Rat ystep = h * (p_ - 2) / (p_ * p_);
    Rat y1 = r.ya + h / p_;
    for (int j = 1; j <= p_; ++j) {
      Rat lj = x1 - j * xstep;
      Rat yj = y1 + (j - 1) * ystep;
      int id = add(parent, depth, lj, x1, yj);
      if (depth < p_ - 1)
        place_block(id, depth + 1,
                    {lj, x1 - (j - 1) * xstep, yj, y1 + j * ystep});
    }
  }

  int p_;
  std::vector<TreeVertex> vertices_;
};

long long expected_vertices(int p) {
  long long total = 0, pw = 1;
  for (int d = 0; d < p; ++d) {
    total += pw;
    pw *= p;
  }
  return total;
}

long long pow_ll(int base, int exp) {
  long long r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

std::vector<int> ancestors_of(const TreeSystem& ts, int v) {
  std::vector<int> out;
  for (int u = ts.vertices[v].parent; u != -1; u = ts.vertices[u].parent)
    out.push_back(u);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

TreeSystem build_tree_segments(int p) {
  if (p < 2 || p > 4)
    throw std::invalid_argument("tree parameter must be between 2 and 4");

  TreeSystem ts;
  ts.p = p;
  ts.vertices = TreeBuilder(p).run();

  int n = static_cast<int>(ts.vertices.size());
  if (n != expected_vertices(p))
    throw std::logic_error("tree vertex count mismatch");

  Rat scale(pow_ll(p, p));
  for (auto& v : ts.vertices) {
    v.seg.x_lo *= scale;
    v.seg.x_hi *= scale;
    v.seg.y *= scale;
    if (!integral(v.seg.x_lo) || !integral(v.seg.x_hi) || !integral(v.seg.y))
      throw std::logic_error("tree coordinates are not integral after scaling");
  }

  ts.sets.ground_size = n;
  std::vector<std::vector<int>> kids(n);
  for (int v = 1; v < n; ++v) kids[ts.vertices[v].parent].push_back(v);
  for (int v = 0; v < n; ++v) {
    if (kids[v].empty()) continue;
    ts.sets.sets.push_back(kids[v]);
    ++ts.sibling_set_count;
  }
  for (int v = 0; v < n; ++v) {
    if (ts.vertices[v].depth != p - 1) continue;
    std::vector<int> path;
    for (int u = v; u != -1; u = ts.vertices[u].parent) path.push_back(u);
    std::reverse(path.begin(), path.end());
    ts.sets.sets.push_back(std::move(path));
    ++ts.path_set_count;
  }
  return ts;
}

bool is_consecutive_at(const TreeSystem& ts, const std::vector<int>& member_ids,
                       const Rat& x) {
  if (member_ids.empty()) return true;
  int n = static_cast<int>(ts.vertices.size());
  std::vector<int> want = member_ids;
  std::sort(want.begin(), want.end());
  if (want.front() < 0 || want.back() >= n)
    throw std::invalid_argument("member id out of range");

  std::vector<std::pair<Rat, int>> crossing;  // (y, id)
  for (const auto& v : ts.vertices)
    if (v.seg.x_lo <= x && x <= v.seg.x_hi) crossing.emplace_back(v.seg.y, v.id);
  std::sort(crossing.begin(), crossing.end());

  int first = -1, last = -1, found = 0;
  for (int i = 0; i < static_cast<int>(crossing.size()); ++i) {
    if (!std::binary_search(want.begin(), want.end(), crossing[i].second))
      continue;
    if (first == -1) first = i;
    last = i;
    ++found;
  }
  return found == static_cast<int>(want.size()) && last - first + 1 == found;
}

Rat consecutive_at_some_time(const TreeSystem& ts,
                             const std::vector<int>& member_ids) {
  std::vector<Rat> candidates;
  for (const auto& v : ts.vertices) {
    candidates.push_back(v.seg.x_lo);
    candidates.push_back(v.seg.x_hi);
  }
  std::sort(candidates.begin(), candidates.end());
  candidates.erase(std::unique(candidates.begin(), candidates.end()),
                   candidates.end());
  for (const auto& x : candidates)
    if (is_consecutive_at(ts, member_ids, x)) return x;
  throw std::logic_error("member set is never consecutive");
}

void tree_self_check(const TreeSystem& ts) {
  int p = ts.p;
  if (p < 2 || p > 4) throw std::logic_error("tree parameter out of range");
  int n = static_cast<int>(ts.vertices.size());
  if (n != expected_vertices(p)) throw std::logic_error("vertex count wrong");

  for (int i = 0; i < n; ++i) {
    const TreeVertex& v = ts.vertices[i];
    if (v.id != i) throw std::logic_error("vertex ids not sequential");
    if (!integral(v.seg.x_lo) || !integral(v.seg.x_hi) || !integral(v.seg.y))
      throw std::logic_error("non-integral segment coordinate");
    if (!(v.seg.x_lo < v.seg.x_hi))
      throw std::logic_error("degenerate segment");
    if (i == 0) {
      if (v.parent != -1 || v.depth != 0) throw std::logic_error("bad root");
      continue;
    }
    if (v.parent < 0 || v.parent >= i)
      throw std::logic_error("parent must precede child");
    const TreeVertex& u = ts.vertices[v.parent];
    if (v.depth != u.depth + 1) throw std::logic_error("depth mismatch");
    if (v.depth > p - 1) throw std::logic_error("vertex too deep");
    if (!(ts.vertices[i - 1].seg.y < v.seg.y))
      throw std::logic_error("ids do not follow ascending y");
    if (!(u.seg.x_lo <= v.seg.x_lo && v.seg.x_hi <= u.seg.x_hi &&
          u.seg.y < v.seg.y))
      throw std::logic_error("child segment escapes its parent");
  }

  // A segment's ancestors are exactly the segments strictly below it on the
  // vertical line through its left endpoint.
  for (int v = 0; v < n; ++v) {
    std::vector<int> below;
    for (int u = 0; u < n; ++u) {
      if (u == v) continue;
      const HSegment& su = ts.vertices[u].seg;
      if (su.y < ts.vertices[v].seg.y && su.x_lo <= ts.vertices[v].seg.x_lo &&
          ts.vertices[v].seg.x_lo <= su.x_hi)
        below.push_back(u);
    }
    if (below != ancestors_of(ts, v))
      throw std::logic_error("ancestor geometry violated");
  }

  std::vector<std::vector<int>> kids(n);
  for (int v = 1; v < n; ++v) kids[ts.vertices[v].parent].push_back(v);

  // Strict nesting: a proper descendant stays strictly inside its ancestor's
  // x-extent and strictly above it, and the subtree of the i-th top-level
  // segment stays strictly inside the rectangle reserved above that segment,
  // [-i p^{p-1}, -(i-1) p^{p-1}] x [i p^p, (i+1) p^p] after scaling.
  Rat xunit(pow_ll(p, p - 1));
  Rat yunit(pow_ll(p, p));
  for (int u = 1; u < n; ++u) {
    const HSegment& su = ts.vertices[u].seg;
    for (int a = ts.vertices[u].parent; a != -1; a = ts.vertices[a].parent) {
      const TreeVertex& va = ts.vertices[a];
      if (va.depth == 0) continue;
      if (!(va.seg.x_lo < su.x_lo && su.x_hi < va.seg.x_hi && va.seg.y < su.y))
        throw std::logic_error("descendant escapes its ancestor's interior");
      if (va.depth == 1) {
        int i = 1 + static_cast<int>(std::find(kids[0].begin(), kids[0].end(),
                                               a) -
                                     kids[0].begin());
        if (!(-i * xunit < su.x_lo && su.x_hi < -(i - 1) * xunit &&
              i * yunit < su.y && su.y < (i + 1) * yunit))
          throw std::logic_error("subtree escapes its reserved rectangle");
      }
    }
  }

  // Set family shape.
  long long sib_expect = (pow_ll(p, p - 1) - 1) / (p - 1);
  long long path_expect = pow_ll(p, p - 1);
  if (ts.sibling_set_count != sib_expect ||
      ts.path_set_count != path_expect ||
      static_cast<long long>(ts.sets.sets.size()) != sib_expect + path_expect ||
      ts.sets.ground_size != n)
    throw std::logic_error("set family counts wrong");

  int idx = 0;
  for (int v = 0; v < n; ++v) {
    if (kids[v].empty()) continue;
    if (ts.sets.sets[idx] != kids[v])
      throw std::logic_error("sibling set does not match children");
    ++idx;
  }
  for (int v = 0; v < n; ++v) {
    if (ts.vertices[v].depth != p - 1) continue;
    std::vector<int> path;
    for (int u = v; u != -1; u = ts.vertices[u].parent) path.push_back(u);
    std::reverse(path.begin(), path.end());
    if (ts.sets.sets[idx] != path)
      throw std::logic_error("path set does not match ancestry");
    ++idx;
  }
  for (const auto& e : ts.sets.sets)
    if (static_cast<int>(e.size()) != p)
      throw std::logic_error("member set size is not p");

  // Witness lines: siblings at their shared right endpoint, paths at the
  // leaf's left endpoint.
  for (int i = 0; i < ts.sibling_set_count; ++i) {
    const auto& e = ts.sets.sets[i];
    const Rat& x1 = ts.vertices[e.front()].seg.x_hi;
    for (int id : e)
      if (ts.vertices[id].seg.x_hi != x1)
        throw std::logic_error("siblings do not share a right endpoint");
    if (!is_consecutive_at(ts, e, x1))
      throw std::logic_error("sibling set not consecutive at its witness");
  }
  for (int i = ts.sibling_set_count;
       i < static_cast<int>(ts.sets.sets.size()); ++i) {
    const auto& e = ts.sets.sets[i];
    int leaf = e.back();
    if (ts.vertices[leaf].depth != p - 1)
      throw std::logic_error("path set does not end at a leaf");
    if (!is_consecutive_at(ts, e, ts.vertices[leaf].seg.x_lo))
      throw std::logic_error("path set not consecutive at its witness");
  }
}

std::vector<Corner> tree_to_corners(const TreeSystem& ts) {
  std::vector<Corner> out;
  out.reserve(ts.vertices.size());
  for (const auto& v : ts.vertices)
    out.push_back({v.seg.x_lo, v.seg.x_hi, v.seg.y});
  return out;
}

std::vector<CornerQuery> corner_queries(const TreeSystem& ts) {
  std::vector<CornerQuery> out;
  for (const auto& e : ts.sets.sets) {
    CornerQuery q;
    q.x = consecutive_at_some_time(ts, e);
    q.y = ts.vertices[e.front()].seg.y;
    q.z = q.y;
    for (int id : e) {
      q.y = std::min(q.y, ts.vertices[id].seg.y);
      q.z = std::max(q.z, ts.vertices[id].seg.y);
    }
    q.expected = e;
    std::sort(q.expected.begin(), q.expected.end());
    out.push_back(std::move(q));
  }
  return out;
}

std::uint64_t check_corner_cover(const TreeSystem& ts) {
  if (ts.p > 3)
    throw std::invalid_argument("corner cover check enumerates all colorings; p must be at most 3");
  std::vector<Corner> corners = tree_to_corners(ts);
  std::vector<CornerQuery> queries = corner_queries(ts);
  int n = static_cast<int>(corners.size());

  for (const auto& q : queries) {
    std::vector<int> covered;
    for (int i = 0; i < n; ++i)
      if (corner_contains(corners[i], q.x, q.y, q.z)) covered.push_back(i);
    if (covered != q.expected)
      throw std::logic_error("query point coverage differs from its member set");
    if (static_cast<int>(covered.size()) != ts.p)
      throw std::logic_error("query point not covered exactly p times");
  }

  std::uint64_t total = 1ull << n;
  for (std::uint64_t mask = 0; mask < total; ++mask) {
    bool found = false;
    for (const auto& q : queries) {
      unsigned b0 = (mask >> q.expected.front()) & 1u;
      bool mono = true;
      for (int id : q.expected)
        if (((mask >> id) & 1u) != b0) {
          mono = false;
          break;
        }
      if (mono) {
        found = true;
        break;
      }
    }
    if (!found)
      throw std::logic_error("a 2-coloring leaves every query point bichromatic");
  }
  return total;
}

PlanarPointSet build_lower_bound_set(int n, int a) {
  if (n < 0 || a < 0)
    throw std::invalid_argument("chain and row sizes must be nonnegative");
  PlanarPointSet s;
  s.points.reserve(2 * n + a);
  for (int i = 1; i <= n; ++i)
    s.points.push_back({Rat(i - n), Rat(2 * i)});
  for (int i = 1; i <= a; ++i) s.points.push_back({Rat(i), Rat(0)});
  for (int i = 1; i <= n; ++i)
    s.points.push_back({Rat(n + a + i), Rat(2 * n + 1 - 2 * i)});
  s.normalized = is_normalized(s);
  return s;
}

void lower_bound_self_check(const PlanarPointSet& s, int n, int a) {
  if (static_cast<int>(s.points.size()) != 2 * n + a)
    throw std::logic_error("lower bound set has wrong cardinality");
  auto L = [&](int i) -> const PlanarPoint& { return s.points[i]; };
  auto B = [&](int i) -> const PlanarPoint& { return s.points[n + i]; };
  auto R = [&](int i) -> const PlanarPoint& { return s.points[n + a + i]; };

  for (int i = 1; i < n; ++i) {
    if (!(L(i - 1).x < L(i).x && L(i - 1).y < L(i).y))
      throw std::logic_error("left chain must ascend");
    if (!(R(i - 1).x < R(i).x && R(i).y < R(i - 1).y))
      throw std::logic_error("right chain must descend");
  }
  for (int i = 1; i < a; ++i)
    if (!(B(i - 1).x < B(i).x && B(i).y == B(0).y))
      throw std::logic_error("bottom row must be level and ascending");
  if (n > 0 && a > 0) {
    if (!(L(n - 1).x < B(0).x && B(a - 1).x < R(0).x))
      throw std::logic_error("blocks out of x order");
    if (!(B(0).y < L(0).y && B(0).y < R(n - 1).y))
      throw std::logic_error("bottom row must sit below both chains");
  }
  // Chains interleave in height: L_n, R_1, L_{n-1}, R_2, ...
  for (int t = 0; t < n; ++t) {
    if (!(R(t).y < L(n - 1 - t).y))
      throw std::logic_error("chains fail to interleave");
    if (t + 1 < n && !(L(n - 2 - t).y < R(t).y))
      throw std::logic_error("chains fail to interleave");
  }
}

SuggestedParams suggested_params(long long k) {
  return {floor_div(655 * k, 1000), floor_div(1677 * k - 2500, 1000)};
}

PlanarPointSet build_ck_witness(int k) {
  if (k < 1) throw std::invalid_argument("color count must be positive");
  PlanarPointSet s;
  s.points.reserve(2 * k - 1);
  for (int i = 0; i <= k - 1; ++i) s.points.push_back({Rat(i), Rat(2 * i)});
  for (int i = 1; i <= k - 1; ++i)
    s.points.push_back({Rat(2 * k - i), Rat(2 * i - 1)});
  s.normalized = is_normalized(s);
  return s;
}

void ck_witness_self_check(const PlanarPointSet& s, int k) {
  int m = static_cast<int>(s.points.size());
  if (m != 2 * k - 1) throw std::logic_error("witness has wrong cardinality");
  for (int u = 0; u < m; ++u) {
    for (int v = u + 1; v < m; ++v) {
      BottomlessRect r{std::min(s.points[u].x, s.points[v].x),
                       std::max(s.points[u].x, s.points[v].x),
                       std::max(s.points[u].y, s.points[v].y)};
      int inside = 0;
      for (const auto& q : s.points)
        if (rect_contains(r, q)) ++inside;
      if (inside > k)
        throw std::logic_error("a pair's tightest rectangle traps too many points");
    }
  }
}

int max_mono_run(const std::vector<int>& colors) {
  int best = 0, cur = 0;
  for (std::size_t i = 0; i < colors.size(); ++i) {
    cur = (i > 0 && colors[i] == colors[i - 1]) ? cur + 1 : 1;
    best = std::max(best, cur);
  }
  return best;
}

bool run_invariant_holds(const std::vector<int>& colors) {
  bool seen_blue = false;
  for (int c : colors) {
    if (c == kBlue) {
      seen_blue = true;
    } else if (c != kRed || seen_blue) {
      return false;
    }
  }
  return true;
}

void adversary_step(AdversaryState& state, const Strategy& strategy) {
  int pos = state.red_run;
  std::vector<int> visible = state.colors;
  visible.insert(visible.begin() + pos, kUncolored);
  int c = strategy(visible);
  if (c != kRed && c != kBlue)
    throw std::invalid_argument("strategy must answer " +
                                std::to_string(kRed) + " or " +
                                std::to_string(kBlue));
  state.colors.insert(state.colors.begin() + pos, c);
  if (c == kRed)
    ++state.red_run;
  else
    ++state.blue_run;
  state.transcript.emplace_back(pos, c);
  if (state.red_run + state.blue_run != static_cast<int>(state.colors.size()) ||
      !run_invariant_holds(state.colors) ||
      (state.red_run > 0 && state.colors[state.red_run - 1] != kRed) ||
      (state.blue_run > 0 && state.colors[state.red_run] != kBlue))
    throw std::logic_error("adversary run invariant broken");
}

}  // namespace bottomless
