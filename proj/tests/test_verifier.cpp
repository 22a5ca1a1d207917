#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>
#include <stdexcept>
#include <vector>

#include "bottomless/planar.hpp"
#include "bottomless/sequence.hpp"
#include "bottomless/set_system.hpp"
#include "bottomless/verify.hpp"

using namespace bottomless;

namespace {

DynamicPointSet ascending_arrivals(const std::vector<int>& values) {
  DynamicPointSet s;
  s.insertion_only = true;
  for (std::size_t i = 0; i < values.size(); ++i)
    s.points.push_back({Rat(values[i]), Rat(static_cast<int>(i)), std::nullopt});
  return s;
}

PlanarPointSet random_planar(int n, std::mt19937& rng) {
  std::vector<int> xs(n), ys(n);
  std::iota(xs.begin(), xs.end(), 0);
  std::iota(ys.begin(), ys.end(), 0);
  std::shuffle(xs.begin(), xs.end(), rng);
  std::shuffle(ys.begin(), ys.end(), rng);
  PlanarPointSet s;
  for (int i = 0; i < n; ++i) s.points.push_back({Rat(xs[i]), Rat(ys[i])});
  s.normalized = true;
  return s;
}

}  // namespace

TEST_CASE("a monochromatic window reports the missing color once") {
  DynamicPointSet s = ascending_arrivals({1, 2, 3, 4});
  std::vector<int> coloring{1, 1, 1, 1};
  auto v = verify_windows(s, coloring, 4, Mode::AllColorsPresent, 2);
  REQUIRE(v.size() == 1);
  CHECK(v[0].kind == ViolationKind::WindowMissingColor);
  CHECK(v[0].event == 3);
  CHECK(v[0].lo == 0);
  CHECK(v[0].hi == 3);
  CHECK(v[0].color == 2);

  CHECK(recheck_violation(s, coloring, 4, Mode::AllColorsPresent, 2, v[0]));
}

TEST_CASE("window width below one is rejected") {
  DynamicPointSet s = ascending_arrivals({1});
  std::vector<int> coloring{1};
  CHECK_THROWS_AS(verify_windows(s, coloring, 0, Mode::AllColorsPresent, 1),
                  std::invalid_argument);
}

TEST_CASE("norepeat clamps the window to the snapshot") {
  DynamicPointSet s = ascending_arrivals({1, 2, 3});
  std::vector<int> repeat{1, 2, 1};
  auto v = verify_windows(s, repeat, 5, Mode::NoRepeat, 2);
  REQUIRE(v.size() == 1);
  CHECK(v[0].kind == ViolationKind::WindowRepeatedColor);
  CHECK(v[0].event == 2);
  CHECK(v[0].lo == 0);
  CHECK(v[0].hi == 2);
  CHECK(v[0].color == 1);
  CHECK(recheck_violation(s, repeat, 5, Mode::NoRepeat, 2, v[0]));

  std::vector<int> rainbow{1, 2, 3};
  CHECK(verify_windows(s, rainbow, 5, Mode::NoRepeat, 3).empty());
}

TEST_CASE("a departure can expose a missing color") {
  DynamicPointSet s;
  s.points.push_back({Rat(1), Rat(0), std::nullopt});
  s.points.push_back({Rat(2), Rat(1), Rat(10)});
  s.points.push_back({Rat(3), Rat(2), std::nullopt});
  std::vector<int> coloring{1, 2, 1};

  auto v = verify_windows(s, coloring, 2, Mode::AllColorsPresent, 2);
  REQUIRE(v.size() == 1);
  CHECK(v[0].kind == ViolationKind::WindowMissingColor);
  CHECK(v[0].event == 3);
  CHECK(v[0].lo == 0);
  CHECK(v[0].hi == 1);
  CHECK(v[0].color == 2);
  CHECK(recheck_violation(s, coloring, 2, Mode::AllColorsPresent, 2, v[0]));
}

TEST_CASE("recheck rejects fabricated violations") {
  DynamicPointSet s = ascending_arrivals({1, 2, 3, 4});
  std::vector<int> coloring{1, 2, 1, 2};
  CHECK(verify_windows(s, coloring, 4, Mode::AllColorsPresent, 2).empty());

  Violation fake{ViolationKind::WindowMissingColor, 3, 0, 3, 2};
  CHECK(!recheck_violation(s, coloring, 4, Mode::AllColorsPresent, 2, fake));
  Violation wrong_size{ViolationKind::WindowMissingColor, 3, 0, 2, 2};
  CHECK(!recheck_violation(s, coloring, 4, Mode::AllColorsPresent, 2, wrong_size));
  Violation bad_color{ViolationKind::WindowMissingColor, 3, 0, 3, 9};
  CHECK(!recheck_violation(s, coloring, 4, Mode::AllColorsPresent, 2, bad_color));
}

TEST_CASE("gap report is empty exactly when the window report is") {
  std::mt19937 rng(89);
  for (int round = 0; round < 100; ++round) {
    int n = 1 + static_cast<int>(rng() % 12);
    int k = 1 + static_cast<int>(rng() % 3);
    int w = 1 + static_cast<int>(rng() % 6);
    DynamicPointSet s;
    for (int i = 0; i < n; ++i) {
      DynamicPoint p{Rat(static_cast<int>(rng() % 1000)), Rat(i), std::nullopt};
      if (rng() % 3 == 0) p.departure = p.arrival + Rat(1 + static_cast<int>(rng() % 5));
      s.points.push_back(p);
    }
    s = normalize(std::move(s), TiePolicy::Perturb);
    std::vector<int> coloring(n);
    for (auto& c : coloring) c = static_cast<int>(rng() % (k + 1));

    bool windows_clean =
        verify_windows(s, coloring, w, Mode::AllColorsPresent, k).empty();
    auto gaps = verify_gaps(s, coloring, w, k);
    CHECK(windows_clean == gaps.empty());
    for (const auto& g : gaps) {
      CHECK(g.kind == ViolationKind::GapTooLarge);
      CHECK(recheck_violation(s, coloring, w, Mode::AllColorsPresent, k, g));
    }
  }
}

TEST_CASE("planar verification matches the swept line verification") {
  std::mt19937 rng(97);
  for (int round = 0; round < 60; ++round) {
    int n = 1 + static_cast<int>(rng() % 12);
    PlanarPointSet s = random_planar(n, rng);
    int k = 1 + static_cast<int>(rng() % 3);
    int w = 1 + static_cast<int>(rng() % 6);
    std::vector<int> coloring(n);
    for (auto& c : coloring) c = static_cast<int>(rng() % (k + 1));

    DynamicPointSet d = sweep_reduce(s);
    std::vector<int> order = sweep_order(s);
    std::vector<int> swept(n);
    for (int r = 0; r < n; ++r) swept[r] = coloring[order[r]];

    Mode mode = (round % 2 == 0) ? Mode::AllColorsPresent : Mode::NoRepeat;
    CHECK(verify_rectangles(s, coloring, w, mode, k) ==
          verify_windows(d, swept, w, mode, k));
  }
}

TEST_CASE("audit accepts bounded gaps and flags breaches") {
  ColoredSequence ok(2);
  for (int i = 0; i < 4; ++i) ok.insert(Rat(i));
  ok.set_color(0, 1);
  ok.set_color(3, 2);
  CHECK(audit_sequence(ok, 2).empty());

  ColoredSequence wide(2);
  for (int i = 0; i < 5; ++i) wide.insert(Rat(i));
  wide.set_color(0, 1);
  auto v = audit_sequence(wide, 2);
  bool too_large = false;
  for (const auto& x : v) {
    if (x.kind == ViolationKind::GapTooLarge && x.color == 1) too_large = true;
    CHECK(x.event == -1);
  }
  CHECK(too_large);

  ColoredSequence narrow(3);
  for (int i = 0; i < 3; ++i) narrow.insert(Rat(i));
  narrow.set_color(0, 1);
  narrow.set_color(1, 2);
  narrow.set_color(2, 1);
  auto nv = audit_sequence(narrow, 3);
  REQUIRE(nv.size() == 1);
  CHECK(nv[0].kind == ViolationKind::InternalGapTooSmall);
  CHECK(nv[0].lo == 1);
  CHECK(nv[0].hi == 1);
  CHECK(nv[0].color == 1);
}

TEST_CASE("canonical window sets equal naive rectangle sets") {
  std::mt19937 rng(101);
  for (int round = 0; round < 50; ++round) {
    int n = 1 + static_cast<int>(rng() % 12);
    PlanarPointSet s = random_planar(n, rng);
    for (int w = 1; w <= n; ++w)
      CHECK(canonical_window_sets(s, w) == naive_rectangle_sets(s, w));
  }
}

TEST_CASE("oracle handles the smallest instances") {
  PlanarPointSet one;
  one.points.push_back({Rat(0), Rat(0)});
  one.normalized = true;
  OracleResult r1 = oracle_min_p(one, 1);
  CHECK(r1.min_w == 1);
  CHECK(r1.coloring == std::vector<int>{1});

  PlanarPointSet two;
  two.points.push_back({Rat(0), Rat(0)});
  two.points.push_back({Rat(1), Rat(1)});
  two.normalized = true;
  OracleResult r2 = oracle_min_p(two, 2);
  CHECK(r2.min_w == 2);
  CHECK(verify_rectangles(two, r2.coloring, 2, Mode::AllColorsPresent, 2).empty());
}

namespace {

// Reference answer for two colors: try every coloring against every trapped
// subset of size at least w.
int brute_min_w_two_colors(const PlanarPointSet& s) {
  int n = static_cast<int>(s.points.size());
  std::vector<std::vector<int>> subsets;
  for (int m = 1; m <= n; ++m)
    for (auto& sub : naive_rectangle_sets(s, m)) subsets.push_back(std::move(sub));
  for (int w = 1; w <= n + 1; ++w) {
    for (unsigned mask = 0; mask < (1u << n); ++mask) {
      bool good = true;
      for (const auto& sub : subsets) {
        if (static_cast<int>(sub.size()) < w) continue;
        bool has1 = false, has2 = false;
        for (int i : sub) ((mask >> i) & 1u ? has2 : has1) = true;
        if (!has1 || !has2) {
          good = false;
          break;
        }
      }
      if (good) return w;
    }
  }
  return n + 1;
}

}  // namespace

TEST_CASE("oracle agrees with exhaustive search on tiny sets") {
  std::mt19937 rng(103);
  for (int round = 0; round < 12; ++round) {
    int n = 2 + static_cast<int>(rng() % 5);
    PlanarPointSet s = random_planar(n, rng);
    OracleResult r = oracle_min_p(s, 2);
    CHECK(r.min_w == brute_min_w_two_colors(s));
    CHECK(verify_rectangles(s, r.coloring, r.min_w, Mode::AllColorsPresent, 2)
              .empty());
    if (r.min_w > 1) {
      // One step tighter must break the witness, or no coloring passes at all.
      auto v = verify_rectangles(s, r.coloring, r.min_w - 1,
                                 Mode::AllColorsPresent, 2);
      CHECK(!v.empty());
    }
  }
}

TEST_CASE("oracle refuses instances beyond its budget") {
  CHECK(oracle_budget_ok(20, 1));
  CHECK(!oracle_budget_ok(21, 1));
  CHECK(oracle_budget_ok(14, 2));
  CHECK(!oracle_budget_ok(15, 2));
  CHECK(oracle_budget_ok(10, 3));
  CHECK(!oracle_budget_ok(11, 3));
  CHECK(oracle_budget_ok(8, 4));
  CHECK(!oracle_budget_ok(9, 4));

  std::mt19937 rng(107);
  PlanarPointSet big = random_planar(15, rng);
  CHECK_THROWS_AS(oracle_min_p(big, 2), std::invalid_argument);
}

TEST_CASE("two coloring search reports its enumeration") {
  SetSystem sys;
  sys.ground_size = 2;
  sys.sets = {{0, 1}};
  TwoColorResult r = check_set_system_2colorable(sys);
  REQUIRE(r.coloring.has_value());
  CHECK(*r.coloring == std::vector<int>{1, 2});
  CHECK(r.examined == 2);
  CHECK(r.exhaustive);
}

TEST_CASE("large ground sets use backtracking") {
  SetSystem sys;
  sys.ground_size = 30;
  sys.sets = {{0, 1}, {1, 2}, {0, 2}};
  TwoColorResult r = check_set_system_2colorable(sys);
  CHECK(!r.exhaustive);
  CHECK(!r.coloring.has_value());

  SetSystem ok;
  ok.ground_size = 30;
  ok.sets = {{0, 1}, {1, 2}};
  TwoColorResult r2 = check_set_system_2colorable(ok);
  REQUIRE(r2.coloring.has_value());
  CHECK(r2.coloring->size() == 30);
  for (const auto& e : ok.sets) {
    std::set<int> colors;
    for (int i : e) colors.insert((*r2.coloring)[i]);
    CHECK(colors.size() > 1);
  }
}
