#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>
#include <stdexcept>
#include <vector>

#include "bottomless/dynamic_set.hpp"
#include "bottomless/rational.hpp"
#include "bottomless/sequence.hpp"

using namespace bottomless;

TEST_CASE("parse_rational accepts integers, decimals and fractions") {
  CHECK(parse_rational("5") == Rat(5));
  CHECK(parse_rational("-12") == Rat(-12));
  CHECK(parse_rational("3.25") == Rat(13, 4));
  CHECK(parse_rational("7/2") == Rat(7, 2));
  CHECK(parse_rational("-3/9") == Rat(-1, 3));
  CHECK(parse_rational("-0.5") == Rat(-1, 2));
  CHECK(parse_rational("0") == Rat(0));
}

TEST_CASE("parse_rational rejects malformed input") {
  CHECK(!parse_rational("").has_value());
  CHECK(!parse_rational("1/0").has_value());
  CHECK(!parse_rational("abc").has_value());
  CHECK(!parse_rational("2.5/3").has_value());
  CHECK(!parse_rational("1e3").has_value());
  CHECK(!parse_rational("5 ").has_value());
  CHECK(!parse_rational("--4").has_value());
  CHECK(!parse_rational("3/").has_value());
}

TEST_CASE("format_rational emits canonical text") {
  CHECK(format_rational(Rat(5)) == "5");
  CHECK(format_rational(Rat(-12)) == "-12");
  CHECK(format_rational(Rat(13, 4)) == "13/4");
  CHECK(format_rational(Rat(-1, 2)) == "-1/2");
  CHECK(format_rational(Rat(6, 3)) == "2");
}

TEST_CASE("parse is a left inverse of format") {
  std::mt19937 rng(7);
  std::uniform_int_distribution<int> num(-500, 500);
  std::uniform_int_distribution<int> den(1, 97);
  for (int i = 0; i < 500; ++i) {
    Rat r(num(rng), den(rng));
    auto back = parse_rational(format_rational(r));
    REQUIRE(back.has_value());
    CHECK(*back == r);
  }
}

TEST_CASE("floor_div rounds toward minus infinity") {
  CHECK(floor_div(7, 2) == 3);
  CHECK(floor_div(-7, 2) == -4);
  CHECK(floor_div(6, 3) == 2);
  CHECK(floor_div(-6, 3) == -2);
  CHECK(floor_div(-823, 1000) == -1);
  CHECK(floor_div(0, 5) == 0);
}

TEST_CASE("snapshot lists present values in ascending order") {
  DynamicPointSet s;
  s.points.push_back({Rat(5), Rat(0), std::nullopt});
  CHECK(snapshot(s, Rat(0)) == std::vector<Rat>{Rat(5)});
  CHECK(snapshot(s, Rat(-1)).empty());

  DynamicPointSet t;
  t.points.push_back({Rat(1), Rat(0), Rat(2)});
  t.points.push_back({Rat(3), Rat(1), Rat(4)});
  CHECK(snapshot(t, Rat(2)) == std::vector<Rat>{Rat(3)});
  CHECK(snapshot(t, Rat(1)) == std::vector<Rat>{Rat(1), Rat(3)});
  CHECK(snapshot(t, Rat(4)).empty());

  DynamicPointSet u;
  u.points.push_back({Rat(1), Rat(0), std::nullopt});
  u.points.push_back({Rat(2), Rat(1), std::nullopt});
  u.points.push_back({Rat(0), Rat(2), std::nullopt});
  CHECK(snapshot(u, Rat(3, 2)) == std::vector<Rat>{Rat(1), Rat(2)});
  CHECK(snapshot(u, Rat(2)) == std::vector<Rat>{Rat(0), Rat(1), Rat(2)});
}

TEST_CASE("snapshot_indices sorts indices by value") {
  DynamicPointSet u;
  u.points.push_back({Rat(1), Rat(0), std::nullopt});
  u.points.push_back({Rat(2), Rat(1), std::nullopt});
  u.points.push_back({Rat(0), Rat(2), std::nullopt});
  CHECK(snapshot_indices(u, Rat(2)) == std::vector<int>{2, 0, 1});
  CHECK(snapshot_indices(u, Rat(0)) == std::vector<int>{0});
}

TEST_CASE("insertion-only snapshots only ever grow") {
  std::mt19937 rng(11);
  std::uniform_int_distribution<int> coord(0, 10000);
  DynamicPointSet s;
  s.insertion_only = true;
  for (int i = 0; i < 60; ++i)
    s.points.push_back({Rat(coord(rng)), Rat(i), std::nullopt});
  s = normalize(std::move(s), TiePolicy::Perturb);
  std::vector<Rat> prev;
  for (int t = 0; t < 60; ++t) {
    std::vector<Rat> cur = snapshot(s, Rat(t));
    CHECK(cur.size() == prev.size() + 1);
    CHECK(std::includes(cur.begin(), cur.end(), prev.begin(), prev.end()));
    prev = std::move(cur);
  }
}

TEST_CASE("normalize perturbs ties without reordering distinct keys") {
  DynamicPointSet s;
  s.points.push_back({Rat(1), Rat(0), std::nullopt});
  s.points.push_back({Rat(1), Rat(0), std::nullopt});
  s.points.push_back({Rat(2), Rat(1), std::nullopt});
  CHECK(!is_normalized(s));
  CHECK_THROWS_AS(normalize(s, TiePolicy::Reject), std::invalid_argument);

  DynamicPointSet p = normalize(s, TiePolicy::Perturb);
  CHECK(is_normalized(p));
  REQUIRE(p.points.size() == 3);
  CHECK(p.points[0].value < p.points[1].value);
  CHECK(p.points[1].value < p.points[2].value);
  CHECK(p.points[0].arrival < p.points[1].arrival);
  CHECK(p.points[1].arrival < p.points[2].arrival);
}

TEST_CASE("normalize keeps already-distinct sets intact") {
  DynamicPointSet s;
  s.points.push_back({Rat(3), Rat(0), std::nullopt});
  s.points.push_back({Rat(1), Rat(1), Rat(5)});
  CHECK(is_normalized(s));
  DynamicPointSet p = normalize(s, TiePolicy::Reject);
  CHECK(p.points[0].value == Rat(3));
  CHECK(p.points[1].departure == Rat(5));
}

TEST_CASE("windows enumerates every full-size index range") {
  auto w4 = windows(4, 4);
  REQUIRE(w4.size() == 1);
  CHECK(w4[0].lo == 0);
  CHECK(w4[0].hi == 3);

  auto w5 = windows(5, 4);
  REQUIRE(w5.size() == 2);
  CHECK(w5[1].lo == 1);
  CHECK(w5[1].hi == 4);

  CHECK(windows(3, 4).empty());
  CHECK(windows(0, 1).empty());
  CHECK(windows(3, 1).size() == 3);
  CHECK_THROWS_AS(windows(3, 0), std::invalid_argument);
}

namespace {

ColoredSequence make_seq(int k, const std::vector<int>& colors) {
  ColoredSequence seq(k);
  for (int i = 0; i < static_cast<int>(colors.size()); ++i) {
    int idx = seq.insert(Rat(i));
    REQUIRE(idx == i);
    if (colors[i] != kUncolored) seq.set_color(i, colors[i]);
  }
  return seq;
}

}  // namespace

TEST_CASE("gaps reports First and Last even when empty") {
  ColoredSequence seq = make_seq(2, {1, kUncolored, kUncolored, 2});

  auto g1 = seq.gaps(1);
  REQUIRE(g1.size() == 2);
  CHECK(g1[0].kind == GapKind::First);
  CHECK(g1[0].lo == 0);
  CHECK(g1[0].hi == -1);
  CHECK(g1[0].count == 0);
  CHECK(g1[1].kind == GapKind::Last);
  CHECK(g1[1].lo == 1);
  CHECK(g1[1].hi == 3);
  CHECK(g1[1].count == 3);

  auto g2 = seq.gaps(2);
  REQUIRE(g2.size() == 2);
  CHECK(g2[0].kind == GapKind::First);
  CHECK(g2[0].count == 3);
  CHECK(g2[1].kind == GapKind::Last);
  CHECK(g2[1].count == 0);
}

TEST_CASE("gaps reports WholeLine for an absent color") {
  ColoredSequence seq = make_seq(2, {kUncolored, kUncolored});
  auto g = seq.gaps(2);
  REQUIRE(g.size() == 1);
  CHECK(g[0].kind == GapKind::WholeLine);
  CHECK(g[0].lo == 0);
  CHECK(g[0].hi == 1);
  CHECK(g[0].count == 2);

  ColoredSequence empty(3);
  auto ge = empty.gaps(1);
  REQUIRE(ge.size() == 1);
  CHECK(ge[0].kind == GapKind::WholeLine);
  CHECK(ge[0].count == 0);
}

TEST_CASE("gaps splits around interior occurrences") {
  ColoredSequence seq = make_seq(2, {2, 1, kUncolored, 1});
  auto g = seq.gaps(1);
  REQUIRE(g.size() == 3);
  CHECK(g[0].kind == GapKind::First);
  CHECK(g[0].count == 1);
  CHECK(g[1].kind == GapKind::Internal);
  CHECK(g[1].lo == 2);
  CHECK(g[1].hi == 2);
  CHECK(g[1].count == 1);
  CHECK(g[2].kind == GapKind::Last);
  CHECK(g[2].count == 0);
}

TEST_CASE("insert keeps positions sorted and shifts occurrence lists") {
  ColoredSequence seq(2);
  seq.insert(Rat(10));
  seq.insert(Rat(30));
  seq.set_color(0, 1);
  seq.set_color(1, 2);
  int idx = seq.insert(Rat(20));
  CHECK(idx == 1);
  CHECK(seq.color(0) == 1);
  CHECK(seq.color(1) == kUncolored);
  CHECK(seq.color(2) == 2);
  CHECK(seq.occurrences(2) == std::vector<int>{2});
  CHECK(seq.occ_consistent());
}

TEST_CASE("duplicate positions and recoloring are rejected") {
  ColoredSequence seq(2);
  seq.insert(Rat(1));
  CHECK_THROWS_AS(seq.insert(Rat(1)), std::invalid_argument);
  seq.set_color(0, 2);
  CHECK_THROWS_AS(seq.set_color(0, 1), std::logic_error);
  CHECK_THROWS_AS(seq.set_color(0, 2), std::logic_error);
}

TEST_CASE("occ_consistent holds under random growth") {
  std::mt19937 rng(23);
  for (int round = 0; round < 20; ++round) {
    int k = 1 + static_cast<int>(rng() % 4);
    ColoredSequence seq(k);
    std::uniform_int_distribution<int> coord(0, 100000);
    for (int i = 0; i < 80; ++i) {
      Rat v(coord(rng));
      try {
        int idx = seq.insert(v);
        if (rng() % 3 != 0)
          seq.set_color(idx, 1 + static_cast<int>(rng() % k));
      } catch (const std::invalid_argument&) {
        // duplicate position; skip
      }
      REQUIRE(seq.occ_consistent());
    }
  }
}

// A color misses some window of w consecutive points exactly when one of its
// gaps holds at least w points; both in turn match a direct scan.
TEST_CASE("window misses and large gaps coincide") {
  std::mt19937 rng(31);
  for (int round = 0; round < 200; ++round) {
    int n = static_cast<int>(rng() % 12);
    int k = 1 + static_cast<int>(rng() % 3);
    int w = 1 + static_cast<int>(rng() % 8);
    std::vector<int> colors(n);
    for (auto& c : colors) c = static_cast<int>(rng() % (k + 1));
    ColoredSequence seq = make_seq(k, colors);
    for (int c = 1; c <= k; ++c) {
      bool missed = false;
      for (const auto& win : windows(n, w)) {
        bool has = false;
        for (int i = win.lo; i <= win.hi; ++i)
          if (seq.color(i) == c) has = true;
        if (!has) missed = true;
      }
      bool big_gap = false;
      for (const auto& g : seq.gaps(c))
        if (g.count >= w) big_gap = true;
      CHECK(missed == big_gap);
    }
  }
}
