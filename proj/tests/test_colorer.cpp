#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <set>
#include <vector>

#include "bottomless/colorer.hpp"
#include "bottomless/sequence.hpp"
#include "bottomless/verify.hpp"

using namespace bottomless;

namespace {

bool window_has_all(const ColoredSequence& seq, int lo, int hi, int k) {
  std::set<int> seen;
  for (int i = lo; i <= hi; ++i)
    if (seq.color(i) != kUncolored) seen.insert(seq.color(i));
  return static_cast<int>(seen.size()) == k;
}

}  // namespace

TEST_CASE("one color repairs every point immediately") {
  SemiOnlineColorer col(1);
  col.insert(Rat(7));
  CHECK(col.sequence().color(0) == 1);
  col.insert(Rat(3));
  CHECK(col.sequence().color(0) == 1);
  CHECK(col.sequence().color(1) == 1);
  CHECK(col.repair_log().size() == 2);
}

TEST_CASE("fourth point triggers the first two repairs") {
  SemiOnlineColorer col(2);
  col.insert(Rat(1));
  col.insert(Rat(2));
  col.insert(Rat(3));
  for (int i = 0; i < 3; ++i) CHECK(col.sequence().color(i) == kUncolored);
  CHECK(col.repair_log().empty());

  col.insert(Rat(4));
  CHECK(col.sequence().color(0) == kUncolored);
  CHECK(col.sequence().color(1) == 1);
  CHECK(col.sequence().color(2) == 2);
  CHECK(col.sequence().color(3) == kUncolored);

  REQUIRE(col.repair_log().size() == 2);
  CHECK(col.repair_log()[0].step == 4);
  CHECK(col.repair_log()[0].index == 1);
  CHECK(col.repair_log()[0].color == 1);
  CHECK(col.repair_log()[1].step == 4);
  CHECK(col.repair_log()[1].index == 2);
  CHECK(col.repair_log()[1].color == 2);

  ColoredSequence total = col.finalize();
  CHECK(total.colors() == std::vector<int>{1, 1, 2, 1});
}

TEST_CASE("finalize of an empty colorer is empty") {
  SemiOnlineColorer col(3);
  CHECK(col.finalize().size() == 0);
  CHECK(col.steps() == 0);
}

TEST_CASE("identical insert order replays identically") {
  std::mt19937 rng(41);
  std::vector<Rat> values;
  std::set<int> used;
  while (values.size() < 150) {
    int v = static_cast<int>(rng() % 100000);
    if (used.insert(v).second) values.push_back(Rat(v));
  }
  SemiOnlineColorer a(3), b(3);
  for (const auto& v : values) {
    a.insert(v);
    b.insert(v);
  }
  CHECK(a.sequence().colors() == b.sequence().colors());
  REQUIRE(a.repair_log().size() == b.repair_log().size());
  for (std::size_t i = 0; i < a.repair_log().size(); ++i) {
    CHECK(a.repair_log()[i].step == b.repair_log()[i].step);
    CHECK(a.repair_log()[i].index == b.repair_log()[i].index);
    CHECK(a.repair_log()[i].color == b.repair_log()[i].color);
  }
}

TEST_CASE("random insertions keep both gap invariants") {
  std::mt19937 rng(43);
  for (int k = 2; k <= 4; ++k) {
    SemiOnlineColorer col(k);
    std::set<int> used;
    for (int i = 0; i < 300; ++i) {
      int v;
      do {
        v = static_cast<int>(rng() % 1000000);
      } while (!used.insert(v).second);
      col.insert(Rat(v));
      col.check_invariants();
    }
    CHECK(audit_sequence(col.sequence(), k).empty());

    ColoredSequence total = col.finalize();
    int w = 3 * k - 2;
    for (const auto& win : windows(total.size(), w))
      CHECK(window_has_all(total, win.lo, win.hi, k));
  }
}

TEST_CASE("partial coloring already covers every full window") {
  std::mt19937 rng(47);
  SemiOnlineColorer col(3);
  std::set<int> used;
  for (int i = 0; i < 200; ++i) {
    int v;
    do {
      v = static_cast<int>(rng() % 1000000);
    } while (!used.insert(v).second);
    col.insert(Rat(v));
    for (const auto& win : windows(col.sequence().size(), 7))
      CHECK(window_has_all(col.sequence(), win.lo, win.hi, 3));
  }
}

TEST_CASE("online coloring alternates on an ascending run") {
  OnlineColorer col(2);
  col.insert(Rat(1));
  col.insert(Rat(2));
  col.insert(Rat(3));
  CHECK(col.sequence().colors() == std::vector<int>{1, 2, 1});
}

TEST_CASE("online coloring with one color is constant") {
  OnlineColorer col(1);
  for (int i = 0; i < 10; ++i) col.insert(Rat(i));
  for (int i = 0; i < 10; ++i) CHECK(col.sequence().color(i) == 1);
}

TEST_CASE("online coloring stays within 2k-1 colors and repeats nothing") {
  std::mt19937 rng(53);
  for (int k = 2; k <= 5; ++k) {
    OnlineColorer col(k);
    std::set<int> used;
    for (int i = 0; i < 250; ++i) {
      int v;
      do {
        v = static_cast<int>(rng() % 1000000);
      } while (!used.insert(v).second);
      col.insert(Rat(v));
      const ColoredSequence& seq = col.sequence();
      int idx = 0;
      while (seq.position(idx) != Rat(v)) ++idx;
      CHECK(seq.color(idx) >= 1);
      CHECK(seq.color(idx) <= 2 * k - 1);
      for (const auto& win : windows(seq.size(), std::min(k, seq.size()))) {
        std::set<int> seen;
        for (int j = win.lo; j <= win.hi; ++j) seen.insert(seq.color(j));
        CHECK(static_cast<int>(seen.size()) == win.hi - win.lo + 1);
      }
    }
  }
}
