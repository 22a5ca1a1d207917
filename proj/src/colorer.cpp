#include "bottomless/colorer.hpp"

#include <stdexcept>
#include <string>

namespace bottomless {

namespace {

[[noreturn]] void fail(const std::string& what) { throw std::logic_error(what); }

}  // namespace

SemiOnlineColorer::SemiOnlineColorer(int k) : k_(k), seq_(k) {}

void SemiOnlineColorer::insert(const Rat& value) {
  seq_.insert(value);
  ++step_;
  while (repair_one()) {
  }
  check_invariants();
}

// Finds the first gap (colors ascending, left to right) that reached 3k-2
// points and repairs it.  Returns false when no gap is that large.
bool SemiOnlineColorer::repair_one() {
  const int limit = 3 * k_ - 2;
  for (int c = 1; c <= k_; ++c) {
    for (const Gap& g : seq_.gaps(c)) {
      if (g.count < limit) continue;
      if (g.count > limit)
        fail("gap of " + std::to_string(g.count) + " points escaped repair");
      // l-block: k-1 points, m-block: k points, r-block: k-1 points.
      int m_lo = g.lo + (k_ - 1);
      int m_hi = g.lo + (2 * k_ - 2);
      int pick = -1;
      for (int idx = m_lo; idx <= m_hi; ++idx) {
        if (seq_.color(idx) == kUncolored) {
          pick = idx;
          break;
        }
      }
      if (pick < 0) fail("no uncolored point in the middle block of a full gap");
      seq_.set_color(pick, c);
      repair_log_.push_back({step_, pick, c});
      return true;
    }
  }
  return false;
}

void SemiOnlineColorer::check_invariants() const {
  const int n = seq_.size();
  const int cap = 3 * k_ - 3;
  for (int c = 1; c <= k_; ++c) {
    const auto& occ = seq_.occurrences(c);
    if (occ.empty()) {
      if (n > cap) fail("whole line exceeds 3k-3 while color is absent");
      continue;
    }
    if (occ.front() > cap) fail("first gap exceeds 3k-3");
    if (n - 1 - occ.back() > cap) fail("last gap exceeds 3k-3");
    for (std::size_t t = 0; t + 1 < occ.size(); ++t) {
      int between = occ[t + 1] - occ[t] - 1;
      if (between > cap) fail("internal gap exceeds 3k-3");
      if (between < k_ - 1) fail("internal gap below k-1");
    }
  }
}

ColoredSequence SemiOnlineColorer::finalize() const {
  ColoredSequence out = seq_;
  for (int i = 0; i < out.size(); ++i)
    if (out.color(i) == kUncolored) out.set_color(i, 1);
  return out;
}

OnlineColorer::OnlineColorer(int k) : k_(k), seq_(2 * k - 1) {
  if (k < 1) throw std::invalid_argument("need k >= 1");
}

void OnlineColorer::insert(const Rat& value) {
  const int colors = 2 * k_ - 1;
  const int n = seq_.size();
  // Neighbor scan happens before the insert; [pos, pos+k-2] are exactly the
  // points that end up immediately to the right of the new one.
  int pos = 0;
  while (pos < n && seq_.position(pos) < value) ++pos;
  unsigned used = 0;
  for (int i = std::max(0, pos - (k_ - 1)); i < pos; ++i)
    used |= 1u << (seq_.color(i) - 1);
  for (int i = pos; i < std::min(n, pos + (k_ - 1)); ++i)
    used |= 1u << (seq_.color(i) - 1);
  int chosen = 0;
  for (int c = 1; c <= colors; ++c) {
    if (!(used & (1u << (c - 1)))) {
      chosen = c;
      break;
    }
  }
  if (chosen == 0) fail("2k-2 neighbors cannot block all 2k-1 colors");
  int idx = seq_.insert(value);
  seq_.set_color(idx, chosen);
}

}  // namespace bottomless
