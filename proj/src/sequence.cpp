#include "bottomless/sequence.hpp"

#include <algorithm>
#include <stdexcept>

namespace bottomless {

std::vector<IndexRange> windows(int n, int w) {
  if (w < 1) throw std::invalid_argument("window size must be >= 1");
  std::vector<IndexRange> out;
  for (int s = 0; s + w <= n; ++s) out.push_back({s, s + w - 1});
  return out;
}

ColoredSequence::ColoredSequence(int k) : k_(k) {
  if (k < 1) throw std::invalid_argument("need at least one color");
  occ_.resize(k);
}

const std::vector<int>& ColoredSequence::occurrences(int color) const {
  if (color < 1 || color > k_) throw std::invalid_argument("color out of range");
  return occ_[color - 1];
}

int ColoredSequence::insert(const Rat& value) {
  auto it = std::lower_bound(positions_.begin(), positions_.end(), value);
  if (it != positions_.end() && *it == value)
    throw std::invalid_argument("duplicate value");
  int idx = static_cast<int>(it - positions_.begin());
  positions_.insert(it, value);
  colors_.insert(colors_.begin() + idx, kUncolored);
  for (auto& list : occ_) {
    auto first = std::lower_bound(list.begin(), list.end(), idx);
    for (auto p = first; p != list.end(); ++p) ++*p;
  }
  return idx;
}

void ColoredSequence::set_color(int idx, int color) {
  if (idx < 0 || idx >= size()) throw std::invalid_argument("index out of range");
  if (color < 1 || color > k_) throw std::invalid_argument("color out of range");
  if (colors_[idx] != kUncolored)
    throw std::logic_error("point already colored; colors are write-once");
  colors_[idx] = color;
  auto& list = occ_[color - 1];
  list.insert(std::lower_bound(list.begin(), list.end(), idx), idx);
}

std::vector<Gap> ColoredSequence::gaps(int color) const {
  if (color < 1 || color > k_) throw std::invalid_argument("color out of range");
  const auto& occ = occ_[color - 1];
  const int n = size();
  std::vector<Gap> out;
  if (occ.empty()) {
    out.push_back({GapKind::WholeLine, 0, n - 1, n});
    return out;
  }
  out.push_back({GapKind::First, 0, occ.front() - 1, occ.front()});
  for (std::size_t t = 0; t + 1 < occ.size(); ++t) {
    int lo = occ[t] + 1, hi = occ[t + 1] - 1;
    out.push_back({GapKind::Internal, lo, hi, hi - lo + 1});
  }
  out.push_back({GapKind::Last, occ.back() + 1, n - 1, n - 1 - occ.back()});
  return out;
}

bool ColoredSequence::occ_consistent() const {
  const int n = size();
  std::vector<int> seen(n, kUncolored);
  for (int c = 1; c <= k_; ++c) {
    const auto& list = occ_[c - 1];
    if (!std::is_sorted(list.begin(), list.end())) return false;
    for (int idx : list) {
      if (idx < 0 || idx >= n || seen[idx] != kUncolored) return false;
      seen[idx] = c;
    }
    long long total = 0;
    for (const Gap& g : gaps(c)) {
      if (g.count != g.hi - g.lo + 1 && !(g.count == 0 && g.lo > g.hi)) return false;
      total += g.count;
    }
    if (total != n - static_cast<long long>(list.size())) return false;
  }
  return seen == colors_;
}

}  // namespace bottomless
