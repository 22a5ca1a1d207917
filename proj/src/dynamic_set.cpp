#include "bottomless/dynamic_set.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace bottomless {

namespace {

bool present_at(const DynamicPoint& p, const Rat& t) {
  if (p.arrival > t) return false;
  return !p.departure || t < *p.departure;
}

// Keys that collide are spread by input order: member j of a tied group moves
// to key + j*delta with delta small enough that no group crosses the next
// distinct key.  Returns true if anything moved.
bool perturb_keys(std::vector<Rat>& keys) {
  const int n = static_cast<int>(keys.size());
  std::map<Rat, std::vector<int>> groups;
  for (int i = 0; i < n; ++i) groups[keys[i]].push_back(i);
  if (static_cast<int>(groups.size()) == n) return false;

  Rat min_gap = 0;
  const Rat* prev = nullptr;
  for (const auto& [key, members] : groups) {
    if (prev) {
      Rat gap = key - *prev;
      if (min_gap == 0 || gap < min_gap) min_gap = gap;
    }
    prev = &key;
  }
  if (min_gap == 0) min_gap = 1;  // single distinct key, any spacing works
  Rat delta = min_gap / (2 * n);
  for (const auto& [key, members] : groups) {
    for (std::size_t j = 1; j < members.size(); ++j)
      keys[members[j]] = key + Rat(j) * delta;
  }
  return true;
}

bool has_duplicates(std::vector<Rat> keys) {
  std::sort(keys.begin(), keys.end());
  return std::adjacent_find(keys.begin(), keys.end()) != keys.end();
}

}  // namespace

bool is_normalized(const DynamicPointSet& s) {
  std::vector<Rat> values, arrivals;
  values.reserve(s.points.size());
  arrivals.reserve(s.points.size());
  for (const auto& p : s.points) {
    values.push_back(p.value);
    arrivals.push_back(p.arrival);
  }
  return !has_duplicates(std::move(values)) && !has_duplicates(std::move(arrivals));
}

DynamicPointSet normalize(DynamicPointSet s, TiePolicy policy) {
  std::vector<Rat> values, arrivals;
  values.reserve(s.points.size());
  arrivals.reserve(s.points.size());
  for (const auto& p : s.points) {
    values.push_back(p.value);
    arrivals.push_back(p.arrival);
  }
  if (policy == TiePolicy::Reject) {
    if (has_duplicates(values) || has_duplicates(arrivals))
      throw std::invalid_argument("duplicate coordinates; normalization not requested");
    return s;
  }
  perturb_keys(values);
  perturb_keys(arrivals);
  for (std::size_t i = 0; i < s.points.size(); ++i) {
    s.points[i].value = values[i];
    s.points[i].arrival = arrivals[i];
  }
  return s;
}

std::vector<Rat> snapshot(const DynamicPointSet& s, const Rat& t) {
  std::vector<Rat> out;
  for (const auto& p : s.points)
    if (present_at(p, t)) out.push_back(p.value);
  std::sort(out.begin(), out.end());
  return out;
}

std::vector<int> snapshot_indices(const DynamicPointSet& s, const Rat& t) {
  std::vector<int> out;
  for (int i = 0; i < static_cast<int>(s.points.size()); ++i)
    if (present_at(s.points[i], t)) out.push_back(i);
  std::sort(out.begin(), out.end(), [&](int a, int b) {
    return s.points[a].value < s.points[b].value;
  });
  return out;
}

}  // namespace bottomless
