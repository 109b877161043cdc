#include "prefixnet/fusion.hpp"

#include <algorithm>
#include <cmath>
#include <functional>

#include <fmt/format.h>

#include "prefixnet/errors.hpp"

namespace prefixnet {

void IntervalSet::validate() const {
  if (intervals.empty()) throw InvalidInput("interval set is empty");
  if (faults < 0 || static_cast<std::size_t>(faults) >= intervals.size())
    throw InvalidInput(fmt::format("fault bound f = {} must satisfy 0 <= f < n = {}", faults, intervals.size()));
  for (std::size_t i = 0; i < intervals.size(); ++i) {
    const auto& iv = intervals[i];
    if (!std::isfinite(iv.lo) || !std::isfinite(iv.hi))
      throw InvalidInput(fmt::format("interval {} has a non-finite endpoint", i + 1));
    if (iv.lo > iv.hi) throw InvalidInput(fmt::format("interval {} has lo {} > hi {}", i + 1, iv.lo, iv.hi));
  }
}

std::vector<Interval> agreement_regions(const IntervalSet& s) {
  s.validate();
  struct Event {
    double x;
    int delta;  // +1 opens, -1 closes
  };
  std::vector<Event> events;
  events.reserve(2 * s.size());
  for (const auto& iv : s.intervals) {
    events.push_back({iv.lo, +1});
    events.push_back({iv.hi, -1});
  }
  // Closed intervals: at a shared coordinate, openings come first.
  std::stable_sort(events.begin(), events.end(), [](const Event& a, const Event& b) {
    if (a.x != b.x) return a.x < b.x;
    return a.delta > b.delta;
  });
  const int need = static_cast<int>(s.quorum());
  std::vector<Interval> regions;
  int count = 0;
  double start = 0.0;
  for (const auto& ev : events) {
    const int before = count;
    count += ev.delta;
    if (before < need && count >= need) start = ev.x;
    if (before >= need && count < need) regions.push_back({start, ev.x});
  }
  return regions;
}

std::optional<Interval> m_function(const IntervalSet& s) {
  const auto regions = agreement_regions(s);
  if (regions.empty()) return std::nullopt;
  return Interval{regions.front().lo, regions.back().hi};
}

OverlapFunction::OverlapFunction(const std::vector<Interval>& intervals) {
  std::vector<double> los, his, xs;
  for (const auto& iv : intervals) {
    los.push_back(iv.lo);
    his.push_back(iv.hi);
    xs.push_back(iv.lo);
    xs.push_back(iv.hi);
  }
  std::sort(los.begin(), los.end());
  std::sort(his.begin(), his.end());
  std::sort(xs.begin(), xs.end());
  xs.erase(std::unique(xs.begin(), xs.end()), xs.end());
  for (double x : xs) {
    const auto started = std::upper_bound(los.begin(), los.end(), x) - los.begin();
    const auto ended_before = std::lower_bound(his.begin(), his.end(), x) - his.begin();
    const auto ended_by = std::upper_bound(his.begin(), his.end(), x) - his.begin();
    breakpoints_.push_back({x, static_cast<int>(started - ended_before), static_cast<int>(started - ended_by)});
  }
}

int OverlapFunction::operator()(double x) const {
  // Last breakpoint at or before x.
  auto it = std::upper_bound(breakpoints_.begin(), breakpoints_.end(), x,
                             [](double v, const Breakpoint& b) { return v < b.x; });
  if (it == breakpoints_.begin()) return 0;
  --it;
  return it->x == x ? it->at : it->after;
}

double OverlapFunction::integral() const {
  double total = 0.0;
  for (std::size_t k = 0; k + 1 < breakpoints_.size(); ++k)
    total += breakpoints_[k].after * (breakpoints_[k + 1].x - breakpoints_[k].x);
  return total;
}

OverlapFunction overlap_function(const IntervalSet& s) { return OverlapFunction(s.intervals); }

std::optional<Interval> n_function(const IntervalSet& s) {
  s.validate();
  const OverlapFunction omega(s.intervals);
  const int need = static_cast<int>(s.quorum());
  std::optional<Interval> out;
  // Ω of a closed-interval family peaks at endpoints, so checking breakpoints suffices.
  for (const auto& b : omega.breakpoints()) {
    if (b.at < need) continue;
    if (!out)
      out = Interval{b.x, b.x};
    else
      out->hi = b.x;
  }
  return out;
}

SFunctionResult s_function(const IntervalSet& s) {
  s.validate();
  std::vector<double> los, his;
  for (const auto& iv : s.intervals) {
    los.push_back(iv.lo);
    his.push_back(iv.hi);
  }
  const auto f = static_cast<std::size_t>(s.faults);
  std::nth_element(los.begin(), los.begin() + static_cast<std::ptrdiff_t>(f), los.end(), std::greater<>());
  std::nth_element(his.begin(), his.begin() + static_cast<std::ptrdiff_t>(f), his.end());
  return {los[f], his[f]};
}

FusionComparison fusion_compare(const IntervalSet& s) {
  FusionComparison out;
  out.m = m_function(s);
  out.n = n_function(s);
  out.s = s_function(s);
  out.m_equals_n = out.m == out.n;
  const auto si = out.s.interval();
  out.m_within_s = out.m && si && si->contains(*out.m);
  out.n_within_s = out.n && si && si->contains(*out.n);
  return out;
}

}  // namespace prefixnet
