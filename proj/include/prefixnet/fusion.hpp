#pragma once

#include <optional>
#include <string>
#include <vector>

namespace prefixnet {

/// Closed interval [lo, hi]; lo == hi is a point reading.
struct Interval {
  double lo = 0.0;
  double hi = 0.0;

  double width() const noexcept { return hi - lo; }
  bool contains(double x) const noexcept { return lo <= x && x <= hi; }
  bool contains(const Interval& other) const noexcept { return lo <= other.lo && other.hi <= hi; }
  friend bool operator==(const Interval&, const Interval&) = default;
};

/// n sensor intervals of which at most `faults` may be wrong.
struct IntervalSet {
  std::vector<Interval> intervals;
  int faults = 0;

  /// Throws InvalidInput unless every interval is finite with lo <= hi and
  /// 0 <= f < n.
  void validate() const;
  std::size_t size() const noexcept { return intervals.size(); }
  std::size_t quorum() const noexcept { return intervals.size() - static_cast<std::size_t>(faults); }
};

/// Marzullo: smallest interval covering every point that lies in at least
/// n - f intervals. nullopt when no such point exists.
std::optional<Interval> m_function(const IntervalSet& s);

/// The disjoint closed pieces of {x : at least n - f intervals contain x},
/// left to right. m_function is their envelope.
std::vector<Interval> agreement_regions(const IntervalSet& s);

/// Right-continuous step function Ω(x) = #{i : lo_i <= x <= hi_i}.
class OverlapFunction {
 public:
  struct Breakpoint {
    double x = 0.0;
    int at = 0;     // Ω(x)
    int after = 0;  // Ω on the open segment up to the next breakpoint
  };

  explicit OverlapFunction(const std::vector<Interval>& intervals);

  int operator()(double x) const;
  const std::vector<Breakpoint>& breakpoints() const noexcept { return breakpoints_; }
  /// Integral of Ω over the real line (equals the summed interval widths).
  double integral() const;

 private:
  std::vector<Breakpoint> breakpoints_;
};

OverlapFunction overlap_function(const IntervalSet& s);

/// Smallest interval covering {x : Ω(x) >= n - f}, computed from Ω's
/// breakpoints. nullopt when that set is empty.
std::optional<Interval> n_function(const IntervalSet& s);

/// Schmid-Schossmaier: a = (f+1)-th largest left end, b = (f+1)-th smallest
/// right end. a > b is reported, not thrown: it signals more than f faults.
struct SFunctionResult {
  double a = 0.0;
  double b = 0.0;

  bool consistent() const noexcept { return a <= b; }
  std::optional<Interval> interval() const {
    if (!consistent()) return std::nullopt;
    return Interval{a, b};
  }
};

SFunctionResult s_function(const IntervalSet& s);

struct FusionComparison {
  std::optional<Interval> m;
  std::optional<Interval> n;
  SFunctionResult s;
  bool m_equals_n = false;
  bool m_within_s = false;
  bool n_within_s = false;
};

FusionComparison fusion_compare(const IntervalSet& s);

}  // namespace prefixnet
