#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace prefixnet {

struct PmfEntry {
  std::string label;
  double p = 0.0;
};

/// Labeled probability mass function. Entries keep their construction order,
/// which is the order every downstream tie-break refers to.
class ProbabilityMassFunction {
 public:
  static constexpr double kSumTolerance = 1e-9;

  /// Throws InvalidInput unless labels are unique, every p is finite and
  /// nonnegative, and the total is 1 within kSumTolerance. Inputs are never
  /// renormalized.
  explicit ProbabilityMassFunction(std::vector<PmfEntry> entries);

  /// Builds a pmf from nonnegative weights by dividing by their sum.
  static ProbabilityMassFunction from_weights(std::vector<std::string> labels,
                                              const std::vector<double>& weights);

  std::size_t size() const noexcept { return entries_.size(); }
  const std::vector<PmfEntry>& entries() const noexcept { return entries_; }
  const PmfEntry& operator[](std::size_t i) const { return entries_[i]; }

  std::optional<double> probability(std::string_view label) const;
  std::vector<double> probabilities() const;

 private:
  std::vector<PmfEntry> entries_;
};

/// -sum p log_base p with 0 log 0 = 0. Terms are accumulated in ascending
/// order of p, so the value depends only on the multiset of probabilities.
double shannon_entropy(const ProbabilityMassFunction& pmf, double base = 2.0);
double shannon_entropy(std::vector<double> probabilities, double base = 2.0);

}  // namespace prefixnet
