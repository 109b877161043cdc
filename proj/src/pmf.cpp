#include "prefixnet/pmf.hpp"

#include <algorithm>
#include <cmath>
#include <unordered_set>

#include <fmt/format.h>

#include "prefixnet/errors.hpp"

namespace prefixnet {

ProbabilityMassFunction::ProbabilityMassFunction(std::vector<PmfEntry> entries)
    : entries_(std::move(entries)) {
  if (entries_.empty()) throw InvalidInput("empty pmf");
  std::unordered_set<std::string> seen;
  double total = 0.0;
  for (const auto& e : entries_) {
    if (!seen.insert(e.label).second)
      throw InvalidInput(fmt::format("duplicate pmf label '{}'", e.label));
    if (!std::isfinite(e.p) || e.p < 0.0)
      throw InvalidInput(fmt::format("probability of '{}' is not a finite nonnegative number", e.label));
    total += e.p;
  }
  if (std::abs(total - 1.0) > kSumTolerance)
    throw InvalidInput(fmt::format("pmf sums to {:.12g}, expected 1 within {}", total, kSumTolerance));
}

ProbabilityMassFunction ProbabilityMassFunction::from_weights(std::vector<std::string> labels,
                                                              const std::vector<double>& weights) {
  if (labels.size() != weights.size()) throw InvalidInput("label/weight count mismatch");
  double total = 0.0;
  for (double w : weights) {
    if (!std::isfinite(w) || w < 0.0) throw InvalidInput("weights must be finite and nonnegative");
    total += w;
  }
  if (!(total > 0.0)) throw InvalidInput("weights sum to zero");
  std::vector<PmfEntry> entries;
  entries.reserve(labels.size());
  for (std::size_t i = 0; i < labels.size(); ++i)
    entries.push_back({std::move(labels[i]), weights[i] / total});
  return ProbabilityMassFunction(std::move(entries));
}

std::optional<double> ProbabilityMassFunction::probability(std::string_view label) const {
  for (const auto& e : entries_)
    if (e.label == label) return e.p;
  return std::nullopt;
}

std::vector<double> ProbabilityMassFunction::probabilities() const {
  std::vector<double> out;
  out.reserve(entries_.size());
  for (const auto& e : entries_) out.push_back(e.p);
  return out;
}

double shannon_entropy(std::vector<double> probabilities, double base) {
  if (!(base > 1.0)) throw InvalidInput("entropy base must exceed 1");
  std::sort(probabilities.begin(), probabilities.end());
  const bool bits = base == 2.0;
  const double log_base = std::log(base);
  double h = 0.0;
  for (double p : probabilities) {
    if (p <= 0.0) continue;
    h -= p * (bits ? std::log2(p) : std::log(p) / log_base);
  }
  // avoid printing -0 for degenerate pmfs
  return h == 0.0 ? 0.0 : h;
}

double shannon_entropy(const ProbabilityMassFunction& pmf, double base) {
  return shannon_entropy(pmf.probabilities(), base);
}

}  // namespace prefixnet
