#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "prefixnet/pmf.hpp"

namespace prefixnet {

/// Codeword lengths n_i together with the channel alphabet size D.
struct CodeLengthSet {
  std::vector<int> lengths;
  int alphabet_size = 2;

  /// Throws InvalidInput unless every length is >= 1 and D >= 2.
  void validate() const;
};

/// A string of D-ary digits. Doubles as a root-to-node path in a D-ary tree.
class Codeword {
 public:
  Codeword() = default;
  explicit Codeword(std::vector<std::uint32_t> digits) : digits_(std::move(digits)) {}

  /// Parses "0120" (D <= 10) or dot-separated "0.11.3". Throws InvalidInput.
  static Codeword parse(std::string_view text, int alphabet_size);

  const std::vector<std::uint32_t>& digits() const noexcept { return digits_; }
  std::size_t length() const noexcept { return digits_.size(); }
  bool empty() const noexcept { return digits_.empty(); }
  std::uint32_t operator[](std::size_t i) const { return digits_[i]; }

  bool is_prefix_of(const Codeword& other) const;

  /// Plain digit string for D <= 10, dot-separated digits otherwise.
  std::string to_string(int alphabet_size) const;

  friend bool operator==(const Codeword&, const Codeword&) = default;
  friend auto operator<=>(const Codeword&, const Codeword&) = default;

 private:
  std::vector<std::uint32_t> digits_;
};

struct CodeAssignment {
  std::string label;
  Codeword codeword;
};

/// A D-ary prefix code. Construction checks digits < D and prefix-freeness.
class PrefixCode {
 public:
  PrefixCode(int alphabet_size, std::vector<CodeAssignment> assignments);

  int alphabet_size() const noexcept { return alphabet_size_; }
  const std::vector<CodeAssignment>& assignments() const noexcept { return assignments_; }
  std::size_t size() const noexcept { return assignments_.size(); }

  const Codeword* find(std::string_view label) const;
  CodeLengthSet lengths() const;

 private:
  int alphabet_size_;
  std::vector<CodeAssignment> assignments_;
};

inline constexpr double kKraftTolerance = 1e-12;

/// Sum of D^-n_i over the lengths, accumulated in input order.
double kraft_sum(const CodeLengthSet& lengths);
inline bool satisfies_kraft(double sum) { return sum <= 1.0 + kKraftTolerance; }
inline bool satisfies_kraft(const CodeLengthSet& lengths) { return satisfies_kraft(kraft_sum(lengths)); }

/// Closed form of the Kraft sum for lengths n1, n1+1, ..., n1+M-1:
/// D^-n1 (D^-M - 1) / (D^-1 - 1).
double consecutive_lengths_sum(int n1, int count, int alphabet_size);

struct ProgressionKraft {
  double sum = 0.0;
  bool satisfied = false;
};

/// Kraft sum of lengths n1, n1+step, ..., n1+(M-1)step via the geometric
/// series with ratio D^-step.
ProgressionKraft arithmetic_progression_satisfies_kraft(int n1, int step, int count, int alphabet_size);

/// Whether a length set that satisfies Kraft at its own alphabet size still
/// does at `larger_alphabet`. Throws PreconditionViolation when Kraft already
/// fails at the base alphabet, InvalidInput when larger_alphabet <= D.
bool kraft_alphabet_monotonicity(const CodeLengthSet& lengths, int larger_alphabet);

/// Optimal codeword lengths for `pmf` at alphabet size D (D-ary Huffman with
/// zero-probability padding). Ties between equal weights go to the node that
/// was created first. A single symbol gets length 1.
std::vector<int> huffman_lengths(const ProbabilityMassFunction& pmf, int alphabet_size);

/// Huffman lengths turned into a canonical code; labels follow the pmf.
PrefixCode huffman_code(const ProbabilityMassFunction& pmf, int alphabet_size);

/// Canonical code for the given lengths: sort ascending (stable on input
/// position), count upward numerically, append zero digits when the length
/// grows. Assignments are returned in input order. Throws KraftViolation.
PrefixCode code_from_lengths(const CodeLengthSet& lengths, std::span<const std::string> labels);
PrefixCode code_from_lengths(const CodeLengthSet& lengths);

/// sum p_i * |codeword_i|. Throws InvalidInput if a pmf label has no codeword.
double expected_length(const PrefixCode& code, const ProbabilityMassFunction& pmf);

/// Pairs (i, j) with codeword i a prefix of codeword j (i != j). Equal
/// codewords are reported once per ordered pair.
std::vector<std::pair<std::size_t, std::size_t>> prefix_violations(std::span<const Codeword> words);

}  // namespace prefixnet
