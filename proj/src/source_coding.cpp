#include "prefixnet/source_coding.hpp"

#include <algorithm>
#include <charconv>
#include <cmath>
#include <numeric>
#include <queue>
#include <unordered_set>

#include <fmt/format.h>

#include "prefixnet/errors.hpp"

namespace prefixnet {

void CodeLengthSet::validate() const {
  if (alphabet_size < 2) throw InvalidInput(fmt::format("alphabet size must be >= 2, got {}", alphabet_size));
  for (int n : lengths)
    if (n < 1) throw InvalidInput(fmt::format("codeword lengths must be >= 1, got {}", n));
}

Codeword Codeword::parse(std::string_view text, int alphabet_size) {
  std::vector<std::uint32_t> digits;
  auto push = [&](std::string_view tok) {
    std::uint32_t d = 0;
    auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), d);
    if (tok.empty() || ec != std::errc{} || ptr != tok.data() + tok.size())
      throw InvalidInput(fmt::format("bad digit '{}' in codeword '{}'", tok, text));
    if (d >= static_cast<std::uint32_t>(alphabet_size))
      throw InvalidInput(fmt::format("digit {} out of range for alphabet size {}", d, alphabet_size));
    digits.push_back(d);
  };
  if (text.find('.') != std::string_view::npos) {
    std::size_t start = 0;
    while (true) {
      auto dot = text.find('.', start);
      push(text.substr(start, dot == std::string_view::npos ? std::string_view::npos : dot - start));
      if (dot == std::string_view::npos) break;
      start = dot + 1;
    }
  } else {
    for (std::size_t i = 0; i < text.size(); ++i) push(text.substr(i, 1));
  }
  return Codeword(std::move(digits));
}

bool Codeword::is_prefix_of(const Codeword& other) const {
  return digits_.size() <= other.digits_.size() &&
         std::equal(digits_.begin(), digits_.end(), other.digits_.begin());
}

std::string Codeword::to_string(int alphabet_size) const {
  std::string out;
  for (std::size_t i = 0; i < digits_.size(); ++i) {
    if (alphabet_size > 10 && i > 0) out += '.';
    out += std::to_string(digits_[i]);
  }
  return out;
}

PrefixCode::PrefixCode(int alphabet_size, std::vector<CodeAssignment> assignments)
    : alphabet_size_(alphabet_size), assignments_(std::move(assignments)) {
  if (alphabet_size_ < 2) throw InvalidInput("alphabet size must be >= 2");
  std::unordered_set<std::string> labels;
  std::vector<Codeword> words;
  words.reserve(assignments_.size());
  for (const auto& a : assignments_) {
    if (!labels.insert(a.label).second) throw InvalidInput(fmt::format("duplicate code label '{}'", a.label));
    for (auto d : a.codeword.digits())
      if (d >= static_cast<std::uint32_t>(alphabet_size_))
        throw InvalidInput(fmt::format("codeword for '{}' has digit {} >= {}", a.label, d, alphabet_size_));
    words.push_back(a.codeword);
  }
  auto bad = prefix_violations(words);
  if (!bad.empty())
    throw InvalidInput(fmt::format("codeword of '{}' is a prefix of codeword of '{}'",
                                   assignments_[bad.front().first].label, assignments_[bad.front().second].label));
}

const Codeword* PrefixCode::find(std::string_view label) const {
  for (const auto& a : assignments_)
    if (a.label == label) return &a.codeword;
  return nullptr;
}

CodeLengthSet PrefixCode::lengths() const {
  CodeLengthSet out{{}, alphabet_size_};
  for (const auto& a : assignments_) out.lengths.push_back(static_cast<int>(a.codeword.length()));
  return out;
}

double kraft_sum(const CodeLengthSet& lengths) {
  lengths.validate();
  const double d = lengths.alphabet_size;
  double sum = 0.0;
  for (int n : lengths.lengths) sum += std::pow(d, -n);
  return sum;
}

double consecutive_lengths_sum(int n1, int count, int alphabet_size) {
  if (n1 < 1 || count < 1) throw InvalidInput("consecutive lengths need n1 >= 1 and M >= 1");
  if (alphabet_size < 2) throw InvalidInput("alphabet size must be >= 2");
  const double d = alphabet_size;
  return std::pow(d, -n1) * ((std::pow(d, -count) - 1.0) / (1.0 / d - 1.0));
}

ProgressionKraft arithmetic_progression_satisfies_kraft(int n1, int step, int count, int alphabet_size) {
  if (n1 < 1 || step < 1 || count < 1) throw InvalidInput("progression needs n1 >= 1, step >= 1, M >= 1");
  if (alphabet_size < 2) throw InvalidInput("alphabet size must be >= 2");
  const double d = alphabet_size;
  const double ratio = std::pow(d, -step);
  const double sum = std::pow(d, -n1) * (1.0 - std::pow(ratio, count)) / (1.0 - ratio);
  return {sum, satisfies_kraft(sum)};
}

bool kraft_alphabet_monotonicity(const CodeLengthSet& lengths, int larger_alphabet) {
  lengths.validate();
  if (larger_alphabet <= lengths.alphabet_size)
    throw InvalidInput(fmt::format("comparison alphabet {} must exceed base alphabet {}", larger_alphabet,
                                   lengths.alphabet_size));
  const double base = kraft_sum(lengths);
  if (!satisfies_kraft(base))
    throw PreconditionViolation(
        fmt::format("Kraft sum {:.12g} already exceeds 1 at alphabet size {}", base, lengths.alphabet_size));
  return satisfies_kraft(kraft_sum({lengths.lengths, larger_alphabet}));
}

std::vector<int> huffman_lengths(const ProbabilityMassFunction& pmf, int alphabet_size) {
  if (alphabet_size < 2) throw InvalidInput("alphabet size must be >= 2");
  const std::size_t n = pmf.size();
  if (n == 1) return {1};

  const std::size_t arity = static_cast<std::size_t>(alphabet_size);
  std::size_t dummies = 0;
  while ((n + dummies - 1) % (arity - 1) != 0) ++dummies;

  // Node ids double as creation order: dummies, then symbols, then merges.
  using Item = std::pair<double, std::size_t>;
  std::priority_queue<Item, std::vector<Item>, std::greater<>> queue;
  std::vector<std::size_t> parent;
  std::size_t next_id = 0;
  for (std::size_t i = 0; i < dummies; ++i) {
    queue.emplace(0.0, next_id++);
    parent.push_back(0);
  }
  for (const auto& e : pmf.entries()) {
    queue.emplace(e.p, next_id++);
    parent.push_back(0);
  }
  while (queue.size() > 1) {
    double weight = 0.0;
    const std::size_t merged = next_id++;
    parent.push_back(merged);  // root keeps a self-reference
    for (std::size_t k = 0; k < arity; ++k) {
      auto [w, id] = queue.top();
      queue.pop();
      weight += w;
      parent[id] = merged;
    }
    queue.emplace(weight, merged);
  }

  std::vector<int> depth(parent.size(), 0);
  for (std::size_t id = parent.size() - 1; id-- > 0;) depth[id] = depth[parent[id]] + 1;

  std::vector<int> lengths(n);
  for (std::size_t i = 0; i < n; ++i) lengths[i] = depth[dummies + i];
  return lengths;
}

PrefixCode huffman_code(const ProbabilityMassFunction& pmf, int alphabet_size) {
  std::vector<std::string> labels;
  labels.reserve(pmf.size());
  for (const auto& e : pmf.entries()) labels.push_back(e.label);
  return code_from_lengths({huffman_lengths(pmf, alphabet_size), alphabet_size}, labels);
}

PrefixCode code_from_lengths(const CodeLengthSet& lengths, std::span<const std::string> labels) {
  lengths.validate();
  if (labels.size() != lengths.lengths.size()) throw InvalidInput("label count does not match length count");
  const double sum = kraft_sum(lengths);
  if (!satisfies_kraft(sum))
    throw KraftViolation(fmt::format("Kraft sum {:.12g} > 1 at alphabet size {}: no prefix code exists", sum,
                                     lengths.alphabet_size));

  const auto n = lengths.lengths.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return lengths.lengths[a] < lengths.lengths[b]; });

  const auto top = static_cast<std::uint32_t>(lengths.alphabet_size - 1);
  std::vector<Codeword> words(n);
  std::vector<std::uint32_t> current;
  for (std::size_t k = 0; k < n; ++k) {
    if (k > 0) {
      // increment in base D; a carry out of the first digit means the tree is full
      std::size_t pos = current.size();
      while (pos > 0 && current[pos - 1] == top) current[--pos] = 0;
      if (pos == 0)
        throw KraftViolation(fmt::format("no room for codeword of length {}", lengths.lengths[order[k]]));
      ++current[pos - 1];
    }
    current.resize(static_cast<std::size_t>(lengths.lengths[order[k]]), 0);
    words[order[k]] = Codeword(current);
  }

  std::vector<CodeAssignment> out;
  out.reserve(n);
  for (std::size_t i = 0; i < n; ++i) out.push_back({labels[i], std::move(words[i])});
  return PrefixCode(lengths.alphabet_size, std::move(out));
}

PrefixCode code_from_lengths(const CodeLengthSet& lengths) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < lengths.lengths.size(); ++i) labels.push_back(std::to_string(i));
  return code_from_lengths(lengths, labels);
}

double expected_length(const PrefixCode& code, const ProbabilityMassFunction& pmf) {
  double total = 0.0;
  for (const auto& e : pmf.entries()) {
    const Codeword* w = code.find(e.label);
    if (w == nullptr) throw InvalidInput(fmt::format("no codeword for pmf label '{}'", e.label));
    total += e.p * static_cast<double>(w->length());
  }
  return total;
}

std::vector<std::pair<std::size_t, std::size_t>> prefix_violations(std::span<const Codeword> words) {
  std::vector<std::pair<std::size_t, std::size_t>> out;
  for (std::size_t i = 0; i < words.size(); ++i)
    for (std::size_t j = 0; j < words.size(); ++j)
      if (i != j && words[i].is_prefix_of(words[j]) && !(words[i] == words[j] && i > j)) out.emplace_back(i, j);
  return out;
}

}  // namespace prefixnet
