#include "prefixnet/io.hpp"

#include <cctype>
#include <charconv>
#include <cmath>
#include <fstream>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string_view>

#include <fmt/format.h>

#include "prefixnet/errors.hpp"

namespace prefixnet::io {

namespace {

struct Line {
  std::size_t number;
  std::vector<std::string_view> tokens;
};

std::vector<Line> tokenize(const TextSource& src) {
  std::vector<Line> lines;
  std::string_view rest(src.content);
  std::size_t number = 0;
  while (!rest.empty()) {
    ++number;
    const auto nl = rest.find('\n');
    std::string_view line = rest.substr(0, nl);
    rest = nl == std::string_view::npos ? std::string_view{} : rest.substr(nl + 1);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    Line parsed{number, {}};
    std::size_t i = 0;
    while (i < line.size()) {
      while (i < line.size() && std::isspace(static_cast<unsigned char>(line[i]))) ++i;
      std::size_t j = i;
      while (j < line.size() && !std::isspace(static_cast<unsigned char>(line[j]))) ++j;
      if (j > i) parsed.tokens.push_back(line.substr(i, j - i));
      i = j;
    }
    if (!parsed.tokens.empty()) lines.push_back(std::move(parsed));
  }
  return lines;
}

double to_double(const TextSource& src, const Line& line, std::string_view tok) {
  double value = 0.0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw ParseError(src.name, line.number, fmt::format("expected a number, got '{}'", tok));
  return value;
}

int to_int(const TextSource& src, const Line& line, std::string_view tok) {
  int value = 0;
  auto [ptr, ec] = std::from_chars(tok.data(), tok.data() + tok.size(), value);
  if (ec != std::errc{} || ptr != tok.data() + tok.size())
    throw ParseError(src.name, line.number, fmt::format("expected an integer, got '{}'", tok));
  return value;
}

void expect_tokens(const TextSource& src, const Line& line, std::size_t count, std::string_view shape) {
  if (line.tokens.size() != count)
    throw ParseError(src.name, line.number,
                     fmt::format("expected `{}` ({} fields), got {}", shape, count, line.tokens.size()));
}

/// Runs `body`, converting library validation errors into line-numbered ones.
template <typename F>
void at_line(const TextSource& src, const Line& line, F&& body) {
  try {
    body();
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(src.name, line.number, e.what());
  }
}

struct EdgeLine {
  const Line* line;
  std::string_view a, b;
  std::optional<double> weight;
};

struct EdgeFile {
  std::vector<std::pair<const Line*, std::string_view>> vertices;
  std::vector<EdgeLine> edges;
};

EdgeFile parse_edge_file(const TextSource& src, const std::vector<Line>& lines) {
  EdgeFile out;
  for (const auto& line : lines) {
    if (line.tokens.size() == 2 && line.tokens[0] == "vertex") {
      out.vertices.emplace_back(&line, line.tokens[1]);
      continue;
    }
    if (line.tokens.size() == 2) {
      out.edges.push_back({&line, line.tokens[0], line.tokens[1], std::nullopt});
    } else if (line.tokens.size() == 3) {
      out.edges.push_back({&line, line.tokens[0], line.tokens[1], to_double(src, line, line.tokens[2])});
    } else {
      throw ParseError(src.name, line.number,
                       fmt::format("expected `u v`, `u v w` or `vertex u`, got {} fields", line.tokens.size()));
    }
  }
  return out;
}

}  // namespace

TextSource read_source(const std::string& path) {
  if (path == "-") {
    std::ostringstream buffer;
    buffer << std::cin.rdbuf();
    return {"<stdin>", buffer.str()};
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw IoError(fmt::format("{}: cannot open file", path));
  std::string content((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
  if (in.bad()) throw IoError(fmt::format("{}: read error", path));
  return {path, std::move(content)};
}

ProbabilityMassFunction parse_pmf(const TextSource& src) {
  std::vector<PmfEntry> entries;
  for (const auto& line : tokenize(src)) {
    expect_tokens(src, line, 2, "label probability");
    entries.push_back({std::string(line.tokens[0]), to_double(src, line, line.tokens[1])});
  }
  try {
    return ProbabilityMassFunction(std::move(entries));
  } catch (const Error& e) {
    throw InvalidInput(fmt::format("{}: {}", src.name, e.what()));
  }
}

std::vector<int> parse_lengths(const TextSource& src) {
  std::vector<int> out;
  for (const auto& line : tokenize(src)) {
    expect_tokens(src, line, 1, "length");
    out.push_back(to_int(src, line, line.tokens[0]));
    if (out.back() < 1) throw ParseError(src.name, line.number, "codeword lengths must be >= 1");
  }
  return out;
}

Graph parse_graph(const TextSource& src) {
  const auto lines = tokenize(src);
  const auto file = parse_edge_file(src, lines);
  Graph g;
  for (const auto& [line, id] : file.vertices) at_line(src, *line, [&] { g.add_vertex(id); });
  for (const auto& e : file.edges) at_line(src, *e.line, [&] { g.add_edge(e.a, e.b); });
  return g;
}

WeightedGraph parse_weighted_graph(const TextSource& src) {
  const auto lines = tokenize(src);
  const auto file = parse_edge_file(src, lines);
  WeightedGraph g;
  for (const auto& [line, id] : file.vertices) at_line(src, *line, [&] { g.add_vertex(id); });
  for (const auto& e : file.edges) {
    if (!e.weight) throw ParseError(src.name, e.line->number, "edge has no weight; expected `u v w`");
    at_line(src, *e.line, [&] { g.add_edge(e.a, e.b, *e.weight); });
  }
  return g;
}

DiGraph parse_digraph(const TextSource& src) {
  const auto lines = tokenize(src);
  const auto file = parse_edge_file(src, lines);
  DiGraph g;
  for (const auto& [line, id] : file.vertices) at_line(src, *line, [&] { g.add_vertex(id); });
  for (const auto& e : file.edges) at_line(src, *e.line, [&] { g.add_arc(e.a, e.b); });
  return g;
}

VertexColoring parse_coloring(const TextSource& src) {
  VertexColoring out;
  for (const auto& line : tokenize(src)) {
    expect_tokens(src, line, 2, "vertex color");
    if (!out.emplace(std::string(line.tokens[0]), std::string(line.tokens[1])).second)
      throw ParseError(src.name, line.number, fmt::format("vertex '{}' colored twice", line.tokens[0]));
  }
  return out;
}

VertexCorrespondence parse_correspondence(const TextSource& src) {
  VertexCorrespondence out;
  for (const auto& line : tokenize(src)) {
    expect_tokens(src, line, 2, "u v");
    if (!out.emplace(std::string(line.tokens[0]), std::string(line.tokens[1])).second)
      throw ParseError(src.name, line.number, fmt::format("vertex '{}' mapped twice", line.tokens[0]));
  }
  return out;
}

std::map<VertexId, Point> parse_positions(const TextSource& src) {
  std::map<VertexId, Point> out;
  for (const auto& line : tokenize(src)) {
    expect_tokens(src, line, 3, "vertex x y");
    const Point p{to_double(src, line, line.tokens[1]), to_double(src, line, line.tokens[2])};
    if (!std::isfinite(p.x) || !std::isfinite(p.y)) throw ParseError(src.name, line.number, "coordinates must be finite");
    if (!out.emplace(std::string(line.tokens[0]), p).second)
      throw ParseError(src.name, line.number, fmt::format("vertex '{}' positioned twice", line.tokens[0]));
  }
  return out;
}

std::vector<Interval> parse_intervals(const TextSource& src) {
  std::vector<Interval> out;
  for (const auto& line : tokenize(src)) {
    expect_tokens(src, line, 2, "lo hi");
    const Interval iv{to_double(src, line, line.tokens[0]), to_double(src, line, line.tokens[1])};
    if (!std::isfinite(iv.lo) || !std::isfinite(iv.hi) || iv.lo > iv.hi)
      throw ParseError(src.name, line.number, fmt::format("invalid interval [{}, {}]", line.tokens[0], line.tokens[1]));
    out.push_back(iv);
  }
  return out;
}

}  // namespace prefixnet::io
