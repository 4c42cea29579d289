#include "qpow/graph6.hpp"

#include <string>
#include <vector>

#include "qpow/error.hpp"

namespace qpow {

namespace {

constexpr int kBias = 63;
constexpr char kMinChar = 63;
constexpr char kMaxChar = 126;

std::string_view strip(std::string_view line) {
  if (line.starts_with(kGraph6Header)) line.remove_prefix(kGraph6Header.size());
  while (!line.empty() && (line.back() == '\n' || line.back() == '\r')) line.remove_suffix(1);
  return line;
}

std::size_t pair_count(int n) {
  return static_cast<std::size_t>(n) * static_cast<std::size_t>(n - 1) / 2;
}

}  // namespace

std::size_t graph6_length(int n) { return 1 + (pair_count(n) + 5) / 6; }

Graph parse_graph6(std::string_view line, Graph6Options options) {
  line = strip(line);
  if (line.empty()) throw ParseError("empty graph6 string");
  for (std::size_t pos = 0; pos < line.size(); ++pos) {
    if (line[pos] < kMinChar || line[pos] > kMaxChar) {
      throw ParseError("character " + std::to_string(static_cast<int>(
                                          static_cast<unsigned char>(line[pos]))) +
                       " at offset " + std::to_string(pos) + " outside 63..126");
    }
  }
  if (line[0] == kMaxChar) {
    throw ParseError("extended graph6 size prefix (n > " + std::to_string(kGraph6MaxOrder) +
                     ") is not supported");
  }
  const int n = line[0] - kBias;
  if (n == 0) throw ParseError("graph6 string encodes an empty vertex set");

  const std::size_t expected = graph6_length(n);
  if (line.size() < expected) {
    throw ParseError("truncated graph6 string: " + std::to_string(line.size()) +
                     " characters, expected " + std::to_string(expected));
  }
  if (line.size() > expected) {
    throw ParseError("graph6 string has " + std::to_string(line.size() - expected) +
                     " trailing characters");
  }

  std::vector<Edge> edges;
  std::size_t bit = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++bit) {
      const int chunk = line[1 + bit / 6] - kBias;
      if ((chunk >> (5 - bit % 6)) & 1) edges.emplace_back(u, v);
    }
  }
  if (options.strict && bit % 6 != 0) {
    const int chunk = line[1 + bit / 6] - kBias;
    const int padding = chunk & ((1 << (6 - bit % 6)) - 1);
    if (padding != 0) throw ParseError("nonzero padding bits in graph6 string");
  }
  return Graph(n, edges);
}

std::string emit_graph6(const Graph& g) {
  const int n = g.order();
  if (n > kGraph6MaxOrder) {
    throw GraphError("graph6 short form supports n <= " + std::to_string(kGraph6MaxOrder));
  }
  std::string out(graph6_length(n), static_cast<char>(kBias));
  out[0] = static_cast<char>(n + kBias);
  std::size_t bit = 0;
  for (int v = 1; v < n; ++v) {
    for (int u = 0; u < v; ++u, ++bit) {
      if (g.has_edge(u, v)) {
        out[1 + bit / 6] = static_cast<char>(out[1 + bit / 6] + (1 << (5 - bit % 6)));
      }
    }
  }
  return out;
}

std::optional<Graph6Record> Graph6Reader::next() {
  std::string text;
  while (std::getline(in_, text)) {
    ++line_no_;
    std::string_view body = strip(text);
    if (body.empty()) continue;
    try {
      return Graph6Record{line_no_, parse_graph6(body, options_)};
    } catch (const ParseError& e) {
      ParseError positioned(e.what(), line_no_);
      if (options_.strict) throw positioned;
      return Graph6Record{line_no_, positioned};
    }
  }
  return std::nullopt;
}

}  // namespace qpow
