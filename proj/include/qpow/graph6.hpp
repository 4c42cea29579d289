#pragma once

#include <cstddef>
#include <istream>
#include <optional>
#include <string>
#include <string_view>
#include <variant>

#include "qpow/error.hpp"
#include "qpow/graph.hpp"

namespace qpow {

/// Largest n expressible by the one-byte N(n) prefix. Longer forms are rejected.
inline constexpr int kGraph6MaxOrder = 62;

inline constexpr std::string_view kGraph6Header = ">>graph6<<";

struct Graph6Options {
  /// Reject nonzero padding bits in the final character.
  bool strict = false;
};

/// Decodes one graph6 line. A leading ">>graph6<<" header and trailing CR/LF are
/// accepted. Throws ParseError.
Graph parse_graph6(std::string_view line, Graph6Options options = {});

/// Encodes g in graph6 with zero padding bits. Throws GraphError when n > 62.
std::string emit_graph6(const Graph& g);

/// Length of emit_graph6 for an n-vertex graph.
std::size_t graph6_length(int n);

/// One decoded line from a Graph6Reader.
struct Graph6Record {
  std::size_t line = 0;
  std::variant<Graph, ParseError> value;

  bool ok() const noexcept { return value.index() == 0; }
  const Graph& graph() const { return std::get<Graph>(value); }
  const ParseError& error() const { return std::get<ParseError>(value); }
};

/// Lazy reader over a newline-delimited graph6 stream. Blank lines are skipped.
///
/// In tolerant mode malformed lines come back as records holding a positioned
/// ParseError; in strict mode `next()` throws it instead.
class Graph6Reader {
 public:
  explicit Graph6Reader(std::istream& in, Graph6Options options = {})
      : in_(in), options_(options) {}

  /// Next record, or nullopt at end of input.
  std::optional<Graph6Record> next();

 private:
  std::istream& in_;
  Graph6Options options_;
  std::size_t line_no_ = 0;
};

}  // namespace qpow
