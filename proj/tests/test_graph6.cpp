#include <doctest.h>

#include <sstream>

#include "oracles.hpp"
#include "qpow/error.hpp"
#include "qpow/graph6.hpp"

using namespace qpow;

TEST_SUITE("graph6") {
  TEST_CASE("hand-encoded strings") {
    CHECK(parse_graph6("@") == Graph(1, {}));
    CHECK(parse_graph6("Bw") == complete(3));
    CHECK(parse_graph6("C~") == complete(4));
    CHECK(emit_graph6(Graph(1, {})) == "@");
    CHECK(emit_graph6(Graph(3, {{0, 1}, {1, 2}})) == "Bg");
  }

  TEST_CASE("header and line endings are accepted") {
    CHECK(parse_graph6(">>graph6<<Bw") == complete(3));
    CHECK(parse_graph6("Bw\n") == complete(3));
    CHECK(parse_graph6("Bw\r\n") == complete(3));
  }

  TEST_CASE("malformed input") {
    CHECK_THROWS_AS(parse_graph6(""), ParseError);
    CHECK_THROWS_AS(parse_graph6("!!"), ParseError);
    CHECK_THROWS_AS(parse_graph6("?"), ParseError);         // n = 0
    CHECK_THROWS_AS(parse_graph6("C"), ParseError);         // truncated
    CHECK_THROWS_AS(parse_graph6("Bww"), ParseError);       // trailing data
    CHECK_THROWS_AS(parse_graph6("~?@A"), ParseError);      // extended length form
    CHECK_THROWS_AS(parse_graph6("B\x7f"), ParseError);
  }

  TEST_CASE("padding bits") {
    // K3 uses 3 of 6 bits; "Bx" sets a padding bit.
    CHECK(parse_graph6("Bx") == complete(3));
    CHECK_THROWS_AS(parse_graph6("Bx", {true}), ParseError);
    CHECK(parse_graph6("Bw", {true}) == complete(3));
  }

  TEST_CASE("emit matches the format definition and round-trips, n <= 5") {
    for (int n = 1; n <= 5; ++n) {
      int count = 0;
      oracle::for_each_graph(n, [&](const Graph& g) {
        const std::string text = emit_graph6(g);
        REQUIRE(text == oracle::graph6(g));
        REQUIRE(text.size() == graph6_length(n));
        REQUIRE(parse_graph6(text) == g);
        REQUIRE(emit_graph6(parse_graph6(text)) == text);
        ++count;
      });
      CHECK(count == 1 << (n * (n - 1) / 2));
    }
  }

  TEST_CASE("emitted length up to the largest order") {
    for (int n = 1; n <= kGraph6MaxOrder; ++n) {
      const std::size_t pairs = static_cast<std::size_t>(n) * (n - 1) / 2;
      CHECK(graph6_length(n) == 1 + (pairs + 5) / 6);
      CHECK(emit_graph6(complete(n)).size() == graph6_length(n));
      CHECK(parse_graph6(emit_graph6(cycle(std::max(n, 3)))) == cycle(std::max(n, 3)));
    }
    CHECK_THROWS_AS(emit_graph6(Graph::empty(63)), GraphError);
  }

  TEST_CASE("stream reader") {
    std::istringstream in("@\n\nBw\n");
    Graph6Reader reader(in);
    auto a = reader.next();
    auto b = reader.next();
    REQUIRE(a);
    REQUIRE(b);
    CHECK(a->graph() == Graph(1, {}));
    CHECK(b->graph() == complete(3));
    CHECK(b->line == 3);
    CHECK_FALSE(reader.next());
  }

  TEST_CASE("stream reader strips a header") {
    std::istringstream in(">>graph6<<Bw\nC~\n");
    Graph6Reader reader(in);
    CHECK(reader.next()->graph() == complete(3));
    CHECK(reader.next()->graph() == complete(4));
  }

  TEST_CASE("stream errors carry the line") {
    std::istringstream tolerant_in("!!\nBw\n");
    Graph6Reader tolerant(tolerant_in);
    auto bad = tolerant.next();
    REQUIRE(bad);
    REQUIRE_FALSE(bad->ok());
    CHECK(bad->error().line() == 1);
    CHECK(tolerant.next()->ok());

    std::istringstream strict_in("Bw\n!!\n");
    Graph6Reader strict(strict_in, {true});
    CHECK(strict.next()->ok());
    try {
      strict.next();
      FAIL("expected a ParseError");
    } catch (const ParseError& e) {
      CHECK(e.line() == 2);
    }
  }
}
