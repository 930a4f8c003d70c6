#include <random>

#include "doctest.h"
#include "fvs/graph_io.hpp"
#include "helpers.hpp"

using namespace fvs;

TEST_CASE("parse a small instance") {
  const GraphFile f = parse_graph_string(
      "# triangle\n"
      "n 3 tournament\n"
      "w 1 2 3\n"
      "a 0 1\n"
      "a 1 2\n"
      "a 2 0\n"
      "S 0 2\n");
  CHECK(f.graph.size() == 3);
  CHECK(f.graph.flagged_tournament());
  CHECK(f.graph.weight(2) == 3);
  CHECK(f.graph.has_arc(2, 0));
  REQUIRE(f.terminals);
  CHECK(*f.terminals == VertexSet{0, 2});
  CHECK(f.comments == std::vector<std::string>{"triangle"});
}

TEST_CASE("S is optional and may be empty") {
  const GraphFile f = parse_graph_string("n 2\nw 1 1\na 0 1\n");
  CHECK_FALSE(f.terminals);
  const GraphFile empty_s = parse_graph_string("n 2\nw 1 1\nS\n");
  REQUIRE(empty_s.terminals);
  CHECK(empty_s.terminals->empty());
}

TEST_CASE("parse errors carry line numbers") {
  auto line_of = [](const std::string& text) -> std::size_t {
    try {
      parse_graph_string(text);
    } catch (const ParseError& e) {
      return e.line();
    }
    return 0;
  };
  CHECK(line_of("a 0 1\n") == 1);                    // arc before header
  CHECK(line_of("n 2\na 0 0\n") == 2);               // self-loop
  CHECK(line_of("n 2\na 0 1\na 0 1\n") == 3);        // duplicate arc
  CHECK(line_of("n 2\nw 1\n") == 2);                 // wrong weight count
  CHECK(line_of("n 2\nw 1 -3\n") == 2);              // negative weight
  CHECK(line_of("n 2\na 0 5\n") == 2);               // out of range
  CHECK(line_of("n 3 tournament\nw 1 1 1\na 0 1\n") == 1);  // missing pairs, reported at the header
  CHECK(line_of("n 2\nx 1\n") == 2);                 // unknown record
  CHECK(line_of("n 2\nS 1 1\n") == 2);               // repeated terminal
  CHECK(line_of("n 2\na 0 1\n") == 2);               // no weight line
  CHECK_THROWS_AS(parse_graph_string(""), ParseError);
  CHECK_THROWS_AS(read_graph_file("/nonexistent/graph.txt"), ParseError);
}

TEST_CASE("format then parse reproduces the instance") {
  std::mt19937_64 rng(6);
  for (int i = 0; i < 50; ++i) {
    GraphFile f;
    f.graph = (i % 2) ? testutil::random_tournament(rng, 9, 7) : testutil::random_digraph(rng, 9, 0.3, 7);
    if (i % 3 == 0) f.terminals = testutil::random_subset(rng, 9, 0.5);
    f.comments = {"case " + std::to_string(i)};
    const std::string text = format_graph(f);
    const GraphFile back = parse_graph_string(text);
    CHECK(back.graph == f.graph);
    CHECK(back.terminals == f.terminals);
    CHECK(back.comments == f.comments);
    CHECK(format_graph(back) == text);
  }
}
