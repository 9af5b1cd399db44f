#include <doctest.h>

#include <random>

#include "oracles.hpp"
#include "sudoku/graph.hpp"

using namespace sudoku;

namespace {

// Reference graph6 writer: upper-triangle bits column by column, padded to a
// multiple of six, each sextet biased by 63. Only handles n < 63.
std::string reference_graph6(std::size_t n, const std::vector<Edge>& edges) {
  oracle::Matrix m(n, std::vector<bool>(n, false));
  for (auto [u, v] : edges) m[u][v] = m[v][u] = true;
  std::string bits;
  for (std::size_t j = 1; j < n; ++j)
    for (std::size_t i = 0; i < j; ++i) bits += m[i][j] ? '1' : '0';
  while (bits.size() % 6) bits += '0';
  std::string out(1, static_cast<char>(n + 63));
  for (std::size_t i = 0; i < bits.size(); i += 6) out += static_cast<char>(std::stoi(bits.substr(i, 6), nullptr, 2) + 63);
  return out;
}

}  // namespace

TEST_CASE("graph6 fixtures agree with the reference encoder") {
  CHECK(reference_graph6(2, {}) == "A?");
  CHECK(reference_graph6(2, {{0, 1}}) == "A_");
  CHECK(reference_graph6(3, {{0, 1}, {0, 2}, {1, 2}}) == "Bw");
  CHECK(reference_graph6(1, {}) == "@");
  CHECK(reference_graph6(4, {{0, 1}, {2, 3}}) == "C`");
}

TEST_CASE("parse_graph6 decodes small records") {
  auto e2 = parse_graph6("A?");
  CHECK(e2.order() == 2);
  CHECK(e2.edge_count() == 0);

  auto k2 = parse_graph6("A_");
  CHECK(k2.order() == 2);
  CHECK(k2.edges() == std::vector<Edge>{{0, 1}});

  auto k3 = parse_graph6("Bw");
  CHECK(k3 == generate(parse_family_spec("complete:3")));

  auto two_k2 = parse_graph6("C`");
  CHECK(two_k2.edges() == std::vector<Edge>{{0, 1}, {2, 3}});

  CHECK(parse_graph6(">>graph6<<Bw\n") == k3);
  CHECK(parse_graph6("?").order() == 0);
}

TEST_CASE("to_graph6 encodes small graphs") {
  CHECK(to_graph6(generate({Family::complete, {3}})) == "Bw");
  CHECK(to_graph6(Graph(2)) == "A?");
  CHECK(to_graph6(Graph(1)) == "@");
}

TEST_CASE("graph6 errors name the byte offset") {
  auto offset_of = [](std::string_view text) -> std::size_t {
    try {
      parse_graph6(text);
    } catch (const ParseError& e) {
      return e.offset();
    }
    FAIL("expected a parse error for " << text);
    return 0;
  };
  CHECK_THROWS_AS(parse_graph6(""), ParseError);
  CHECK(offset_of("B") == 1);      // truncated payload
  CHECK(offset_of("A@") == 1);     // padding bit set (n=2 uses 1 of 6 bits)
  CHECK(offset_of("B w") == 1);    // byte below 63
  CHECK(offset_of("A?A") == 2);    // trailing byte
  CHECK_THROWS_AS(parse_graph6("~~??????????"), ParseError);
  CHECK_THROWS_AS(parse_graph6("~?B?"), ParseError);  // order 129 > capacity
}

TEST_CASE("graph6 round trip on families and random graphs") {
  for (const char* spec : {"complete:7", "path:9", "cycle:12", "complete_bipartite:3:4", "sudoku:2", "sudoku:3",
                           "edgeless:5", "complete:63", "path:100", "complete:128"}) {
    const Graph g = generate(parse_family_spec(spec));
    INFO(spec);
    CHECK(parse_graph6(to_graph6(g)) == g);
  }
  std::mt19937_64 rng(7);
  for (int trial = 0; trial < 200; ++trial) {
    const std::size_t n = std::uniform_int_distribution<std::size_t>(0, 70)(rng);
    const Graph g = oracle::random_graph(rng, n, 0.3);
    const auto text = to_graph6(g);
    CHECK(parse_graph6(text) == g);
    if (n < 63) CHECK(text == reference_graph6(n, g.edges()));
  }
}

TEST_CASE("to_graph6 rejects nothing within capacity and Graph rejects beyond it") {
  CHECK_THROWS_AS(Graph(kMaxVertices + 1), PreconditionError);
}

TEST_CASE("sudoku family structure") {
  const Graph s2 = generate({Family::sudoku, {2}});
  CHECK(s2.order() == 16);
  CHECK(s2.edge_count() == 56);
  for (Vertex v = 0; v < 16; ++v) CHECK(s2.degree(v) == 7);

  const Graph s3 = generate({Family::sudoku, {3}});
  CHECK(s3.order() == 81);
  CHECK(s3.edge_count() == 810);
  for (Vertex v = 0; v < 81; ++v) CHECK(s3.degree(v) == 20);

  // Any row induces a clique on k^2 cells.
  for (Vertex row = 0; row < 9; ++row) {
    VertexSet cells;
    for (Vertex c = 0; c < 9; ++c) cells.set(row * 9 + c);
    CHECK(is_complete(induced_subgraph(s3, cells)));
  }

  // Independent check of the sudoku 2 adjacency from cell coordinates.
  for (Vertex x = 0; x < 16; ++x)
    for (Vertex y = 0; y < 16; ++y) {
      const bool same = x / 4 == y / 4 || x % 4 == y % 4 || (x / 8 == y / 8 && (x % 4) / 2 == (y % 4) / 2);
      CHECK(s2.adjacent(x, y) == (x != y && same));
    }
  CHECK_THROWS_AS(generate({Family::sudoku, {1}}), PreconditionError);
  CHECK_THROWS_AS(generate({Family::sudoku, {4}}), PreconditionError);
}

TEST_CASE("family generators") {
  CHECK(generate({Family::complete, {4}}).edge_count() == 6);
  CHECK(generate({Family::path, {5}}).edge_count() == 4);
  CHECK(generate({Family::cycle, {5}}).edge_count() == 5);
  CHECK(generate({Family::complete_bipartite, {2, 3}}).edge_count() == 6);
  CHECK(generate({Family::edgeless, {4}}).edge_count() == 0);
  CHECK_THROWS_AS(generate({Family::cycle, {2}}), PreconditionError);
  CHECK_THROWS_AS(generate({Family::complete, {0}}), PreconditionError);
  CHECK_THROWS_AS(generate({Family::complete_bipartite, {2}}), PreconditionError);

  for (const char* spec : {"complete:6", "path:7", "cycle:8", "complete_bipartite:2:5", "sudoku:2", "sudoku:3", "edgeless:3"}) {
    const Graph g = generate(parse_family_spec(spec));
    std::size_t degree_sum = 0;
    for (Vertex v = 0; v < g.order(); ++v) degree_sum += g.degree(v);
    CHECK(degree_sum == 2 * g.edge_count());
  }
}

TEST_CASE("family spec grammar") {
  CHECK(parse_family_spec("complete_bipartite:2:3") == FamilySpec{Family::complete_bipartite, {2, 3}});
  CHECK(to_string(parse_family_spec("cycle:5")) == "cycle:5");
  CHECK_THROWS_AS(parse_family_spec("cycle"), ParseError);
  CHECK_THROWS_AS(parse_family_spec("wheel:5"), ParseError);
  CHECK_THROWS_AS(parse_family_spec("cycle:x"), ParseError);
  CHECK_THROWS_AS(parse_family_spec("cycle:5:6"), ParseError);
  CHECK_THROWS_AS(parse_family_spec("complete_bipartite:2"), ParseError);
}

TEST_CASE("edge list parsing") {
  CHECK(parse_edge_list("0 1\n1 2\n") == generate({Family::path, {3}}));
  const Graph g = parse_edge_list("# two edges\n5\n0 1\n2 3 # trailing\n\n");
  CHECK(g.order() == 5);
  CHECK(g.edges() == std::vector<Edge>{{0, 1}, {2, 3}});
  CHECK(parse_edge_list("0,1\r\n").edge_count() == 1);
  CHECK_THROWS_AS(parse_edge_list("0 0\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("0 1 2\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("0 x\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("2\n0 5\n"), ParseError);
  CHECK_THROWS_AS(parse_edge_list("0 1\n4\n"), ParseError);
}

TEST_CASE("is_connected and is_complete") {
  CHECK(is_connected(generate({Family::path, {3}})));
  CHECK_FALSE(is_connected(parse_graph6("C`")));
  CHECK_FALSE(is_connected(Graph::from_edges(4, {{0, 1}, {2, 3}})));
  CHECK(is_connected(Graph(1)));
  CHECK(is_connected(Graph(0)));

  CHECK(is_complete(generate({Family::complete, {5}})));
  Graph k4e = generate({Family::complete, {4}});
  k4e = Graph::from_edges(4, {{0, 1}, {0, 2}, {1, 2}, {1, 3}, {2, 3}});
  CHECK_FALSE(is_complete(k4e));
  CHECK(is_complete(Graph(1)));
  CHECK(is_complete(Graph(0)));

  std::mt19937_64 rng(11);
  for (int trial = 0; trial < 300; ++trial) {
    const Graph g = oracle::random_graph(rng, 1 + trial % 9, 0.25);
    CHECK(is_connected(g) == oracle::connected(oracle::matrix_of(g)));
  }
}

TEST_CASE("graph rejects loops and out-of-range endpoints") {
  Graph g(3);
  CHECK_THROWS_AS(g.add_edge(1, 1), PreconditionError);
  CHECK_THROWS_AS(g.add_edge(0, 3), PreconditionError);
  g.add_edge(2, 0);
  CHECK(g.adjacent(0, 2));
  CHECK(g.adjacent(2, 0));
}
