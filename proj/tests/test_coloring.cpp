#include <doctest.h>

#include <algorithm>
#include <array>
#include <numeric>
#include <random>

#include "oracles.hpp"
#include "sudoku/coloring.hpp"
#include "sudoku/error.hpp"

using namespace sudoku;

namespace {

Graph family(const char* spec) { return generate(parse_family_spec(spec)); }

std::vector<std::vector<Colour>> sequences(const ColoringEnumeration& e) {
  std::vector<std::vector<Colour>> out;
  for (const auto& c : e.colorings) out.push_back(c.colours());
  return out;
}

// Shidoku grids counted row by row: each row is a permutation of 1..4,
// columns and 2x2 boxes must not repeat.
std::size_t count_shidoku_grids() {
  std::vector<std::array<int, 4>> perms;
  std::array<int, 4> p{1, 2, 3, 4};
  do perms.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  std::size_t count = 0;
  for (const auto& r0 : perms)
    for (const auto& r1 : perms)
      for (const auto& r2 : perms)
        for (const auto& r3 : perms) {
          const std::array<const std::array<int, 4>*, 4> rows{&r0, &r1, &r2, &r3};
          bool ok = true;
          for (int c = 0; c < 4 && ok; ++c)
            for (int a = 0; a < 4 && ok; ++a)
              for (int b = a + 1; b < 4 && ok; ++b)
                if ((*rows[a])[c] == (*rows[b])[c]) ok = false;
          for (int band = 0; band < 4 && ok; band += 2)
            for (int stack = 0; stack < 4 && ok; stack += 2) {
              std::array<bool, 5> seen{};
              for (int r = band; r < band + 2; ++r)
                for (int c = stack; c < stack + 2; ++c) {
                  if (seen[(*rows[r])[c]]) ok = false;
                  seen[(*rows[r])[c]] = true;
                }
            }
          if (ok) ++count;
        }
  return count;
}

}  // namespace

TEST_CASE("is_proper") {
  const Graph c4 = family("cycle:4");
  CHECK(is_proper(c4, PartialColoring({1, 2, 1, 2}, 2)));
  const Graph k2 = family("complete:2");
  CHECK_FALSE(is_proper(k2, PartialColoring({1, 1}, 1)));
  CHECK(is_proper(k2, PartialColoring({1, kUncoloured}, 2)));
  CHECK(is_proper(k2, PartialColoring({kUncoloured, kUncoloured}, 2)));
  CHECK_THROWS_AS(is_proper(k2, PartialColoring({1}, 2)), PreconditionError);
}

TEST_CASE("Coloring validates its palette") {
  CHECK_THROWS_AS(Coloring({1, 0}, 2), PreconditionError);
  CHECK_THROWS_AS(Coloring({1, 3}, 2), PreconditionError);
  CHECK(Coloring({1, 2, 1}, 2).colours_used() == 2);
}

TEST_CASE("chromatic_number named values") {
  CHECK(chromatic_number(family("cycle:5")).chi == 3);
  CHECK(chromatic_number(family("complete:6")).chi == 6);
  const auto s2 = chromatic_number(family("sudoku:2"));
  CHECK(s2.chi == 4);
  CHECK(is_proper(family("sudoku:2"), s2.witness));
  CHECK(chromatic_number(Graph(0)).chi == 0);
  CHECK(chromatic_number(Graph(3)).chi == 1);
}

TEST_CASE("chromatic_number of complete graphs") {
  for (unsigned n = 1; n <= 8; ++n) {
    const auto cert = chromatic_number(generate({Family::complete, {n}}));
    CHECK(cert.chi == n);
    CHECK(cert.witness.colours_used() == n);
  }
}

TEST_CASE("chromatic_number agrees with exhaustive assignment") {
  for (std::size_t n = 1; n <= 5; ++n) {
    const std::size_t pairs = n * (n - 1) / 2;
    for (std::uint64_t index = 0; index < (std::uint64_t{1} << pairs); ++index) {
      Graph g(n);
      std::size_t bit = 0;
      for (Vertex j = 1; j < n; ++j)
        for (Vertex i = 0; i < j; ++i, ++bit)
          if ((index >> bit) & 1u) g.add_edge(i, j);
      const auto cert = chromatic_number(g);
      REQUIRE(cert.chi == oracle::chi_by_assignment(g));
      CHECK(is_proper(g, cert.witness));
      CHECK(cert.witness.colours_used() == cert.chi);
    }
  }
  std::mt19937_64 rng(3);
  for (int trial = 0; trial < 150; ++trial) {
    const Graph g = oracle::random_graph(rng, 6, 0.2 + 0.1 * (trial % 7));
    CHECK(chromatic_number(g).chi == oracle::chi_by_assignment(g));
  }
}

TEST_CASE("chromatic_number is deterministic and handles sudoku 3") {
  const Graph g = family("sudoku:3");
  const auto a = chromatic_number(g);
  const auto b = chromatic_number(g);
  CHECK(a.chi == 9);
  CHECK(a.witness == b.witness);
}

TEST_CASE("enumerate_colorings named counts") {
  const Graph k3 = family("complete:3");
  CHECK(enumerate_colorings(k3, 3).colorings.size() == 6);
  const auto canon = enumerate_colorings(k3, 3, {.canonical_only = true});
  REQUIRE(canon.colorings.size() == 1);
  CHECK(canon.colorings[0].colours() == std::vector<Colour>{1, 2, 3});

  const std::size_t shidoku = count_shidoku_grids();
  CHECK(shidoku == 288);
  const auto s2 = enumerate_colorings(family("sudoku:2"), 4);
  CHECK_FALSE(s2.overflow);
  CHECK(s2.colorings.size() == shidoku);
  CHECK(enumerate_colorings(family("sudoku:2"), 4, {.canonical_only = true}).colorings.size() == shidoku / 24);
}

TEST_CASE("enumerate_colorings matches the oracle list in lexicographic order") {
  std::mt19937_64 rng(5);
  for (int trial = 0; trial < 120; ++trial) {
    const std::size_t n = 1 + trial % 7;
    const Graph g = oracle::random_graph(rng, n, 0.4);
    for (Colour k = 1; k <= 4; ++k) {
      const auto got = enumerate_colorings(g, k);
      CHECK(sequences(got) == oracle::all_colourings(g, k));
      for (const auto& c : got.colorings) CHECK(is_proper(g, c));
    }
  }
}

TEST_CASE("canonical enumeration times chi! equals the full count at k = chi") {
  std::mt19937_64 rng(9);
  for (int trial = 0; trial < 80; ++trial) {
    const Graph g = oracle::random_graph(rng, 2 + trial % 6, 0.5);
    const Colour chi = chromatic_number(g).chi;
    std::size_t factorial = 1;
    for (Colour i = 2; i <= chi; ++i) factorial *= i;
    const auto canonical = enumerate_colorings(g, chi, {.canonical_only = true});
    const auto full = enumerate_colorings(g, chi);
    CHECK(canonical.colorings.size() * factorial == full.colorings.size());
    for (const auto& c : full.colorings) CHECK(c.colours_used() == chi);
  }
}

TEST_CASE("sharding on the first vertex reproduces the full enumeration") {
  const Graph g = family("cycle:6");
  const auto full = sequences(enumerate_colorings(g, 3));
  std::vector<std::vector<Colour>> joined;
  for (Colour c = 1; c <= 3; ++c) {
    auto shard = sequences(enumerate_colorings(g, 3, {.first_vertex_colour = c}));
    joined.insert(joined.end(), shard.begin(), shard.end());
  }
  CHECK(joined == full);
}

TEST_CASE("enumeration cap signals overflow") {
  const Graph g = family("edgeless:4");
  const auto capped = enumerate_colorings(g, 3, {.cap = 10});
  CHECK(capped.overflow);
  CHECK(capped.colorings.size() == 10);
  const auto exact = enumerate_colorings(g, 3, {.cap = 81});
  CHECK_FALSE(exact.overflow);
  CHECK(exact.colorings.size() == 81);
  CHECK_THROWS_AS(enumerate_colorings(g, 0), PreconditionError);
}

TEST_CASE("restrict and colours_on") {
  const Coloring c({1, 2, 3}, 3);
  VertexSet keep;
  keep.set(0);
  keep.set(1);
  CHECK(restrict(c, keep) == PartialColoring({1, 2, kUncoloured}, 3));
  CHECK(restrict(c, VertexSet().set(0).set(1).set(2)) == c.as_partial());
  CHECK(restrict(c, VertexSet()) == PartialColoring::empty(3, 3));

  const PartialColoring p({1, 2, kUncoloured}, 3);
  ColourSet expected;
  expected.set(1);
  expected.set(2);
  CHECK(colours_on(p, VertexSet().set(0).set(1).set(2)) == expected);
  CHECK(colours_on(p, VertexSet()).none());
  const PartialColoring q({1, 1, 2}, 2);
  CHECK(colours_on(q, VertexSet().set(0).set(2)) == expected);
}
