#pragma once

#include "sudoku/bitset.hpp"
#include <cstddef>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace sudoku {

/// Dense adjacency rows cap the order of every graph.
inline constexpr std::size_t kMaxVertices = 128;

using Vertex = unsigned;
using VertexSet = BitSet<kMaxVertices>;
using Edge = std::pair<Vertex, Vertex>;

/// Simple undirected graph on vertices 0..n-1 with bitset adjacency rows.
///
/// The adjacency relation is kept symmetric and loop-free by construction;
/// every mutating call validates its endpoints.
class Graph {
 public:
  Graph() = default;
  explicit Graph(std::size_t n);

  static Graph from_edges(std::size_t n, const std::vector<Edge>& edges);

  std::size_t order() const noexcept { return n_; }
  const VertexSet& neighbours(Vertex v) const { return adj_.at(v); }
  bool adjacent(Vertex u, Vertex v) const { return adj_.at(u).test(v); }
  std::size_t degree(Vertex v) const { return adj_.at(v).count(); }
  std::size_t edge_count() const noexcept;

  /// Edges as (u, v) with u < v, sorted.
  std::vector<Edge> edges() const;

  /// All vertices of the graph as a set.
  VertexSet vertices() const noexcept;

  void add_edge(Vertex u, Vertex v);

  friend bool operator==(const Graph& a, const Graph& b) { return a.n_ == b.n_ && a.adj_ == b.adj_; }

 private:
  std::size_t n_ = 0;
  std::vector<VertexSet> adj_;
};

// graph6 ---------------------------------------------------------------------

/// Decodes one graph6 record. An optional ">>graph6<<" header and trailing
/// whitespace are accepted. Throws ParseError naming the offending byte.
Graph parse_graph6(std::string_view text);

/// Encodes a graph in graph6 (no header, no newline).
std::string to_graph6(const Graph& g);

/// Parses edge-list text: one "u v" pair per line, '#' comments, and an
/// optional line holding a single integer that fixes the vertex count.
/// Without that line the order is one more than the largest endpoint.
Graph parse_edge_list(std::string_view text);

// Families -------------------------------------------------------------------

enum class Family { complete, path, cycle, complete_bipartite, sudoku, edgeless };

struct FamilySpec {
  Family family = Family::complete;
  std::vector<unsigned> params;

  friend bool operator==(const FamilySpec&, const FamilySpec&) = default;
};

/// Parses "name:param[:param]", e.g. "cycle:5" or "complete_bipartite:2:3".
FamilySpec parse_family_spec(std::string_view text);
std::string to_string(const FamilySpec& spec);
std::string_view family_name(Family f);

/// Builds the family member. Sudoku block order k gives the k^2 x k^2 grid
/// graph on k^4 cells in row-major order.
Graph generate(const FamilySpec& spec);

// Structure queries ----------------------------------------------------------

/// Order 0 and 1 count as connected.
bool is_connected(const Graph& g);

/// Order 0 and 1 count as complete.
bool is_complete(const Graph& g);

/// Vertex-induced subgraph; kept vertices are renumbered in increasing order.
Graph induced_subgraph(const Graph& g, const VertexSet& keep);

/// Members of a vertex set in increasing order.
std::vector<Vertex> members(const VertexSet& s);

}  // namespace sudoku
