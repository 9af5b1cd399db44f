#pragma once

#include <cstddef>
#include <string_view>
#include <utility>

#include "sudoku/coloring.hpp"

namespace sudoku {

/// Which two-hole uniqueness pattern certifies a witness.
///   nonedge_pair: the holes are nonadjacent and each sees chi-1 colours.
///   edge_pair:    the holes are adjacent; the first sees chi-1 colours, the
///                 second sees chi-2 colours, all of them seen by the first.
enum class WitnessPattern { nonedge_pair, edge_pair };

/// Which case of the construction produced the witness.
enum class WitnessBranch { full_nonadjacent, big_neighbourhood, outside_vertex };

std::string_view to_string(WitnessPattern p);
std::string_view to_string(WitnessBranch b);

struct SudokuWitness {
  PartialColoring partial;
  WitnessPattern pattern = WitnessPattern::nonedge_pair;
  /// For edge_pair, `first` is the hole that sees chi-1 colours.
  std::pair<Vertex, Vertex> uncoloured{0, 0};
  WitnessBranch provenance = WitnessBranch::full_nonadjacent;
  /// The stabilized colouring the holes were cut from (before any recolouring).
  Coloring base;
};

struct StableColoring {
  Coloring base;
  std::size_t moves_applied = 0;
};

/// Vertices whose neighbourhood shows every colour but their own.
/// The palette size of `c` is taken as chi(G).
VertexSet full_vertices(const Graph& g, const Coloring& c);

/// Two nonadjacent holes u, v, each seeing palette-1 colours.
/// Throws PreconditionError unless u and v are exactly the uncoloured vertices.
bool check_pattern_i(const Graph& g, const PartialColoring& p, Vertex u, Vertex v);

/// Adjacent holes; u sees palette-1 colours, v sees palette-2 colours and
/// everything v sees is also seen by u. Same precondition as check_pattern_i.
bool check_pattern_ii(const Graph& g, const PartialColoring& p, Vertex u, Vertex v);

/// Applies colour-1-reducing moves until none applies. For a colour-1 vertex v
/// and a colour c >= 2:
///   A. v has no colour-c neighbour: recolour v to c.
///   B. every colour-c neighbour u_i of v is non-full: recolour each u_i to
///      the smallest colour missing from N(u_i) other than c, then v to c.
/// Each move removes one colour-1 vertex. In the result every colour-1 vertex
/// is full and has a full neighbour of every other colour.
StableColoring stabilize(const Graph& g, const Coloring& c);

/// Two-hole Sudoku colouring of a connected non-complete graph with n >= 3,
/// machine-checked before return. Throws PreconditionError when the graph is
/// complete, disconnected or too small, and std::logic_error if a construction
/// step fails verification.
SudokuWitness build_witness(const Graph& g);

}  // namespace sudoku
