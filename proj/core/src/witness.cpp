#include "sudoku/witness.hpp"

#include <stdexcept>
#include <string>

#include "sudoku/error.hpp"
#include "sudoku/extension.hpp"

namespace sudoku {

std::string_view to_string(WitnessPattern p) {
  switch (p) {
    case WitnessPattern::nonedge_pair: return "nonedge_pair";
    case WitnessPattern::edge_pair: return "edge_pair";
  }
  return "?";
}

std::string_view to_string(WitnessBranch b) {
  switch (b) {
    case WitnessBranch::full_nonadjacent: return "full_nonadjacent";
    case WitnessBranch::big_neighbourhood: return "big_neighbourhood";
    case WitnessBranch::outside_vertex: return "outside_vertex";
  }
  return "?";
}

namespace {

void require_proper(const Graph& g, const Coloring& c) {
  if (!is_proper(g, c)) throw PreconditionError("colouring is not proper");
}

void require_holes(const PartialColoring& p, Vertex u, Vertex v) {
  VertexSet expected;
  expected.set(u);
  expected.set(v);
  if (u == v || p.uncoloured() != expected)
    throw PreconditionError("vertices " + std::to_string(u) + " and " + std::to_string(v) +
                            " must be exactly the uncoloured vertices");
}

VertexSet colour_class(const Coloring& c, Colour colour) {
  VertexSet s;
  for (Vertex v = 0; v < c.size(); ++v)
    if (c[v] == colour) s.set(v);
  return s;
}

Colour smallest_in(const ColourSet& s) {
  const auto c = s.first();
  return c == s.size() ? kUncoloured : static_cast<Colour>(c);
}

/// One move A or B on the first colour-1 vertex that admits one.
bool apply_move(const Graph& g, std::vector<Colour>& cs, Colour k) {
  const Coloring current(cs, k);
  const VertexSet full = full_vertices(g, current);
  ColourSet palette;
  for (Colour c = 1; c <= k; ++c) palette.set(c);

  for (Vertex v : colour_class(current, 1)) {
    for (Colour c = 2; c <= k; ++c) {
      const VertexSet same = g.neighbours(v) & colour_class(current, c);
      if (same.none()) {
        cs[v] = c;
        return true;
      }
      if ((same & full).any()) continue;
      for (Vertex u : same) {
        ColourSet missing = palette & ~colours_on(current, g.neighbours(u));
        missing.reset(c);
        const Colour replacement = smallest_in(missing);
        if (replacement == kUncoloured || replacement == 1)
          throw std::logic_error("stabilize: non-full neighbour has no admissible colour");
        cs[u] = replacement;
      }
      cs[v] = c;
      return true;
    }
  }
  return false;
}

SudokuWitness finish(const Graph& g, Colour chi, PartialColoring partial, WitnessPattern pattern,
                     std::pair<Vertex, Vertex> holes, WitnessBranch branch, const Coloring& base) {
  const bool pattern_ok = pattern == WitnessPattern::nonedge_pair
                              ? check_pattern_i(g, partial, holes.first, holes.second)
                              : check_pattern_ii(g, partial, holes.first, holes.second);
  if (!pattern_ok)
    throw std::logic_error("build_witness: " + std::string(to_string(branch)) + " produced a colouring outside its pattern");
  const auto check = is_sudoku_coloring(g, partial, chi);
  if (!check.ok())
    throw std::logic_error("build_witness: " + std::string(to_string(branch)) +
                           " witness failed verification: " + std::string(to_string(check.diagnostic)));
  return SudokuWitness{std::move(partial), pattern, holes, branch, base};
}

}  // namespace

VertexSet full_vertices(const Graph& g, const Coloring& c) {
  require_proper(g, c);
  const Colour k = c.palette_size();
  VertexSet full;
  for (Vertex v = 0; v < g.order(); ++v)
    if (colours_on(c, g.neighbours(v)).count() + 1 == k) full.set(v);
  return full;
}

bool check_pattern_i(const Graph& g, const PartialColoring& p, Vertex u, Vertex v) {
  require_holes(p, u, v);
  const Colour k = p.palette_size;
  return !g.adjacent(u, v) && colours_on(p, g.neighbours(u)).count() + 1 == k &&
         colours_on(p, g.neighbours(v)).count() + 1 == k;
}

bool check_pattern_ii(const Graph& g, const PartialColoring& p, Vertex u, Vertex v) {
  require_holes(p, u, v);
  const Colour k = p.palette_size;
  if (!g.adjacent(u, v) || k < 2) return false;
  const ColourSet seen_u = colours_on(p, g.neighbours(u));
  const ColourSet seen_v = colours_on(p, g.neighbours(v));
  return seen_u.count() + 1 == k && seen_v.count() + 2 == k && (seen_v & ~seen_u).none();
}

StableColoring stabilize(const Graph& g, const Coloring& c) {
  require_proper(g, c);
  std::vector<Colour> cs = c.colours();
  std::size_t moves = 0;
  std::size_t ones = colour_class(c, 1).count();
  while (apply_move(g, cs, c.palette_size())) {
    ++moves;
    const Coloring next(cs, c.palette_size());
    const std::size_t now = colour_class(next, 1).count();
    if (now + 1 != ones || !is_proper(g, next)) throw std::logic_error("stabilize: move was not improving");
    ones = now;
  }
  return {Coloring(std::move(cs), c.palette_size()), moves};
}

SudokuWitness build_witness(const Graph& g) {
  const std::size_t n = g.order();
  if (n < 3) throw PreconditionError("build_witness needs at least 3 vertices");
  if (!is_connected(g)) throw PreconditionError("build_witness needs a connected graph");
  if (is_complete(g)) throw PreconditionError("build_witness needs a non-complete graph");

  const ChiCertificate cert = chromatic_number(g);
  const Colour k = cert.chi;
  const Coloring phi = stabilize(g, cert.witness).base;
  const VertexSet full = full_vertices(g, phi);

  // Two nonadjacent full vertices keep all their neighbour colours when both are uncoloured.
  const auto full_list = members(full);
  for (std::size_t i = 0; i < full_list.size(); ++i)
    for (std::size_t j = i + 1; j < full_list.size(); ++j) {
      const Vertex u = full_list[i], v = full_list[j];
      if (!g.adjacent(u, v))
        return finish(g, k, uncolour(phi, {u, v}), WitnessPattern::nonedge_pair, {u, v},
                      WitnessBranch::full_nonadjacent, phi);
    }

  // Colour-1 vertices are full and pairwise nonadjacent, and full vertices now form a clique.
  const VertexSet ones = colour_class(phi, 1);
  if (ones.count() != 1) throw std::logic_error("build_witness: expected exactly one colour-1 vertex");
  const Vertex v = members(ones).front();
  const VertexSet around = g.neighbours(v);

  if (around.count() + 1 > k) {
    Colour repeated = kUncoloured;
    for (Colour c = 2; c <= k && repeated == kUncoloured; ++c)
      if ((around & colour_class(phi, c)).count() >= 2) repeated = c;
    if (repeated == kUncoloured) throw std::logic_error("build_witness: no repeated colour around v");
    const VertexSet candidates = around & colour_class(phi, repeated) & full;
    if (candidates.none()) throw std::logic_error("build_witness: no full neighbour of the repeated colour");
    const Vertex u = members(candidates).front();
    return finish(g, k, uncolour(phi, {u, v}), WitnessPattern::edge_pair, {v, u}, WitnessBranch::big_neighbourhood,
                  phi);
  }

  VertexSet closed = around;
  closed.set(v);
  if ((closed & ~full).any()) throw std::logic_error("build_witness: closed neighbourhood of v is not all full");
  for (Vertex w = 0; w < n; ++w) {
    if (closed.test(w)) continue;
    const VertexSet link = g.neighbours(w) & around;
    if (link.none()) continue;
    const Vertex u = members(link).front();
    PartialColoring psi = uncolour(phi, {u, v});
    psi.colours[w] = 1;
    return finish(g, k, std::move(psi), WitnessPattern::edge_pair, {u, v}, WitnessBranch::outside_vertex, phi);
  }
  throw std::logic_error("build_witness: no vertex outside the closed neighbourhood of v");
}

}  // namespace sudoku
