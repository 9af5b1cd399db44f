#include "sudoku/coloring.hpp"

#include <algorithm>
#include <cassert>
#include <string>

#include "sudoku/error.hpp"

namespace sudoku {

std::size_t PartialColoring::coloured_count() const noexcept {
  return static_cast<std::size_t>(std::count_if(colours.begin(), colours.end(), [](Colour c) { return c != kUncoloured; }));
}

VertexSet PartialColoring::domain() const {
  VertexSet s;
  for (std::size_t v = 0; v < colours.size(); ++v)
    if (colours[v] != kUncoloured) s.set(v);
  return s;
}

VertexSet PartialColoring::uncoloured() const {
  VertexSet s;
  for (std::size_t v = 0; v < colours.size(); ++v)
    if (colours[v] == kUncoloured) s.set(v);
  return s;
}

Coloring::Coloring(std::vector<Colour> cs, Colour k) : colours_(std::move(cs)), k_(k) {
  for (std::size_t v = 0; v < colours_.size(); ++v)
    if (colours_[v] < 1 || colours_[v] > k_)
      throw PreconditionError("colour " + std::to_string(colours_[v]) + " at vertex " + std::to_string(v) +
                              " outside palette [1.." + std::to_string(k_) + "]");
}

std::size_t Coloring::colours_used() const {
  ColourSet used;
  for (Colour c : colours_) used.set(c);
  return used.count();
}

namespace {

void require_length(const Graph& g, std::size_t len) {
  if (len != g.order())
    throw PreconditionError("colouring has length " + std::to_string(len) + " but graph has order " +
                            std::to_string(g.order()));
}

bool proper_sequence(const Graph& g, const std::vector<Colour>& cs) {
  for (Vertex u = 0; u < g.order(); ++u) {
    if (cs[u] == kUncoloured) continue;
    for (Vertex v : g.neighbours(u))
      if (v > u && cs[v] == cs[u]) return false;
  }
  return true;
}

/// Smallest-last order: repeatedly strip a minimum-degree vertex (lowest
/// index on ties), then reverse.
std::vector<Vertex> degeneracy_order(const Graph& g) {
  const std::size_t n = g.order();
  VertexSet alive = g.vertices();
  std::vector<Vertex> removed;
  removed.reserve(n);
  for (std::size_t step = 0; step < n; ++step) {
    Vertex best = 0;
    std::size_t best_deg = kMaxVertices + 1;
    for (Vertex v = 0; v < n; ++v) {
      if (!alive.test(v)) continue;
      const std::size_t d = (g.neighbours(v) & alive).count();
      if (d < best_deg) {
        best = v;
        best_deg = d;
      }
    }
    alive.reset(best);
    removed.push_back(best);
  }
  std::reverse(removed.begin(), removed.end());
  return removed;
}

std::size_t greedy_clique_size(const Graph& g, const std::vector<Vertex>& order) {
  std::size_t best = g.order() > 0 ? 1 : 0;
  for (std::size_t s = 0; s < order.size(); ++s) {
    VertexSet cand = g.neighbours(order[s]);
    std::size_t size = 1;
    for (std::size_t i = s + 1; i < order.size() && cand.any(); ++i) {
      if (!cand.test(order[i])) continue;
      ++size;
      cand &= g.neighbours(order[i]);
    }
    // Also try candidates that precede s in the order.
    for (std::size_t i = 0; i < s && cand.any(); ++i) {
      if (!cand.test(order[i])) continue;
      ++size;
      cand &= g.neighbours(order[i]);
    }
    best = std::max(best, size);
  }
  return best;
}

std::vector<Colour> greedy_colouring(const Graph& g, const std::vector<Vertex>& order) {
  std::vector<Colour> cs(g.order(), kUncoloured);
  for (Vertex v : order) {
    ColourSet seen;
    for (Vertex u : g.neighbours(v)) seen.set(cs[u]);
    Colour c = 1;
    while (seen.test(c)) ++c;
    cs[v] = c;
  }
  return cs;
}

/// Exhaustive k-colourability test along `order` with colour-symmetry breaking.
bool colour_with(const Graph& g, const std::vector<Vertex>& order, Colour k, std::vector<Colour>& cs) {
  std::fill(cs.begin(), cs.end(), kUncoloured);
  const std::size_t n = order.size();
  // Iterative DFS: next colour to try at each depth, and max colour used above it.
  std::vector<Colour> next(n + 1, 1);
  std::vector<Colour> max_used(n + 1, 0);
  std::size_t depth = 0;
  while (true) {
    if (depth == n) return true;
    const Vertex v = order[depth];
    const Colour limit = std::min<Colour>(k, max_used[depth] + 1);
    Colour chosen = kUncoloured;
    for (Colour c = next[depth]; c <= limit; ++c) {
      bool clash = false;
      for (Vertex u : g.neighbours(v))
        if (cs[u] == c) {
          clash = true;
          break;
        }
      if (!clash) {
        chosen = c;
        break;
      }
    }
    if (chosen == kUncoloured) {
      cs[v] = kUncoloured;
      if (depth == 0) return false;
      --depth;
      cs[order[depth]] = kUncoloured;
      continue;
    }
    cs[v] = chosen;
    next[depth] = chosen + 1;
    max_used[depth + 1] = std::max(max_used[depth], chosen);
    ++depth;
    next[depth] = 1;
  }
}

}  // namespace

bool is_proper(const Graph& g, const PartialColoring& p) {
  require_length(g, p.size());
  return proper_sequence(g, p.colours);
}

bool is_proper(const Graph& g, const Coloring& c) {
  require_length(g, c.size());
  return proper_sequence(g, c.colours());
}

ChiCertificate chromatic_number(const Graph& g) {
  const std::size_t n = g.order();
  if (n == 0) return {0, Coloring({}, 0)};

  const auto order = degeneracy_order(g);
  const auto lower = static_cast<Colour>(greedy_clique_size(g, order));
  auto greedy = greedy_colouring(g, order);
  const Colour upper = *std::max_element(greedy.begin(), greedy.end());

  std::vector<Colour> cs(n, kUncoloured);
  Colour chi = upper;
  for (Colour k = lower; k < upper; ++k) {
    if (colour_with(g, order, k, cs)) {
      chi = k;
      greedy = cs;
      break;
    }
  }
  ChiCertificate cert{chi, Coloring(std::move(greedy), chi)};
  // A chi-colouring with an unused colour would be a (chi-1)-colouring.
  if (cert.witness.colours_used() != chi || !is_proper(g, cert.witness))
    throw std::logic_error("chromatic_number: invalid certificate");
  return cert;
}

bool for_each_coloring(const Graph& g, Colour k, const EnumerationOptions& options,
                       const std::function<bool(const std::vector<Colour>&)>& visit) {
  if (k < 1) throw PreconditionError("palette size must be at least 1");
  const std::size_t n = g.order();
  if (n == 0) return visit({});

  std::vector<Colour> cs(n, kUncoloured);
  std::vector<Colour> next(n + 1, 1);
  std::vector<Colour> max_used(n + 1, 0);
  std::size_t depth = 0;
  if (options.first_vertex_colour) next[0] = *options.first_vertex_colour;

  while (true) {
    if (depth == n) {
      if (!visit(cs)) return false;
      --depth;
      continue;
    }
    const Vertex v = static_cast<Vertex>(depth);
    Colour limit = options.canonical_only ? std::min<Colour>(k, max_used[depth] + 1) : k;
    if (depth == 0 && options.first_vertex_colour) limit = std::min(limit, *options.first_vertex_colour);

    Colour chosen = kUncoloured;
    for (Colour c = next[depth]; c <= limit; ++c) {
      bool clash = false;
      for (Vertex u : g.neighbours(v))
        if (u < v && cs[u] == c) {
          clash = true;
          break;
        }
      if (!clash) {
        chosen = c;
        break;
      }
    }
    if (chosen == kUncoloured) {
      cs[v] = kUncoloured;
      if (depth == 0) return true;
      --depth;
      continue;
    }
    cs[v] = chosen;
    next[depth] = chosen + 1;
    max_used[depth + 1] = std::max(max_used[depth], chosen);
    ++depth;
    if (depth < n) next[depth] = 1;
  }
}

ColoringEnumeration enumerate_colorings(const Graph& g, Colour k, const EnumerationOptions& options) {
  ColoringEnumeration out;
  for_each_coloring(g, k, options, [&](const std::vector<Colour>& cs) {
    if (out.colorings.size() == options.cap) {
      out.overflow = true;
      return false;
    }
    out.colorings.emplace_back(cs, k);
    return true;
  });
  return out;
}

PartialColoring restrict(const Coloring& c, const VertexSet& keep) {
  PartialColoring p = PartialColoring::empty(c.size(), c.palette_size());
  for (Vertex v = 0; v < c.size(); ++v)
    if (keep.test(v)) p.colours[v] = c[v];
  return p;
}

PartialColoring uncolour(const Coloring& c, std::initializer_list<Vertex> vs) {
  PartialColoring p = c.as_partial();
  for (Vertex v : vs) p.colours.at(v) = kUncoloured;
  return p;
}

ColourSet colours_on(const PartialColoring& p, const VertexSet& s) {
  ColourSet out;
  for (std::size_t v = 0; v < p.size(); ++v)
    if (s.test(v) && p.colours[v] != kUncoloured) out.set(p.colours[v]);
  return out;
}

ColourSet colours_on(const Coloring& c, const VertexSet& s) {
  ColourSet out;
  for (std::size_t v = 0; v < c.size(); ++v)
    if (s.test(v)) out.set(c[v]);
  return out;
}

}  // namespace sudoku
