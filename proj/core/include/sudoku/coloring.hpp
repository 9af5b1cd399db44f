#pragma once

#include "sudoku/bitset.hpp"
#include <cstddef>
#include <functional>
#include <optional>
#include <vector>

#include "sudoku/graph.hpp"

namespace sudoku {

/// Colours are drawn from the palette [1..k]; 0 marks an uncoloured vertex.
using Colour = unsigned;
inline constexpr Colour kUncoloured = 0;

/// Bit c is set when colour c is present. Bit 0 is never used.
using ColourSet = BitSet<kMaxVertices + 1>;

/// Per-vertex optional colour from [1..palette_size].
struct PartialColoring {
  std::vector<Colour> colours;
  Colour palette_size = 0;

  PartialColoring() = default;
  PartialColoring(std::vector<Colour> cs, Colour k) : colours(std::move(cs)), palette_size(k) {}

  /// All n vertices uncoloured.
  static PartialColoring empty(std::size_t n, Colour k) { return {std::vector<Colour>(n, kUncoloured), k}; }

  std::size_t size() const noexcept { return colours.size(); }
  bool is_coloured(Vertex v) const { return colours.at(v) != kUncoloured; }
  std::size_t coloured_count() const noexcept;
  VertexSet domain() const;
  VertexSet uncoloured() const;

  friend bool operator==(const PartialColoring&, const PartialColoring&) = default;
};

/// Total colour assignment; properness is checked by the operations that
/// consume it, range is checked on construction.
class Coloring {
 public:
  Coloring() = default;
  Coloring(std::vector<Colour> cs, Colour k);

  const std::vector<Colour>& colours() const noexcept { return colours_; }
  Colour palette_size() const noexcept { return k_; }
  Colour operator[](Vertex v) const { return colours_.at(v); }
  std::size_t size() const noexcept { return colours_.size(); }

  /// Number of distinct colours that actually occur.
  std::size_t colours_used() const;

  PartialColoring as_partial() const { return {colours_, k_}; }

  friend bool operator==(const Coloring&, const Coloring&) = default;

 private:
  std::vector<Colour> colours_;
  Colour k_ = 0;
};

struct ChiCertificate {
  Colour chi = 0;
  Coloring witness;
};

/// No edge joins two coloured vertices of equal colour. Throws on a length mismatch.
bool is_proper(const Graph& g, const PartialColoring& p);
bool is_proper(const Graph& g, const Coloring& c);

/// Exact chromatic number with a proper witness colouring.
///
/// Vertices are branched in a static smallest-last degeneracy order and a new
/// colour may only be opened as "largest used + 1". The search starts at the
/// largest greedy clique found and stops at the greedy colouring's size.
/// The empty graph has chi 0 and an empty witness.
ChiCertificate chromatic_number(const Graph& g);

struct EnumerationOptions {
  bool canonical_only = false;
  std::size_t cap = 2'000'000;
  /// Shards the enumeration by pinning vertex 0 to one colour.
  std::optional<Colour> first_vertex_colour;
};

struct ColoringEnumeration {
  std::vector<Coloring> colorings;
  /// Set when more than `cap` colourings exist; `colorings` then holds the first `cap`.
  bool overflow = false;
};

/// Every proper total k-colouring in lexicographic order of the colour
/// sequence. With canonical_only, only colourings whose colours first appear
/// in increasing order (one per colour-permutation orbit).
ColoringEnumeration enumerate_colorings(const Graph& g, Colour k, const EnumerationOptions& options = {});

/// Streaming form of enumerate_colorings. The visitor returns false to stop.
/// Returns false iff the visitor stopped the enumeration.
bool for_each_coloring(const Graph& g, Colour k, const EnumerationOptions& options,
                       const std::function<bool(const std::vector<Colour>&)>& visit);

/// Keeps exactly the vertices in `keep` coloured.
PartialColoring restrict(const Coloring& c, const VertexSet& keep);

/// Uncolours the listed vertices.
PartialColoring uncolour(const Coloring& c, std::initializer_list<Vertex> vs);

/// Colours of the coloured members of s.
ColourSet colours_on(const PartialColoring& p, const VertexSet& s);
ColourSet colours_on(const Coloring& c, const VertexSet& s);

}  // namespace sudoku
