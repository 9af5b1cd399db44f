#include "sudoku/extension.hpp"

#include <string>

#include "sudoku/error.hpp"

namespace sudoku {

namespace {

Colour lowest(const ColourSet& s) {
  const auto c = s.first();
  return c == s.size() ? kUncoloured : static_cast<Colour>(c);
}

class ExtensionSearch {
 public:
  ExtensionSearch(const Graph& g, Colour k, std::size_t cap, const Deadline& deadline)
      : g_(g), k_(k), cap_(cap), deadline_(deadline) {
    for (Colour c = 1; c <= k; ++c) palette_.set(c);
  }

  void run(std::vector<Colour> cs) { search(cs); }

  std::size_t found() const { return found_; }
  std::optional<std::vector<Colour>>& first() { return first_; }

 private:
  ColourSet available(const std::vector<Colour>& cs, Vertex v) const {
    ColourSet blocked;
    for (Vertex u : g_.neighbours(v)) blocked.set(cs[u]);
    return palette_ & ~blocked;
  }

  /// Fills forced vertices. Returns false on a vertex with no colour left.
  bool propagate(std::vector<Colour>& cs) const {
    bool changed = true;
    while (changed) {
      changed = false;
      for (Vertex v = 0; v < cs.size(); ++v) {
        if (cs[v] != kUncoloured) continue;
        const ColourSet avail = available(cs, v);
        const std::size_t options = avail.count();
        if (options == 0) return false;
        if (options == 1) {
          cs[v] = lowest(avail);
          changed = true;
        }
      }
    }
    return true;
  }

  void search(std::vector<Colour>& cs) {
    deadline_.poll();
    if (found_ >= cap_) return;
    if (!propagate(cs)) return;

    Vertex branch = 0;
    std::size_t fewest = kMaxVertices + 2;
    ColourSet branch_avail;
    for (Vertex v = 0; v < cs.size(); ++v) {
      if (cs[v] != kUncoloured) continue;
      const ColourSet avail = available(cs, v);
      if (avail.count() < fewest) {
        fewest = avail.count();
        branch = v;
        branch_avail = avail;
      }
    }
    if (fewest == kMaxVertices + 2) {
      if (found_++ == 0) first_ = cs;
      return;
    }
    for (Colour c = 1; c <= k_ && found_ < cap_; ++c) {
      if (!branch_avail.test(c)) continue;
      std::vector<Colour> child = cs;
      child[branch] = c;
      search(child);
    }
  }

  const Graph& g_;
  Colour k_;
  std::size_t cap_;
  const Deadline& deadline_;
  ColourSet palette_;
  std::size_t found_ = 0;
  std::optional<std::vector<Colour>> first_;
};

}  // namespace

ExtensionCount count_extensions(const Graph& g, const PartialColoring& p, Colour k, std::size_t cap,
                                const Deadline& deadline) {
  if (cap < 2) throw PreconditionError("extension cap must be at least 2");
  if (p.size() != g.order()) throw PreconditionError("partial colouring length does not match graph order");
  if (k > kMaxVertices) throw PreconditionError("palette size exceeds capacity");
  for (std::size_t v = 0; v < p.size(); ++v)
    if (p.colours[v] > k)
      throw PreconditionError("colour " + std::to_string(p.colours[v]) + " at vertex " + std::to_string(v) +
                              " outside palette [1.." + std::to_string(k) + "]");
  if (!is_proper(g, p)) throw PreconditionError("partial colouring is not proper");

  ExtensionSearch search(g, k, cap, deadline);
  search.run(p.colours);

  ExtensionCount out;
  out.found = search.found();
  if (out.found == 0) {
    out.kind = ExtensionKind::none;
  } else if (out.found == 1) {
    out.kind = ExtensionKind::unique;
    out.completion = Coloring(std::move(*search.first()), k);
  } else {
    out.kind = ExtensionKind::many;
  }
  return out;
}

std::string_view to_string(SudokuDiagnostic d) {
  switch (d) {
    case SudokuDiagnostic::ok: return "ok";
    case SudokuDiagnostic::wrong_length: return "wrong_length";
    case SudokuDiagnostic::colour_out_of_range: return "colour_out_of_range";
    case SudokuDiagnostic::not_proper: return "not_proper";
    case SudokuDiagnostic::wrong_palette: return "wrong_palette";
    case SudokuDiagnostic::no_extension: return "no_extension";
    case SudokuDiagnostic::many_extensions: return "many_extensions";
  }
  return "?";
}

SudokuCheck is_sudoku_coloring(const Graph& g, const PartialColoring& p) {
  return is_sudoku_coloring(g, p, chromatic_number(g).chi);
}

SudokuCheck is_sudoku_coloring(const Graph& g, const PartialColoring& p, Colour chi) {
  SudokuCheck out;
  out.chi = chi;
  if (p.size() != g.order()) {
    out.diagnostic = SudokuDiagnostic::wrong_length;
    return out;
  }
  for (Colour c : p.colours)
    if (c > p.palette_size || c > kMaxVertices) {
      out.diagnostic = SudokuDiagnostic::colour_out_of_range;
      return out;
    }
  if (!is_proper(g, p)) {
    out.diagnostic = SudokuDiagnostic::not_proper;
    return out;
  }
  if (p.palette_size != chi) {
    out.diagnostic = SudokuDiagnostic::wrong_palette;
    return out;
  }
  auto count = count_extensions(g, p, chi, 2);
  switch (count.kind) {
    case ExtensionKind::none: out.diagnostic = SudokuDiagnostic::no_extension; break;
    case ExtensionKind::many: out.diagnostic = SudokuDiagnostic::many_extensions; break;
    case ExtensionKind::unique:
      out.diagnostic = SudokuDiagnostic::ok;
      out.completion = std::move(count.completion);
      break;
  }
  return out;
}

}  // namespace sudoku
