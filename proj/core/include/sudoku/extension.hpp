#pragma once

#include <cstddef>
#include <optional>
#include <string_view>

#include "sudoku/coloring.hpp"
#include "sudoku/deadline.hpp"

namespace sudoku {

enum class ExtensionKind { none, unique, many };

struct ExtensionCount {
  ExtensionKind kind = ExtensionKind::none;
  /// Present exactly when kind == unique.
  std::optional<Coloring> completion;
  /// Completions found before stopping; exact when below the cap.
  std::size_t found = 0;
};

/// Counts proper total k-colourings that agree with `p`, stopping once `cap`
/// of them have been seen.
///
/// Uncoloured vertices with a single available colour are filled in before
/// every branch; branching picks the uncoloured vertex with the fewest
/// available colours (lowest index on ties) and tries colours in increasing
/// order. Throws PreconditionError if `p` is improper, has the wrong length,
/// uses a colour outside [1..k], or cap < 2.
ExtensionCount count_extensions(const Graph& g, const PartialColoring& p, Colour k, std::size_t cap = 2,
                                const Deadline& deadline = Deadline::never());

enum class SudokuDiagnostic {
  ok,
  wrong_length,
  colour_out_of_range,
  not_proper,
  wrong_palette,
  no_extension,
  many_extensions,
};

std::string_view to_string(SudokuDiagnostic d);

struct SudokuCheck {
  SudokuDiagnostic diagnostic = SudokuDiagnostic::ok;
  Colour chi = 0;
  std::optional<Coloring> completion;

  bool ok() const noexcept { return diagnostic == SudokuDiagnostic::ok; }
  explicit operator bool() const noexcept { return ok(); }
};

/// Sudoku colouring test: `p` is proper, its palette is chi(G), and it has
/// exactly one proper chi(G)-completion. Never throws on bad input; the
/// diagnostic names the first failed clause.
SudokuCheck is_sudoku_coloring(const Graph& g, const PartialColoring& p);

/// As above with chi(G) supplied by the caller.
SudokuCheck is_sudoku_coloring(const Graph& g, const PartialColoring& p, Colour chi);

}  // namespace sudoku
