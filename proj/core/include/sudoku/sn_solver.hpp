#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "sudoku/coloring.hpp"
#include "sudoku/deadline.hpp"

namespace sudoku {

enum class SnMethod { hitting_set, subset_search };

std::string_view to_string(SnMethod m);

/// Exact Sudoku number with an optimal witness.
///
/// Among optimal witnesses the reported one is the smallest under
/// (sorted clue-vertex list, then clue colour sequence) lexicographic order,
/// so both solvers report the same witness for the same graph.
struct SnReport {
  std::size_t n = 0;
  Colour chi = 0;
  std::size_t sn = 0;
  std::vector<Vertex> clue_set;
  PartialColoring clue_colours;
  Coloring completion;
  SnMethod method = SnMethod::hitting_set;
  /// The hitting-set enumeration overflowed and subset search produced the result.
  bool enumeration_overflow = false;
};

struct SnOptions {
  std::size_t enumeration_cap = 2'000'000;
  Deadline deadline;
};

/// Clues of a Sudoku colouring use at least chi-1 colours: with two palette
/// colours absent, swapping them in the completion gives a second completion.
constexpr std::size_t palette_lower_bound(Colour chi) noexcept { return chi >= 2 ? chi - 1 : 0; }

/// sn(G) by hitting sets, falling back to subset search on enumeration overflow.
/// Requires order >= 1. The witness is re-verified before returning.
SnReport sudoku_number(const Graph& g, const SnOptions& options = {});

/// A partial colouring with a unique completion c is the restriction of c to
/// a vertex set meeting every difference set {v : c'(v) != c(v)}, c' != c.
/// sn is the smallest such set over all target colourings c; targets range
/// over colour-permutation orbit representatives only.
///
/// Returns nullopt when the proper chi-colourings do not fit under the cap.
std::optional<SnReport> sn_by_hitting_set(const Graph& g, const ChiCertificate& chi, const SnOptions& options = {});

/// Brute-force oracle: for s = 0, 1, ... every s-subset (lexicographic) and
/// every proper colour assignment to it (lexicographic) is tested with
/// count_extensions. Independent of the hitting-set reduction and of the
/// palette bound. Returns nullopt when no Sudoku colouring with at most
/// `size_limit` clues exists.
std::optional<SnReport> sn_by_subset_search(const Graph& g, const ChiCertificate& chi,
                                            std::optional<std::size_t> size_limit = std::nullopt,
                                            const Deadline& deadline = Deadline::never());

}  // namespace sudoku
