#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include <json.hpp>

#include "sudoku/sudoku.hpp"

namespace sudoku::report {

using json = nlohmann::json;

/// Resolves a graph source: a family spec ("cycle:5"), a path to a graph6 or
/// edge-list file (first graph6 record is used), "-" for standard input, or a
/// literal graph6 string.
Graph load_graph(std::string_view source);

/// Reads a whole file or standard input ("-").
std::string read_source_text(std::string_view path);

/// Distinguishes graph6 text from edge-list text by its first data line.
bool looks_like_graph6(std::string_view text);

json to_json(const PartialColoring& p);  // 0 = uncoloured
json to_json(const Coloring& c);
json clues_json(const PartialColoring& p);
json to_json(const SnReport& r);
json to_json(const SudokuWitness& w);

struct AnalyzeOptions {
  std::optional<double> time_limit_seconds;
  std::size_t enumeration_cap = 2'000'000;
};

/// Structure, chi, sn with an optimal clue set, and the two-hole witness when
/// the graph is connected and non-complete. A timeout is reported in the
/// document, not thrown.
json analyze(const Graph& g, const AnalyzeOptions& options = {});

using Clue = std::pair<Vertex, Colour>;

/// Parses "v=c".
Clue parse_clue(std::string_view text);

enum class Verdict { not_proper, no_extension, unique, many };
std::string_view to_string(Verdict v);

struct VerifyResult {
  Verdict verdict = Verdict::many;
  Colour chi = 0;
  PartialColoring partial;
  std::optional<Coloring> completion;
};

/// Checks a clue list against chi(G). Throws PreconditionError on a vertex
/// outside the graph, a colour outside [1..chi], or a vertex given twice.
VerifyResult verify(const Graph& g, const std::vector<Clue>& clues);
json to_json(const VerifyResult& r);

}  // namespace sudoku::report
