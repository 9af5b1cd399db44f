#include "sudoku/tools/report.hpp"

#include <charconv>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

namespace sudoku::report {

namespace {

bool is_family_prefix(std::string_view source) {
  const auto colon = source.find(':');
  if (colon == std::string_view::npos || colon == 0) return false;
  for (char ch : source.substr(0, colon))
    if (!(ch >= 'a' && ch <= 'z') && ch != '_') return false;
  return true;
}

std::string_view first_data_line(std::string_view text) {
  std::size_t start = 0;
  while (start < text.size()) {
    auto end = text.find('\n', start);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(start, end - start);
    while (!line.empty() && (line.back() == '\r' || line.back() == ' ' || line.back() == '\t')) line.remove_suffix(1);
    while (!line.empty() && (line.front() == ' ' || line.front() == '\t')) line.remove_prefix(1);
    if (!line.empty() && line.front() != '#') return line;
    start = end + 1;
  }
  return {};
}

}  // namespace

std::string read_source_text(std::string_view path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  std::ifstream in{std::string(path), std::ios::binary};
  if (!in) throw ParseError("cannot open '" + std::string(path) + "'", 0);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

bool looks_like_graph6(std::string_view text) {
  std::string_view line = first_data_line(text);
  if (line.starts_with(">>graph6<<")) return true;
  if (line.empty()) return false;
  for (char ch : line)
    if (static_cast<unsigned char>(ch) < 63 || static_cast<unsigned char>(ch) > 126) return false;
  return true;
}

Graph load_graph(std::string_view source) {
  if (is_family_prefix(source)) return generate(parse_family_spec(source));
  if (source == "-" || std::filesystem::is_regular_file(std::filesystem::path(std::string(source)))) {
    const std::string text = read_source_text(source);
    if (looks_like_graph6(text)) return parse_graph6(first_data_line(text));
    return parse_edge_list(text);
  }
  return parse_graph6(source);
}

json to_json(const PartialColoring& p) { return json(p.colours); }

json to_json(const Coloring& c) { return json(c.colours()); }

json clues_json(const PartialColoring& p) {
  json out = json::array();
  for (Vertex v = 0; v < p.size(); ++v)
    if (p.colours[v] != kUncoloured) out.push_back({{"v", v}, {"colour", p.colours[v]}});
  return out;
}

json to_json(const SnReport& r) {
  return {
      {"n", r.n},
      {"chi", r.chi},
      {"sn", r.sn},
      {"clues", clues_json(r.clue_colours)},
      {"method", std::string(to_string(r.method))},
      {"completion", to_json(r.completion)},
      {"enumeration_overflow", r.enumeration_overflow},
  };
}

json to_json(const SudokuWitness& w) {
  return {
      {"pattern", std::string(to_string(w.pattern))},
      {"provenance", std::string(to_string(w.provenance))},
      {"uncoloured", {w.uncoloured.first, w.uncoloured.second}},
      {"clues", clues_json(w.partial)},
      {"coloured", w.partial.coloured_count()},
  };
}

json analyze(const Graph& g, const AnalyzeOptions& options) {
  json out;
  out["n"] = g.order();
  out["edges"] = g.edge_count();
  out["graph6"] = to_graph6(g);
  const bool connected = is_connected(g);
  const bool complete = is_complete(g);
  out["connected"] = connected;
  out["complete"] = complete;
  if (g.order() == 0) {
    out["chi"] = 0;
    out["sn"] = nullptr;
    out["status"] = "empty_graph";
    return out;
  }

  const auto cert = chromatic_number(g);
  out["chi"] = cert.chi;
  out["chi_witness"] = to_json(cert.witness);

  SnOptions sn_options;
  sn_options.enumeration_cap = options.enumeration_cap;
  if (options.time_limit_seconds)
    sn_options.deadline = Deadline::after(std::chrono::duration<double>(*options.time_limit_seconds));
  try {
    const SnReport r = sudoku_number(g, sn_options);
    out["sn"] = r.sn;
    out["method"] = std::string(to_string(r.method));
    out["clues"] = clues_json(r.clue_colours);
    out["completion"] = to_json(r.completion);
    out["enumeration_overflow"] = r.enumeration_overflow;
    out["status"] = "ok";
  } catch (const TimeoutError&) {
    out["sn"] = nullptr;
    out["status"] = "timeout";
  }

  if (connected && !complete && g.order() >= 3)
    out["witness"] = to_json(build_witness(g));
  else
    out["witness"] = nullptr;
  return out;
}

Clue parse_clue(std::string_view text) {
  const auto eq = text.find('=');
  if (eq == std::string_view::npos) throw ParseError("clue must look like v=c", 0);
  unsigned v = 0, c = 0;
  auto [p1, e1] = std::from_chars(text.data(), text.data() + eq, v);
  if (e1 != std::errc() || p1 != text.data() + eq || eq == 0) throw ParseError("clue vertex is not an integer", 0);
  auto [p2, e2] = std::from_chars(text.data() + eq + 1, text.data() + text.size(), c);
  if (e2 != std::errc() || p2 != text.data() + text.size() || eq + 1 == text.size())
    throw ParseError("clue colour is not an integer", eq + 1);
  return {v, c};
}

std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::not_proper: return "not_proper";
    case Verdict::no_extension: return "no_extension";
    case Verdict::unique: return "unique";
    case Verdict::many: return "many";
  }
  return "?";
}

VerifyResult verify(const Graph& g, const std::vector<Clue>& clues) {
  VerifyResult r;
  r.chi = chromatic_number(g).chi;
  r.partial = PartialColoring::empty(g.order(), r.chi);
  for (auto [v, c] : clues) {
    if (v >= g.order()) throw PreconditionError("clue vertex " + std::to_string(v) + " out of range");
    if (c < 1 || c > r.chi)
      throw PreconditionError("clue colour " + std::to_string(c) + " outside palette [1.." + std::to_string(r.chi) + "]");
    if (r.partial.colours[v] != kUncoloured) throw PreconditionError("vertex " + std::to_string(v) + " given twice");
    r.partial.colours[v] = c;
  }
  if (!is_proper(g, r.partial)) {
    r.verdict = Verdict::not_proper;
    return r;
  }
  auto count = count_extensions(g, r.partial, r.chi);
  switch (count.kind) {
    case ExtensionKind::none: r.verdict = Verdict::no_extension; break;
    case ExtensionKind::many: r.verdict = Verdict::many; break;
    case ExtensionKind::unique:
      r.verdict = Verdict::unique;
      r.completion = std::move(count.completion);
      break;
  }
  return r;
}

json to_json(const VerifyResult& r) {
  json out{
      {"verdict", std::string(to_string(r.verdict))},
      {"chi", r.chi},
      {"clues", clues_json(r.partial)},
  };
  out["completion"] = r.completion ? to_json(*r.completion) : json(nullptr);
  return out;
}

}  // namespace sudoku::report
