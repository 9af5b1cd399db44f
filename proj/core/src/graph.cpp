#include "sudoku/graph.hpp"

#include <algorithm>
#include <charconv>
#include <string>

#include "sudoku/error.hpp"

namespace sudoku {

namespace {

constexpr int kBias = 63;
constexpr std::string_view kGraph6Header = ">>graph6<<";

void require_vertex(std::size_t n, Vertex v) {
  if (v >= n) throw PreconditionError("vertex " + std::to_string(v) + " out of range for order " + std::to_string(n));
}

void require_order(std::size_t n) {
  if (n > kMaxVertices)
    throw PreconditionError("graph order " + std::to_string(n) + " exceeds capacity " + std::to_string(kMaxVertices));
}

std::string_view trim(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t' || s.back() == '\r' || s.back() == '\n')) s.remove_suffix(1);
  return s;
}

}  // namespace

Graph::Graph(std::size_t n) : n_(n) {
  require_order(n);
  adj_.resize(n);
}

Graph Graph::from_edges(std::size_t n, const std::vector<Edge>& edges) {
  Graph g(n);
  for (auto [u, v] : edges) g.add_edge(u, v);
  return g;
}

void Graph::add_edge(Vertex u, Vertex v) {
  require_vertex(n_, u);
  require_vertex(n_, v);
  if (u == v) throw PreconditionError("loop at vertex " + std::to_string(u));
  adj_[u].set(v);
  adj_[v].set(u);
}

std::size_t Graph::edge_count() const noexcept {
  std::size_t twice = 0;
  for (const auto& row : adj_) twice += row.count();
  return twice / 2;
}

std::vector<Edge> Graph::edges() const {
  std::vector<Edge> out;
  for (Vertex u = 0; u < n_; ++u)
    for (Vertex v = u + 1; v < n_; ++v)
      if (adj_[u].test(v)) out.emplace_back(u, v);
  return out;
}

VertexSet Graph::vertices() const noexcept {
  VertexSet all;
  for (std::size_t v = 0; v < n_; ++v) all.set(v);
  return all;
}

std::vector<Vertex> members(const VertexSet& s) {
  std::vector<Vertex> out;
  out.reserve(s.count());
  for (Vertex v : s) out.push_back(v);
  return out;
}

// graph6 ---------------------------------------------------------------------

Graph parse_graph6(std::string_view text) {
  std::size_t base = 0;
  if (text.starts_with(kGraph6Header)) {
    text.remove_prefix(kGraph6Header.size());
    base = kGraph6Header.size();
  }
  while (!text.empty() && (text.back() == '\n' || text.back() == '\r' || text.back() == ' ' || text.back() == '\t'))
    text.remove_suffix(1);

  auto sextet = [&](std::size_t i) -> unsigned {
    const auto ch = static_cast<unsigned char>(text[i]);
    if (ch < 63 || ch > 126) throw ParseError("graph6: byte outside printable range 63..126", base + i);
    return ch - kBias;
  };

  if (text.empty()) throw ParseError("graph6: empty record", base);
  std::size_t pos = 0;
  std::size_t n = 0;
  if (static_cast<unsigned char>(text[0]) == 126) {
    if (text.size() >= 2 && static_cast<unsigned char>(text[1]) == 126)
      throw ParseError("graph6: order exceeds capacity " + std::to_string(kMaxVertices), base);
    if (text.size() < 4) throw ParseError("graph6: truncated order header", base + text.size());
    n = (sextet(1) << 12) | (sextet(2) << 6) | sextet(3);
    if (n < 63) throw ParseError("graph6: non-canonical long order header", base + 1);
    pos = 4;
  } else {
    n = sextet(0);
    pos = 1;
  }
  if (n > kMaxVertices) throw ParseError("graph6: order " + std::to_string(n) + " exceeds capacity", base);

  for (std::size_t i = pos; i < text.size(); ++i) sextet(i);

  const std::size_t bits = n * (n - (n > 0 ? 1 : 0)) / 2;
  const std::size_t bytes = (bits + 5) / 6;
  if (text.size() - pos < bytes) throw ParseError("graph6: truncated bit payload", base + text.size());
  if (text.size() - pos > bytes) throw ParseError("graph6: trailing bytes after payload", base + pos + bytes);

  Graph g(n);
  std::size_t k = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++k) {
      const unsigned word = sextet(pos + k / 6);
      if (word & (0x20u >> (k % 6))) g.add_edge(i, j);
    }
  }
  if (bits % 6 != 0) {
    const unsigned pad_mask = (1u << (6 - bits % 6)) - 1;
    if (sextet(pos + bytes - 1) & pad_mask) throw ParseError("graph6: padding bits set", base + pos + bytes - 1);
  }
  return g;
}

std::string to_graph6(const Graph& g) {
  const std::size_t n = g.order();
  require_order(n);
  std::string out;
  if (n < 63) {
    out.push_back(static_cast<char>(n + kBias));
  } else {
    out.push_back(static_cast<char>(126));
    out.push_back(static_cast<char>(((n >> 12) & 0x3F) + kBias));
    out.push_back(static_cast<char>(((n >> 6) & 0x3F) + kBias));
    out.push_back(static_cast<char>((n & 0x3F) + kBias));
  }
  unsigned word = 0;
  int filled = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i) {
      word = (word << 1) | (g.adjacent(i, j) ? 1u : 0u);
      if (++filled == 6) {
        out.push_back(static_cast<char>(word + kBias));
        word = 0;
        filled = 0;
      }
    }
  }
  if (filled > 0) out.push_back(static_cast<char>((word << (6 - filled)) + kBias));
  return out;
}

// Edge lists -----------------------------------------------------------------

Graph parse_edge_list(std::string_view text) {
  std::vector<Edge> edges;
  std::size_t declared = 0;
  bool have_declared = false;
  std::size_t max_endpoint_plus_one = 0;

  std::size_t line_start = 0;
  while (line_start <= text.size()) {
    std::size_t line_end = text.find('\n', line_start);
    if (line_end == std::string_view::npos) line_end = text.size();
    std::string_view line = text.substr(line_start, line_end - line_start);
    if (auto hash = line.find('#'); hash != std::string_view::npos) line = line.substr(0, hash);
    line = trim(line);

    if (!line.empty()) {
      unsigned values[2] = {0, 0};
      int count = 0;
      std::size_t i = 0;
      while (i < line.size()) {
        while (i < line.size() && (line[i] == ' ' || line[i] == '\t' || line[i] == ',')) ++i;
        if (i >= line.size()) break;
        if (count == 2) throw ParseError("edge list: more than two fields on a line", line_start + i);
        const char* first = line.data() + i;
        const char* last = line.data() + line.size();
        auto [ptr, ec] = std::from_chars(first, last, values[count]);
        if (ec != std::errc() || ptr == first) throw ParseError("edge list: expected a vertex index", line_start + i);
        i += static_cast<std::size_t>(ptr - first);
        if (i < line.size() && line[i] != ' ' && line[i] != '\t' && line[i] != ',')
          throw ParseError("edge list: unexpected character", line_start + i);
        ++count;
      }
      if (count == 1) {
        if (have_declared || !edges.empty()) throw ParseError("edge list: vertex count must come first", line_start);
        declared = values[0];
        have_declared = true;
      } else {
        if (values[0] == values[1]) throw ParseError("edge list: loop edge", line_start);
        edges.emplace_back(values[0], values[1]);
        max_endpoint_plus_one = std::max<std::size_t>(max_endpoint_plus_one, std::max(values[0], values[1]) + 1);
      }
    }
    if (line_end == text.size()) break;
    line_start = line_end + 1;
  }

  const std::size_t n = have_declared ? declared : max_endpoint_plus_one;
  if (n > kMaxVertices) throw ParseError("edge list: order exceeds capacity", 0);
  if (max_endpoint_plus_one > n) throw ParseError("edge list: endpoint exceeds declared vertex count", 0);
  return Graph::from_edges(n, edges);
}

// Families -------------------------------------------------------------------

std::string_view family_name(Family f) {
  switch (f) {
    case Family::complete: return "complete";
    case Family::path: return "path";
    case Family::cycle: return "cycle";
    case Family::complete_bipartite: return "complete_bipartite";
    case Family::sudoku: return "sudoku";
    case Family::edgeless: return "edgeless";
  }
  return "?";
}

FamilySpec parse_family_spec(std::string_view text) {
  text = trim(text);
  const auto colon = text.find(':');
  if (colon == std::string_view::npos) throw ParseError("family spec: expected name:param", text.size());
  const std::string_view name = text.substr(0, colon);

  FamilySpec spec;
  std::size_t arity = 1;
  if (name == "complete") spec.family = Family::complete;
  else if (name == "path") spec.family = Family::path;
  else if (name == "cycle") spec.family = Family::cycle;
  else if (name == "complete_bipartite") { spec.family = Family::complete_bipartite; arity = 2; }
  else if (name == "sudoku") spec.family = Family::sudoku;
  else if (name == "edgeless") spec.family = Family::edgeless;
  else throw ParseError("family spec: unknown family '" + std::string(name) + "'", 0);

  std::size_t pos = colon + 1;
  while (true) {
    const auto next = text.find(':', pos);
    const std::string_view field = text.substr(pos, next == std::string_view::npos ? std::string_view::npos : next - pos);
    unsigned value = 0;
    auto [ptr, ec] = std::from_chars(field.data(), field.data() + field.size(), value);
    if (ec != std::errc() || ptr != field.data() + field.size() || field.empty())
      throw ParseError("family spec: parameter is not a nonnegative integer", pos);
    spec.params.push_back(value);
    if (next == std::string_view::npos) break;
    pos = next + 1;
  }
  if (spec.params.size() != arity)
    throw ParseError("family spec: " + std::string(name) + " takes " + std::to_string(arity) + " parameter(s)", colon);
  return spec;
}

std::string to_string(const FamilySpec& spec) {
  std::string out(family_name(spec.family));
  for (unsigned p : spec.params) out += ":" + std::to_string(p);
  return out;
}

Graph generate(const FamilySpec& spec) {
  const std::size_t arity = spec.family == Family::complete_bipartite ? 2 : 1;
  if (spec.params.size() != arity)
    throw PreconditionError(std::string(family_name(spec.family)) + " takes " + std::to_string(arity) + " parameter(s)");
  for (unsigned p : spec.params)
    if (p < 1) throw PreconditionError("family size parameters must be at least 1");

  const unsigned a = spec.params[0];
  switch (spec.family) {
    case Family::complete: {
      Graph g(a);
      for (Vertex u = 0; u < a; ++u)
        for (Vertex v = u + 1; v < a; ++v) g.add_edge(u, v);
      return g;
    }
    case Family::path: {
      Graph g(a);
      for (Vertex v = 0; v + 1 < a; ++v) g.add_edge(v, v + 1);
      return g;
    }
    case Family::cycle: {
      if (a < 3) throw PreconditionError("cycle needs at least 3 vertices");
      Graph g(a);
      for (Vertex v = 0; v < a; ++v) g.add_edge(v, (v + 1) % a);
      return g;
    }
    case Family::complete_bipartite: {
      const unsigned b = spec.params[1];
      Graph g(std::size_t{a} + b);
      for (Vertex u = 0; u < a; ++u)
        for (Vertex v = a; v < a + b; ++v) g.add_edge(u, v);
      return g;
    }
    case Family::sudoku: {
      if (a < 2) throw PreconditionError("sudoku block order must be at least 2");
      const std::size_t side = std::size_t{a} * a;
      const std::size_t cells = side * side;
      if (cells > kMaxVertices) throw PreconditionError("sudoku " + std::to_string(a) + " exceeds vertex capacity");
      Graph g(cells);
      for (std::size_t x = 0; x < cells; ++x) {
        for (std::size_t y = x + 1; y < cells; ++y) {
          const std::size_t rx = x / side, cx = x % side, ry = y / side, cy = y % side;
          const bool same_box = rx / a == ry / a && cx / a == cy / a;
          if (rx == ry || cx == cy || same_box) g.add_edge(static_cast<Vertex>(x), static_cast<Vertex>(y));
        }
      }
      return g;
    }
    case Family::edgeless: return Graph(a);
  }
  throw PreconditionError("unknown family");
}

// Structure queries ----------------------------------------------------------

bool is_connected(const Graph& g) {
  const std::size_t n = g.order();
  if (n <= 1) return true;
  VertexSet seen;
  VertexSet frontier;
  seen.set(0);
  frontier.set(0);
  while (frontier.any()) {
    VertexSet next;
    for (Vertex v : frontier) next |= g.neighbours(v);
    frontier = next & ~seen;
    seen |= next;
  }
  return seen.count() == n;
}

bool is_complete(const Graph& g) {
  const std::size_t n = g.order();
  for (Vertex v = 0; v < n; ++v)
    if (g.degree(v) != n - 1) return false;
  return true;
}

Graph induced_subgraph(const Graph& g, const VertexSet& keep) {
  const auto kept = members(keep);
  for (Vertex v : kept) require_vertex(g.order(), v);
  Graph h(kept.size());
  for (Vertex i = 0; i < kept.size(); ++i)
    for (Vertex j = i + 1; j < kept.size(); ++j)
      if (g.adjacent(kept[i], kept[j])) h.add_edge(i, j);
  return h;
}

}  // namespace sudoku
