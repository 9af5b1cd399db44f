#pragma once

// Brute-force reference routines for tests. They share no search code with
// the library: plain adjacency matrices and exhaustive k^n assignment.

#include <cstdint>
#include <ostream>
#include <optional>
#include <random>
#include <string>
#include <vector>

#include "sudoku/sudoku.hpp"

namespace oracle {

using Matrix = std::vector<std::vector<bool>>;

inline Matrix matrix_of(const sudoku::Graph& g) {
  Matrix m(g.order(), std::vector<bool>(g.order(), false));
  for (auto [u, v] : g.edges()) m[u][v] = m[v][u] = true;
  return m;
}

inline bool proper(const Matrix& m, const std::vector<unsigned>& cs) {
  for (std::size_t u = 0; u < m.size(); ++u)
    for (std::size_t v = u + 1; v < m.size(); ++v)
      if (m[u][v] && cs[u] != 0 && cs[u] == cs[v]) return false;
  return true;
}

/// Calls f on every assignment in [1..k]^n (odometer order).
template <class F>
void for_each_assignment(std::size_t n, unsigned k, F&& f) {
  std::vector<unsigned> cs(n, 1);
  if (k == 0) return;
  while (true) {
    f(cs);
    std::size_t i = n;
    while (i > 0 && cs[i - 1] == k) cs[--i] = 1;
    if (i == 0) return;
    ++cs[i - 1];
  }
}

/// All proper k-colourings by exhaustive assignment.
inline std::vector<std::vector<unsigned>> all_colourings(const sudoku::Graph& g, unsigned k) {
  const auto m = matrix_of(g);
  std::vector<std::vector<unsigned>> out;
  for_each_assignment(g.order(), k, [&](const std::vector<unsigned>& cs) {
    if (proper(m, cs)) out.push_back(cs);
  });
  return out;
}

/// Smallest k admitting a proper k-colouring.
inline unsigned chi_by_assignment(const sudoku::Graph& g) {
  if (g.order() == 0) return 0;
  for (unsigned k = 1;; ++k)
    if (!all_colourings(g, k).empty()) return k;
}

/// Number of proper k-colourings agreeing with p (0 entries are free).
inline std::size_t extension_count(const sudoku::Graph& g, const std::vector<unsigned>& p, unsigned k) {
  std::size_t count = 0;
  for (const auto& cs : all_colourings(g, k)) {
    bool agree = true;
    for (std::size_t v = 0; v < p.size(); ++v)
      if (p[v] != 0 && p[v] != cs[v]) agree = false;
    if (agree) ++count;
  }
  return count;
}

/// sn by scanning every partial assignment in [0..chi]^n against the full
/// list of chi-colourings.
inline std::size_t sn_by_assignment(const sudoku::Graph& g) {
  const unsigned chi = chi_by_assignment(g);
  const auto all = all_colourings(g, chi);
  std::size_t best = g.order();
  for_each_assignment(g.order(), chi + 1, [&](const std::vector<unsigned>& shifted) {
    std::vector<unsigned> p(shifted.size());
    std::size_t clues = 0;
    for (std::size_t v = 0; v < p.size(); ++v) {
      p[v] = shifted[v] - 1;
      if (p[v] != 0) ++clues;
    }
    if (clues >= best) return;
    std::size_t agreeing = 0;
    for (const auto& cs : all) {
      bool agree = true;
      for (std::size_t v = 0; v < p.size() && agree; ++v)
        if (p[v] != 0 && p[v] != cs[v]) agree = false;
      if (agree && ++agreeing > 1) break;
    }
    if (agreeing == 1) best = clues;
  });
  return best;
}

inline bool connected(const Matrix& m) {
  const std::size_t n = m.size();
  if (n <= 1) return true;
  std::vector<bool> seen(n, false);
  std::vector<std::size_t> stack{0};
  seen[0] = true;
  while (!stack.empty()) {
    const auto u = stack.back();
    stack.pop_back();
    for (std::size_t v = 0; v < n; ++v)
      if (m[u][v] && !seen[v]) {
        seen[v] = true;
        stack.push_back(v);
      }
  }
  for (bool s : seen)
    if (!s) return false;
  return true;
}

/// Random simple graph G(n, p).
inline sudoku::Graph random_graph(std::mt19937_64& rng, std::size_t n, double p) {
  std::bernoulli_distribution edge(p);
  sudoku::Graph g(n);
  for (sudoku::Vertex u = 0; u < n; ++u)
    for (sudoku::Vertex v = u + 1; v < n; ++v)
      if (edge(rng)) g.add_edge(u, v);
  return g;
}

/// The Petersen graph: outer 5-cycle 0..4, spokes i -- i+5, inner pentagram.
inline sudoku::Graph petersen() {
  sudoku::Graph g(10);
  for (sudoku::Vertex i = 0; i < 5; ++i) {
    g.add_edge(i, (i + 1) % 5);
    g.add_edge(i, i + 5);
    g.add_edge(i + 5, (i + 2) % 5 + 5);
  }
  return g;
}

}  // namespace oracle
