#include "sudoku/tools/sweep.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <istream>
#include <map>
#include <mutex>
#include <ostream>
#include <thread>

#include "sudoku/sudoku.hpp"

namespace sudoku::sweep {

std::string_view to_string(Claim c) {
  switch (c) {
    case Claim::theorem1: return "theorem1";
    case Claim::bipartite_sn1: return "bipartite_sn1";
    case Claim::witness: return "witness";
    case Claim::oracle_equiv: return "oracle_equiv";
  }
  return "?";
}

Claim parse_claim(std::string_view text) {
  for (Claim c : {Claim::theorem1, Claim::bipartite_sn1, Claim::witness, Claim::oracle_equiv})
    if (text == to_string(c)) return c;
  throw ParseError("unknown claim '" + std::string(text) + "'", 0);
}

std::vector<Claim> parse_claims(std::string_view text) {
  std::vector<Claim> out;
  std::size_t start = 0;
  while (start <= text.size()) {
    auto end = text.find(',', start);
    if (end == std::string_view::npos) end = text.size();
    const auto field = text.substr(start, end - start);
    if (!field.empty()) {
      const Claim c = parse_claim(field);
      if (std::find(out.begin(), out.end(), c) == out.end()) out.push_back(c);
    }
    start = end + 1;
  }
  if (out.empty()) throw ParseError("empty claim list", 0);
  return out;
}

Graph labelled_graph(std::size_t n, std::uint64_t index) {
  Graph g(n);
  std::size_t bit = 0;
  for (Vertex j = 1; j < n; ++j)
    for (Vertex i = 0; i < j; ++i, ++bit)
      if ((index >> bit) & 1u) g.add_edge(i, j);
  return g;
}

namespace {

bool wants(const std::vector<Claim>& claims, Claim c) { return std::find(claims.begin(), claims.end(), c) != claims.end(); }

struct Tally {
  std::map<std::string, std::uint64_t> checks;
  std::vector<Violation> violations;
  std::vector<std::string> timeouts;
  std::map<std::size_t, OrderStats> orders;
  std::uint64_t graphs = 0;
  std::uint64_t connected = 0;

  void add(std::size_t n, const Graph& g, GraphOutcome&& outcome) {
    auto& stats = orders[n];
    stats.n = n;
    ++stats.graphs;
    ++graphs;
    if (outcome.connected) {
      ++stats.connected;
      ++connected;
    }
    for (auto& name : outcome.checked) ++checks[name];
    for (auto& v : outcome.violations) violations.push_back(std::move(v));
    if (outcome.timed_out) timeouts.push_back(to_graph6(g));
  }

  void merge(Tally&& other) {
    for (auto& [name, count] : other.checks) checks[name] += count;
    for (auto& v : other.violations) violations.push_back(std::move(v));
    for (auto& t : other.timeouts) timeouts.push_back(std::move(t));
    for (auto& [n, s] : other.orders) {
      auto& mine = orders[n];
      mine.n = n;
      mine.graphs += s.graphs;
      mine.connected += s.connected;
    }
    graphs += other.graphs;
    connected += other.connected;
  }
};

SweepResult finish(Tally&& tally, std::size_t n_min, std::size_t n_max, std::chrono::steady_clock::time_point start) {
  SweepResult r;
  r.n_min = n_min;
  r.n_max = n_max;
  r.graphs_checked = tally.graphs;
  r.connected_checked = tally.connected;
  for (auto& [n, s] : tally.orders) r.per_order.push_back(s);
  for (auto& [name, count] : tally.checks) r.checks.emplace_back(name, count);
  r.violations = std::move(tally.violations);
  std::sort(r.violations.begin(), r.violations.end());
  r.timeouts = std::move(tally.timeouts);
  std::sort(r.timeouts.begin(), r.timeouts.end(), [](const std::string& a, const std::string& b) {
    return a.size() != b.size() ? a.size() < b.size() : a < b;
  });
  r.elapsed_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace

GraphOutcome check_graph(const Graph& g, const std::vector<Claim>& claims, const SweepOptions& options) {
  GraphOutcome out;
  const std::size_t n = g.order();
  out.connected = is_connected(g);
  if (n == 0) return out;
  const std::string g6 = to_graph6(g);
  auto violate = [&](std::string claim, std::string detail) {
    out.violations.push_back({g6, std::move(claim), std::move(detail)});
  };

  SnOptions sn_options;
  if (options.time_limit_seconds)
    sn_options.deadline = Deadline::after(std::chrono::duration<double>(*options.time_limit_seconds));

  try {
    const bool complete = is_complete(g);
    const SnReport r = sudoku_number(g, sn_options);

    out.checked.emplace_back("upper_bound");
    if (r.sn + 1 > n) violate("upper_bound", "sn=" + std::to_string(r.sn));
    out.checked.emplace_back("palette_bound");
    if (r.sn < palette_lower_bound(r.chi) || colours_on(r.clue_colours, g.vertices()).count() < palette_lower_bound(r.chi))
      violate("palette_bound", "sn=" + std::to_string(r.sn) + " chi=" + std::to_string(r.chi));

    if (out.connected && n >= 2) {
      if (wants(claims, Claim::theorem1)) {
        out.checked.emplace_back("theorem1");
        if ((r.sn + 1 == n) != complete)
          violate("theorem1", "sn=" + std::to_string(r.sn) + " complete=" + (complete ? "true" : "false"));
      }
      if (wants(claims, Claim::bipartite_sn1)) {
        out.checked.emplace_back("bipartite_sn1");
        if ((r.sn == 1) != (r.chi == 2))
          violate("bipartite_sn1", "sn=" + std::to_string(r.sn) + " chi=" + std::to_string(r.chi));
      }
    }

    if (wants(claims, Claim::witness) && out.connected && !complete && n >= 3) {
      out.checked.emplace_back("witness");
      try {
        const SudokuWitness w = build_witness(g);
        const auto check = is_sudoku_coloring(g, w.partial, r.chi);
        if (w.partial.coloured_count() + 2 != n || !check.ok())
          violate("witness", "coloured=" + std::to_string(w.partial.coloured_count()) + " check=" +
                                 std::string(to_string(check.diagnostic)));
        else if (r.sn > w.partial.coloured_count())
          violate("witness", "sn exceeds witness size");
      } catch (const std::logic_error& e) {
        violate("witness", e.what());
      }
    }

    if (wants(claims, Claim::oracle_equiv) && n <= options.oracle_n_max) {
      out.checked.emplace_back("oracle_equiv");
      const auto cert = chromatic_number(g);
      const auto oracle = sn_by_subset_search(g, cert, std::nullopt, sn_options.deadline);
      if (!oracle || oracle->sn != r.sn || oracle->clue_colours != r.clue_colours)
        violate("oracle_equiv", "hitting_set=" + std::to_string(r.sn) +
                                    " subset_search=" + (oracle ? std::to_string(oracle->sn) : std::string("none")));
    }
  } catch (const TimeoutError&) {
    out.timed_out = true;
  } catch (const std::logic_error& e) {
    violate("internal", e.what());
  }
  return out;
}

SweepResult sweep_internal(const SweepOptions& options) {
  if (options.n_max > 8) throw PreconditionError("labelled enumeration is limited to n <= 8");
  if (options.n_max > 7 && !options.allow_large) throw PreconditionError("n_max = 8 requires the explicit override flag");
  if (options.n_min > options.n_max) throw PreconditionError("n_min exceeds n_max");

  const auto start = std::chrono::steady_clock::now();
  Tally total;
  const unsigned threads = std::max(1u, options.threads);
  for (std::size_t n = std::max<std::size_t>(options.n_min, 1); n <= options.n_max; ++n) {
    const std::uint64_t count = std::uint64_t{1} << (n * (n - 1) / 2);
    std::atomic<std::uint64_t> next{0};
    std::vector<Tally> shards(threads);
    auto worker = [&](Tally& tally) {
      constexpr std::uint64_t kChunk = 256;
      while (true) {
        const std::uint64_t begin = next.fetch_add(kChunk);
        if (begin >= count) return;
        const std::uint64_t end = std::min(count, begin + kChunk);
        for (std::uint64_t index = begin; index < end; ++index) {
          Graph g = labelled_graph(n, index);
          tally.add(n, g, check_graph(g, options.claims, options));
        }
      }
    };
    if (threads == 1) {
      worker(shards[0]);
    } else {
      std::vector<std::thread> pool;
      for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker, std::ref(shards[t]));
      for (auto& th : pool) th.join();
    }
    for (auto& s : shards) total.merge(std::move(s));
  }
  return finish(std::move(total), std::max<std::size_t>(options.n_min, 1), options.n_max, start);
}

SweepResult sweep_stream(std::istream& in, const SweepOptions& options, std::ostream& diagnostics) {
  const auto start = std::chrono::steady_clock::now();
  Tally total;
  std::uint64_t malformed = 0;
  std::size_t line_no = 0;
  std::size_t lo = kMaxVertices, hi = 0;
  std::string line;
  while (std::getline(in, line)) {
    ++line_no;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty()) continue;
    Graph g;
    try {
      g = parse_graph6(line);
    } catch (const ParseError& e) {
      diagnostics << "line " << line_no << ": " << e.what() << '\n';
      ++malformed;
      continue;
    }
    lo = std::min(lo, g.order());
    hi = std::max(hi, g.order());
    total.add(g.order(), g, check_graph(g, options.claims, options));
  }
  auto r = finish(std::move(total), total.graphs ? lo : 0, hi, start);
  r.malformed = malformed;
  return r;
}

nlohmann::json to_json(const SweepResult& r, const std::vector<Claim>& claims) {
  nlohmann::json out;
  out["n_range"] = {r.n_min, r.n_max};
  nlohmann::json names = nlohmann::json::array();
  for (Claim c : claims) names.push_back(std::string(to_string(c)));
  out["claims"] = names;
  out["graphs_checked"] = r.graphs_checked;
  out["connected_checked"] = r.connected_checked;
  nlohmann::json orders = nlohmann::json::array();
  for (const auto& s : r.per_order) orders.push_back({{"n", s.n}, {"graphs", s.graphs}, {"connected", s.connected}});
  out["per_order"] = orders;
  nlohmann::json checks = nlohmann::json::object();
  for (const auto& [name, count] : r.checks) checks[name] = count;
  out["checks"] = checks;
  nlohmann::json violations = nlohmann::json::array();
  for (const auto& v : r.violations) violations.push_back({{"graph6", v.graph6}, {"claim", v.claim}, {"detail", v.detail}});
  out["violations"] = violations;
  out["timeouts"] = r.timeouts;
  out["malformed"] = r.malformed;
  out["elapsed"] = r.elapsed_seconds;
  out["ok"] = r.ok();
  return out;
}

}  // namespace sudoku::sweep
