#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "sudoku/graph.hpp"

namespace sudoku::sweep {

enum class Claim { theorem1, bipartite_sn1, witness, oracle_equiv };

std::string_view to_string(Claim c);
Claim parse_claim(std::string_view text);
/// Comma-separated claim list.
std::vector<Claim> parse_claims(std::string_view text);

struct SweepOptions {
  std::size_t n_min = 1;
  std::size_t n_max = 5;
  std::vector<Claim> claims{Claim::theorem1};
  unsigned threads = 1;
  std::optional<double> time_limit_seconds;
  /// Labelled enumeration above n = 7 needs this flag.
  bool allow_large = false;
  /// oracle_equiv runs the brute-force solver only up to this order.
  std::size_t oracle_n_max = 5;
};

struct Violation {
  std::string graph6;
  std::string claim;
  std::string detail;

  friend bool operator<(const Violation& a, const Violation& b) {
    if (a.graph6.size() != b.graph6.size()) return a.graph6.size() < b.graph6.size();
    if (a.graph6 != b.graph6) return a.graph6 < b.graph6;
    return a.claim < b.claim;
  }
};

struct OrderStats {
  std::size_t n = 0;
  std::uint64_t graphs = 0;
  std::uint64_t connected = 0;
};

/// Tallies for one sweep. `checks` counts how many graphs each claim was
/// evaluated on; the always-on bounds are reported as "upper_bound" and
/// "palette_bound".
struct SweepResult {
  std::size_t n_min = 0;
  std::size_t n_max = 0;
  std::uint64_t graphs_checked = 0;
  std::uint64_t connected_checked = 0;
  std::vector<OrderStats> per_order;
  std::vector<std::pair<std::string, std::uint64_t>> checks;
  std::vector<Violation> violations;
  std::vector<std::string> timeouts;
  std::uint64_t malformed = 0;
  double elapsed_seconds = 0.0;

  bool ok() const noexcept { return violations.empty(); }
};

/// Outcome of all selected claims on one graph.
struct GraphOutcome {
  bool connected = false;
  bool timed_out = false;
  std::vector<std::string> checked;
  std::vector<Violation> violations;
};

GraphOutcome check_graph(const Graph& g, const std::vector<Claim>& claims, const SweepOptions& options);

/// Labelled graph number `index` on n vertices: bit b of the index decides
/// the b-th vertex pair in graph6 order (0-1, 0-2, 1-2, 0-3, ...).
Graph labelled_graph(std::size_t n, std::uint64_t index);

/// Every labelled graph with n_min <= n <= n_max.
SweepResult sweep_internal(const SweepOptions& options);

/// One graph6 record per line; malformed lines are reported on `diagnostics`
/// with their line number and skipped.
SweepResult sweep_stream(std::istream& in, const SweepOptions& options, std::ostream& diagnostics);

nlohmann::json to_json(const SweepResult& r, const std::vector<Claim>& claims);

}  // namespace sudoku::sweep
