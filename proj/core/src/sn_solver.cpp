#include "sudoku/sn_solver.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "sudoku/error.hpp"
#include "sudoku/extension.hpp"

namespace sudoku {

std::string_view to_string(SnMethod m) {
  switch (m) {
    case SnMethod::hitting_set: return "hitting_set";
    case SnMethod::subset_search: return "subset_search";
  }
  return "?";
}

namespace {

/// Advances `idx` to the next k-combination of [0, n) in lexicographic order.
bool next_combination(std::vector<Vertex>& idx, std::size_t n) {
  const std::size_t k = idx.size();
  for (std::size_t i = k; i-- > 0;) {
    if (idx[i] < n - k + i) {
      ++idx[i];
      for (std::size_t j = i + 1; j < k; ++j) idx[j] = idx[j - 1] + 1;
      return true;
    }
  }
  return false;
}

std::vector<Vertex> first_combination(std::size_t k) {
  std::vector<Vertex> idx(k);
  for (std::size_t i = 0; i < k; ++i) idx[i] = static_cast<Vertex>(i);
  return idx;
}

bool is_canonical(const std::vector<Colour>& cs) {
  Colour max_used = 0;
  for (Colour c : cs) {
    if (c > max_used + 1) return false;
    max_used = std::max(max_used, c);
  }
  return true;
}

/// Exact minimum hitting set by branch and bound. Finds only sets strictly
/// smaller than the running bound, which callers share across targets.
class HittingSetSearch {
 public:
  HittingSetSearch(std::vector<VertexSet> sets, std::size_t universe, const Deadline& deadline)
      : sets_(std::move(sets)), universe_(universe), deadline_(deadline) {
    // Supersets are implied by their subsets.
    std::stable_sort(sets_.begin(), sets_.end(),
                     [](const VertexSet& a, const VertexSet& b) { return a.count() < b.count(); });
    std::vector<VertexSet> minimal;
    for (const auto& s : sets_) {
      const bool implied = std::any_of(minimal.begin(), minimal.end(), [&](const VertexSet& m) { return (m & ~s).none(); });
      if (!implied) minimal.push_back(s);
    }
    sets_ = std::move(minimal);
  }

  bool empty_set_present() const { return !sets_.empty() && sets_.front().none(); }

  std::size_t greedy_upper_bound() const {
    VertexSet chosen;
    std::size_t size = 0;
    while (true) {
      std::vector<std::size_t> hits(universe_, 0);
      bool any = false;
      for (const auto& s : sets_) {
        if ((s & chosen).any()) continue;
        any = true;
        for (Vertex v : s) ++hits[v];
      }
      if (!any) return size;
      const auto best = std::max_element(hits.begin(), hits.end()) - hits.begin();
      chosen.set(static_cast<std::size_t>(best));
      ++size;
    }
  }

  /// Lowers `bound` to the minimum hitting-set size if that is smaller.
  void minimize(std::size_t& bound, std::size_t floor) {
    bound_ = &bound;
    floor_ = floor;
    search(VertexSet{}, VertexSet{}, 0);
  }

 private:
  void search(const VertexSet& chosen, VertexSet forbidden, std::size_t depth) {
    deadline_.poll();
    if (depth >= *bound_ || *bound_ <= floor_) return;

    const VertexSet* branch = nullptr;
    VertexSet branch_allowed;
    std::size_t branch_size = kMaxVertices + 1;
    VertexSet packed;
    std::size_t packing = 0;
    for (const auto& s : sets_) {
      if ((s & chosen).any()) continue;
      const VertexSet allowed = s & ~forbidden;
      const std::size_t size = allowed.count();
      if (size == 0) return;
      if (size < branch_size) {
        branch = &s;
        branch_allowed = allowed;
        branch_size = size;
      }
      if ((allowed & packed).none()) {
        packed |= allowed;
        ++packing;
      }
    }
    if (branch == nullptr) {
      *bound_ = depth;
      return;
    }
    if (depth + packing >= *bound_) return;

    for (Vertex v : branch_allowed) {
      VertexSet next = chosen;
      next.set(v);
      search(next, forbidden, depth + 1);
      forbidden.set(v);
      if (depth + 1 >= *bound_) return;
    }
  }

  std::vector<VertexSet> sets_;
  std::size_t universe_;
  const Deadline& deadline_;
  std::size_t* bound_ = nullptr;
  std::size_t floor_ = 0;
};

SnReport make_report(const Graph& g, Colour chi, const std::vector<Vertex>& clues, const std::vector<Colour>& completion,
                     SnMethod method) {
  SnReport r;
  r.n = g.order();
  r.chi = chi;
  r.sn = clues.size();
  r.clue_set = clues;
  r.completion = Coloring(completion, chi);
  VertexSet keep;
  for (Vertex v : clues) keep.set(v);
  r.clue_colours = restrict(r.completion, keep);
  r.method = method;
  return r;
}

/// Lexicographically first optimal witness among all enumerated colourings:
/// the first s-subset on which some colouring's projection is unique, and the
/// smallest such projection.
std::optional<SnReport> first_witness_of_size(const Graph& g, Colour chi, const std::vector<Coloring>& all,
                                              std::size_t s, const Deadline& deadline) {
  const std::size_t n = g.order();
  auto idx = first_combination(s);
  do {
    std::map<std::vector<Colour>, std::pair<std::size_t, std::size_t>> projections;
    for (std::size_t i = 0; i < all.size(); ++i) {
      deadline.poll();
      std::vector<Colour> key(s);
      for (std::size_t j = 0; j < s; ++j) key[j] = all[i][idx[j]];
      auto [it, inserted] = projections.try_emplace(std::move(key), 0, i);
      ++it->second.first;
    }
    for (const auto& [key, entry] : projections)
      if (entry.first == 1) return make_report(g, chi, idx, all[entry.second].colours(), SnMethod::hitting_set);
  } while (s > 0 && next_combination(idx, n));
  return std::nullopt;
}

}  // namespace

std::optional<SnReport> sn_by_hitting_set(const Graph& g, const ChiCertificate& chi, const SnOptions& options) {
  const std::size_t n = g.order();
  if (n == 0) throw PreconditionError("sudoku number needs at least one vertex");

  EnumerationOptions enum_opts;
  enum_opts.cap = options.enumeration_cap;
  auto all = enumerate_colorings(g, chi.chi, enum_opts);
  if (all.overflow) return std::nullopt;
  if (all.colorings.empty()) throw std::logic_error("sn_by_hitting_set: no proper chi-colouring enumerated");

  const std::size_t floor = palette_lower_bound(chi.chi);
  std::size_t best = n;
  for (const auto& target : all.colorings) {
    if (best <= floor) break;
    if (!is_canonical(target.colours())) continue;
    std::vector<VertexSet> diffs;
    diffs.reserve(all.colorings.size());
    for (const auto& other : all.colorings) {
      if (&other == &target) continue;
      VertexSet d;
      for (Vertex v = 0; v < n; ++v)
        if (other[v] != target[v]) d.set(v);
      diffs.push_back(d);
    }
    HittingSetSearch search(std::move(diffs), n, options.deadline);
    if (search.empty_set_present()) throw std::logic_error("sn_by_hitting_set: duplicate colouring enumerated");
    best = std::min(best, search.greedy_upper_bound());
    search.minimize(best, floor);
  }

  auto report = first_witness_of_size(g, chi.chi, all.colorings, best, options.deadline);
  if (!report) throw std::logic_error("sn_by_hitting_set: optimal size has no witness");
  return report;
}

std::optional<SnReport> sn_by_subset_search(const Graph& g, const ChiCertificate& chi,
                                            std::optional<std::size_t> size_limit, const Deadline& deadline) {
  const std::size_t n = g.order();
  if (n == 0) throw PreconditionError("sudoku number needs at least one vertex");
  const Colour k = chi.chi;
  const std::size_t limit = std::min(n, size_limit.value_or(n));

  for (std::size_t s = 0; s <= limit; ++s) {
    auto idx = first_combination(s);
    do {
      PartialColoring p = PartialColoring::empty(n, k);
      std::vector<Colour> assignment(s, 1);
      while (true) {
        deadline.poll();
        for (std::size_t j = 0; j < s; ++j) p.colours[idx[j]] = assignment[j];
        if (is_proper(g, p)) {
          auto count = count_extensions(g, p, k, 2, deadline);
          if (count.kind == ExtensionKind::unique) {
            auto r = make_report(g, k, idx, count.completion->colours(), SnMethod::subset_search);
            return r;
          }
        }
        std::size_t j = s;
        while (j > 0 && assignment[j - 1] == k) assignment[--j] = 1;
        if (j == 0) break;
        ++assignment[j - 1];
      }
    } while (s > 0 && next_combination(idx, n));
  }
  return std::nullopt;
}

SnReport sudoku_number(const Graph& g, const SnOptions& options) {
  if (g.order() == 0) throw PreconditionError("sudoku number needs at least one vertex");
  const auto chi = chromatic_number(g);

  std::optional<SnReport> report = sn_by_hitting_set(g, chi, options);
  if (!report) {
    report = sn_by_subset_search(g, chi, std::nullopt, options.deadline);
    if (!report) throw std::logic_error("sudoku_number: no Sudoku colouring found");
    report->enumeration_overflow = true;
  }

  const auto check = is_sudoku_coloring(g, report->clue_colours, chi.chi);
  if (!check.ok() || check.completion != report->completion)
    throw std::logic_error("sudoku_number: witness failed verification");
  if (report->sn + 1 > g.order()) throw std::logic_error("sudoku_number: sn exceeds n-1");
  if (report->sn < palette_lower_bound(chi.chi)) throw std::logic_error("sudoku_number: sn below chi-1");
  return *report;
}

}  // namespace sudoku
