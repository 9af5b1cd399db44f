// sngraph: Sudoku numbers, Sudoku colouring checks and exhaustive sweeps for small graphs.
//
// Exit status: 0 success, 1 claim violation or non-unique verdict, 2 usage or parse error.

#include <fstream>
#include <iostream>
#include <thread>

#include <CLI11.hpp>

#include "sudoku/tools/report.hpp"
#include "sudoku/tools/sweep.hpp"

namespace {

constexpr int kExitOk = 0;
constexpr int kExitViolation = 1;
constexpr int kExitUsage = 2;

void emit(const nlohmann::json& doc) { std::cout << doc.dump(2) << '\n'; }

}  // namespace

int main(int argc, char** argv) {
  using namespace sudoku;

  CLI::App app{"Sudoku numbers and Sudoku colourings of small graphs"};
  app.require_subcommand(1);
  bool json_flag = false;
  std::optional<double> time_limit;
  unsigned threads = 1;
  app.add_flag("--json", json_flag, "Emit JSON (the default for every report)");
  app.add_option("--time-limit", time_limit, "Per-graph time budget in seconds for sn computation")
      ->check(CLI::PositiveNumber);
  app.add_option("--threads", threads, "Worker threads for sweeps (0 = hardware concurrency)");

  std::string analyze_src;
  auto* analyze = app.add_subcommand("analyze", "Report chi, sn, an optimal clue set and a two-hole witness");
  analyze->add_option("source", analyze_src, "graph6 string, family spec (cycle:5), file path, or -")->required();

  std::string verify_src;
  std::vector<std::string> clue_texts;
  auto* verify = app.add_subcommand("verify", "Classify a clue list: not_proper, no_extension, unique or many");
  verify->add_option("source", verify_src, "graph source")->required();
  verify->add_option("--clue", clue_texts, "Clue as v=c (repeatable)");

  std::size_t n_max = 5;
  std::size_t n_min = 1;
  std::string claims_text = "theorem1";
  std::string source_text = "internal";
  bool allow_large = false;
  std::size_t oracle_n_max = 5;
  auto* sweep = app.add_subcommand("sweep", "Check claims over every labelled graph or a graph6 stream");
  sweep->add_option("--n-max", n_max, "Largest order for internal enumeration");
  sweep->add_option("--n-min", n_min, "Smallest order for internal enumeration");
  sweep->add_option("--claims", claims_text, "Comma list of theorem1,bipartite_sn1,witness,oracle_equiv");
  sweep->add_option("--source", source_text, "internal or graph6:<path>");
  sweep->add_flag("--allow-n8", allow_large, "Permit internal enumeration at n = 8");
  sweep->add_option("--oracle-n-max", oracle_n_max, "Largest order checked by oracle_equiv");

  std::string gen_spec;
  auto* gen = app.add_subcommand("gen", "Print the graph6 encoding of a family member");
  gen->add_option("spec", gen_spec, "Family spec, e.g. complete:3 or complete_bipartite:2:3")->required();

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    if (analyze->parsed()) {
      report::AnalyzeOptions options;
      options.time_limit_seconds = time_limit;
      emit(report::analyze(report::load_graph(analyze_src), options));
      return kExitOk;
    }

    if (verify->parsed()) {
      std::vector<report::Clue> clues;
      for (const auto& text : clue_texts) clues.push_back(report::parse_clue(text));
      const auto result = report::verify(report::load_graph(verify_src), clues);
      emit(report::to_json(result));
      return result.verdict == report::Verdict::unique ? kExitOk : kExitViolation;
    }

    if (sweep->parsed()) {
      sweep::SweepOptions options;
      options.n_min = n_min;
      options.n_max = n_max;
      options.claims = sweep::parse_claims(claims_text);
      options.threads = threads == 0 ? std::max(1u, std::thread::hardware_concurrency()) : threads;
      options.time_limit_seconds = time_limit;
      options.allow_large = allow_large;
      options.oracle_n_max = oracle_n_max;

      sweep::SweepResult result;
      if (source_text == "internal") {
        result = sweep::sweep_internal(options);
      } else if (source_text.starts_with("graph6:")) {
        const std::string path = source_text.substr(7);
        if (path == "-") {
          result = sweep::sweep_stream(std::cin, options, std::cerr);
        } else {
          std::ifstream in(path);
          if (!in) throw ParseError("cannot open '" + path + "'", 0);
          result = sweep::sweep_stream(in, options, std::cerr);
        }
      } else {
        throw ParseError("--source must be internal or graph6:<path>", 0);
      }
      emit(sweep::to_json(result, options.claims));
      return result.ok() ? kExitOk : kExitViolation;
    }

    if (gen->parsed()) {
      const std::string g6 = to_graph6(generate(parse_family_spec(gen_spec)));
      if (json_flag)
        emit({{"graph6", g6}});
      else
        std::cout << g6 << '\n';
      return kExitOk;
    }
  } catch (const ParseError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const PreconditionError& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitUsage;
  }
  return kExitUsage;
}
