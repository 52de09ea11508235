// ybe - finite involutive solutions of the set-theoretic Yang-Baxter equation

// Command-line front end. Every subcommand prints JSON on stdout.
//
// Exit status: 0 success, 1 I/O / parse / usage errors, 2 when the input is
// not a valid solution or an asserted property fails.

#include <cstdlib>    // for EXIT_SUCCESS
#include <fstream>    // for ifstream
#include <iostream>   // for cout, cerr
#include <optional>   // for optional
#include <string>     // for string
#include <vector>     // for vector

#include "CLI11.hpp"

#include "ybe/io.hpp"
#include "ybe/ybe.hpp"

namespace {

  using ybe::io::json;

  constexpr int exit_ok     = 0;
  constexpr int exit_error  = 1;
  constexpr int exit_failed = 2;

  // Thrown for input that parses but is not a valid solution.
  struct InvalidSolution {
    ybe::Error error;
  };

  bool g_pretty = false;

  void emit(json const& j) {
    std::cout << ybe::io::dump(j, g_pretty) << '\n';
  }

  json read_document(std::string const& path) {
    if (path == "-") {
      return ybe::io::parse(std::cin);
    }
    std::ifstream in(path);
    if (!in) {
      throw ybe::Error(ybe::ErrorKind::parse_error, "cannot open " + path);
    }
    return ybe::io::parse(in);
  }

  bool is_validation_kind(ybe::ErrorKind k) {
    using ybe::ErrorKind;
    return k == ErrorKind::not_involutive || k == ErrorKind::not_nondegenerate
           || k == ErrorKind::braid_fails;
  }

  ybe::Solution read_solution(std::string const& path) {
    auto doc = read_document(path);
    try {
      return ybe::io::solution_from_json(doc);
    } catch (ybe::Error const& e) {
      if (is_validation_kind(e.kind())) {
        throw InvalidSolution{e};
      }
      throw;
    }
  }

  json optional_level(std::optional<std::size_t> v) {
    return v ? json(*v) : json(nullptr);
  }

  ////////////////////////////////////////////////////////////////////////
  // Subcommands
  ////////////////////////////////////////////////////////////////////////

  int run_validate(std::string const& path) {
    auto                   doc = read_document(path);
    ybe::ValidationReport  report;
    try {
      report = ybe::validate(ybe::io::table_from_json(doc));
    } catch (ybe::Error const& e) {
      if (e.kind() != ybe::ErrorKind::not_nondegenerate) {
        throw;
      }
      // A σ row that is not a bijection.
      report.nondegenerate = false;
      report.involutive    = false;
      report.braid         = false;
      report.square_free   = false;
      report.first_failure = ybe::Failure{e.kind(), e.witness()};
    }
    emit(ybe::io::to_json(report));
    return report.ok() ? exit_ok : exit_failed;
  }

  int run_analyze(std::string const& path) {
    auto s     = read_solution(path);
    auto group = ybe::iyb_group(s);
    auto orb   = ybe::orbits(group);
    json out{{"n", s.size()},
             {"square_free", s.square_free()},
             {"trivial", ybe::is_trivial(s)},
             {"orbit_count", orb.num_classes()},
             {"orbits", ybe::io::to_json(orb)},
             {"abelian", ybe::is_abelian(group)},
             {"cyclic_generators", ybe::check_cyclic_generators(s).holds},
             {"retract_class_count", ybe::retract_classes(s).num_classes()},
             {"rho_class_count", ybe::rho_classes(s).num_classes()},
             {"multipermutation_level", optional_level(ybe::multipermutation_level(s))},
             {"strong_level", optional_level(ybe::strong_level(s))}};
    try {
      out["group_order"] = ybe::order(group);
    } catch (ybe::Error const& e) {
      if (e.kind() != ybe::ErrorKind::cap_exceeded) {
        throw;
      }
      out["group_order"] = nullptr;
    }
    emit(out);
    return exit_ok;
  }

  int run_retract(std::string const& path, std::string const& mode, bool trace) {
    auto s     = read_solution(path);
    auto tower = mode == "rho" ? ybe::rho_tower(s) : ybe::retraction_tower(s);
    if (trace) {
      json out = json::array();
      for (auto const& t : tower) {
        out.push_back(ybe::io::to_json(t));
      }
      emit(out);
    } else {
      emit(ybe::io::to_json(tower.back()));
    }
    return exit_ok;
  }

  json candidate_json(ybe::GtuCandidate const& c, bool all_violations) {
    json out{{"Y", ybe::io::points_to_json(c.Y)},
             {"Z", ybe::io::points_to_json(c.Z)},
             {"holds", c.check.holds}};
    auto w = c.check.witness();
    out["witness"] = w ? ybe::io::to_json(*w) : json(nullptr);
    if (all_violations) {
      json v = json::array();
      for (auto const& x : c.check.violations) {
        v.push_back(ybe::io::to_json(x));
      }
      out["violations"] = std::move(v);
    }
    return out;
  }

  int run_twisted(std::string const& path, std::string const& mode_name, bool all_violations) {
    auto s = read_solution(path);
    if (s.size() < 2) {
      throw ybe::Error(ybe::ErrorKind::precondition_unmet, "need at least two points");
    }
    ybe::GtuMode mode = ybe::default_gtu_mode(s);
    if (mode_name == "general") {
      mode = ybe::GtuMode::general;
    } else if (mode_name == "squarefree") {
      if (!s.square_free()) {
        throw ybe::Error(ybe::ErrorKind::precondition_unmet,
                         "squarefree mode needs a square-free solution");
      }
      mode = ybe::GtuMode::squarefree;
    }
    auto cands = ybe::gtu_candidates(s, mode, false, all_violations);
    json out{{"mode", ybe::to_string(mode)}};
    if (!cands.empty() && cands.back().check.holds) {
      auto const& c     = cands.back();
      out["decomposable"] = true;
      out["Y"]            = ybe::io::points_to_json(c.Y);
      out["Z"]            = ybe::io::points_to_json(c.Z);
      out["witness"]      = nullptr;
    } else {
      out["decomposable"] = false;
      out["Y"]            = nullptr;
      out["Z"]            = nullptr;
      auto w = cands.empty() ? std::nullopt : cands.front().check.witness();
      out["witness"] = w ? ybe::io::to_json(*w) : json(nullptr);
    }
    json tried = json::array();
    for (auto const& c : cands) {
      tried.push_back(candidate_json(c, all_violations));
    }
    out["candidates"] = std::move(tried);
    emit(out);
    return exit_ok;
  }

  int run_structure(std::string const& path, std::optional<std::string> const& word, bool relations) {
    auto s = read_solution(path);
    if (relations) {
      auto c = ybe::check_defining_relations(s);
      json out{{"relations_hold", c.holds}};
      out["witness"] = c.holds ? json(nullptr) : ybe::io::points_to_json(c.witness);
      emit(out);
      return c.holds ? exit_ok : exit_failed;
    }
    if (!word) {
      throw ybe::Error(ybe::ErrorKind::parse_error, "structure needs --eval or --check-relations");
    }
    emit(ybe::io::to_json(ybe::eval_word(s, ybe::parse_word(*word))));
    return exit_ok;
  }

  int run_enumerate(std::size_t n, bool up_to_iso, bool jsonl, std::size_t threads, bool force) {
    ybe::EnumerateOptions opts;
    opts.up_to_iso = up_to_iso;
    opts.threads   = threads;
    if (force) {
      opts.n_cap = ybe::enumeration_hard_cap;
      if (n > ybe::enumeration_default_cap) {
        std::cerr << "warning: enumerating n = " << n << " may take a long time\n";
      }
    }
    auto sols = ybe::enumerate_square_free(n, opts);
    if (jsonl) {
      for (auto const& s : sols) {
        std::cout << ybe::io::to_json(s).dump() << '\n';
      }
      return exit_ok;
    }
    json out = json::array();
    for (auto const& s : sols) {
      out.push_back(ybe::io::to_json(s));
    }
    emit(out);
    return exit_ok;
  }

  int run_sweep(std::size_t        n_max,
                std::string const& claim,
                std::string const& filter,
                bool               up_to_iso,
                std::size_t        threads,
                bool               force,
                bool               verbose) {
    ybe::SweepOptions opts;
    opts.filter    = ybe::parse_filter(filter);
    opts.up_to_iso = up_to_iso;
    opts.threads   = threads;
    if (force) {
      opts.n_cap = ybe::enumeration_hard_cap;
      if (n_max > ybe::sweep_default_cap) {
        std::cerr << "warning: sweeping up to n = " << n_max << " may take a long time\n";
      }
    }
    auto rep = ybe::sweep(n_max, claim, opts);
    json out{{"claim", rep.claim},
             {"asserted", rep.asserted},
             {"n_max", rep.n_max},
             {"filter", ybe::to_string(rep.filter)},
             {"universe", rep.up_to_iso ? "isomorphism classes" : "labeled"},
             {"examined", rep.examined},
             {"applicable", rep.applicable},
             {"passed", rep.passed},
             {"failed", rep.failed},
             {"ok", rep.ok()}};
    json counterexamples = json::array();
    json verdicts        = json::array();
    for (auto const& e : rep.entries) {
      if (e.verdict == ybe::Verdict::fail) {
        counterexamples.push_back(ybe::io::to_json(e.solution));
      }
      json v{{"n", e.n}, {"index", e.index}, {"verdict", ybe::to_string(e.verdict)}};
      if (verbose) {
        v["solution"] = ybe::io::to_json(e.solution);
      }
      verdicts.push_back(std::move(v));
    }
    out["counterexamples"] = std::move(counterexamples);
    out["verdicts"]        = std::move(verdicts);
    emit(out);
    return rep.ok() ? exit_ok : exit_failed;
  }

  int run_iso(std::string const& a, std::string const& b) {
    auto p = ybe::is_isomorphic(read_solution(a), read_solution(b));
    emit(json{{"isomorphic", p.has_value()}, {"map", p ? ybe::io::to_json(*p) : json(nullptr)}});
    return exit_ok;
  }

  int run_corpus_list() {
    json out = json::array();
    for (auto const& [name, about] : ybe::corpus::names()) {
      out.push_back({{"name", name}, {"description", about}});
    }
    emit(out);
    return exit_ok;
  }

  int run_corpus_emit(std::string const& name) {
    emit(ybe::io::to_json(ybe::corpus::by_name(name)));
    return exit_ok;
  }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Finite involutive set-theoretic solutions of the Yang-Baxter equation"};
  app.require_subcommand(1);
  app.add_flag("--pretty", g_pretty, "Indent JSON output");

  std::string file, file_b, mode, word, name, claim, filter = "all";
  bool        trace = false, relations = false, up_to_iso = false, jsonl = false;
  bool        force = false, verbose = false, all_violations = false;
  std::size_t n = 0, n_max = 0, threads = 1;

  auto* validate = app.add_subcommand("validate", "Check the solution axioms");
  validate->add_option("file", file, "Solution document, - for stdin")->required();

  auto* analyze = app.add_subcommand("analyze", "Orbits, group, retraction levels");
  analyze->add_option("file", file, "Solution document, - for stdin")->required();

  auto* retract = app.add_subcommand("retract", "Apply Ret or Ret_rho");
  retract->add_option("file", file, "Solution document, - for stdin")->required();
  retract->add_option("--mode", mode, "ret or rho")->check(CLI::IsMember({"ret", "rho"}))->default_val("ret");
  retract->add_flag("--trace", trace, "Print the whole tower, outermost first");

  auto* twisted = app.add_subcommand("twisted", "Search for a generalized twisted union");
  twisted->add_option("file", file, "Solution document, - for stdin")->required();
  twisted->add_option("--mode", mode, "auto, general or squarefree")
      ->check(CLI::IsMember({"auto", "general", "squarefree"}))
      ->default_val("auto");
  twisted->add_flag("--violations", all_violations, "List every failing condition instance");

  auto* structure = app.add_subcommand("structure", "Structure group arithmetic");
  structure->add_option("file", file, "Solution document, - for stdin")->required();
  auto* eval_opt = structure->add_option("--eval", word, "Word such as \"x1 x3 x2^-1\"");
  structure->add_flag("--check-relations", relations, "Verify the defining relations");

  auto* enumerate = app.add_subcommand("enumerate", "All square-free solutions on n points");
  enumerate->add_option("--n", n, "Number of points")->required()->check(CLI::PositiveNumber);
  enumerate->add_flag("--up-to-iso", up_to_iso, "One canonical form per isomorphism class");
  enumerate->add_flag("--jsonl", jsonl, "One document per line");
  enumerate->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);
  enumerate->add_flag("--force", force, "Allow n up to 8");

  auto* sweep = app.add_subcommand("sweep", "Check a claim on all small solutions");
  sweep->add_option("--n-max", n_max, "Largest n")->required()->check(CLI::PositiveNumber);
  sweep->add_option("--claim", claim, "Claim name")->required();
  sweep->add_option("--filter", filter, "all, abelian or cyclic")
      ->check(CLI::IsMember({"all", "abelian", "cyclic"}));
  sweep->add_flag("--up-to-iso", up_to_iso, "Only canonical forms");
  sweep->add_option("--threads", threads, "Worker threads")->check(CLI::PositiveNumber);
  sweep->add_flag("--force", force, "Allow n-max up to 8");
  sweep->add_flag("--verbose", verbose, "Include every solution in the verdict list");

  auto* iso = app.add_subcommand("iso", "Find an isomorphism between two solutions");
  iso->add_option("file_a", file, "First document")->required();
  iso->add_option("file_b", file_b, "Second document")->required();

  auto* corpus = app.add_subcommand("corpus", "Built-in solutions");
  corpus->require_subcommand(1);
  auto* corpus_list = corpus->add_subcommand("list", "List the built-in solutions");
  auto* corpus_emit = corpus->add_subcommand("emit", "Print a built-in solution");
  corpus_emit->add_option("name", name, "e24, s4 or trivial<n>")->required();

  try {
    app.parse(argc, argv);
  } catch (CLI::ParseError const& e) {
    return app.exit(e) == 0 ? exit_ok : exit_error;
  }

  try {
    if (*validate) {
      return run_validate(file);
    }
    if (*analyze) {
      return run_analyze(file);
    }
    if (*retract) {
      return run_retract(file, mode, trace);
    }
    if (*twisted) {
      return run_twisted(file, mode, all_violations);
    }
    if (*structure) {
      return run_structure(file, *eval_opt ? std::optional<std::string>(word) : std::nullopt, relations);
    }
    if (*enumerate) {
      return run_enumerate(n, up_to_iso, jsonl, threads, force);
    }
    if (*sweep) {
      return run_sweep(n_max, claim, filter, up_to_iso, threads, force, verbose);
    }
    if (*iso) {
      return run_iso(file, file_b);
    }
    if (*corpus_list) {
      return run_corpus_list();
    }
    if (*corpus_emit) {
      return run_corpus_emit(name);
    }
  } catch (InvalidSolution const& bad) {
    emit(json{{"error", ybe::to_string(bad.error.kind())},
              {"message", bad.error.what()},
              {"witness", ybe::io::points_to_json(bad.error.witness())}});
    return exit_failed;
  } catch (ybe::Error const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_error;
  } catch (std::exception const& e) {
    std::cerr << "error: " << e.what() << '\n';
    return exit_error;
  }
  return exit_error;
}
