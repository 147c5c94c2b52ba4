// Command-line front end: instance generation, symmetrization, constructions,
// tour conversion, verification and search.

#include <cstdio>
#include <fstream>
#include <functional>
#include <iostream>
#include <iterator>
#include <optional>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "superperm/atsp_instance.hpp"
#include "superperm/constructions.hpp"
#include "superperm/error.hpp"
#include "superperm/exact.hpp"
#include "superperm/solve.hpp"
#include "superperm/superperm.hpp"
#include "superperm/symmetrize.hpp"

namespace {

using namespace superperm;

constexpr int kExitOk = 0;
constexpr int kExitDomainFailure = 1;
constexpr int kExitUsage = 2;

constexpr std::size_t kExactMaxVertices = 30;

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Owns an input file, or borrows stdin for "-" / empty path.
class Input {
 public:
  explicit Input(const std::string& path) {
    if (path.empty() || path == "-") return;
    file_.open(path);
    if (!file_) throw UsageError("cannot open " + path);
  }
  std::istream& stream() { return file_.is_open() ? static_cast<std::istream&>(file_) : std::cin; }

 private:
  std::ifstream file_;
};

class Output {
 public:
  explicit Output(const std::string& path) {
    if (path.empty() || path == "-") return;
    file_.open(path, std::ios::binary);
    if (!file_) throw UsageError("cannot write " + path);
  }
  std::ostream& stream() { return file_.is_open() ? static_cast<std::ostream&>(file_) : std::cout; }

 private:
  std::ofstream file_;
};

std::string read_symbols(const std::string& path) {
  Input in(path);
  std::string text((std::istreambuf_iterator<char>(in.stream())), std::istreambuf_iterator<char>());
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string::npos) return {};
  const auto last = text.find_last_not_of(" \t\r\n");
  return text.substr(first, last - first + 1);
}

std::string summary_line(TotalWeight weight, int n, std::size_t runs, std::size_t runs_to_best) {
  std::ostringstream out;
  out << "best_weight=" << weight;
  if (n > 0) out << " best_length=" << length_from_circuit_weight(n, weight);
  out << " runs=" << runs << " runs_to_best=" << runs_to_best;
  return out.str();
}

struct SolveOptions {
  std::string in;
  int n = 0;
  std::string out;
  std::uint64_t seed = 1;
  int restarts = 1;
  int kicks = 1000;
  int max_candidates = 6;
  int move_depth = 3;
  int workers = 1;
  std::optional<long long> target_length;
  std::optional<double> time_limit;
  bool exact = false;
  bool quiet = false;
};

int run_solve(const SolveOptions& opt, bool have_in, bool have_n) {
  if (have_in == have_n) throw UsageError("solve: give exactly one of --in and --n");
  const AtspInstance inst = [&] {
    if (have_n) return build_atsp(opt.n);
    Input in(opt.in);
    return parse_tsplib_atsp(in.stream());
  }();
  const int n = inst.n;

  Tour best;
  std::size_t runs = 1;
  std::size_t runs_to_best = 1;
  if (opt.exact) {
    if (inst.size() > kExactMaxVertices) {
      throw UsageError("--exact supports at most " + std::to_string(kExactMaxVertices) +
                       " vertices, instance has " + std::to_string(inst.size()));
    }
    if (inst.size() <= kHeldKarpMaxVertices) {
      best = held_karp(inst);
      std::cerr << "exact: held-karp optimal=true\n";
    } else {
      const auto result = branch_and_bound(inst, opt.time_limit.value_or(1e18));
      best = result.tour;
      std::cerr << "exact: branch-and-bound optimal=" << (result.optimal ? "true" : "false")
                << " nodes=" << result.nodes << "\n";
    }
  } else {
    SolverConfig cfg;
    cfg.seed = opt.seed;
    cfg.restarts = opt.restarts;
    cfg.kicks = opt.kicks;
    cfg.max_candidates = opt.max_candidates;
    cfg.move_depth = opt.move_depth;
    cfg.workers = opt.workers;
    cfg.time_limit = opt.time_limit;
    if (opt.target_length) {
      if (n == 0) throw UsageError("--target-length needs a superpermutation instance");
      cfg.target_weight = *opt.target_length - n;
    }
    cfg.validate();
    RunObserver observer;
    if (!opt.quiet) {
      observer = [](std::size_t run, TotalWeight w, TotalWeight b) {
        std::cerr << "run=" << run << " weight=" << w << " best=" << b << "\n";
      };
    }
    SolveResult result = solve(inst, cfg, observer);
    best = std::move(result.best);
    runs = result.runs();
    runs_to_best = result.runs_to_best;
  }

  if (!opt.out.empty()) {
    Output out(opt.out);
    std::string comment = "weight=" + std::to_string(best.weight());
    if (n > 0) comment += " length=" + std::to_string(length_from_circuit_weight(n, best.weight()));
    const std::string name = inst.name.empty() ? "tour" : inst.name + ".tour";
    write_tsplib_tour(best, name, comment, out.stream());
  }
  std::cout << summary_line(best.weight(), n, runs, runs_to_best) << "\n";
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Minimal superpermutations as asymmetric TSP instances"};
  app.require_subcommand(1);
  std::function<int()> action;

  // gen-atsp
  int gen_n = 0;
  std::string gen_out;
  auto* gen = app.add_subcommand("gen-atsp", "Write the n-symbol ATSP instance in TSPLIB format");
  gen->add_option("--n", gen_n, "Alphabet size (1-8)")->required();
  gen->add_option("--out", gen_out, "Output file (default: stdout)");
  gen->callback([&] {
    action = [&] {
      if (gen_n < 1 || gen_n > kMaxSymbols) throw UsageError("--n must be in 1..8");
      Output out(gen_out);
      write_superperm_atsp(gen_n, out.stream());
      return kExitOk;
    };
  });

  // symmetrise
  std::string sym_in;
  std::string sym_out;
  std::optional<Weight> sym_m;
  auto* sym = app.add_subcommand("symmetrise", "Jonker-Volgenant transform of an ATSP file");
  sym->add_option("--in", sym_in, "ATSP file ('-' for stdin)")->required();
  sym->add_option("--out", sym_out, "Output file (default: stdout)");
  sym->add_option("--big-m", sym_m, "Inflation constant M (default: N * max weight + 1)");
  sym->callback([&] {
    action = [&] {
      Input in(sym_in);
      const AtspInstance inst = parse_tsplib_atsp(in.stream());
      const SymInstance result = symmetrize(inst, sym_m.value_or(default_big_m(inst)));
      Output out(sym_out);
      write_tsplib_tsp(result, out.stream());
      return kExitOk;
    };
  });

  // palindromic
  int pal_n = 0;
  auto* pal = app.add_subcommand("palindromic", "Print the palindromic superpermutation");
  pal->add_option("--n", pal_n, "Alphabet size (1-8)")->required();
  pal->callback([&] {
    action = [&] {
      std::cout << palindromic(pal_n) << "\n";
      return kExitOk;
    };
  });

  // tour-to-superperm
  std::string t2s_tour;
  int t2s_n = 0;
  auto* t2s = app.add_subcommand("tour-to-superperm", "Print the superpermutation of a TSPLIB tour");
  t2s->add_option("--tour", t2s_tour, "TOUR file ('-' for stdin)")->required();
  t2s->add_option("--n", t2s_n, "Alphabet size (1-8)")->required();
  t2s->callback([&] {
    action = [&] {
      if (t2s_n < 1 || t2s_n > kMaxSymbols) throw UsageError("--n must be in 1..8");
      Input in(t2s_tour);
      const TourFile file = parse_tsplib_tour(in.stream());
      if (file.dimension != factorial(t2s_n)) {
        throw UsageError("tour dimension " + std::to_string(file.dimension) + " does not match " +
                         std::to_string(t2s_n) + "! = " + std::to_string(factorial(t2s_n)));
      }
      const AtspInstance inst = build_atsp(t2s_n);
      const Tour tour(file.order, inst.weights);
      std::cout << tour_to_superperm(tour, inst).text() << "\n";
      return kExitOk;
    };
  });

  // verify
  int ver_n = 0;
  std::string ver_file;
  auto* ver = app.add_subcommand("verify", "Check that a string contains every permutation");
  ver->add_option("--n", ver_n, "Alphabet size (1-8)")->required();
  ver->add_option("file", ver_file, "Input file (default: stdin)");
  ver->callback([&] {
    action = [&] {
      const Superpermutation sp(read_symbols(ver_file), ver_n);
      const VerifyReport report = verify(sp);
      if (report.valid) {
        std::cout << "valid length=" << report.length << " covered=" << report.distinct_covered
                  << " path_weight=" << report.path_weight << "\n";
        return kExitOk;
      }
      std::cout << "invalid missing=" << report.missing << "\n";
      return kExitDomainFailure;
    };
  });

  // split
  int split_n = 0;
  std::string split_file;
  auto* spl = app.add_subcommand("split", "List the permutation windows with their positions");
  spl->add_option("--n", split_n, "Alphabet size (1-8)")->required();
  spl->add_option("file", split_file, "Input file (default: stdin)");
  spl->callback([&] {
    action = [&] {
      const Superpermutation sp(read_symbols(split_file), split_n);
      std::string out;
      for (const auto& w : split(sp)) {
        out.append(std::to_string(w.position)).push_back(' ');
        out.append(w.perm.to_string()).push_back('\n');
      }
      std::cout << out;
      return kExitOk;
    };
  });

  // solve
  SolveOptions solve_opt;
  auto* slv = app.add_subcommand("solve", "Search for a short circuit (heuristic or exact)");
  auto* in_opt = slv->add_option("--in", solve_opt.in, "ATSP file ('-' for stdin)");
  auto* n_opt = slv->add_option("--n", solve_opt.n, "Alphabet size (1-8)");
  slv->add_option("--out", solve_opt.out, "Write the best tour here in TSPLIB TOUR format");
  slv->add_option("--seed", solve_opt.seed, "RNG seed")->capture_default_str();
  slv->add_option("--restarts", solve_opt.restarts, "Number of runs")->capture_default_str();
  slv->add_option("--kicks", solve_opt.kicks, "Perturbation rounds per run")->capture_default_str();
  slv->add_option("--max-candidates", solve_opt.max_candidates, "Candidate list size")
      ->capture_default_str();
  slv->add_option("--move-depth", solve_opt.move_depth, "2: Or-opt only, 3: also 3-opt")
      ->capture_default_str();
  slv->add_option("--workers", solve_opt.workers, "Parallel runs")->capture_default_str();
  slv->add_option("--target-length", solve_opt.target_length,
                  "Stop once a superpermutation this short is found");
  slv->add_option("--time-limit", solve_opt.time_limit, "Wall-clock budget in seconds");
  slv->add_flag("--exact", solve_opt.exact, "Exact search (at most 30 vertices)");
  slv->add_flag("--quiet", solve_opt.quiet, "No per-run progress on stderr");
  slv->callback([&] {
    action = [&] { return run_solve(solve_opt, in_opt->count() > 0, n_opt->count() > 0); };
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    if (e.get_exit_code() == 0) return app.exit(e);
    std::cerr << "error: " << e.what() << "\n\n" << app.help();
    return kExitUsage;
  }

  try {
    return action();
  } catch (const UsageError& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const InputError& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
  } catch (const CapabilityError& e) {
    std::cerr << "error: " << e.what() << "\n";
  } catch (const StructuralError& e) {
    std::cerr << "error: " << e.what() << "\n";
  }
  return kExitUsage;
}
