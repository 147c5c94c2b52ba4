// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.

#include <omp.h>

#include <algorithm>
#include <chrono>
#include <cstdio>
#include <fstream>
#include <sstream>
#include <string>

#include "cli_support.hpp"
#include "oracles.hpp"
#include "superperm/atsp_instance.hpp"
#include "superperm/constructions.hpp"
#include "superperm/exact.hpp"
#include "superperm/local_search.hpp"
#include "superperm/permutation.hpp"
#include "superperm/solve.hpp"
#include "superperm/superperm.hpp"
#include "superperm/symmetrize.hpp"

using namespace superperm;

namespace {

// Budgets and thresholds.
constexpr double kVerifySeconds = 1.0;
constexpr double kPalindromicSeconds = 1.0;
constexpr double kBranchAndBoundSeconds = 600.0;
constexpr int kFiveSeeds = 10;
constexpr int kFiveSeedsRequired = 8;
constexpr int kFiveRestarts = 1000;
constexpr double kFiveSeconds = 120.0;
constexpr int kSixRestarts = 500;
constexpr double kSixSeconds = 600.0;
constexpr int kSixKicks = 100000;
constexpr TotalWeight kSixTargetLength = 873;
constexpr int kSymInstances = 50;
constexpr double kSymSeconds = 30.0;
constexpr int kRoundTripTours = 100;
constexpr int kLocalSearchStarts = 1000;

const char* const kLiteralStrings[] = {
    "121",
    "123121321",
    "123412314231243121342132413214321",
    "1234512341523412534123541231452314253142351423154231245312435124315243125431213452134251"
    "34215342135421324513241532413524132541321453214352143251432154321",
};

int failures = 0;

class Stopwatch {
 public:
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
  }

 private:
  std::chrono::steady_clock::time_point start_ = std::chrono::steady_clock::now();
};

void report(int criterion, bool pass, const std::string& detail) {
  if (!pass) ++failures;
  std::printf("criterion %2d: %s  %s\n", criterion, pass ? "PASS" : "FAIL", detail.c_str());
  std::fflush(stdout);
}

std::string fixture() {
  std::ifstream in(SUPERPERM_DATA_DIR "/superperm-6-872.txt");
  std::string line;
  std::getline(in, line);
  return line;
}

void counterexample() {
  const Stopwatch clock;
  const VerifyReport r = verify(Superpermutation(fixture(), 6));
  const double t = clock.seconds();
  const bool pass = r.valid && r.length == 872 && r.distinct_covered == 720 &&
                    r.path_weight == 866 && t < kVerifySeconds;
  std::ostringstream d;
  d << "valid=" << r.valid << " length=" << r.length << " covered=" << r.distinct_covered
    << " path_weight=" << r.path_weight << " time=" << t << "s";
  report(1, pass, d.str());
}

void palindromic_lengths() {
  const Stopwatch clock;
  const std::size_t expected[] = {1, 3, 9, 33, 153, 873};
  bool pass = true;
  std::ostringstream d;
  d << "lengths=";
  for (int n = 1; n <= 6; ++n) {
    const std::string s = palindromic(n);
    const bool palindrome = std::equal(s.begin(), s.end(), s.rbegin());
    pass = pass && s.size() == expected[n - 1] && palindrome && verify(Superpermutation(s, n)).valid;
    d << s.size() << (n < 6 ? "," : "");
  }
  const double t = clock.seconds();
  pass = pass && t < kPalindromicSeconds;
  d << " time=" << t << "s";
  report(2, pass, d.str());
}

void literal_strings() {
  bool pass = true;
  for (int n = 2; n <= 5; ++n) pass = pass && palindromic(n) == kLiteralStrings[n - 2];
  report(3, pass, "palindromic(2..5) vs literal strings");
}

void exact_optima() {
  const Tour hk = held_karp(build_atsp(3));
  const Stopwatch clock;
  const BranchAndBoundResult bb = branch_and_bound(build_atsp(4), kBranchAndBoundSeconds);
  std::ostringstream d;
  d << "held_karp(3)=" << hk.weight() << " branch_and_bound(4)=" << bb.tour.weight()
    << " optimal=" << bb.optimal << " nodes=" << bb.nodes << " time=" << clock.seconds() << "s";
  report(4, hk.weight() == 6 && bb.tour.weight() == 29 && bb.optimal, d.str());
}

void five_symbols() {
  const AtspInstance inst = build_atsp(5);
  int hits = 0;
  std::ostringstream d;
  d << "runs_to_153 per seed:";
  for (int seed = 1; seed <= kFiveSeeds; ++seed) {
    SolverConfig cfg;
    cfg.seed = static_cast<std::uint64_t>(seed);
    cfg.restarts = kFiveRestarts;
    cfg.time_limit = kFiveSeconds;
    cfg.target_weight = 153 - 5;
    cfg.workers = omp_get_max_threads();
    const SolveResult r = solve(inst, cfg);
    const bool hit = length_from_circuit_weight(5, r.best.weight()) == 153;
    hits += hit;
    d << " " << (hit ? std::to_string(r.runs_to_best) : "miss");
  }
  d << " (" << hits << "/" << kFiveSeeds << " seeds)";
  report(5, hits >= kFiveSeedsRequired, d.str());
}

void six_symbols() {
  const AtspInstance inst = build_atsp(6);
  SolverConfig cfg;
  cfg.seed = 1;
  cfg.restarts = kSixRestarts;
  cfg.kicks = kSixKicks;
  cfg.time_limit = kSixSeconds;
  cfg.target_weight = kSixTargetLength - 6;
  cfg.workers = omp_get_max_threads();
  const SolveResult r = solve(inst, cfg);
  const TotalWeight length = length_from_circuit_weight(6, r.best.weight());
  std::ostringstream d;
  d << "best_length=" << length << " runs=" << r.runs() << " runs_to_best=" << r.runs_to_best
    << " time=" << r.elapsed << "s"
    << " (stretch 872: " << (length <= 872 ? "reached" : "not reached") << ")";
  report(6, length <= kSixTargetLength && verify(tour_to_superperm(r.best, inst)).valid, d.str());
}

bool alternates(const std::vector<Vertex>& order, std::size_t n) {
  for (std::size_t i = 0; i < order.size(); ++i) {
    const bool a = order[i] < n;
    const bool b = order[(i + 1) % order.size()] < n;
    if (a == b) return false;
  }
  return true;
}

void symmetrization() {
  const Stopwatch clock;
  Rng rng(20140523);
  bool pass = true;
  std::size_t optimal_tours = 0;
  for (int i = 0; i < kSymInstances; ++i) {
    const std::size_t n = 4 + static_cast<std::size_t>(i % 3);
    AtspInstance inst;
    inst.weights = oracle::random_matrix(n, 1, 9, rng);
    const SymInstance sym = symmetrize(inst, default_big_m(inst));
    const auto best = oracle::all_optimal_tours(sym.weights);
    pass = pass && best.weight - sym.offset == oracle::atsp_optimum(inst.weights);
    for (const auto& order : best.tours) pass = pass && alternates(order, n);
    optimal_tours += best.tours.size();
  }
  const double t = clock.seconds();
  std::ostringstream d;
  d << kSymInstances << " instances, " << optimal_tours << " optimal symmetric tours, time=" << t
    << "s";
  report(7, pass && t < kSymSeconds, d.str());
}

void round_trips() {
  bool pass = true;
  for (int n = 1; n <= 5; ++n) {
    const AtspInstance inst = build_atsp(n);
    std::stringstream io;
    write_tsplib_atsp(inst, io);
    const AtspInstance back = parse_tsplib_atsp(io);
    pass = pass && back.weights == inst.weights && back.n == n;
  }
  Rng rng(1);
  int mismatches = 0;
  for (int n = 3; n <= 4; ++n) {
    const AtspInstance inst = build_atsp(n);
    for (int i = 0; i < kRoundTripTours; ++i) {
      const Tour t(oracle::random_order(inst.size(), rng), inst.weights);
      const Tour back = superperm_to_tour(tour_to_superperm(t, inst), inst);
      mismatches += back.weight() != t.weight();
    }
  }
  std::ostringstream d;
  d << "ATSP n=1..5 identical=" << pass << ", tour weight mismatches=" << mismatches << "/"
    << 2 * kRoundTripTours;
  report(8, pass && mismatches == 0, d.str());
}

void properties() {
  bool overlap_ok = true;
  for (int n = 1; n <= 5; ++n) {
    const auto perms = oracle::all_permutations(n);
    for (const auto& s : perms) {
      const Permutation ps = Permutation::from_string(s);
      for (const auto& t : perms) {
        const int k = overlap_weight(ps, Permutation::from_string(t));
        overlap_ok = overlap_ok && k >= 0 && k <= n && (k == 0) == (s == t);
      }
    }
  }
  bool rank_ok = true;
  for (int n = 1; n <= 6; ++n) {
    for (std::uint32_t i = 0; i < factorial(n); ++i) {
      rank_ok = rank_ok && rank(unrank(PermIndex{i}, n)).value == i;
    }
    for (const auto& s : oracle::all_permutations(n)) {
      const Permutation p = Permutation::from_string(s);
      rank_ok = rank_ok && unrank(rank(p), n) == p;
    }
  }
  bool ls_ok = true;
  const AtspInstance inst = build_atsp(4);
  const CandidateLists cands(inst.weights, 6);
  Rng rng(99);
  for (int i = 0; i < kLocalSearchStarts; ++i) {
    const Tour start(oracle::random_order(inst.size(), rng), inst.weights);
    const Tour out = local_search(inst, cands, start, SolverConfig{}, rng);
    ls_ok = ls_ok && is_hamiltonian(out.order(), inst.size()) &&
            out.weight() == oracle::tour_weight(out.order(), inst.weights) &&
            out.weight() <= start.weight();
  }
  std::ostringstream d;
  d << "overlap=" << overlap_ok << " rank/unrank=" << rank_ok << " local_search=" << ls_ok;
  report(9, overlap_ok && rank_ok && ls_ok, d.str());
}

void determinism() {
  const auto dir = cli::scratch_dir();
  auto run = [&](int workers, const std::string& tag) {
    const auto tour = (dir / ("det-" + tag + ".tour")).string();
    const auto r = cli::run("solve --n 5 --seed 7 --restarts 24 --quiet --workers " +
                            std::to_string(workers) + " --out " + tour);
    return std::make_pair(r.exit_code == 0 ? r.out : std::string("error"), cli::slurp(tour));
  };
  const auto a = run(1, "a");
  const auto b = run(1, "b");
  const auto c = run(4, "c");
  const bool pass = a == b && a == c && !a.second.empty();
  std::string summary = a.first;
  if (!summary.empty() && summary.back() == '\n') summary.pop_back();
  report(10, pass, "two runs and workers 1 vs 4 byte-identical; " + summary);
}

}  // namespace

int main() {
  counterexample();
  palindromic_lengths();
  literal_strings();
  exact_optima();
  five_symbols();
  six_symbols();
  symmetrization();
  round_trips();
  properties();
  determinism();
  std::printf("%d criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
