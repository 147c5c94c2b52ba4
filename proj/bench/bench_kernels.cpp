// Times the OpenMP kernels against their serial references.
//   bench_kernels [--n N] [--restarts R] [--kicks K] [--workers W]

#include <chrono>
#include <cstdio>
#include <omp.h>

#include "CLI11.hpp"
#include "superperm/atsp_instance.hpp"
#include "superperm/solve.hpp"

namespace {

template <typename F>
double seconds(F&& f) {
  const auto start = std::chrono::steady_clock::now();
  f();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

}  // namespace

int main(int argc, char** argv) {
  using namespace superperm;
  int n = 7;
  int solve_n = 5;
  int restarts = 8;
  int kicks = 1000;
  int workers = omp_get_max_threads();
  CLI::App app{"Parallel vs serial kernel timings"};
  app.add_option("--n", n, "Alphabet size for instance construction")->capture_default_str();
  app.add_option("--solve-n", solve_n, "Alphabet size for the solver")->capture_default_str();
  app.add_option("--restarts", restarts)->capture_default_str();
  app.add_option("--kicks", kicks)->capture_default_str();
  app.add_option("--workers", workers)->capture_default_str();
  CLI11_PARSE(app, argc, argv);

  AtspInstance parallel_inst;
  AtspInstance serial_inst;
  const double t_build_par = seconds([&] { parallel_inst = build_atsp(n); });
  const double t_build_ser = seconds([&] { serial_inst = build_atsp_serial(n); });
  std::printf("build_atsp n=%d  parallel %.3fs  serial %.3fs  identical=%s\n", n, t_build_par,
              t_build_ser, parallel_inst.weights == serial_inst.weights ? "yes" : "no");

  const AtspInstance inst = build_atsp(solve_n);
  SolverConfig cfg;
  cfg.restarts = restarts;
  cfg.kicks = kicks;
  cfg.workers = workers;
  SolveResult par;
  SolveResult ser;
  const double t_solve_par = seconds([&] { par = solve(inst, cfg); });
  const double t_solve_ser = seconds([&] { ser = solve_serial(inst, cfg); });
  std::printf("solve n=%d restarts=%d workers=%d  parallel %.3fs  serial %.3fs  best %lld/%lld\n",
              solve_n, restarts, workers, t_solve_par, t_solve_ser,
              static_cast<long long>(par.best.weight()), static_cast<long long>(ser.best.weight()));
  return 0;
}
