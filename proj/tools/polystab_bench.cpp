// Benchmark comparing the OpenMP kernels against their serial references:
// the box-oracle Ass scan and the subset hunts.

#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "polystab/corpus.hpp"
#include "polystab/decompose.hpp"
#include "polystab/search.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace {

using namespace polystab;
using Clock = std::chrono::steady_clock;

double time_ms(const std::function<void()>& fn, int reps) {
  // One warmup, then the best of `reps` runs.
  fn();
  double best = 1e300;
  for (int r = 0; r < reps; ++r) {
    const auto start = Clock::now();
    fn();
    const auto stop = Clock::now();
    best = std::min(best,
                    std::chrono::duration<double, std::milli>(stop - start)
                        .count());
  }
  return best;
}

void row(const std::string& name, double serial_ms, double parallel_ms,
         bool agree) {
  std::cout << std::left << std::setw(38) << name << std::right
            << std::setw(12) << std::fixed << std::setprecision(2) << serial_ms
            << std::setw(12) << parallel_ms << std::setw(10)
            << std::setprecision(2) << serial_ms / parallel_ms
            << (agree ? "" : "   RESULTS DIFFER") << '\n';
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"serial vs OpenMP kernel benchmark"};
  int reps = 3;
  app.add_option("--reps", reps, "timed repetitions per kernel (default 3)")
      ->check(CLI::PositiveNumber);
  CLI11_PARSE(app, argc, argv);

#ifdef _OPENMP
  std::cout << "OpenMP threads: " << omp_get_max_threads() << "\n\n";
#else
  std::cout << "built without OpenMP; both columns run serially\n\n";
#endif
  std::cout << std::left << std::setw(38) << "workload" << std::right
            << std::setw(12) << "serial ms" << std::setw(12) << "openmp ms"
            << std::setw(10) << "speedup" << '\n';

  {
    const MonomialIdeal I = power(corpus::stability_gap_family(4), 2);
    AssSet serial_result, parallel_result;
    const double s =
        time_ms([&] { serial_result = box_oracle_ass_serial(I); }, reps);
    const double p = time_ms([&] { parallel_result = box_oracle_ass(I); }, reps);
    row("box oracle: gap family (4 vars)^2", s, p,
        serial_result == parallel_result);
  }
  {
    const MonomialIdeal I = power(
        veronese_type(5, 2, std::vector<Exp>(5, 1)), 2);
    AssSet serial_result, parallel_result;
    const double s =
        time_ms([&] { serial_result = box_oracle_ass_serial(I); }, reps);
    const double p = time_ms([&] { parallel_result = box_oracle_ass(I); }, reps);
    row("box oracle: sf Veronese (5,2)^2", s, p,
        serial_result == parallel_result);
  }
  {
    std::vector<MonomialIdeal> serial_result, parallel_result;
    const double s =
        time_ms([&] { serial_result = enumerate_matroidal_serial(5, 3); },
                reps);
    const double p =
        time_ms([&] { parallel_result = enumerate_matroidal(5, 3); }, reps);
    row("matroidal enumeration (5 vars, d=3)", s, p,
        serial_result == parallel_result);
  }
  {
    const SearchSpace space = SearchSpace::exhaustive(4, 3, 2);
    std::size_t serial_hits = 0, parallel_hits = 0;
    const double s =
        time_ms([&] { serial_hits = hunt_serial(space).hits.size(); }, reps);
    const double p =
        time_ms([&] { parallel_hits = hunt(space).hits.size(); }, reps);
    row("hunt: exhaustive (4 vars, d=3, cap 2)", s, p,
        serial_hits == parallel_hits);
  }
  return 0;
}
