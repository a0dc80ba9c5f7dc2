// Times the serial reference sweep against the OpenMP sweep on the same grid.

#include <chrono>
#include <cstdlib>
#include <string>
#include <thread>

#include <fmt/format.h>

#include "cvs/monogamy_sweep.hpp"

namespace {

template <typename F>
double best_of(int repeats, F&& f) {
  double best = 1e300;
  for (int i = 0; i < repeats; ++i) {
    const auto t0 = std::chrono::steady_clock::now();
    f();
    const std::chrono::duration<double> dt = std::chrono::steady_clock::now() - t0;
    best = std::min(best, dt.count());
  }
  return best;
}

bool same(const std::vector<cvs::SweepRecord>& a, const std::vector<cvs::SweepRecord>& b) {
  if (a.size() != b.size()) return false;
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a[i].monogamy.size(); ++j) {
      if (a[i].monogamy[j].value != b[i].monogamy[j].value) return false;
    }
  }
  return true;
}

}  // namespace

int main(int argc, char** argv) {
  const int count = argc > 1 ? std::atoi(argv[1]) : 2000;
  const int threads = argc > 2 ? std::atoi(argv[2])
                               : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  fmt::print("scenario,points,threads,serial_s,parallel_s,speedup,identical\n");
  for (cvs::Scenario sc : {cvs::Scenario::Unilateral, cvs::Scenario::Bilateral}) {
    cvs::SweepConfig cfg = cvs::SweepConfig::defaults(sc, 1.0);
    cfg.grid.count = count;
    cfg.parallelism = threads;
    std::vector<cvs::SweepRecord> serial, parallel;
    const double ts = best_of(3, [&] { serial = cvs::run_sweep_serial(cfg); });
    const double tp = best_of(3, [&] { parallel = cvs::run_sweep(cfg); });
    fmt::print("{},{},{},{:.4f},{:.4f},{:.2f},{}\n", cvs::to_string(sc), count, threads, ts, tp,
               ts / tp, same(serial, parallel));
  }
  return 0;
}
