// Compares the serial reference path against the OpenMP sweep on a
// representative workload (the Heisenberg identity sweep).
#include <chrono>
#include <iostream>

#include "hilbfock/parallel.hpp"
#include "hilbfock/verify.hpp"

using namespace hilbfock;

namespace {

SurfaceDatum k3_rho1() {
  SurfaceConfig cfg;
  cfg.mode = SurfaceMode::K3Chow;
  cfg.picard_rank = 1;
  cfg.picard_gram = {{Rat(2)}};
  cfg.b = 21;
  return make_surface(cfg);
}

long long run_sweep(const SurfaceDatum& d, int max_mode, int weight, bool& all_pass) {
  auto t0 = std::chrono::steady_clock::now();
  all_pass = true;
  for (int n = -max_mode; n <= max_mode; ++n)
    for (int np = -max_mode; np <= max_mode; ++np) {
      if (n == 0 || np == 0) continue;
      for (int gi = 0; gi < d.dim; ++gi)
        for (int gj = 0; gj < d.dim; ++gj)
          all_pass = all_pass && check_heis(n, np, gi, gj, weight, d).pass;
    }
  return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() -
                                                               t0)
      .count();
}

}  // namespace

int main(int argc, char** argv) {
  int max_mode = argc > 1 ? atoi(argv[1]) : 4;
  int weight = argc > 2 ? atoi(argv[2]) : 8;
  SurfaceDatum d = k3_rho1();

  bool ok_serial = false, ok_parallel = false;
  thread_override() = 1;
  long long serial_ms = run_sweep(d, max_mode, weight, ok_serial);
  thread_override() = 0;  // OpenMP default
  int workers = worker_count();
  long long parallel_ms = run_sweep(d, max_mode, weight, ok_parallel);

  std::cout << "heisenberg sweep, modes<=" << max_mode << ", weight<=" << weight << "\n";
  std::cout << "serial reference: " << serial_ms << " ms (" << (ok_serial ? "pass" : "FAIL")
            << ")\n";
  std::cout << "openmp x" << workers << ":       " << parallel_ms << " ms ("
            << (ok_parallel ? "pass" : "FAIL") << ")\n";
  if (parallel_ms > 0)
    std::cout << "speedup: " << (double)serial_ms / (double)parallel_ms << "\n";
  return ok_serial && ok_parallel && (ok_serial == ok_parallel) ? 0 : 1;
}
