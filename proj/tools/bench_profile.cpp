// Timing comparison of the OpenMP circle-profile / grid kernels against
// their serial reference implementations.

#include <chrono>
#include <cstdio>

#include "abh/dirichlet.hpp"
#include "abh/verify.hpp"

using namespace abh;

namespace {

template <typename F>
double time_ms(F&& fn, int reps) {
  const auto t0 = std::chrono::steady_clock::now();
  for (int i = 0; i < reps; ++i) fn();
  const auto t1 = std::chrono::steady_clock::now();
  return std::chrono::duration<double, std::milli>(t1 - t0).count() / reps;
}

}  // namespace

int main() {
  const ParamPair params{1.0, 0.5};
  const auto f = random_boundary(7, 8);

  std::printf("%-28s %12s %12s %8s\n", "kernel", "serial[ms]", "openmp[ms]",
              "speedup");
  for (int n : {1024, 2048, 4096}) {
    const double ts =
        time_ms([&] { circle_profile_serial(params, f, 0.9, n); }, 3);
    const double tp = time_ms([&] { circle_profile(params, f, 0.9, n); }, 3);
    std::printf("circle_profile n=%-11d %12.3f %12.3f %8.2f\n", n, ts, tp,
                ts / tp);
  }

  EvalGrid grid;
  grid.n_theta = 64;
  for (int i = 0; i < 16; ++i) grid.radii.push_back(0.05 * (i + 1));
  const double gs = time_ms([&] { grid_eval_serial(params, f, grid); }, 3);
  const double gp = time_ms([&] { grid_eval(params, f, grid); }, 3);
  std::printf("%-28s %12.3f %12.3f %8.2f\n", "grid_eval 16x64", gs, gp,
              gs / gp);
  return 0;
}
