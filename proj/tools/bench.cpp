// Compares the OpenMP kernels against their serial references: same
// chunking, same rules, so the results must match bit for bit while the
// wall time differs.

#include <cstdio>
#include <cstdlib>
#include <cstring>

#ifdef _OPENMP
#include <omp.h>
#else
#include <chrono>
#endif

#include "liv/expectation.hpp"
#include "liv/helium.hpp"
#include "liv/montecarlo.hpp"

namespace {

double now() {
#ifdef _OPENMP
  return omp_get_wtime();
#else
  return std::chrono::duration<double>(
             std::chrono::steady_clock::now().time_since_epoch())
      .count();
#endif
}

void report(const char* name, double serial_s, double parallel_s,
            double serial_value, double parallel_value) {
  std::printf("%-28s serial %8.3f s   parallel %8.3f s   speedup %5.2fx   "
              "bit-identical %s\n",
              name, serial_s, parallel_s, serial_s / parallel_s,
              serial_value == parallel_value ? "yes" : "NO");
}

} // namespace

int main(int argc, char** argv) {
  std::uint64_t mc_samples = 4'000'000;
  if (argc > 1) {
    mc_samples = std::strtoull(argv[1], nullptr, 10);
  }
#ifdef _OPENMP
  std::printf("threads: %d\n", omp_get_max_threads());
#else
  std::printf("threads: 1 (built without OpenMP)\n");
#endif

  // Helium electron-electron Monte Carlo.
  {
    liv::HeliumConfig cfg;
    cfg.mc_samples = mc_samples;
    cfg.parallel = false;
    double t0 = now();
    const liv::MCEstimate serial = liv::ee_coulomb_integral(cfg);
    double t1 = now();
    cfg.parallel = true;
    const liv::MCEstimate parallel = liv::ee_coulomb_integral(cfg);
    double t2 = now();
    std::printf("<1/r12> = %.6f +/- %.6f  (%llu samples)\n", parallel.value,
                parallel.std_error,
                static_cast<unsigned long long>(parallel.samples));
    report("helium MC <1/r12>", t1 - t0, t2 - t1, serial.value,
           parallel.value);
  }

  // Quadrature expectation sweep at a deliberately large rule size.
  {
    const liv::HydrogenicState state{1.0, {5, 2, 1, {}}};
    const liv::KappaMatrix kappa = liv::KappaMatrix::uniform(1e-3);
    const auto op = [&kappa](double r, const Eigen::Vector3d& n) {
      return n.dot(kappa.matrix() * n) / r;
    };
    const int radial = 512, n_theta = 64, n_phi = 128;
    double t0 = now();
    const double serial =
        liv::expectation_single(state, op, radial, n_theta, n_phi, false);
    double t1 = now();
    const double parallel =
        liv::expectation_single(state, op, radial, n_theta, n_phi, true);
    double t2 = now();
    std::printf("<kappa xx / r> = %.12e\n", parallel);
    report("quadrature expectation", t1 - t0, t2 - t1, serial, parallel);
  }

  return 0;
}
