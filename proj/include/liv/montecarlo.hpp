#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <string>
#include <vector>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace liv {

struct MCEstimate {
  double value = 0.0;
  double std_error = 0.0;
  std::uint64_t samples = 0;
  std::uint64_t seed = 0;
  /// Generator + seeding scheme; reproducibility is defined by
  /// (algorithm, seed, chunking).
  std::string algorithm;
};

inline constexpr std::uint64_t kMcChunkSize = 1 << 16;
inline const char* kMcAlgorithm = "mt19937_64/splitmix64-per-chunk";

namespace detail {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ULL;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
  return x ^ (x >> 31);
}

} // namespace detail

/// Per-chunk stream: mt19937_64 seeded by splitmix64(seed, chunk). The
/// uniform draw maps the top 53 bits into (0,1), never returning an exact
/// endpoint.
class ChunkRng {
public:
  ChunkRng(std::uint64_t seed, std::uint64_t chunk)
      : engine_(detail::splitmix64(detail::splitmix64(seed) ^
                                   (chunk + 0x9E3779B97F4A7C15ULL))) {}

  double uniform() {
    return (static_cast<double>(engine_() >> 11) + 0.5) * 0x1.0p-53;
  }

  std::uint64_t raw() { return engine_(); }

private:
  std::mt19937_64 engine_;
};

/// Mean and standard error of integrand(sample) over `samples` draws.
/// Work is split into fixed-size chunks; chunk c always sees the stream
/// ChunkRng(seed, c) and partial sums are combined in chunk order, so the
/// estimate is bit-identical for any number of OpenMP workers and matches
/// the serial reference exactly.
template <class Sampler, class Integrand>
MCEstimate mc_integrate(Sampler&& draw, Integrand&& f, std::uint64_t samples,
                        std::uint64_t seed, bool parallel = true) {
  if (samples < 1) {
    samples = 1;
  }
  const std::uint64_t n_chunks = (samples + kMcChunkSize - 1) / kMcChunkSize;
  std::vector<double> sums(n_chunks, 0.0);
  std::vector<double> sq_sums(n_chunks, 0.0);

#ifdef _OPENMP
#pragma omp parallel for schedule(static, 1) if (parallel)
#endif
  for (std::uint64_t c = 0; c < n_chunks; ++c) {
    ChunkRng rng(seed, c);
    const std::uint64_t begin = c * kMcChunkSize;
    const std::uint64_t end = std::min(begin + kMcChunkSize, samples);
    double sum = 0.0;
    double sq = 0.0;
    for (std::uint64_t i = begin; i < end; ++i) {
      const double v = f(draw(rng));
      sum += v;
      sq += v * v;
    }
    sums[c] = sum;
    sq_sums[c] = sq;
  }

  double total = 0.0;
  double total_sq = 0.0;
  for (std::uint64_t c = 0; c < n_chunks; ++c) {
    total += sums[c];
    total_sq += sq_sums[c];
  }

  MCEstimate est;
  est.samples = samples;
  est.seed = seed;
  est.algorithm = kMcAlgorithm;
  const double n = static_cast<double>(samples);
  est.value = total / n;
  if (samples > 1) {
    const double variance =
        std::max(0.0, (total_sq - n * est.value * est.value) / (n - 1.0));
    est.std_error = std::sqrt(variance / n);
  }
  return est;
}

template <class Sampler, class Integrand>
MCEstimate mc_integrate_serial(Sampler&& draw, Integrand&& f,
                               std::uint64_t samples, std::uint64_t seed) {
  return mc_integrate(std::forward<Sampler>(draw), std::forward<Integrand>(f),
                      samples, seed, false);
}

} // namespace liv
