#include "bfdx/simulation.hpp"

#include <algorithm>
#include <atomic>
#include <cmath>
#include <thread>
#include <vector>

namespace bfdx {

namespace {

// i-th output of a splitmix64 stream seeded with `seed`. Pure function of
// (seed, i): the draw order never depends on thread scheduling.
std::uint64_t splitmix_at(std::uint64_t seed, std::uint64_t i) {
  std::uint64_t z = seed + (i + 1) * 0x9e3779b97f4a7c15ULL;
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

// Uniform strictly inside (0,1) from the top 53 bits.
double uniform_open(std::uint64_t bits) {
  return (static_cast<double>(bits >> 11) + 0.5) * 0x1.0p-53;
}

constexpr std::uint64_t kBlock = 1 << 16;

}  // namespace

SimulationResult simulate_lindley_rate(std::int64_t n, const Threshold& q,
                                       BfKind kind, std::uint64_t reps,
                                       std::uint64_t seed,
                                       const BfParams& params,
                                       unsigned workers) {
  if (reps < 1) {
    throw DomainError("simulate_lindley_rate: requires reps >= 1");
  }
  const double root_n = std::sqrt(static_cast<double>(n));
  const Tolerance tol{};

  auto hits_in = [&](std::uint64_t begin, std::uint64_t end) {
    std::uint64_t hits = 0;
    for (std::uint64_t i = begin; i < end; ++i) {
      const double u = uniform_open(splitmix_at(seed, i));
      const double mean = std_normal_quantile(u) / root_n;
      if (detect_lindley_case(GaussianSummary(n, mean), q, kind, params, tol)
              .is_lindley_case) {
        ++hits;
      }
    }
    return hits;
  };

  const std::uint64_t blocks = (reps + kBlock - 1) / kBlock;
  if (workers == 0) {
    workers = std::thread::hardware_concurrency();
    if (workers == 0) workers = 1;
  }
  if (workers > blocks) workers = static_cast<unsigned>(blocks);

  std::uint64_t hits = 0;
  if (workers <= 1) {
    hits = hits_in(0, reps);
  } else {
    // Per-block tallies summed in index order: the result is independent
    // of how blocks land on workers.
    std::vector<std::uint64_t> block_hits(blocks, 0);
    std::atomic<std::uint64_t> next{0};
    auto drain = [&] {
      for (std::uint64_t b = next.fetch_add(1); b < blocks;
           b = next.fetch_add(1)) {
        const std::uint64_t begin = b * kBlock;
        const std::uint64_t end = std::min(begin + kBlock, reps);
        block_hits[b] = hits_in(begin, end);
      }
    };
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) {
      pool.emplace_back(drain);
    }
    for (std::thread& t : pool) {
      t.join();
    }
    for (const std::uint64_t h : block_hits) {
      hits += h;
    }
  }

  const double rate = static_cast<double>(hits) / static_cast<double>(reps);
  const double std_error =
      std::sqrt(rate * (1.0 - rate) / static_cast<double>(reps));
  return SimulationResult{reps, hits, rate, std_error, seed};
}

}  // namespace bfdx
