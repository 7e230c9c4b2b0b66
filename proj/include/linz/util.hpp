#pragma once

#include <cstdint>
#include <thread>
#include <vector>

namespace linz {

/// Worker count for grid fan-out: BESSEL_LINZ_THREADS when set (>=1),
/// otherwise the available hardware parallelism.
unsigned worker_count();

/// Runs f(i) for i in [0, count) on worker_count() threads. Static chunking;
/// callers keep determinism by writing results into per-index slots.
template <class F>
void parallel_for_index(std::size_t count, F&& f) {
  unsigned workers = worker_count();
  if (workers <= 1 || count <= 1) {
    for (std::size_t i = 0; i < count; ++i) f(i);
    return;
  }
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned w = 0; w < workers; ++w) {
    pool.emplace_back([&f, w, workers, count] {
      for (std::size_t i = w; i < count; i += workers) f(i);
    });
  }
  for (auto& t : pool) t.join();
}

/// splitmix64 step; used to derive independent per-block RNG seeds.
inline std::uint64_t splitmix64(std::uint64_t& state) {
  std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
  z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
  z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
  return z ^ (z >> 31);
}

inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t stream) {
  std::uint64_t s = seed ^ (0x9e3779b97f4a7c15ULL * (stream + 1));
  return splitmix64(s);
}

}  // namespace linz
