#pragma once

#include <atomic>
#include <cstdint>
#include <thread>
#include <vector>

namespace qcd {

inline constexpr std::uint64_t kReplicationChunk = 1024;

inline unsigned resolve_worker_count(unsigned requested) {
  if (requested > 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw > 0 ? hw : 1;
}

// Runs `per_run(run_index, acc)` for run_index in [0, replications) and
// merges per-chunk accumulators in chunk order. Chunk boundaries are fixed,
// so the reduction is identical for any worker count; determinism across
// schedules is then up to the caller deriving all randomness from run_index.
template <class Acc, class PerRun>
Acc parallel_replicate(std::uint64_t replications, unsigned workers, const Acc& proto,
                       PerRun&& per_run) {
  const std::uint64_t chunks = (replications + kReplicationChunk - 1) / kReplicationChunk;
  if (chunks == 0) return proto;

  std::vector<Acc> chunk_accs(static_cast<std::size_t>(chunks), proto);
  const unsigned n_workers = resolve_worker_count(workers);

  auto work_chunk = [&](std::uint64_t c) {
    Acc& acc = chunk_accs[static_cast<std::size_t>(c)];
    const std::uint64_t begin = c * kReplicationChunk;
    const std::uint64_t end = std::min(replications, begin + kReplicationChunk);
    for (std::uint64_t run = begin; run < end; ++run) per_run(run, acc);
  };

  if (n_workers <= 1 || chunks == 1) {
    for (std::uint64_t c = 0; c < chunks; ++c) work_chunk(c);
  } else {
    std::atomic<std::uint64_t> next{0};
    auto worker = [&] {
      for (;;) {
        const std::uint64_t c = next.fetch_add(1, std::memory_order_relaxed);
        if (c >= chunks) return;
        work_chunk(c);
      }
    };
    std::vector<std::thread> pool;
    pool.reserve(n_workers);
    for (unsigned w = 0; w < n_workers; ++w) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
  }

  Acc out = proto;
  for (const Acc& acc : chunk_accs) out.merge(acc);
  return out;
}

// Parallel loop over [0, count) with no reduction (e.g. kernel rows).
template <class Body>
void parallel_for(std::uint64_t count, unsigned workers, Body&& body) {
  const unsigned n_workers = resolve_worker_count(workers);
  if (n_workers <= 1 || count < 2) {
    for (std::uint64_t i = 0; i < count; ++i) body(i);
    return;
  }
  std::atomic<std::uint64_t> next{0};
  auto worker = [&] {
    for (;;) {
      const std::uint64_t i = next.fetch_add(1, std::memory_order_relaxed);
      if (i >= count) return;
      body(i);
    }
  };
  std::vector<std::thread> pool;
  pool.reserve(n_workers);
  for (unsigned w = 0; w < n_workers; ++w) pool.emplace_back(worker);
  for (auto& t : pool) t.join();
}

}  // namespace qcd
