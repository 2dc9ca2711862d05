#pragma once

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <functional>
#include <mutex>
#include <optional>
#include <thread>
#include <utility>
#include <vector>

namespace digitprod {

/// Inclusive range [lo, hi] cut into consecutive chunks of `chunk` values.
struct ScanPartition {
  std::uint64_t lo = 1;
  std::uint64_t hi = 1;
  std::uint64_t chunk = 4096;

  /// Throws std::invalid_argument unless lo <= hi and chunk >= 1.
  void validate() const;
  [[nodiscard]] std::uint64_t chunk_count() const;
  [[nodiscard]] std::pair<std::uint64_t, std::uint64_t> chunk_bounds(std::uint64_t index) const;
};

struct ScanOptions {
  unsigned threads = 1;
  /// Called with (chunks finished, chunks total); may be invoked from worker
  /// threads but never concurrently.
  std::function<void(std::uint64_t, std::uint64_t)> progress;
};

/// Runs fn(state, chunk_lo, chunk_hi) over every chunk of the partition and
/// returns the per-chunk results in chunk order. Each worker thread owns one
/// state object produced by make_state(); chunks are claimed dynamically, so
/// the result must not depend on which worker ran a chunk.
template <class MakeState, class Fn>
auto scan_chunks(const ScanPartition& partition, const ScanOptions& options, MakeState make_state, Fn fn) {
  using State = decltype(make_state());
  using Result = decltype(fn(std::declval<State&>(), std::uint64_t{}, std::uint64_t{}));

  partition.validate();
  const std::uint64_t total = partition.chunk_count();
  std::vector<std::optional<Result>> slots(total);
  std::atomic<std::uint64_t> next{0};
  std::atomic<std::uint64_t> finished{0};
  std::mutex progress_mutex;
  std::exception_ptr failure;
  std::mutex failure_mutex;

  auto worker = [&] {
    try {
      State state = make_state();
      for (std::uint64_t i = next.fetch_add(1); i < total; i = next.fetch_add(1)) {
        const auto [lo, hi] = partition.chunk_bounds(i);
        slots[i].emplace(fn(state, lo, hi));
        const std::uint64_t done = finished.fetch_add(1) + 1;
        if (options.progress) {
          std::lock_guard lock(progress_mutex);
          options.progress(done, total);
        }
      }
    } catch (...) {
      std::lock_guard lock(failure_mutex);
      if (!failure) failure = std::current_exception();
      next.store(total);
    }
  };

  const auto thread_count = static_cast<unsigned>(
      std::clamp<std::uint64_t>(options.threads == 0 ? 1 : options.threads, 1, std::max<std::uint64_t>(total, 1)));
  if (thread_count == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(thread_count);
    for (unsigned t = 0; t < thread_count; ++t) pool.emplace_back(worker);
  }
  if (failure) std::rethrow_exception(failure);

  std::vector<Result> results;
  results.reserve(total);
  for (auto& slot : slots) results.push_back(std::move(*slot));
  return results;
}

}  // namespace digitprod
