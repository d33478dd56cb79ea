#pragma once

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <cstdlib>
#include <exception>
#include <mutex>
#include <optional>
#include <thread>
#include <vector>

namespace neighborly {

/// Worker count: NEIGHBORLY_THREADS caps it, hardware concurrency is the
/// default, always at least one.
inline unsigned worker_count() {
  unsigned hw = std::thread::hardware_concurrency();
  if (hw == 0) hw = 1;
  if (const char* env = std::getenv("NEIGHBORLY_THREADS")) {
    long cap = std::strtol(env, nullptr, 10);
    if (cap >= 1 && static_cast<unsigned long>(cap) < hw) hw = static_cast<unsigned>(cap);
  }
  return hw;
}

/// Deadline for budgeted runs.
struct Deadline {
  std::optional<std::chrono::steady_clock::time_point> at;

  static Deadline after_seconds(std::optional<double> seconds) {
    Deadline d;
    if (seconds)
      d.at = std::chrono::steady_clock::now() +
             std::chrono::duration_cast<std::chrono::steady_clock::duration>(
                 std::chrono::duration<double>(*seconds));
    return d;
  }

  bool expired() const { return at && std::chrono::steady_clock::now() >= *at; }
};

/// Chunked deterministic parallel reduction over [0, total). Each chunk is
/// processed by one worker into a fresh Agg; chunks are merged in index
/// order, so the result never depends on scheduling. When the deadline
/// expires, workers stop taking chunks and the merge keeps the completed
/// prefix; the returned count is the number of items in that prefix.
template <class Agg, class PerItem, class Merge>
std::uint64_t parallel_reduce(std::uint64_t total, std::uint64_t chunk_size, Agg& result,
                              PerItem per_item, Merge merge, Deadline deadline = {}) {
  if (total == 0) return 0;
  if (chunk_size == 0) chunk_size = 1;
  std::uint64_t chunks = (total + chunk_size - 1) / chunk_size;
  std::vector<Agg> partial(chunks);
  std::vector<char> done(chunks, 0);
  std::atomic<std::uint64_t> next{0};
  std::atomic<bool> stop{false};
  std::exception_ptr first_error;
  std::mutex error_mutex;

  unsigned threads = worker_count();
  if (static_cast<std::uint64_t>(threads) > chunks) threads = static_cast<unsigned>(chunks);
  auto work = [&]() {
    while (!stop.load(std::memory_order_relaxed)) {
      if (deadline.expired()) break;
      std::uint64_t c = next.fetch_add(1, std::memory_order_relaxed);
      if (c >= chunks) break;
      Agg local{};
      std::uint64_t begin = c * chunk_size;
      std::uint64_t end = std::min(total, begin + chunk_size);
      try {
        for (std::uint64_t i = begin; i < end; ++i) per_item(local, i);
      } catch (...) {
        std::lock_guard<std::mutex> lock(error_mutex);
        if (!first_error) first_error = std::current_exception();
        stop.store(true, std::memory_order_relaxed);
        return;
      }
      partial[c] = std::move(local);
      done[c] = 1;
    }
  };
  if (threads <= 1) {
    work();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(threads);
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(work);
    for (auto& t : pool) t.join();
  }
  if (first_error) std::rethrow_exception(first_error);
  std::uint64_t covered = 0;
  for (std::uint64_t c = 0; c < chunks; ++c) {
    if (!done[c]) break;
    merge(result, std::move(partial[c]));
    covered = std::min(total, (c + 1) * chunk_size);
  }
  return covered;
}

}  // namespace neighborly
