// Internal: static chunking over an index range with std::thread.

#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace wexc::detail {

inline unsigned resolve_workers(unsigned requested) {
  if (requested != 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

/// Splits [0, count) into at most `workers` contiguous chunks and runs
/// body(chunk_index, begin, end) for each. Returns the number of chunks. The
/// first exception thrown by any chunk is rethrown after all threads join.
template <typename Body>
std::size_t parallel_chunks(std::size_t count, unsigned workers, Body&& body) {
  const std::size_t chunks = std::max<std::size_t>(1, std::min<std::size_t>(resolve_workers(workers), count));
  if (chunks == 1) {
    body(std::size_t{0}, std::size_t{0}, count);
    return 1;
  }
  std::exception_ptr failure;
  std::mutex failure_mutex;
  std::vector<std::thread> threads;
  threads.reserve(chunks);
  for (std::size_t c = 0; c < chunks; ++c) {
    const std::size_t begin = count * c / chunks;
    const std::size_t end = count * (c + 1) / chunks;
    threads.emplace_back([&, c, begin, end] {
      try {
        body(c, begin, end);
      } catch (...) {
        std::lock_guard lock(failure_mutex);
        if (!failure) failure = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  if (failure) std::rethrow_exception(failure);
  return chunks;
}

}  // namespace wexc::detail
