#pragma once

#include <algorithm>
#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace edtk {

/// 0 means one worker per hardware thread.
inline unsigned resolve_threads(unsigned requested) {
  if (requested != 0) return requested;
  const unsigned hw = std::thread::hardware_concurrency();
  return hw == 0 ? 1 : hw;
}

/// Splits [0, count) into contiguous chunks and calls body(begin, end) for
/// each chunk on its own worker. Returns after every worker has finished;
/// the first exception thrown by a worker is rethrown here.
template <typename Body>
void parallel_chunks(std::uint64_t count, unsigned threads, Body&& body) {
  const std::uint64_t workers =
      std::min<std::uint64_t>(resolve_threads(threads), std::max<std::uint64_t>(count, 1));
  if (workers <= 1) {
    body(std::uint64_t{0}, count);
    return;
  }
  std::vector<std::exception_ptr> errors(workers);
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (std::uint64_t w = 0; w < workers; ++w) {
    const std::uint64_t begin = count * w / workers;
    const std::uint64_t end = count * (w + 1) / workers;
    pool.emplace_back([&, w, begin, end] {
      try {
        body(begin, end);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : pool) t.join();
  for (auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace edtk
