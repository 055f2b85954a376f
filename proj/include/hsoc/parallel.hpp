#pragma once

#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace hsoc::detail {

inline unsigned effective_workers(unsigned requested) {
  if (requested != 0) return requested;
  unsigned hw = std::thread::hardware_concurrency();
  return hw ? hw : 1;
}

// Splits [0, total) into contiguous chunks and runs fn(worker, begin, end)
// on each.  Workers only ever see disjoint ranges, so call sites stay
// deterministic by merging per-worker results in worker order.
template <class Fn>
void parallel_ranges(std::uint64_t total, unsigned workers, Fn&& fn) {
  workers = effective_workers(workers);
  if (workers <= 1 || total < 4096) {
    if (total > 0) fn(0u, std::uint64_t{0}, total);
    return;
  }
  const std::uint64_t chunk = (total + workers - 1) / workers;
  std::vector<std::thread> threads;
  std::vector<std::exception_ptr> errors(workers);
  for (unsigned w = 0; w < workers; ++w) {
    std::uint64_t b = std::uint64_t(w) * chunk;
    if (b >= total) break;
    std::uint64_t e = std::min(total, b + chunk);
    threads.emplace_back([&, w, b, e] {
      try {
        fn(w, b, e);
      } catch (...) {
        errors[w] = std::current_exception();
      }
    });
  }
  for (auto& t : threads) t.join();
  for (auto& err : errors)
    if (err) std::rethrow_exception(err);
}

}  // namespace hsoc::detail
