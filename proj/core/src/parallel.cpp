#include "relaynet/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace relaynet {

int hardware_threads() {
  unsigned n = std::thread::hardware_concurrency();
  return n == 0 ? 1 : static_cast<int>(n);
}

std::int64_t chunk_count(std::int64_t n, std::int64_t grain) {
  if (n <= 0) return 0;
  if (grain <= 0) grain = 1;
  return (n + grain - 1) / grain;
}

void parallel_chunks(std::int64_t n, std::int64_t grain,
                     const std::function<void(std::int64_t, std::int64_t)>& fn) {
  if (n <= 0) return;
  if (grain <= 0) grain = 1;
  const std::int64_t chunks = chunk_count(n, grain);
  const int workers = std::min<std::int64_t>(hardware_threads(), chunks);

  if (workers <= 1) {
    for (std::int64_t c = 0; c < chunks; ++c)
      fn(c * grain, std::min(n, (c + 1) * grain));
    return;
  }

  std::atomic<std::int64_t> next{0};
  std::exception_ptr error;
  std::mutex error_mutex;
  auto work = [&] {
    try {
      for (;;) {
        const std::int64_t c = next.fetch_add(1, std::memory_order_relaxed);
        if (c >= chunks) break;
        fn(c * grain, std::min(n, (c + 1) * grain));
      }
    } catch (...) {
      std::lock_guard<std::mutex> lock(error_mutex);
      if (!error) error = std::current_exception();
      next.store(chunks, std::memory_order_relaxed);  // drain remaining work
    }
  };

  std::vector<std::thread> pool;
  pool.reserve(workers - 1);
  for (int t = 0; t < workers - 1; ++t) pool.emplace_back(work);
  work();
  for (auto& th : pool) th.join();
  if (error) std::rethrow_exception(error);
}

}  // namespace relaynet
