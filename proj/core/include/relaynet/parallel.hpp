#pragma once

#include <cstdint>
#include <functional>

namespace relaynet {

int hardware_threads();

// Runs fn(begin, end) over a partition of [0, n) on up to hardware_threads()
// threads.  Chunk boundaries depend only on n and `grain`, never on the
// thread count, so per-chunk results can be reduced in chunk order for
// bit-stable floating-point aggregates.
void parallel_chunks(std::int64_t n, std::int64_t grain,
                     const std::function<void(std::int64_t, std::int64_t)>& fn);

// Number of chunks parallel_chunks will use for (n, grain).
std::int64_t chunk_count(std::int64_t n, std::int64_t grain);

}  // namespace relaynet
