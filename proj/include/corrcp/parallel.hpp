#pragma once

#include <cstddef>
#include <functional>

namespace corrcp {

// Current worker-count setting (always >= 1).  Defaults to the hardware
// concurrency; the CORRCP_THREADS environment variable overrides the default
// once at startup, and set_max_threads overrides both.
int max_threads();
void set_max_threads(int n);  // n <= 0 restores the default

// Applies fn(begin, end) over [0, n) split into chunks of at most `grain`
// items.  Chunk boundaries depend only on n and grain, never on the worker
// count, so code that writes results into per-index slots is deterministic
// across thread settings.  The first exception thrown by any chunk is
// rethrown on the calling thread.
void parallel_for(std::size_t n, std::size_t grain,
                  const std::function<void(std::size_t, std::size_t)>& fn);

}  // namespace corrcp
