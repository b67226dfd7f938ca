#pragma once

#include <cstddef>
#include <functional>

namespace wsgap {

// Worker count: `requested` if nonzero, else WSGAP_THREADS, else the
// hardware concurrency (at least 1).
unsigned resolve_threads(unsigned requested) noexcept;

// Runs task(i) for i in [0, n) on up to `threads` workers. Tasks must not
// share mutable state; the first exception thrown is rethrown here.
void parallel_for(std::size_t n, unsigned threads, const std::function<void(std::size_t)>& task);

}  // namespace wsgap
