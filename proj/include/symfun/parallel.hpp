#pragma once

#include <cstddef>
#include <functional>

namespace sf {

// Worker count: set_thread_count() if called, else SYMFUN_THREADS, else the hardware concurrency.
int thread_count();
void set_thread_count(int n);

// Runs body(0..n-1) on up to thread_count() threads. Callers write results by index, so the
// outcome does not depend on scheduling. The exception of the lowest failing index is rethrown.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace sf
