#pragma once

#include <cstddef>
#include <functional>

namespace coxindex {

/// Worker count for internal parallel loops. Defaults to COXINDEX_THREADS when set, else 1.
int thread_count();
void set_thread_count(int n);

/// Runs body(i) for i in [0, n) on up to thread_count() threads. Bodies must only
/// write to per-index slots; callers canonicalize results afterwards.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace coxindex
