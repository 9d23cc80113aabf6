#pragma once

#include <cstddef>
#include <functional>

namespace proyden {

/// Worker count: hardware concurrency, capped by PROYDEN_THREADS when set.
std::size_t thread_budget();

/// Runs body(i) for i in [0, count) on up to thread_budget() threads. The
/// first exception thrown (lowest index) is rethrown after all workers finish.
void parallel_for(std::size_t count, const std::function<void(std::size_t)>& body);

}  // namespace proyden
