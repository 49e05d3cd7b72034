#pragma once

#include <cstddef>
#include <functional>

namespace misere {

/// Worker count used by enumeration loops (default 1). Results never depend
/// on it; only wall time does.
void set_worker_count(std::size_t n);
std::size_t worker_count();

/// Runs body(i) for every i in [0, n), spread over worker_count() threads.
/// Exceptions thrown by body are rethrown on the calling thread.
void parallel_for(std::size_t n, const std::function<void(std::size_t)>& body);

}  // namespace misere
