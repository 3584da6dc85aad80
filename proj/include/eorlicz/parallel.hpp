#pragma once

#include <cstddef>
#include <exception>
#include <functional>

namespace eorlicz {

/// Process-wide worker cap for internal parallelism. 1 (the default) means
/// fully serial execution. Results must not depend on the setting: loops
/// below write into index-addressed buffers and callers reduce in index
/// order, so reports are byte-identical either way.
void set_max_threads(unsigned n);
unsigned max_threads();

namespace detail {
void parallel_for_impl(std::size_t n, const std::function<void(std::size_t)>& body);
}

/// Runs body(0), ..., body(n-1), possibly on several threads in contiguous
/// chunks. If any body throws, the exception thrown for the smallest index is
/// rethrown after all workers finish.
template <class F>
void parallel_for(std::size_t n, F&& body) {
  detail::parallel_for_impl(n, std::function<void(std::size_t)>(std::forward<F>(body)));
}

}  // namespace eorlicz
