#include "eorlicz/parallel.hpp"

#include <algorithm>
#include <atomic>
#include <thread>
#include <vector>

namespace eorlicz {

namespace {
std::atomic<unsigned> g_max_threads{1};
}

void set_max_threads(unsigned n) { g_max_threads.store(n == 0 ? 1 : n); }
unsigned max_threads() { return g_max_threads.load(); }

namespace detail {

void parallel_for_impl(std::size_t n, const std::function<void(std::size_t)>& body) {
  unsigned workers = std::min<std::size_t>(max_threads(), n);
  if (workers <= 1) {
    for (std::size_t i = 0; i < n; ++i) body(i);
    return;
  }

  struct Failure {
    std::size_t index;
    std::exception_ptr error;
  };
  std::vector<Failure> failures(workers);
  std::vector<std::thread> threads;
  threads.reserve(workers);
  std::size_t chunk = (n + workers - 1) / workers;
  for (unsigned w = 0; w < workers; ++w) {
    std::size_t begin = static_cast<std::size_t>(w) * chunk;
    std::size_t end = std::min(n, begin + chunk);
    threads.emplace_back([&, w, begin, end] {
      for (std::size_t i = begin; i < end; ++i) {
        try {
          body(i);
        } catch (...) {
          failures[w] = {i, std::current_exception()};
          return;  // first failure in this chunk is the smallest index
        }
      }
    });
  }
  for (auto& t : threads) t.join();

  const Failure* first = nullptr;
  for (const auto& f : failures) {
    if (f.error && (!first || f.index < first->index)) first = &f;
  }
  if (first) std::rethrow_exception(first->error);
}

}  // namespace detail

}  // namespace eorlicz
