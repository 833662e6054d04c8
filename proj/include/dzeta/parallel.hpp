#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <thread>
#include <vector>

namespace dzeta {

/// Calls fn(i) for i in [0, n) on up to `threads` workers. Work is handed out
/// dynamically, so fn must write only to slot i of its outputs; callers
/// reduce in index order afterwards. If any call throws, the exception of the
/// smallest failing index is rethrown.
template <typename F>
void parallel_for(long n, unsigned threads, F&& fn) {
  if (n <= 0) return;
  const unsigned workers = std::max(1u, std::min<unsigned>(threads, unsigned(n)));
  std::vector<std::exception_ptr> errors(n);
  std::atomic<long> next{0};
  auto body = [&] {
    for (long i = next.fetch_add(1); i < n; i = next.fetch_add(1)) {
      try {
        fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  if (workers == 1) {
    body();
  } else {
    std::vector<std::thread> pool;
    pool.reserve(workers);
    for (unsigned w = 0; w < workers; ++w) pool.emplace_back(body);
    for (auto& t : pool) t.join();
  }
  for (const auto& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace dzeta
