#pragma once

#include <algorithm>
#include <atomic>
#include <exception>
#include <optional>
#include <thread>
#include <vector>

namespace negdep::detail {

/// Runs task(0..count-1) on up to `jobs` threads and returns the outcomes a
/// sequential run would have produced: every index up to and including the
/// first one that is terminal (or throws). Later indices may be skipped.
template <class T, class Task, class IsTerminal>
std::vector<T> run_ordered(std::size_t count, unsigned jobs, Task&& task, IsTerminal&& terminal) {
  std::vector<std::optional<T>> slots(count);
  std::vector<std::exception_ptr> errors(count);
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> stop_at{count};

  auto worker = [&] {
    while (true) {
      const std::size_t i = next.fetch_add(1);
      if (i >= count || i > stop_at.load()) return;
      bool stop = false;
      try {
        slots[i] = task(i);
        stop = terminal(*slots[i]);
      } catch (...) {
        errors[i] = std::current_exception();
        stop = true;
      }
      if (stop) {
        std::size_t cur = stop_at.load();
        while (i < cur && !stop_at.compare_exchange_weak(cur, i)) {
        }
      }
    }
  };

  const auto width = static_cast<unsigned>(std::min<std::size_t>(std::max(1u, jobs), count));
  if (width <= 1) {
    worker();
  } else {
    std::vector<std::thread> pool;
    for (unsigned t = 0; t < width; ++t) pool.emplace_back(worker);
    for (auto& th : pool) th.join();
  }

  std::vector<T> out;
  for (std::size_t i = 0; i < count; ++i) {
    if (errors[i]) std::rethrow_exception(errors[i]);
    out.push_back(std::move(*slots[i]));
    if (terminal(out.back())) break;
  }
  return out;
}

}  // namespace negdep::detail
