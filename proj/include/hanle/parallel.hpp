#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <vector>

namespace hanle {

/// Evaluates fn(i) for i in [0, count) on up to `jobs` threads. Results keep
/// index order; the exception of the lowest failing index is rethrown.
template <typename Result, typename Fn>
std::vector<Result> parallel_map(std::size_t count, int jobs, Fn&& fn) {
  std::vector<Result> results(count);
  std::vector<std::exception_ptr> errors(count);
  auto work = [&](std::size_t worker, std::size_t workers) {
    for (std::size_t i = worker; i < count; i += workers) {
      try {
        results[i] = fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };

  const std::size_t workers = std::clamp<std::size_t>(jobs > 0 ? jobs : 1, 1, std::max<std::size_t>(count, 1));
  if (workers == 1) {
    work(0, 1);
  } else {
    std::vector<std::jthread> threads;
    threads.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) threads.emplace_back(work, w, workers);
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return results;
}

}  // namespace hanle
