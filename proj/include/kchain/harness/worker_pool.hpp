#pragma once

#include <algorithm>
#include <atomic>
#include <cstddef>
#include <exception>
#include <optional>
#include <thread>
#include <vector>

namespace kchain::harness {

/// Applies fn to every item on at most `jobs` worker threads. Results come
/// back in input order whatever the scheduling; the first exception (by item
/// index) is rethrown after all workers have joined.
template <typename In, typename Fn>
auto parallel_map(const std::vector<In>& items, std::size_t jobs, Fn fn) {
  using Out = decltype(fn(items.front()));
  std::vector<std::optional<Out>> slots(items.size());
  std::vector<std::exception_ptr> errors(items.size());
  std::atomic<std::size_t> next{0};

  const auto work = [&] {
    for (std::size_t k = next.fetch_add(1); k < items.size(); k = next.fetch_add(1)) {
      try {
        slots[k].emplace(fn(items[k]));
      } catch (...) {
        errors[k] = std::current_exception();
      }
    }
  };

  const std::size_t workers = std::clamp<std::size_t>(jobs, 1, std::max<std::size_t>(items.size(), 1));
  if (workers == 1) {
    work();
  } else {
    std::vector<std::jthread> pool;
    pool.reserve(workers);
    for (std::size_t w = 0; w < workers; ++w) pool.emplace_back(work);
  }

  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  std::vector<Out> out;
  out.reserve(items.size());
  for (auto& s : slots) out.push_back(std::move(*s));
  return out;
}

}  // namespace kchain::harness
