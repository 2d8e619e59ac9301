#pragma once

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <exception>
#include <functional>
#include <thread>
#include <vector>

namespace ikit {

namespace detail {
inline std::atomic<unsigned>& thread_setting() {
  static std::atomic<unsigned> n{0};
  return n;
}
}  // namespace detail

/// Worker count for data-parallel loops. 0 means "read IKIT_THREADS, else 1".
inline void set_thread_count(unsigned n) { detail::thread_setting() = n; }

inline unsigned thread_count() {
  unsigned n = detail::thread_setting();
  if (n) return n;
  if (const char* env = std::getenv("IKIT_THREADS")) {
    long v = std::strtol(env, nullptr, 10);
    if (v > 0) return static_cast<unsigned>(v);
  }
  return 1;
}

/// Computes fn(i) for i in [0, count) and returns the results in index order.
/// The first exception thrown (lowest index) is rethrown.
template <class T>
std::vector<T> parallel_map(size_t count, const std::function<T(size_t)>& fn) {
  std::vector<T> out(count);
  const unsigned workers = static_cast<unsigned>(std::min<size_t>(thread_count(), count));
  if (workers <= 1) {
    for (size_t i = 0; i < count; ++i) out[i] = fn(i);
    return out;
  }
  std::vector<std::exception_ptr> errors(count);
  std::atomic<size_t> next{0};
  auto work = [&] {
    for (size_t i; (i = next++) < count;) {
      try {
        out[i] = fn(i);
      } catch (...) {
        errors[i] = std::current_exception();
      }
    }
  };
  std::vector<std::thread> pool;
  for (unsigned w = 0; w < workers; ++w) pool.emplace_back(work);
  for (auto& t : pool) t.join();
  for (auto& e : errors)
    if (e) std::rethrow_exception(e);
  return out;
}

}  // namespace ikit
