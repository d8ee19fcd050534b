#pragma once

#include <atomic>
#include <cstdint>
#include <mutex>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace cayley {

/// Index of a group element. By convention index 0 is always the identity.
using elem_t = std::uint32_t;

enum class errc {
  invalid_input,
  unsupported_spec,
  invalid_action,
  arity_out_of_range,
  not_strongly_connected,
  no_involution_available,
  not_enough_elements,
  degree_below_minimum,
  n_too_small,
  p_not_odd_prime,
  p_too_small,
  degree_too_small,
  k_invalid,
  uncovered_element,
  verification_failed,
  search_space_exceeded,
  budget_exceeded,
  goodness_violation,
};

class error : public std::runtime_error {
public:
  error(errc code, const std::string& what) : std::runtime_error(what), code_(code) {}
  errc code() const noexcept { return code_; }

private:
  errc code_;
};

[[noreturn]] inline void fail(errc code, const std::string& what) { throw error(code, what); }

inline void require(bool cond, errc code, const std::string& what) {
  if (!cond) fail(code, what);
}

/// Runs body(0..count-1) on up to `jobs` threads. Results must not depend on
/// execution order; the first exception thrown by any body is rethrown.
template <class Fn>
void parallel_for(std::size_t count, unsigned jobs, Fn&& body) {
  if (jobs <= 1 || count < 2) {
    for (std::size_t i = 0; i < count; ++i) body(i);
    return;
  }
  unsigned workers = static_cast<unsigned>(std::min<std::size_t>(jobs, count));
  std::atomic<std::size_t> next{0};
  std::exception_ptr first_error;
  std::mutex error_mutex;
  std::vector<std::thread> pool;
  pool.reserve(workers);
  for (unsigned t = 0; t < workers; ++t) {
    pool.emplace_back([&] {
      for (;;) {
        std::size_t i = next.fetch_add(1, std::memory_order_relaxed);
        if (i >= count) return;
        try {
          body(i);
        } catch (...) {
          std::lock_guard<std::mutex> lock(error_mutex);
          if (!first_error) first_error = std::current_exception();
          next.store(count);
          return;
        }
      }
    });
  }
  for (auto& th : pool) th.join();
  if (first_error) std::rethrow_exception(first_error);
}

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Smallest K with K^3 >= n (integer cube-root ceiling).
inline std::uint64_t icbrt_ceil(std::uint64_t n) {
  std::uint64_t k = 1;
  while (k * k * k < n) ++k;
  return k;
}

inline std::uint64_t ipow(std::uint64_t base, unsigned exp) {
  std::uint64_t r = 1;
  while (exp--) r *= base;
  return r;
}

}  // namespace cayley
