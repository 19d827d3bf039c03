#ifndef QSEMI_PARALLEL_HPP_
#define QSEMI_PARALLEL_HPP_

#include <algorithm>  // for min
#include <atomic>     // for atomic
#include <cstddef>    // for size_t
#include <cstdint>    // for uint64_t
#include <exception>  // for exception_ptr
#include <mutex>      // for mutex
#include <thread>     // for thread
#include <vector>     // for vector

namespace qsemi {

  //! Worker count: QSEMI_THREADS if set to a positive integer, otherwise
  //! std::thread::hardware_concurrency(), and never less than 1.
  [[nodiscard]] std::size_t thread_count();

  //! Stateless 64-bit mix used to derive one independent seed per trial, so
  //! sampled results do not depend on how trials are spread over threads.
  [[nodiscard]] constexpr std::uint64_t derive_seed(std::uint64_t seed,
                                                    std::uint64_t index) noexcept {
    std::uint64_t z = seed + 0x9e3779b97f4a7c15ULL * (index + 1);
    z               = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z               = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  //! Calls f(i) for every i in [0, count), spread over thread_count()
  //! workers. The first exception thrown by any call is rethrown.
  template <typename Func>
  void parallel_for(std::size_t count, Func&& f) {
    std::size_t const workers = std::min(thread_count(), count);
    if (workers <= 1) {
      for (std::size_t i = 0; i < count; ++i) {
        f(i);
      }
      return;
    }
    std::atomic<std::size_t> next{0};
    std::exception_ptr       error;
    std::mutex               error_mutex;
    auto                     run = [&]() {
      for (std::size_t i = next++; i < count; i = next++) {
        try {
          f(i);
        } catch (...) {
          std::lock_guard lock(error_mutex);
          if (!error) {
            error = std::current_exception();
          }
          next = count;
        }
      }
    };
    std::vector<std::thread> pool;
    for (std::size_t w = 0; w < workers; ++w) {
      pool.emplace_back(run);
    }
    for (auto& th : pool) {
      th.join();
    }
    if (error) {
      std::rethrow_exception(error);
    }
  }

}  // namespace qsemi

#endif  // QSEMI_PARALLEL_HPP_
