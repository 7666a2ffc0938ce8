// csext - extensions of completely simple semigroups by groups
//
// Deterministic fork/join over index ranges.  Work is split into contiguous
// chunks and the per-chunk results are merged in chunk order, so the output
// never depends on the number of workers or on scheduling.

#ifndef CSEXT_PARALLEL_HPP_
#define CSEXT_PARALLEL_HPP_

#include <algorithm>
#include <cstddef>
#include <exception>
#include <thread>
#include <type_traits>
#include <utility>
#include <vector>

namespace csext {

  // Number of workers to use when the caller passes 0.
  inline std::size_t default_jobs() noexcept {
    return std::max<std::size_t>(1, std::thread::hardware_concurrency());
  }

  // Calls fn(begin, end) on `jobs` contiguous sub-ranges of [0, n) and
  // returns the results in range order.
  template <typename Fn>
  auto map_chunks(std::size_t n, std::size_t jobs, Fn&& fn)
      -> std::vector<std::invoke_result_t<Fn&, std::size_t, std::size_t>> {
    using Result = std::invoke_result_t<Fn&, std::size_t, std::size_t>;
    if (jobs == 0) {
      jobs = default_jobs();
    }
    jobs = std::max<std::size_t>(1, std::min(jobs, n));
    std::vector<Result> results(jobs);
    if (jobs == 1) {
      results[0] = fn(std::size_t(0), n);
      return results;
    }
    std::vector<std::exception_ptr> errors(jobs);
    std::vector<std::thread>        workers;
    workers.reserve(jobs);
    std::size_t const step = n / jobs;
    std::size_t const rem  = n % jobs;
    std::size_t       lo   = 0;
    for (std::size_t k = 0; k < jobs; ++k) {
      std::size_t hi = lo + step + (k < rem ? 1 : 0);
      workers.emplace_back([&, k, lo, hi]() {
        try {
          results[k] = fn(lo, hi);
        } catch (...) {
          errors[k] = std::current_exception();
        }
      });
      lo = hi;
    }
    for (auto& w : workers) {
      w.join();
    }
    for (auto& e : errors) {
      if (e) {
        std::rethrow_exception(e);
      }
    }
    return results;
  }

  // Concatenation of vector-valued chunk results.
  template <typename Fn>
  auto collect_chunks(std::size_t n, std::size_t jobs, Fn&& fn) {
    auto parts = map_chunks(n, jobs, std::forward<Fn>(fn));
    using Vec  = typename decltype(parts)::value_type;
    Vec out;
    for (auto& p : parts) {
      out.insert(out.end(),
                 std::make_move_iterator(p.begin()),
                 std::make_move_iterator(p.end()));
    }
    return out;
  }

}  // namespace csext

#endif  // CSEXT_PARALLEL_HPP_
