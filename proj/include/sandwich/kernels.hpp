#pragma once

// Data-parallel kernels. Each has a serial reference implementation kept for
// testing and benchmarking; results are identical for any thread count.

#include <cstdint>
#include <exception>
#include <limits>
#include <span>
#include <stdexcept>
#include <vector>

#include "sandwich/group.hpp"

namespace sandwich {

inline constexpr std::size_t kDefaultClosureCap = 10'000'000;
inline constexpr std::uint32_t kNotInGroup = std::numeric_limits<std::uint32_t>::max();

class ClosureCapExceeded : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ClosureOptions {
  std::size_t cap = kDefaultClosureCap;
  /// Matrix size of the identity when there are no generators.
  std::size_t dimension = 0;
  /// Domain attached to the identity when there are no generators.
  DomainPtr domain;
};

/// Level-synchronous breadth-first closure. Each level multiplies the
/// frontier by every generator in parallel and merges in a fixed order, so
/// the element set, its key order and the recorded words do not depend on
/// the number of threads. Throws ClosureCapExceeded past opts.cap elements.
FiniteGroup group_closure(std::span<const GroupElement> gens, const ClosureOptions& opts = {});
/// Serial reference: plain FIFO closure. Same element set; words omitted.
FiniteGroup group_closure_serial(std::span<const GroupElement> gens, const ClosureOptions& opts = {});

/// table[i * n + j] = index of g[i]·g[j], or kNotInGroup.
std::vector<std::uint32_t> multiplication_table(const FiniteGroup& g);
std::vector<std::uint32_t> multiplication_table_serial(const FiniteGroup& g);

/// Killing integers <beta, alpha> for beta in membership ∪ {0} and alpha in
/// membership. Row index membership.size() stands for beta = 0.
struct KillingTable {
  std::size_t n = 0;
  std::vector<int> values;
  std::vector<int> q;
  std::vector<int> p;

  [[nodiscard]] int at(std::size_t beta, std::size_t alpha) const { return values[beta * n + alpha]; }
  [[nodiscard]] std::size_t zero_row() const noexcept { return n; }
};

KillingTable killing_table(const RootSet& membership);
KillingTable killing_table_serial(const RootSet& membership);

/// Runs body(i) for i in [0, n) in parallel. An exception thrown by any
/// iteration is rethrown after the loop; if several throw, the one with the
/// smallest index wins.
template <class Body>
void parallel_for(std::size_t n, Body body) {
  std::exception_ptr err;
  std::size_t err_at = n;
  const auto sn = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 8)
  for (std::int64_t i = 0; i < sn; ++i) {
    const auto u = static_cast<std::size_t>(i);
    try {
      body(u);
    } catch (...) {
#pragma omp critical(sandwich_parallel_error)
      if (u < err_at) {
        err_at = u;
        err = std::current_exception();
      }
    }
  }
  if (err) std::rethrow_exception(err);
}

/// Smallest i in [0, n) with pred(i), or n when none. Evaluated in parallel;
/// the answer is the minimum, so witnesses are deterministic. A predicate
/// that throws below the answer rethrows after the loop.
template <class Pred>
std::size_t parallel_find_first(std::size_t n, Pred pred) {
  std::size_t best = n;
  std::exception_ptr err;
  std::size_t err_at = n;
  const auto sn = static_cast<std::int64_t>(n);
#pragma omp parallel for schedule(dynamic, 64) reduction(min : best)
  for (std::int64_t i = 0; i < sn; ++i) {
    const auto u = static_cast<std::size_t>(i);
    if (u >= best) continue;
    try {
      if (pred(u)) best = u;
    } catch (...) {
#pragma omp critical(sandwich_parallel_error)
      if (u < err_at) {
        err_at = u;
        err = std::current_exception();
      }
    }
  }
  if (err && err_at < best) std::rethrow_exception(err);
  return best;
}

template <class Pred>
std::size_t serial_find_first(std::size_t n, Pred pred) {
  for (std::size_t i = 0; i < n; ++i)
    if (pred(i)) return i;
  return n;
}

void set_thread_count(int n);
int thread_count();

}  // namespace sandwich
