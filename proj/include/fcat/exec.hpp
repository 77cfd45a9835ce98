#pragma once

#include <exception>
#include <vector>

namespace fcat {

/// Execution policy for the instance-parallel kernels. The serial path is the
/// reference; both must produce identical results.
enum class Exec { serial, parallel };

Exec default_exec();
void set_default_exec(Exec e);

/// Calls body(i) for i in [0, n). Under Exec::parallel iterations run on an
/// OpenMP team with dynamic scheduling; the first exception thrown by any
/// iteration is rethrown after the loop.
template <class Body>
void parallel_for(int n, Body&& body, Exec e = default_exec()) {
  if (e == Exec::serial || n < 2) {
    for (int i = 0; i < n; ++i) body(i);
    return;
  }
  std::exception_ptr first;
#pragma omp parallel for schedule(dynamic, 1)
  for (int i = 0; i < n; ++i) {
    try {
      body(i);
    } catch (...) {
#pragma omp critical(fcat_parallel_for_error)
      if (!first) first = std::current_exception();
    }
  }
  if (first) std::rethrow_exception(first);
}

/// out[i] = fn(i), computed with parallel_for.
template <class T, class Fn>
std::vector<T> parallel_map(int n, Fn&& fn, Exec e = default_exec()) {
  std::vector<T> out(n);
  parallel_for(n, [&](int i) { out[i] = fn(i); }, e);
  return out;
}

}  // namespace fcat
