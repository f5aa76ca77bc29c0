#include "mowa/parallel.hpp"

#include <algorithm>
#include <exception>
#include <thread>
#include <vector>

namespace mowa {

void parallel_for(int begin, int end, int threads,
                  const std::function<void(int)>& body) {
  const int count = end - begin;
  if (count <= 0) return;
  if (threads <= 1 || count == 1) {
    for (int i = begin; i < end; ++i) body(i);
    return;
  }

  const int workers = std::min(threads, count);
  std::vector<std::exception_ptr> errors(static_cast<std::size_t>(workers));
  std::vector<std::thread> pool;
  pool.reserve(static_cast<std::size_t>(workers));

  const int base = count / workers;
  const int extra = count % workers;
  int start = begin;
  for (int w = 0; w < workers; ++w) {
    const int len = base + (w < extra ? 1 : 0);
    const int lo = start, hi = start + len;
    start = hi;
    pool.emplace_back([&, w, lo, hi] {
      try {
        for (int i = lo; i < hi; ++i) body(i);
      } catch (...) {
        errors[static_cast<std::size_t>(w)] = std::current_exception();
      }
    });
  }
  for (std::thread& t : pool) t.join();
  for (const std::exception_ptr& e : errors) {
    if (e) std::rethrow_exception(e);
  }
}

}  // namespace mowa
