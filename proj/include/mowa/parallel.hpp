#pragma once

#include <functional>

namespace mowa {

/// Runs body(i) for i in [begin, end), split into contiguous chunks over at
/// most `threads` worker threads. Bodies must write to disjoint locations;
/// with that contract the result is identical for any thread count.
/// Exceptions thrown by bodies are rethrown in the caller.
void parallel_for(int begin, int end, int threads,
                  const std::function<void(int)>& body);

}  // namespace mowa
