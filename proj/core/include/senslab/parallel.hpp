#pragma once

#include <cstdint>
#include <functional>

namespace senslab {

std::size_t worker_count();

/// Runs `body(lo, hi, worker)` over a partition of [begin, end) on up to
/// worker_count() threads. Chunk boundaries are aligned to `align` so that
/// workers writing bit-packed output never share a 64-bit block. Exceptions
/// from workers are rethrown on the calling thread.
void parallel_chunks(std::uint64_t begin, std::uint64_t end, std::uint64_t align,
                     const std::function<void(std::uint64_t, std::uint64_t,
                                              std::size_t)>& body);

}  // namespace senslab
