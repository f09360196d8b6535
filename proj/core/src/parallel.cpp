#include "senslab/parallel.hpp"

#include <algorithm>
#include <exception>
#include <thread>
#include <vector>

namespace senslab {

std::size_t worker_count() {
    const unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : hw;
}

void parallel_chunks(std::uint64_t begin, std::uint64_t end, std::uint64_t align,
                     const std::function<void(std::uint64_t, std::uint64_t,
                                              std::size_t)>& body) {
    if (begin >= end) return;
    if (align == 0) align = 1;
    const std::uint64_t total = end - begin;
    std::size_t workers = std::min<std::uint64_t>(worker_count(),
                                                  (total + align - 1) / align);
    if (workers <= 1) {
        body(begin, end, 0);
        return;
    }

    std::uint64_t chunk = (total + workers - 1) / workers;
    chunk = (chunk + align - 1) / align * align;

    std::vector<std::thread> pool;
    std::vector<std::exception_ptr> errors(workers);
    for (std::size_t w = 0; w < workers; ++w) {
        const std::uint64_t lo = begin + chunk * w;
        if (lo >= end) break;
        const std::uint64_t hi = std::min(end, lo + chunk);
        pool.emplace_back([&, lo, hi, w] {
            try {
                body(lo, hi, w);
            } catch (...) {
                errors[w] = std::current_exception();
            }
        });
    }
    for (auto& t : pool) t.join();
    for (auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
}

}  // namespace senslab
