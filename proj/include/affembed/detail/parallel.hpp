#pragma once

#include <algorithm>
#include <cstddef>
#include <exception>
#include <functional>
#include <mutex>
#include <thread>
#include <vector>

namespace affembed::detail {

inline unsigned default_threads() {
    unsigned n = std::thread::hardware_concurrency();
    return n == 0 ? 1 : n;
}

// Runs fn(begin, end) over fixed-size row blocks. Block boundaries do not
// depend on the thread count, so any per-block computation that writes only
// its own rows produces bit-identical results at every thread count.
inline void for_each_block(std::ptrdiff_t total, std::ptrdiff_t block_size,
                           unsigned threads,
                           const std::function<void(std::ptrdiff_t, std::ptrdiff_t)>& fn) {
    if (total <= 0) return;
    block_size = std::max<std::ptrdiff_t>(1, block_size);
    const std::ptrdiff_t num_blocks = (total + block_size - 1) / block_size;

    if (threads <= 1 || num_blocks == 1) {
        for (std::ptrdiff_t b = 0; b < num_blocks; ++b) {
            const std::ptrdiff_t begin = b * block_size;
            fn(begin, std::min(begin + block_size, total));
        }
        return;
    }

    std::mutex mu;
    std::ptrdiff_t next = 0;
    std::exception_ptr err;
    auto worker = [&] {
        while (true) {
            std::ptrdiff_t b;
            {
                std::lock_guard<std::mutex> lock(mu);
                if (err || next >= num_blocks) return;
                b = next++;
            }
            try {
                const std::ptrdiff_t begin = b * block_size;
                fn(begin, std::min(begin + block_size, total));
            } catch (...) {
                std::lock_guard<std::mutex> lock(mu);
                if (!err) err = std::current_exception();
                return;
            }
        }
    };

    std::vector<std::thread> pool;
    const unsigned n = std::min<unsigned>(threads, static_cast<unsigned>(num_blocks));
    pool.reserve(n);
    for (unsigned t = 0; t < n; ++t) pool.emplace_back(worker);
    for (auto& t : pool) t.join();
    if (err) std::rethrow_exception(err);
}

}  // namespace affembed::detail
