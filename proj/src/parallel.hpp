#pragma once

#include <algorithm>
#include <cstdint>
#include <thread>
#include <vector>

namespace zcz::detail {

// Runs fn(begin, end) over disjoint contiguous chunks of [0, count).
// Results are bitwise independent of the worker count as long as fn writes
// only to slots in its own chunk and does a fixed-order computation per slot.
template <typename Fn>
void parallel_chunks(std::int64_t count, std::int64_t min_chunk, Fn&& fn)
{
    if (count <= 0) {
        return;
    }
    const std::int64_t hw = static_cast<std::int64_t>(std::thread::hardware_concurrency());
    const std::int64_t workers =
        std::max<std::int64_t>(1, std::min({hw, count / std::max<std::int64_t>(1, min_chunk), std::int64_t{16}}));
    if (workers == 1) {
        fn(std::int64_t{0}, count);
        return;
    }
    std::vector<std::thread> pool;
    pool.reserve(static_cast<std::size_t>(workers));
    const std::int64_t chunk = (count + workers - 1) / workers;
    for (std::int64_t w = 0; w < workers; ++w) {
        const std::int64_t begin = w * chunk;
        const std::int64_t end = std::min(count, begin + chunk);
        if (begin >= end) {
            break;
        }
        pool.emplace_back([&fn, begin, end] { fn(begin, end); });
    }
    for (auto& t : pool) {
        t.join();
    }
}

} // namespace zcz::detail
