#pragma once

#include <algorithm>
#include <exception>
#include <thread>
#include <vector>

#include "lucaszeck/core_sequences.hpp"

namespace lucaszeck {

/// Worker cap: LUCASZECK_THREADS when set to a positive integer, otherwise
/// the hardware concurrency (at least 1).
unsigned worker_count();

/// Folds `chunk(lo, hi)` over contiguous sub-ranges of [first, last].
/// Chunk results are combined in range order, so the outcome does not depend
/// on the number of workers as long as `combine` is associative.
template <class T, class ChunkFn, class Combine>
T parallel_fold(Int first, Int last, unsigned workers, T init, ChunkFn chunk, Combine combine) {
    if (last < first) return init;
    const Int span = last - first + 1;
    const Int pieces = std::clamp<Int>(static_cast<Int>(workers), 1, span);
    if (pieces == 1) return combine(std::move(init), chunk(first, last));

    std::vector<T> results(static_cast<std::size_t>(pieces), init);
    std::vector<std::exception_ptr> errors(static_cast<std::size_t>(pieces));
    {
        std::vector<std::jthread> threads;
        threads.reserve(static_cast<std::size_t>(pieces));
        for (Int w = 0; w < pieces; ++w) {
            const Int lo = first + span * w / pieces;
            const Int hi = first + span * (w + 1) / pieces - 1;
            threads.emplace_back([&, w, lo, hi] {
                try {
                    results[static_cast<std::size_t>(w)] = chunk(lo, hi);
                } catch (...) {
                    errors[static_cast<std::size_t>(w)] = std::current_exception();
                }
            });
        }
    }
    for (const auto& e : errors) {
        if (e) std::rethrow_exception(e);
    }
    T acc = std::move(init);
    for (auto& r : results) acc = combine(std::move(acc), std::move(r));
    return acc;
}

}  // namespace lucaszeck
