#pragma once

#include <cstdint>
#include <exception>
#include <thread>
#include <vector>

namespace steiner {

inline int effective_threads(int requested) {
    if (requested > 0) return requested;
    unsigned hw = std::thread::hardware_concurrency();
    return hw == 0 ? 1 : static_cast<int>(hw);
}

// Splits [0, total) into contiguous chunks, runs fn(begin, end) on worker
// threads, and returns the per-chunk results in chunk order. Callers fold
// the results sequentially; with exact integer arithmetic the fold equals
// sequential evaluation for any thread count. A worker exception is
// rethrown after all workers join: the one from the lowest chunk index,
// so failure behavior is deterministic too.
template <class Result, class Fn>
std::vector<Result> map_chunks(std::uint64_t total, int threads, Fn fn) {
    threads = effective_threads(threads);
    if (total == 0) return {};
    std::uint64_t chunk_count = std::min<std::uint64_t>(static_cast<std::uint64_t>(threads), total);
    if (chunk_count <= 1) return {fn(std::uint64_t{0}, total)};

    std::vector<Result> results(chunk_count);
    std::vector<std::exception_ptr> errors(chunk_count);
    std::vector<std::thread> workers;
    workers.reserve(chunk_count);
    const std::uint64_t base = total / chunk_count;
    const std::uint64_t rem = total % chunk_count;
    std::uint64_t begin = 0;
    for (std::uint64_t c = 0; c < chunk_count; ++c) {
        std::uint64_t end = begin + base + (c < rem ? 1 : 0);
        workers.emplace_back([&results, &errors, &fn, c, begin, end] {
            try {
                results[c] = fn(begin, end);
            } catch (...) {
                errors[c] = std::current_exception();
            }
        });
        begin = end;
    }
    for (auto& w : workers) w.join();
    for (const auto& error : errors)
        if (error) std::rethrow_exception(error);
    return results;
}

} // namespace steiner
