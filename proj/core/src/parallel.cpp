#include "hblab/parallel.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <exception>
#include <limits>
#include <mutex>
#include <thread>
#include <vector>

namespace hblab {

int thread_budget() {
    static const int budget = [] {
        if (const char* env = std::getenv("HBLAB_THREADS")) {
            const long v = std::strtol(env, nullptr, 10);
            if (v >= 1) return static_cast<int>(std::min<long>(v, 256));
            return 1;
        }
        const unsigned hw = std::thread::hardware_concurrency();
        return hw > 0 ? static_cast<int>(hw) : 1;
    }();
    return budget;
}

namespace {

struct ChunkBest {
    double value = -std::numeric_limits<double>::infinity();
    std::size_t index = 0;
    bool any = false;
    std::size_t skipped = 0;
};

ChunkBest reduce_range(std::size_t lo, std::size_t hi,
                       const std::function<std::optional<double>(std::size_t)>& eval) {
    ChunkBest best;
    for (std::size_t i = lo; i < hi; ++i) {
        const auto v = eval(i);
        if (!v || !std::isfinite(*v)) {
            ++best.skipped;
            continue;
        }
        if (!best.any || *v > best.value) {
            best.value = *v;
            best.index = i;
            best.any = true;
        }
    }
    return best;
}

}  // namespace

ScanOutcome scan_max(std::size_t n,
                     const std::function<std::optional<double>(std::size_t)>& eval) {
    const int budget = thread_budget();
    const std::size_t min_chunk = 128;
    const std::size_t workers =
        std::max<std::size_t>(1, std::min<std::size_t>(budget, n / min_chunk));

    std::vector<ChunkBest> results(workers);
    if (workers == 1) {
        results[0] = reduce_range(0, n, eval);
    } else {
        std::vector<std::thread> threads;
        threads.reserve(workers);
        std::exception_ptr first_error;
        std::mutex error_mutex;
        const std::size_t chunk = (n + workers - 1) / workers;
        for (std::size_t w = 0; w < workers; ++w) {
            const std::size_t lo = w * chunk;
            const std::size_t hi = std::min(n, lo + chunk);
            threads.emplace_back([&, w, lo, hi] {
                try {
                    results[w] = reduce_range(lo, hi, eval);
                } catch (...) {
                    std::lock_guard<std::mutex> lock(error_mutex);
                    if (!first_error) first_error = std::current_exception();
                }
            });
        }
        for (auto& t : threads) t.join();
        if (first_error) std::rethrow_exception(first_error);
    }

    ScanOutcome out{-std::numeric_limits<double>::infinity(), 0, 0, n};
    bool any = false;
    // Merge in chunk order so ties keep the smallest index.
    for (const auto& r : results) {
        out.skipped += r.skipped;
        if (r.any && (!any || r.value > out.best_value)) {
            out.best_value = r.value;
            out.best_index = r.index;
            any = true;
        }
    }
    return out;
}

}  // namespace hblab
