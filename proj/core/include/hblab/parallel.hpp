#pragma once

#include <cstddef>
#include <functional>
#include <optional>

namespace hblab {

// Number of worker threads: HBLAB_THREADS if set (clamped to >= 1), else
// hardware concurrency.
int thread_budget();

struct ScanOutcome {
    double best_value;      // -inf if nothing evaluated successfully
    std::size_t best_index; // smallest index attaining best_value
    std::size_t skipped;    // samples that errored or were non-finite
    std::size_t evaluated;  // total samples attempted
    bool valid() const { return evaluated > skipped; }
};

// Parallel max-reduction over [0, n). eval returns nullopt for a skipped
// sample. Ties resolve to the smallest index, independent of thread count.
// Skippable errors must already be converted to nullopt by the caller;
// anything thrown from eval propagates.
ScanOutcome scan_max(std::size_t n,
                     const std::function<std::optional<double>(std::size_t)>& eval);

}  // namespace hblab
