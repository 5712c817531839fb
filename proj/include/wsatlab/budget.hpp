#pragma once

#include <chrono>
#include <cstdint>

namespace wsatlab {

// Work limits for the exponential searches. Zero means "no limit" for either
// field. max_nodes counts search-tree expansions (or candidate subsets).
struct SearchBudget {
    std::uint64_t max_nodes = 0;
    double max_seconds = 0;

    static SearchBudget subset_search_default() { return {100'000'000, 60.0}; }
    static SearchBudget path_search_default() { return {10'000'000, 0.0}; }
    static SearchBudget unlimited() { return {0, 0.0}; }
};

// Tracks spend against a budget. The wall clock is sampled every 4096 nodes
// to keep the hot path cheap.
class BudgetMeter {
public:
    explicit BudgetMeter(const SearchBudget& b)
        : budget_(b), start_(std::chrono::steady_clock::now()) {}

    // Returns false once the budget is exhausted (and from then on).
    bool spend(std::uint64_t nodes = 1) {
        if (exhausted_) return false;
        used_ += nodes;
        if (budget_.max_nodes && used_ > budget_.max_nodes) exhausted_ = true;
        if (budget_.max_seconds > 0 && (used_ & 0xFFF) == 0 &&
            elapsed_seconds() > budget_.max_seconds)
            exhausted_ = true;
        return !exhausted_;
    }

    bool exhausted() const { return exhausted_; }
    std::uint64_t used() const { return used_; }

    double elapsed_seconds() const {
        return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    }

private:
    SearchBudget budget_;
    std::chrono::steady_clock::time_point start_;
    std::uint64_t used_ = 0;
    bool exhausted_ = false;
};

}  // namespace wsatlab
