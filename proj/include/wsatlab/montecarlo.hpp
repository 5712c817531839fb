#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <vector>

#include "wsatlab/budget.hpp"
#include "wsatlab/graph.hpp"
#include "wsatlab/seed.hpp"

namespace wsatlab {

enum class TrialOutcome : std::uint8_t { success, failure, undecided };

// Evaluated on independently generated graphs; must be safe to call from
// several threads at once.
using PropertyCheck = std::function<TrialOutcome(const Graph&)>;

// Named graph properties usable in sweeps: "bs", "bstar", "ext", "ham",
// "wsat-complete", "as", "as-and-bstar", "nonempty".
PropertyCheck property_by_name(const std::string& name, int s,
                               const SearchBudget& budget = SearchBudget::path_search_default());

// Whether adding edges can only keep the named property true, which bisection
// relies on. Unknown names are the caller's responsibility.
bool property_is_monotone(const std::string& name);

struct Interval {
    double lo = 0;
    double hi = 1;
};

// Wilson score interval for a binomial proportion.
Interval wilson_interval(std::uint64_t successes, std::uint64_t trials, double confidence = 0.95);

struct SweepCell {
    int n = 0;
    double p = 0;
    std::uint64_t trials = 0;
    std::uint64_t successes = 0;
    std::uint64_t undecided = 0;
    Interval wilson;
};

struct SweepResult {
    std::string property;
    int s = 0;
    std::uint64_t master_seed = 0;
    double confidence = 0.95;
    std::vector<SweepCell> cells;
};

// Runs `trials` seeded G(n, p) samples for every (n, p) cell. Each trial
// draws its own child seed from (cell index, trial index), so results are
// identical for any worker count.
SweepResult sweep_property(std::span<const int> ns, std::span<const double> ps, int s,
                           std::uint64_t trials, const Seed& seed, const std::string& property,
                           const PropertyCheck& check, int workers = 1, double confidence = 0.95);

struct ThresholdPoint {
    double p = 0;
    std::uint64_t trials = 0;
    std::uint64_t successes = 0;
    std::uint64_t undecided = 0;
};

struct ThresholdEstimate {
    std::string property;
    int s = 0;
    int n = 0;
    std::uint64_t master_seed = 0;
    double p_half = 0;
    double bracket_lo = 0;
    double bracket_hi = 1;
    std::uint64_t trials_per_point = 0;
    std::vector<ThresholdPoint> points;
};

// Bisects on p until the bracket is narrower than tolerance, keeping the
// estimated success fraction <= 1/2 at the low end and >= 1/2 at the high
// end. Refuses named properties known not to be monotone, and initial
// endpoints that do not bracket 1/2.
ThresholdEstimate estimate_threshold(int n, int s, const std::string& property,
                                     const PropertyCheck& check, std::uint64_t trials,
                                     double tolerance, const Seed& seed, double p_lo = 0.0,
                                     double p_hi = 1.0, int workers = 1);

}  // namespace wsatlab
