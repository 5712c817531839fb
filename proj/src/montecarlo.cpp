#include "wsatlab/montecarlo.hpp"

#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "parallel.hpp"
#include "wsatlab/bootstrap.hpp"
#include "wsatlab/generators.hpp"
#include "wsatlab/properties.hpp"
#include "wsatlab/wsat.hpp"

namespace wsatlab {

namespace {

// Acklam's rational approximation to the standard normal quantile, followed
// by one Halley step against erfc to reach near machine precision.
double inverse_normal_cdf(double q) {
    if (!(q > 0.0 && q < 1.0)) throw std::invalid_argument("quantile argument must be in (0, 1)");
    static constexpr double a[] = {-3.969683028665376e+01, 2.209460984245205e+02,
                                   -2.759285104469687e+02, 1.383577518672690e+02,
                                   -3.066479806614716e+01, 2.506628277459239e+00};
    static constexpr double b[] = {-5.447609879822406e+01, 1.615858368580409e+02,
                                   -1.556989798598866e+02, 6.680131188771972e+01,
                                   -1.328068155288572e+01};
    static constexpr double c[] = {-7.784894002430293e-03, -3.223964580411365e-01,
                                   -2.400758277161838e+00, -2.549732539343734e+00,
                                   4.374664141464968e+00,  2.938163982698783e+00};
    static constexpr double d[] = {7.784695709041462e-03, 3.224671290700398e-01,
                                   2.445134137142996e+00, 3.754408661907416e+00};
    constexpr double low = 0.02425;
    double x;
    if (q < low) {
        double r = std::sqrt(-2.0 * std::log(q));
        x = (((((c[0] * r + c[1]) * r + c[2]) * r + c[3]) * r + c[4]) * r + c[5]) /
            ((((d[0] * r + d[1]) * r + d[2]) * r + d[3]) * r + 1.0);
    } else if (q <= 1.0 - low) {
        double r = q - 0.5;
        double t = r * r;
        x = (((((a[0] * t + a[1]) * t + a[2]) * t + a[3]) * t + a[4]) * t + a[5]) * r /
            (((((b[0] * t + b[1]) * t + b[2]) * t + b[3]) * t + b[4]) * t + 1.0);
    } else {
        double r = std::sqrt(-2.0 * std::log(1.0 - q));
        x = -(((((c[0] * r + c[1]) * r + c[2]) * r + c[3]) * r + c[4]) * r + c[5]) /
            ((((d[0] * r + d[1]) * r + d[2]) * r + d[3]) * r + 1.0);
    }
    constexpr double sqrt_2pi = 2.5066282746310002;
    double err = 0.5 * std::erfc(-x / std::sqrt(2.0)) - q;
    double u = err * sqrt_2pi * std::exp(x * x / 2.0);
    return x - u / (1.0 + x * u / 2.0);
}

TrialOutcome outcome_of(bool ok) { return ok ? TrialOutcome::success : TrialOutcome::failure; }

TrialOutcome as_outcome(const Graph& g, int s, const SearchBudget& path_budget) {
    WsatOptions opt;
    opt.path_budget = path_budget;
    AsVerdict v = decide_as(g, s, opt);
    if (v.verdict == AsState::unknown) return TrialOutcome::undecided;
    return outcome_of(v.verdict == AsState::holds);
}

}  // namespace

PropertyCheck property_by_name(const std::string& name, int s, const SearchBudget& budget) {
    if (name == "nonempty")
        return [](const Graph& g) { return outcome_of(g.edge_count() > 0); };
    if (name == "bs")
        return [s](const Graph& g) { return outcome_of(check_bs(g, s).holds); };
    if (name == "bstar")
        return [s](const Graph& g) { return outcome_of(check_bstar(g, s).holds); };
    if (name == "ext")
        return [s](const Graph& g) { return outcome_of(check_ext(g, s).holds); };
    if (name == "ham")
        return [s, budget](const Graph& g) {
            PropertyReport r = check_ham(g, s, budget);
            if (r.holds) return TrialOutcome::success;
            if (r.failure_witness) return TrialOutcome::failure;
            return TrialOutcome::undecided;
        };
    if (name == "wsat-complete")
        return [s](const Graph& g) { return outcome_of(weakly_saturated_in_complete(g, s)); };
    if (name == "as")
        return [s, budget](const Graph& g) { return as_outcome(g, s, budget); };
    if (name == "as-and-bstar")
        return [s, budget](const Graph& g) {
            if (!check_bstar(g, s).holds) return TrialOutcome::failure;
            return as_outcome(g, s, budget);
        };
    throw std::invalid_argument("unknown property: " + name);
}

bool property_is_monotone(const std::string& name) {
    return name != "ham" && name != "as";
}

Interval wilson_interval(std::uint64_t successes, std::uint64_t trials, double confidence) {
    if (!(confidence > 0.0 && confidence < 1.0))
        throw std::invalid_argument("confidence must be in (0, 1)");
    if (successes > trials) throw std::invalid_argument("successes exceed trials");
    if (trials == 0) return {0.0, 1.0};
    double z = inverse_normal_cdf(0.5 + confidence / 2.0);
    double nt = static_cast<double>(trials);
    double phat = static_cast<double>(successes) / nt;
    double z2 = z * z;
    double denom = 1.0 + z2 / nt;
    double center = (phat + z2 / (2.0 * nt)) / denom;
    double half = z / denom * std::sqrt(phat * (1.0 - phat) / nt + z2 / (4.0 * nt * nt));
    Interval out{center - half, center + half};
    // The exact endpoints at 0 and n successes; rounding leaves residue.
    if (successes == 0) out.lo = 0.0;
    if (successes == trials) out.hi = 1.0;
    if (out.lo < 0.0) out.lo = 0.0;
    if (out.hi > 1.0) out.hi = 1.0;
    return out;
}

// Outcomes land in a slot addressed by the task index, and seeds depend only
// on (cell, trial), so the result is identical for every worker count.
static void run_trials(const std::vector<SweepCell>& cells, std::uint64_t trials,
                       const Seed& seed, const char* label, const PropertyCheck& check,
                       int workers, std::vector<std::uint8_t>& outcomes) {
    std::uint64_t total = cells.size() * trials;
    outcomes.assign(total, 0);
    detail::parallel_for_index(total, workers, [&](std::uint64_t task) {
        std::uint64_t cell = task / trials;
        std::uint64_t trial = task % trials;
        Seed trial_seed = seed.child(label, cell).child("trial", trial);
        Graph g = generate_gnp(cells[cell].n, cells[cell].p, trial_seed);
        outcomes[task] = static_cast<std::uint8_t>(check(g));
    });
}

SweepResult sweep_property(std::span<const int> ns, std::span<const double> ps, int s,
                           std::uint64_t trials, const Seed& seed, const std::string& property,
                           const PropertyCheck& check, int workers, double confidence) {
    if (trials < 1) throw std::invalid_argument("trials must be at least 1");
    if (!check) throw std::invalid_argument("property check must be callable");
    SweepResult result;
    result.property = property;
    result.s = s;
    result.master_seed = seed.master();
    result.confidence = confidence;
    for (int n : ns)
        for (double p : ps) {
            SweepCell cell;
            cell.n = n;
            cell.p = p;
            cell.trials = trials;
            result.cells.push_back(cell);
        }
    std::vector<std::uint8_t> outcomes;
    run_trials(result.cells, trials, seed, "cell", check, workers, outcomes);
    for (std::size_t c = 0; c < result.cells.size(); ++c) {
        SweepCell& cell = result.cells[c];
        for (std::uint64_t t = 0; t < trials; ++t) {
            auto o = static_cast<TrialOutcome>(outcomes[c * trials + t]);
            if (o == TrialOutcome::success) ++cell.successes;
            if (o == TrialOutcome::undecided) ++cell.undecided;
        }
        cell.wilson = wilson_interval(cell.successes, cell.trials, confidence);
    }
    return result;
}

ThresholdEstimate estimate_threshold(int n, int s, const std::string& property,
                                     const PropertyCheck& check, std::uint64_t trials,
                                     double tolerance, const Seed& seed, double p_lo, double p_hi,
                                     int workers) {
    if (trials < 1) throw std::invalid_argument("trials must be at least 1");
    if (!(tolerance > 0.0)) throw std::invalid_argument("tolerance must be positive");
    if (!(p_lo >= 0.0 && p_lo < p_hi && p_hi <= 1.0))
        throw std::invalid_argument("need 0 <= p_lo < p_hi <= 1");
    if (!check) throw std::invalid_argument("property check must be callable");
    if (!property_is_monotone(property))
        throw std::invalid_argument("bisection needs a monotone property; '" + property +
                                    "' is not — use a sweep instead");

    ThresholdEstimate est;
    est.property = property;
    est.s = s;
    est.n = n;
    est.master_seed = seed.master();
    est.trials_per_point = trials;

    std::uint64_t eval_index = 0;
    auto evaluate = [&](double p) {
        std::vector<SweepCell> one(1);
        one[0].n = n;
        one[0].p = p;
        one[0].trials = trials;
        std::vector<std::uint8_t> outcomes;
        run_trials(one, trials, seed.child("eval", eval_index++), "point", check, workers,
                   outcomes);
        ThresholdPoint pt;
        pt.p = p;
        pt.trials = trials;
        for (auto raw : outcomes) {
            auto o = static_cast<TrialOutcome>(raw);
            if (o == TrialOutcome::success) ++pt.successes;
            if (o == TrialOutcome::undecided) ++pt.undecided;
        }
        est.points.push_back(pt);
        return static_cast<double>(pt.successes) / static_cast<double>(trials);
    };

    double frac_lo = evaluate(p_lo);
    double frac_hi = evaluate(p_hi);
    if (frac_lo > 0.5 || frac_hi < 0.5) {
        char buf[160];
        std::snprintf(buf, sizeof(buf),
                      "initial interval does not bracket the half point: success fraction "
                      "%.4f at p=%g, %.4f at p=%g",
                      frac_lo, p_lo, frac_hi, p_hi);
        throw std::invalid_argument(buf);
    }
    double lo = p_lo;
    double hi = p_hi;
    while (hi - lo > tolerance) {
        double mid = (lo + hi) / 2.0;
        if (mid <= lo || mid >= hi) break;
        if (evaluate(mid) >= 0.5)
            hi = mid;
        else
            lo = mid;
    }
    est.bracket_lo = lo;
    est.bracket_hi = hi;
    est.p_half = (lo + hi) / 2.0;
    return est;
}

}  // namespace wsatlab
