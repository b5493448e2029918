#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "elnet/network.hpp"
#include "elnet/rng.hpp"

namespace elnet {

/// Monte Carlo point estimate. std_error is the sample standard deviation
/// (n - 1 denominator) over sqrt(trials), and 0 for a single trial.
struct Estimate {
    double mean = 0.0;
    double std_error = 0.0;
    std::uint64_t trials = 0;
    std::uint64_t seed = 0;
    std::uint64_t capped_trials = 0;
};

struct SimulationOptions {
    std::uint64_t trials = 100'000;
    std::uint64_t seed = 0;
    std::uint64_t step_cap = 10'000'000;
};

enum class TerminalReason { HitTarget, CapReached };

struct WalkTrace {
    VertexId start;
    /// X_0, X_1, ... with X_0 = start.
    std::vector<VertexId> steps;
    TerminalReason terminal_reason = TerminalReason::HitTarget;
};

/// Inverse-CDF neighbor sampling over cumulative conductance tables, one per
/// vertex, in stored neighbor order.
class WalkSampler {
public:
    explicit WalkSampler(const Network& net);

    VertexIndex step(VertexIndex current, Rng& rng) const;

private:
    std::vector<std::vector<VertexIndex>> neighbors_;
    std::vector<std::vector<double>> cumulative_;
};

/// One move of the induced walk from `current`.
VertexId step(const Network& net, std::string_view current, Rng& rng);

/// Walks from `start` until the first visit (at time >= 0) to `target`, or
/// until `step_cap` moves have been made.
WalkTrace trace_walk(const Network& net, std::string_view start, std::string_view target,
                     Rng& rng, std::uint64_t step_cap);

/// Steps until the first visit at time >= 1 (return) or >= 0 (hitting);
/// nullopt when the cap is reached first.
std::optional<std::uint64_t> sample_return(const WalkSampler& sampler, VertexIndex z, Rng& rng,
                                           std::uint64_t step_cap);
std::optional<std::uint64_t> sample_hitting(const WalkSampler& sampler, VertexIndex from,
                                            VertexIndex target, Rng& rng, std::uint64_t step_cap);

/// Mean of T_z^+ over independent trials. Throws CapExceeded if any trial
/// reaches the step cap.
Estimate estimate_return_time(const Network& net, std::string_view z,
                              const SimulationOptions& options);

/// Mean of T_y from x. Zero without simulation when x == y.
Estimate estimate_hitting_time(const Network& net, std::string_view x, std::string_view y,
                               const SimulationOptions& options);

/// One walk on an augmented network from the anchor until it first steps
/// onto the pendant.
struct ExcursionTrial {
    /// Times the walk sat at the anchor, including time 0.
    std::uint64_t visits = 0;
    /// Completed round trips anchor -> base network -> anchor.
    std::uint64_t excursions = 0;
    std::uint64_t steps = 0;
};

std::optional<ExcursionTrial> sample_excursions(const AugmentedNetwork& aug,
                                                const WalkSampler& sampler, Rng& rng,
                                                std::uint64_t step_cap);

struct ExcursionEstimate {
    Estimate estimate;
    /// histogram[k] = number of trials with exactly k excursions.
    std::vector<std::uint64_t> histogram;
    /// Chance of leaving the anchor for the pendant: c / (C_z + c).
    double success_probability = 0.0;
};

/// Excursions completed before the first arrival at the pendant. The count
/// is Geometric on {0, 1, ...} with mean C_z / c.
ExcursionEstimate estimate_excursions(const AugmentedNetwork& aug,
                                      const SimulationOptions& options);

struct GoodnessOfFit {
    double statistic = 0.0;
    std::size_t degrees_of_freedom = 0;
    double p_value = 0.0;
    std::size_t bins = 0;
};

/// Pearson chi-square of a count histogram against Geometric(p) on
/// {0, 1, ...}. Counts are binned individually while each bin and the
/// remaining tail expect at least 5 observations; the rest is pooled into a
/// tail bin. Throws InvalidArgument if fewer than two bins survive.
GoodnessOfFit geometric_goodness_of_fit(std::span<const std::uint64_t> histogram,
                                        double success_probability);

} // namespace elnet
