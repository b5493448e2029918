#include "elnet/monte_carlo.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <string>

#include <boost/math/distributions/chi_squared.hpp>

#include "elnet/error.hpp"

namespace elnet {

namespace {

/// Welford accumulation in trial order.
class RunningMoments {
public:
    void add(double x) {
        ++count_;
        const double delta = x - mean_;
        mean_ += delta / static_cast<double>(count_);
        m2_ += delta * (x - mean_);
    }

    Estimate finish(std::uint64_t seed) const {
        Estimate e;
        e.mean = mean_;
        e.trials = count_;
        e.seed = seed;
        if (count_ > 1) {
            const double variance = m2_ / static_cast<double>(count_ - 1);
            e.std_error = std::sqrt(variance / static_cast<double>(count_));
        }
        return e;
    }

private:
    std::uint64_t count_ = 0;
    double mean_ = 0.0;
    double m2_ = 0.0;
};

void check_options(const SimulationOptions& options) {
    if (options.trials < 1) {
        throw Error(ErrorKind::InvalidArgument, "trials must be at least 1");
    }
    if (options.step_cap < 1) {
        throw Error(ErrorKind::InvalidArgument, "step cap must be at least 1");
    }
}

[[noreturn]] void cap_exceeded(std::uint64_t trial, const SimulationOptions& options) {
    throw Error(ErrorKind::CapExceeded, "trial " + std::to_string(trial) + " reached the step cap of " +
                                            std::to_string(options.step_cap) + " (seed " +
                                            std::to_string(options.seed) + ")");
}

} // namespace

WalkSampler::WalkSampler(const Network& net)
    : neighbors_(net.vertex_count()), cumulative_(net.vertex_count()) {
    for (VertexIndex y = 0; y < net.vertex_count(); ++y) {
        double running = 0.0;
        for (const auto& nb : net.neighbors(y)) {
            running += nb.conductance;
            neighbors_[y].push_back(nb.vertex);
            cumulative_[y].push_back(running);
        }
    }
}

VertexIndex WalkSampler::step(VertexIndex current, Rng& rng) const {
    const auto& cdf = cumulative_[current];
    const double u = rng.uniform() * cdf.back();
    auto it = std::upper_bound(cdf.begin(), cdf.end(), u);
    // u < cdf.back() always, but rounding in the product may land on it.
    const auto k = std::min<std::size_t>(static_cast<std::size_t>(it - cdf.begin()), cdf.size() - 1);
    return neighbors_[current][k];
}

VertexId step(const Network& net, std::string_view current, Rng& rng) {
    const VertexIndex from = net.index_of(current);
    return net.label(WalkSampler(net).step(from, rng));
}

WalkTrace trace_walk(const Network& net, std::string_view start, std::string_view target,
                     Rng& rng, std::uint64_t step_cap) {
    VertexIndex at = net.index_of(start);
    const VertexIndex goal = net.index_of(target);
    const WalkSampler sampler(net);

    WalkTrace trace;
    trace.start = net.label(at);
    trace.steps.push_back(trace.start);
    for (std::uint64_t j = 0; at != goal; ++j) {
        if (j == step_cap) {
            trace.terminal_reason = TerminalReason::CapReached;
            return trace;
        }
        at = sampler.step(at, rng);
        trace.steps.push_back(net.label(at));
    }
    trace.terminal_reason = TerminalReason::HitTarget;
    return trace;
}

std::optional<std::uint64_t> sample_return(const WalkSampler& sampler, VertexIndex z, Rng& rng,
                                           std::uint64_t step_cap) {
    VertexIndex at = z;
    for (std::uint64_t j = 1; j <= step_cap; ++j) {
        at = sampler.step(at, rng);
        if (at == z) {
            return j;
        }
    }
    return std::nullopt;
}

std::optional<std::uint64_t> sample_hitting(const WalkSampler& sampler, VertexIndex from,
                                            VertexIndex target, Rng& rng, std::uint64_t step_cap) {
    if (from == target) {
        return 0;
    }
    VertexIndex at = from;
    for (std::uint64_t j = 1; j <= step_cap; ++j) {
        at = sampler.step(at, rng);
        if (at == target) {
            return j;
        }
    }
    return std::nullopt;
}

Estimate estimate_return_time(const Network& net, std::string_view z,
                              const SimulationOptions& options) {
    check_options(options);
    const VertexIndex zi = net.index_of(z);
    const WalkSampler sampler(net);
    RunningMoments moments;
    for (std::uint64_t i = 0; i < options.trials; ++i) {
        Rng rng = Rng::for_trial(options.seed, i);
        const auto steps = sample_return(sampler, zi, rng, options.step_cap);
        if (!steps) {
            cap_exceeded(i, options);
        }
        moments.add(static_cast<double>(*steps));
    }
    return moments.finish(options.seed);
}

Estimate estimate_hitting_time(const Network& net, std::string_view x, std::string_view y,
                               const SimulationOptions& options) {
    check_options(options);
    const VertexIndex from = net.index_of(x);
    const VertexIndex target = net.index_of(y);
    if (from == target) {
        Estimate e;
        e.trials = options.trials;
        e.seed = options.seed;
        return e;
    }
    const WalkSampler sampler(net);
    RunningMoments moments;
    for (std::uint64_t i = 0; i < options.trials; ++i) {
        Rng rng = Rng::for_trial(options.seed, i);
        const auto steps = sample_hitting(sampler, from, target, rng, options.step_cap);
        if (!steps) {
            cap_exceeded(i, options);
        }
        moments.add(static_cast<double>(*steps));
    }
    return moments.finish(options.seed);
}

std::optional<ExcursionTrial> sample_excursions(const AugmentedNetwork& aug,
                                                const WalkSampler& sampler, Rng& rng,
                                                std::uint64_t step_cap) {
    const VertexIndex anchor = aug.anchor_index();
    const VertexIndex pendant = aug.pendant_index();
    ExcursionTrial trial;
    VertexIndex at = anchor;
    trial.visits = 1;
    bool away = false;
    while (trial.steps < step_cap) {
        at = sampler.step(at, rng);
        ++trial.steps;
        if (at == pendant) {
            return trial;
        }
        if (at == anchor) {
            ++trial.visits;
            if (away) {
                ++trial.excursions;
            }
            away = false;
        } else {
            away = true;
        }
    }
    return std::nullopt;
}

ExcursionEstimate estimate_excursions(const AugmentedNetwork& aug,
                                      const SimulationOptions& options) {
    check_options(options);
    const WalkSampler sampler(aug.augmented);
    ExcursionEstimate out;
    RunningMoments moments;
    for (std::uint64_t i = 0; i < options.trials; ++i) {
        Rng rng = Rng::for_trial(options.seed, i);
        const auto trial = sample_excursions(aug, sampler, rng, options.step_cap);
        if (!trial) {
            cap_exceeded(i, options);
        }
        moments.add(static_cast<double>(trial->excursions));
        if (out.histogram.size() <= trial->excursions) {
            out.histogram.resize(trial->excursions + 1, 0);
        }
        ++out.histogram[trial->excursions];
    }
    out.estimate = moments.finish(options.seed);
    const double c = aug.pendant_conductance;
    out.success_probability = c / (aug.base.vertex_conductance(aug.anchor) + c);
    return out;
}

GoodnessOfFit geometric_goodness_of_fit(std::span<const std::uint64_t> histogram,
                                        double success_probability) {
    const double p = success_probability;
    if (!(p > 0.0 && p < 1.0)) {
        throw Error(ErrorKind::InvalidArgument, "success probability must lie in (0, 1)");
    }
    const double total = static_cast<double>(
        std::accumulate(histogram.begin(), histogram.end(), std::uint64_t{0}));
    const double q = 1.0 - p;
    constexpr double kMinExpected = 5.0;

    auto observed_at = [&](std::size_t k) {
        return k < histogram.size() ? static_cast<double>(histogram[k]) : 0.0;
    };

    GoodnessOfFit fit;
    double statistic = 0.0;
    std::size_t k = 0;
    double tail_mass = 1.0; // P(count >= k)
    while (true) {
        const double expected_k = total * tail_mass * p;
        const double expected_rest = total * tail_mass * q;
        if (expected_k < kMinExpected || expected_rest < kMinExpected) {
            break;
        }
        const double observed = observed_at(k);
        statistic += (observed - expected_k) * (observed - expected_k) / expected_k;
        ++fit.bins;
        tail_mass *= q;
        ++k;
    }
    double observed_tail = 0.0;
    for (std::size_t j = k; j < histogram.size(); ++j) {
        observed_tail += static_cast<double>(histogram[j]);
    }
    const double expected_tail = total * tail_mass;
    statistic += (observed_tail - expected_tail) * (observed_tail - expected_tail) / expected_tail;
    ++fit.bins;

    if (fit.bins < 2) {
        throw Error(ErrorKind::InvalidArgument, "too few observations for a chi-square fit");
    }
    fit.statistic = statistic;
    fit.degrees_of_freedom = fit.bins - 1;
    const boost::math::chi_squared_distribution<double> dist(
        static_cast<double>(fit.degrees_of_freedom));
    fit.p_value = boost::math::cdf(boost::math::complement(dist, statistic));
    return fit;
}

} // namespace elnet
