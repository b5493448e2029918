#include "elnet/proof_replayer.hpp"

#include <algorithm>
#include <cmath>

#include "elnet/error.hpp"
#include "elnet/exact_solver.hpp"

namespace elnet {

namespace {

ProofStep make_step(std::string name, double expected, double computed, double tolerance) {
    ProofStep step;
    step.name = std::move(name);
    step.expected = expected;
    step.computed = computed;
    step.abs_err = std::abs(expected - computed);
    step.rel_err = relative_error(expected, computed);
    step.pass = step.rel_err <= tolerance;
    return step;
}

SimulatedCheck make_simulated(std::string quantity, const Estimate& estimate, double expected,
                              double tolerance) {
    SimulatedCheck check{std::move(quantity), estimate, expected, false};
    const double deviation = std::abs(estimate.mean - expected);
    check.pass = estimate.std_error > 0.0 ? deviation <= 4.0 * estimate.std_error
                                          : relative_error(estimate.mean, expected) <= tolerance;
    return check;
}

} // namespace

NetworkSummary summarize(const Network& net) {
    return {net.vertex_count(), net.edge_count(), net.total_conductance()};
}

ProofTrace replay(const Network& net, std::string_view z, double tolerance,
                  const std::optional<SimulationOptions>& simulate) {
    if (!(tolerance > 0.0)) {
        throw Error(ErrorKind::InvalidArgument, "tolerance must be positive");
    }
    const VertexIndex zi = net.index_of(z);
    const AugmentedNetwork aug = attach_pendant(net, z, 1.0);
    const Network& tilde = aug.augmented;
    const VertexIndex anchor = aug.anchor_index();
    const VertexIndex pendant = aug.pendant_index();

    const double total = net.total_conductance();
    const double total_tilde = tilde.total_conductance();
    const double cz = net.vertex_conductance(zi);

    const HittingProfile to_anchor = hitting_time(tilde, anchor);
    const HittingProfile to_pendant = hitting_time(tilde, pendant);
    const double pendant_to_anchor = to_anchor.values[pendant];
    const double anchor_to_pendant = to_pendant.values[anchor];
    const double resistance = effective_resistance(tilde, aug.anchor, aug.pendant);
    const double first_step_return = return_time(net, zi);

    ProofTrace trace;
    trace.network = summarize(net);
    trace.anchor = net.label(zi);
    trace.pendant_conductance = aug.pendant_conductance;

    trace.steps.push_back(make_step("pendant-first-step", 1.0, pendant_to_anchor, tolerance));
    trace.steps.push_back(make_step("pendant-resistance", 1.0, resistance, tolerance));
    trace.steps.push_back(make_step("commute-identity", total_tilde * resistance,
                                    pendant_to_anchor + anchor_to_pendant, tolerance));
    trace.steps.push_back(make_step("total-time", total + 1.0, anchor_to_pendant, tolerance));
    trace.steps.push_back(
        make_step("decomposition", cz * first_step_return + 1.0, anchor_to_pendant, tolerance));
    trace.steps.push_back(
        make_step("conclusion", return_time_formula(net, zi), first_step_return, tolerance));

    if (simulate) {
        const Estimate hit = estimate_hitting_time(tilde, aug.anchor, aug.pendant, *simulate);
        trace.steps[3].simulation = make_simulated("hitting-time-to-pendant", hit, total + 1.0, tolerance);
        const ExcursionEstimate exc = estimate_excursions(aug, *simulate);
        trace.steps[4].simulation = make_simulated("excursion-count", exc.estimate, cz, tolerance);
        const Estimate ret = estimate_return_time(net, z, *simulate);
        trace.steps[5].simulation =
            make_simulated("return-time", ret, return_time_formula(net, zi), tolerance);
    }

    trace.verdict = std::all_of(trace.steps.begin(), trace.steps.end(), [](const ProofStep& s) {
        return s.pass && (!s.simulation || s.simulation->pass);
    });
    return trace;
}

TheoremReport verify_theorems(const Network& net, double tolerance) {
    if (!(tolerance > 0.0)) {
        throw Error(ErrorKind::InvalidArgument, "tolerance must be positive");
    }
    const std::size_t n = net.vertex_count();
    std::vector<HittingProfile> profiles;
    profiles.reserve(n);
    for (VertexIndex t = 0; t < n; ++t) {
        profiles.push_back(hitting_time(net, t));
    }
    auto first_step_return = [&](VertexIndex z) {
        double weighted = 0.0;
        for (const auto& nb : net.neighbors(z)) {
            weighted += nb.conductance * profiles[z].values[nb.vertex];
        }
        return 1.0 + weighted / net.vertex_conductance(z);
    };

    TheoremReport report;
    report.network = summarize(net);

    FamilyResult general{"return-time-total-conductance", 0, 0.0, false};
    for (VertexIndex z = 0; z < n; ++z) {
        general.max_rel_err = std::max(general.max_rel_err,
                                       relative_error(first_step_return(z), return_time_formula(net, z)));
        ++general.checks;
    }
    general.pass = general.max_rel_err <= tolerance;
    report.families.push_back(general);

    const Eigen::MatrixXd resistance = resistance_matrix(net);
    FamilyResult commute{"commute-identity", 0, 0.0, false};
    for (VertexIndex x = 0; x < n; ++x) {
        for (VertexIndex y = x + 1; y < n; ++y) {
            const double round_trip = profiles[y].values[x] + profiles[x].values[y];
            const double electrical = net.total_conductance() *
                                      resistance(static_cast<Eigen::Index>(x), static_cast<Eigen::Index>(y));
            commute.max_rel_err = std::max(commute.max_rel_err, relative_error(round_trip, electrical));
            ++commute.checks;
        }
    }
    commute.pass = commute.max_rel_err <= tolerance;
    report.families.push_back(commute);

    if (net.has_unit_conductances()) {
        FamilyResult unit{"return-time-edge-count", 0, 0.0, false};
        const double two_m = 2.0 * static_cast<double>(net.edge_count());
        for (VertexIndex z = 0; z < n; ++z) {
            const double expected = two_m / static_cast<double>(net.degree(z));
            unit.max_rel_err = std::max(unit.max_rel_err, relative_error(first_step_return(z), expected));
            ++unit.checks;
        }
        unit.pass = unit.max_rel_err <= tolerance;
        report.families.push_back(unit);
    }

    report.pass = std::all_of(report.families.begin(), report.families.end(),
                              [](const FamilyResult& f) { return f.pass; });
    return report;
}

PendantCheck generalized_pendant_check(const Network& net, std::string_view z, double c,
                                       double tolerance,
                                       const std::optional<SimulationOptions>& simulate) {
    if (!(tolerance > 0.0)) {
        throw Error(ErrorKind::InvalidArgument, "tolerance must be positive");
    }
    const AugmentedNetwork aug = attach_pendant(net, z, c);
    PendantCheck check;
    check.anchor = aug.anchor;
    check.pendant_conductance = c;
    check.expected = net.total_conductance() / c + 1.0;
    check.computed = hitting_time(aug.augmented, aug.pendant_index()).values[aug.anchor_index()];
    check.rel_err = relative_error(check.expected, check.computed);
    check.pass = check.rel_err <= tolerance;
    if (simulate) {
        const ExcursionEstimate exc = estimate_excursions(aug, *simulate);
        check.excursions = make_simulated("excursion-count", exc.estimate,
                                          net.vertex_conductance(z) / c, tolerance);
        check.pass = check.pass && check.excursions->pass;
    }
    return check;
}

} // namespace elnet
