#include "elnet/serialize.hpp"

#include <array>
#include <charconv>

namespace elnet {

Json to_json(const NetworkSummary& summary) {
    Json j;
    j["n"] = summary.vertices;
    j["m"] = summary.edges;
    j["total_conductance"] = summary.total_conductance;
    return j;
}

Json to_json(const Distribution& distribution) {
    Json j = Json::object();
    for (std::size_t i = 0; i < distribution.labels.size(); ++i) {
        j[distribution.labels[i]] = distribution.weights[i];
    }
    return j;
}

Json to_json(const HittingProfile& profile) {
    Json values = Json::object();
    for (std::size_t i = 0; i < profile.labels.size(); ++i) {
        values[profile.labels[i]] = profile.values[i];
    }
    Json j;
    j["target"] = profile.target;
    j["values"] = std::move(values);
    j["ill_conditioned"] = profile.ill_conditioned;
    return j;
}

Json to_json(const Estimate& estimate) {
    Json j;
    j["mean"] = estimate.mean;
    j["std_error"] = estimate.std_error;
    j["trials"] = estimate.trials;
    j["seed"] = estimate.seed;
    j["capped_trials"] = estimate.capped_trials;
    return j;
}

Json to_json(const SimulatedCheck& check) {
    Json j;
    j["quantity"] = check.quantity;
    j["expected"] = check.expected;
    j["estimate"] = to_json(check.estimate);
    j["pass"] = check.pass;
    return j;
}

Json to_json(const ProofStep& step) {
    Json j;
    j["name"] = step.name;
    j["expected"] = step.expected;
    j["computed"] = step.computed;
    j["abs_err"] = step.abs_err;
    j["rel_err"] = step.rel_err;
    j["pass"] = step.pass;
    if (step.simulation) {
        j["simulation"] = to_json(*step.simulation);
    }
    return j;
}

Json to_json(const ProofTrace& trace) {
    Json j;
    j["network"] = to_json(trace.network);
    j["anchor"] = trace.anchor;
    j["pendant_conductance"] = trace.pendant_conductance;
    Json steps = Json::array();
    for (const auto& s : trace.steps) {
        steps.push_back(to_json(s));
    }
    j["steps"] = std::move(steps);
    j["verdict"] = trace.verdict;
    return j;
}

Json to_json(const FamilyResult& family) {
    Json j;
    j["name"] = family.name;
    j["checks"] = family.checks;
    j["max_rel_err"] = family.max_rel_err;
    j["pass"] = family.pass;
    return j;
}

Json to_json(const TheoremReport& report) {
    Json j;
    j["network"] = to_json(report.network);
    Json families = Json::array();
    for (const auto& f : report.families) {
        families.push_back(to_json(f));
    }
    j["families"] = std::move(families);
    j["pass"] = report.pass;
    return j;
}

Json to_json(const PendantCheck& check) {
    Json j;
    j["anchor"] = check.anchor;
    j["pendant_conductance"] = check.pendant_conductance;
    j["expected"] = check.expected;
    j["computed"] = check.computed;
    j["rel_err"] = check.rel_err;
    if (check.excursions) {
        j["excursions"] = to_json(*check.excursions);
    }
    j["pass"] = check.pass;
    return j;
}

std::string format_double(double value) {
    std::array<char, 32> buf{};
    const auto [ptr, ec] = std::to_chars(buf.data(), buf.data() + buf.size(), value);
    return std::string(buf.data(), ptr);
}

} // namespace elnet
