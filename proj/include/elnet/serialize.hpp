#pragma once

#include <string>

#include <json.hpp>

#include "elnet/exact_solver.hpp"
#include "elnet/monte_carlo.hpp"
#include "elnet/network.hpp"
#include "elnet/proof_replayer.hpp"

namespace elnet {

/// Insertion-ordered so documents have a stable key order.
using Json = nlohmann::ordered_json;

Json to_json(const NetworkSummary& summary);
Json to_json(const Distribution& distribution);
Json to_json(const HittingProfile& profile);
Json to_json(const Estimate& estimate);
Json to_json(const SimulatedCheck& check);
Json to_json(const ProofStep& step);
Json to_json(const ProofTrace& trace);
Json to_json(const FamilyResult& family);
Json to_json(const TheoremReport& report);
Json to_json(const PendantCheck& check);

/// Shortest decimal form that reads back to the same double.
std::string format_double(double value);

} // namespace elnet
