#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "elnet/monte_carlo.hpp"
#include "elnet/network.hpp"
#include "elnet/numeric.hpp"

namespace elnet {

struct NetworkSummary {
    std::size_t vertices = 0;
    std::size_t edges = 0;
    double total_conductance = 0.0;
};

NetworkSummary summarize(const Network& net);

/// A Monte Carlo estimate held against a closed-form value. Passes when the
/// mean lies within 4 standard errors (or, for a zero-variance estimate,
/// within the replay tolerance).
struct SimulatedCheck {
    std::string quantity;
    Estimate estimate;
    double expected = 0.0;
    bool pass = false;
};

struct ProofStep {
    std::string name;
    double expected = 0.0;
    double computed = 0.0;
    double abs_err = 0.0;
    double rel_err = 0.0;
    bool pass = false;
    std::optional<SimulatedCheck> simulation;
};

/// The pendant-vertex argument for E_z[T_z^+] = C / C_z, evaluated on one
/// network and vertex. Step order:
///   pendant-first-step   E_p[T_z] = 1 on the augmented network
///   pendant-resistance   R_{z,p} = 1
///   commute-identity     E_p[T_z] + E_z[T_p] = C' R_{z,p}
///   total-time           E_z[T_p] = C + 1
///   decomposition        E_z[T_p] = C_z E_z[T_z^+] + 1
///   conclusion           E_z[T_z^+] = C / C_z
/// where p is the pendant and C' = C + 2 the augmented total conductance.
struct ProofTrace {
    NetworkSummary network;
    VertexId anchor;
    double pendant_conductance = 1.0;
    std::vector<ProofStep> steps;
    bool verdict = false;
};

/// Every value on the "computed" side comes from a linear solve; return
/// times are first-step analysis on the original network, never C / C_z.
/// With `simulate`, total-time, decomposition (excursion count vs C_z) and
/// conclusion also carry Monte Carlo checks, and they count toward the
/// verdict.
ProofTrace replay(const Network& net, std::string_view z, double tolerance = kSolverTolerance,
                  const std::optional<SimulationOptions>& simulate = std::nullopt);

struct FamilyResult {
    std::string name;
    std::size_t checks = 0;
    double max_rel_err = 0.0;
    bool pass = false;
};

struct TheoremReport {
    NetworkSummary network;
    std::vector<FamilyResult> families;
    bool pass = false;
};

/// Checks return time against C / C_z at every vertex, commute time against
/// C R_xy at every pair, and, for unit conductances, return time against
/// 2m / deg(z).
TheoremReport verify_theorems(const Network& net, double tolerance = kSolverTolerance);

struct PendantCheck {
    VertexId anchor;
    double pendant_conductance = 1.0;
    double expected = 0.0;
    double computed = 0.0;
    double rel_err = 0.0;
    bool pass = false;
    std::optional<SimulatedCheck> excursions;
};

/// With a pendant of conductance c, E_z[T_p] = C / c + 1 and the mean
/// excursion count is C_z / c.
PendantCheck generalized_pendant_check(const Network& net, std::string_view z, double c,
                                       double tolerance = kSolverTolerance,
                                       const std::optional<SimulationOptions>& simulate = std::nullopt);

} // namespace elnet
