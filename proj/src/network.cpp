#include "elnet/network.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <numeric>
#include <queue>

#include "elnet/error.hpp"
#include "elnet/numeric.hpp"

namespace elnet {

std::optional<VertexIndex> Network::find(std::string_view label) const {
    auto it = index_.find(VertexId(label));
    if (it == index_.end()) {
        return std::nullopt;
    }
    return it->second;
}

VertexIndex Network::index_of(std::string_view label) const {
    if (auto i = find(label)) {
        return *i;
    }
    throw Error(ErrorKind::UnknownVertex, "vertex '" + std::string(label) + "' is not in the network");
}

double Network::conductance(VertexIndex y, VertexIndex z) const {
    for (const auto& nb : adjacency_.at(y)) {
        if (nb.vertex == z) {
            return nb.conductance;
        }
    }
    return 0.0;
}

bool Network::has_unit_conductances() const noexcept {
    return std::all_of(edges_.begin(), edges_.end(),
                       [](const Edge& e) { return e.conductance == 1.0; });
}

std::vector<WeightedEdge> Network::edge_list() const {
    std::vector<WeightedEdge> out;
    out.reserve(edges_.size());
    for (const auto& e : edges_) {
        out.push_back({labels_[e.u], labels_[e.v], e.conductance});
    }
    return out;
}

Network build_network(std::span<const WeightedEdge> edges) {
    return build_network(std::span<const VertexId>{}, edges);
}

Network build_network(std::span<const VertexId> vertices, std::span<const WeightedEdge> edges) {
    if (edges.empty()) {
        throw Error(ErrorKind::EmptyNetwork, "edge list is empty");
    }

    Network net;
    auto intern = [&net](const VertexId& label) {
        auto [it, inserted] = net.index_.try_emplace(label, net.labels_.size());
        if (inserted) {
            net.labels_.push_back(label);
        }
        return it->second;
    };
    for (const auto& v : vertices) {
        intern(v);
    }

    std::map<std::pair<VertexIndex, VertexIndex>, std::size_t> pair_to_edge;
    for (const auto& e : edges) {
        if (!std::isfinite(e.conductance) || e.conductance <= 0.0) {
            throw Error(ErrorKind::NonPositiveConductance,
                        "edge " + e.u + " -- " + e.v + " has conductance " +
                            std::to_string(e.conductance));
        }
        if (e.u == e.v) {
            throw Error(ErrorKind::SelfLoop, "self-loop at vertex '" + e.u + "'");
        }
        const VertexIndex u = intern(e.u);
        const VertexIndex v = intern(e.v);
        const auto key = std::minmax(u, v);
        auto [it, inserted] = pair_to_edge.try_emplace(key, net.edges_.size());
        if (inserted) {
            net.edges_.push_back({u, v, e.conductance});
        } else {
            // parallel conductances add
            net.edges_[it->second].conductance += e.conductance;
        }
    }

    const std::size_t n = net.labels_.size();
    net.adjacency_.assign(n, {});
    net.vertex_conductance_.assign(n, 0.0);
    for (const auto& e : net.edges_) {
        net.adjacency_[e.u].push_back({e.v, e.conductance});
        net.adjacency_[e.v].push_back({e.u, e.conductance});
        net.vertex_conductance_[e.u] += e.conductance;
        net.vertex_conductance_[e.v] += e.conductance;
    }
    net.total_conductance_ =
        std::accumulate(net.vertex_conductance_.begin(), net.vertex_conductance_.end(), 0.0);

    std::vector<bool> seen(n, false);
    std::queue<VertexIndex> frontier;
    seen[0] = true;
    frontier.push(0);
    std::size_t reached = 1;
    while (!frontier.empty()) {
        const VertexIndex y = frontier.front();
        frontier.pop();
        for (const auto& nb : net.adjacency_[y]) {
            if (!seen[nb.vertex]) {
                seen[nb.vertex] = true;
                ++reached;
                frontier.push(nb.vertex);
            }
        }
    }
    if (reached != n) {
        const auto missing = std::find(seen.begin(), seen.end(), false) - seen.begin();
        throw Error(ErrorKind::Disconnected,
                    "vertex '" + net.labels_[missing] + "' is not reachable from '" +
                        net.labels_[0] + "'");
    }
    return net;
}

double Distribution::weight(std::string_view label) const {
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels[i] == label) {
            return weights[i];
        }
    }
    throw Error(ErrorKind::UnknownVertex, "vertex '" + std::string(label) + "' is not in the distribution");
}

double Distribution::total() const {
    return std::accumulate(weights.begin(), weights.end(), 0.0);
}

Distribution transition_distribution(const Network& net, std::string_view y) {
    return transition_distribution(net, net.index_of(y));
}

Distribution transition_distribution(const Network& net, VertexIndex y) {
    Distribution row{net.labels(), std::vector<double>(net.vertex_count(), 0.0)};
    const double cy = net.vertex_conductance(y);
    for (const auto& nb : net.neighbors(y)) {
        row.weights[nb.vertex] = nb.conductance / cy;
    }
    return row;
}

Eigen::MatrixXd transition_matrix(const Network& net) {
    const auto n = static_cast<Eigen::Index>(net.vertex_count());
    Eigen::MatrixXd kernel = Eigen::MatrixXd::Zero(n, n);
    for (Eigen::Index y = 0; y < n; ++y) {
        const double cy = net.vertex_conductance(static_cast<VertexIndex>(y));
        for (const auto& nb : net.neighbors(static_cast<VertexIndex>(y))) {
            kernel(y, static_cast<Eigen::Index>(nb.vertex)) = nb.conductance / cy;
        }
    }
    return kernel;
}

AugmentedNetwork attach_pendant(const Network& net, std::string_view z, double c) {
    const VertexIndex anchor = net.index_of(z);
    if (!std::isfinite(c) || c <= 0.0) {
        throw Error(ErrorKind::NonPositiveConductance,
                    "pendant conductance must be positive, got " + std::to_string(c));
    }
    VertexId pendant = std::string(z) + "~";
    for (int suffix = 1; net.contains(pendant); ++suffix) {
        pendant = std::string(z) + "~" + std::to_string(suffix);
    }

    auto edges = net.edge_list();
    edges.push_back({net.label(anchor), pendant, c});
    auto augmented = build_network(net.labels(), edges);
    return AugmentedNetwork{net, std::move(augmented), net.label(anchor), std::move(pendant), c};
}

Network chain_to_network(const Eigen::MatrixXd& kernel, double scale,
                         std::span<const VertexId> labels) {
    const Eigen::Index n = kernel.rows();
    if (n != kernel.cols() || n == 0) {
        throw Error(ErrorKind::InvalidKernel, "kernel must be a nonempty square matrix");
    }
    if (!labels.empty() && static_cast<Eigen::Index>(labels.size()) != n) {
        throw Error(ErrorKind::InvalidKernel, "label count does not match kernel size");
    }
    if (!labels.empty()) {
        std::vector<VertexId> sorted(labels.begin(), labels.end());
        std::sort(sorted.begin(), sorted.end());
        if (std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end()) {
            throw Error(ErrorKind::InvalidKernel, "state labels must be unique");
        }
    }
    if (!std::isfinite(scale) || scale <= 0.0) {
        throw Error(ErrorKind::NonPositiveConductance, "scale must be positive");
    }
    for (Eigen::Index y = 0; y < n; ++y) {
        double row_sum = 0.0;
        for (Eigen::Index z = 0; z < n; ++z) {
            const double p = kernel(y, z);
            if (!std::isfinite(p) || p < 0.0) {
                throw Error(ErrorKind::InvalidKernel, "kernel entries must be finite and nonnegative");
            }
            row_sum += p;
        }
        if (std::abs(row_sum - 1.0) > kSolverTolerance) {
            throw Error(ErrorKind::InvalidKernel,
                        "row " + std::to_string(y) + " sums to " + std::to_string(row_sum));
        }
    }
    for (Eigen::Index y = 0; y < n; ++y) {
        if (kernel(y, y) > 0.0) {
            throw Error(ErrorKind::HasSelfLoopMass,
                        "state " + std::to_string(y) + " has holding probability " +
                            std::to_string(kernel(y, y)));
        }
    }

    // Irreducible iff state 0 reaches everything and everything reaches 0.
    auto reaches_all = [&](bool forward) {
        std::vector<bool> seen(static_cast<std::size_t>(n), false);
        std::queue<Eigen::Index> frontier;
        seen[0] = true;
        frontier.push(0);
        Eigen::Index count = 1;
        while (!frontier.empty()) {
            const auto y = frontier.front();
            frontier.pop();
            for (Eigen::Index z = 0; z < n; ++z) {
                const double p = forward ? kernel(y, z) : kernel(z, y);
                if (p > 0.0 && !seen[static_cast<std::size_t>(z)]) {
                    seen[static_cast<std::size_t>(z)] = true;
                    ++count;
                    frontier.push(z);
                }
            }
        }
        return count == n;
    };
    if (!reaches_all(true) || !reaches_all(false)) {
        throw Error(ErrorKind::NotIrreducible, "kernel is not irreducible");
    }

    // Propagate pi along a BFS tree using detailed balance, then check it on
    // every pair.
    Eigen::VectorXd pi = Eigen::VectorXd::Zero(n);
    pi(0) = 1.0;
    {
        std::vector<bool> seen(static_cast<std::size_t>(n), false);
        std::queue<Eigen::Index> frontier;
        seen[0] = true;
        frontier.push(0);
        while (!frontier.empty()) {
            const auto y = frontier.front();
            frontier.pop();
            for (Eigen::Index z = 0; z < n; ++z) {
                if (kernel(y, z) > 0.0 && !seen[static_cast<std::size_t>(z)]) {
                    if (kernel(z, y) <= 0.0) {
                        throw Error(ErrorKind::NotReversible,
                                    "transition " + std::to_string(y) + "->" + std::to_string(z) +
                                        " has no reverse transition");
                    }
                    seen[static_cast<std::size_t>(z)] = true;
                    pi(z) = pi(y) * kernel(y, z) / kernel(z, y);
                    frontier.push(z);
                }
            }
        }
    }
    pi /= pi.sum();

    for (Eigen::Index y = 0; y < n; ++y) {
        for (Eigen::Index z = y + 1; z < n; ++z) {
            const double forward = pi(y) * kernel(y, z);
            const double backward = pi(z) * kernel(z, y);
            if (std::abs(forward - backward) > kSolverTolerance * std::max(forward, backward)) {
                throw Error(ErrorKind::NotReversible,
                            "detailed balance fails between states " + std::to_string(y) +
                                " and " + std::to_string(z));
            }
        }
    }

    std::vector<VertexId> names;
    names.reserve(static_cast<std::size_t>(n));
    for (Eigen::Index y = 0; y < n; ++y) {
        names.push_back(labels.empty() ? std::to_string(y) : labels[static_cast<std::size_t>(y)]);
    }
    std::vector<WeightedEdge> edges;
    for (Eigen::Index y = 0; y < n; ++y) {
        for (Eigen::Index z = y + 1; z < n; ++z) {
            if (kernel(y, z) > 0.0) {
                edges.push_back({names[static_cast<std::size_t>(y)],
                                 names[static_cast<std::size_t>(z)], scale * pi(y) * kernel(y, z)});
            }
        }
    }
    return build_network(names, edges);
}

} // namespace elnet
