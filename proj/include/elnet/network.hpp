#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include <Eigen/Core>

namespace elnet {

/// Opaque vertex label. Labels map to dense indices in order of first
/// appearance in the edge list that built the network.
using VertexId = std::string;
using VertexIndex = std::size_t;

struct WeightedEdge {
    VertexId u;
    VertexId v;
    double conductance = 1.0;
};

struct Edge {
    VertexIndex u;
    VertexIndex v;
    double conductance;
};

struct Neighbor {
    VertexIndex vertex;
    double conductance;
};

/// A finite connected electric network: undirected, no self-loops, at most
/// one edge per vertex pair, every conductance strictly positive. Immutable
/// once built.
class Network {
public:
    std::size_t vertex_count() const noexcept { return labels_.size(); }
    std::size_t edge_count() const noexcept { return edges_.size(); }

    const std::vector<VertexId>& labels() const noexcept { return labels_; }
    const VertexId& label(VertexIndex i) const { return labels_.at(i); }
    bool contains(std::string_view label) const { return find(label).has_value(); }
    std::optional<VertexIndex> find(std::string_view label) const;
    /// Throws UnknownVertex.
    VertexIndex index_of(std::string_view label) const;

    const std::vector<Edge>& edges() const noexcept { return edges_; }
    /// Neighbors in order of edge insertion.
    std::span<const Neighbor> neighbors(VertexIndex i) const { return adjacency_.at(i); }
    std::size_t degree(VertexIndex i) const { return adjacency_.at(i).size(); }
    /// C_yz, or 0 when y and z are not adjacent.
    double conductance(VertexIndex y, VertexIndex z) const;

    /// C_z, the sum of conductances of edges incident to z.
    double vertex_conductance(VertexIndex z) const { return vertex_conductance_.at(z); }
    double vertex_conductance(std::string_view z) const { return vertex_conductance(index_of(z)); }
    /// C, the sum of C_z over all vertices.
    double total_conductance() const noexcept { return total_conductance_; }

    /// True when every edge carries conductance exactly 1 (simple random walk).
    bool has_unit_conductances() const noexcept;

    /// The merged edge list, relabelled, in index order.
    std::vector<WeightedEdge> edge_list() const;

private:
    friend Network build_network(std::span<const VertexId> vertices,
                                 std::span<const WeightedEdge> edges);

    std::vector<VertexId> labels_;
    std::unordered_map<VertexId, VertexIndex> index_;
    std::vector<Edge> edges_;
    std::vector<std::vector<Neighbor>> adjacency_;
    std::vector<double> vertex_conductance_;
    double total_conductance_ = 0.0;
};

/// Validates and builds a network. Entries for the same unordered pair are
/// merged by summing their conductances.
///
/// Errors: EmptyNetwork, NonPositiveConductance (c <= 0 or non-finite),
/// SelfLoop, Disconnected.
Network build_network(std::span<const WeightedEdge> edges);

/// As above, but `vertices` are indexed first, in the given order, before
/// any label first seen in `edges`. Every listed vertex must be covered by
/// an edge or the network is reported Disconnected.
Network build_network(std::span<const VertexId> vertices, std::span<const WeightedEdge> edges);

/// A probability vector over the vertices of a network, in index order.
struct Distribution {
    std::vector<VertexId> labels;
    std::vector<double> weights;

    double weight(std::string_view label) const;
    double total() const;
};

/// Row y of the induced walk: C_yz / C_y on each neighbor z.
Distribution transition_distribution(const Network& net, std::string_view y);
Distribution transition_distribution(const Network& net, VertexIndex y);

/// Dense row-stochastic kernel of the induced walk, rows and columns in
/// vertex index order.
Eigen::MatrixXd transition_matrix(const Network& net);

/// A network with one extra vertex hanging off `anchor` by a single edge.
struct AugmentedNetwork {
    Network base;
    Network augmented;
    VertexId anchor;
    VertexId pendant;
    double pendant_conductance;

    VertexIndex anchor_index() const { return augmented.index_of(anchor); }
    VertexIndex pendant_index() const { return augmented.index_of(pendant); }
};

/// Attaches a fresh pendant vertex to `z` with conductance `c`. The pendant
/// label is `z` followed by `~`, with a numeric suffix if that collides.
AugmentedNetwork attach_pendant(const Network& net, std::string_view z, double c = 1.0);

/// Realizes a reversible kernel as an electric network with
/// C_yz = scale * pi_y * P(y, z). States are labelled "0", "1", ... unless
/// `labels` is given.
///
/// Errors: InvalidKernel (not square or not row-stochastic), HasSelfLoopMass,
/// NotIrreducible, NotReversible (detailed balance off by more than 1e-9
/// relative), NonPositiveConductance (scale).
Network chain_to_network(const Eigen::MatrixXd& kernel, double scale = 1.0,
                         std::span<const VertexId> labels = {});

} // namespace elnet
