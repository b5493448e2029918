#include <gtest/gtest.h>

#include <cmath>
#include <limits>

#include "elnet/error.hpp"
#include "elnet/network.hpp"
#include "support/oracle.hpp"

namespace elnet {
namespace {

using testing::k2;
using testing::triangle;
using testing::weighted_path;

ErrorKind kind_of(const auto& fn) {
    try {
        fn();
    } catch (const Error& e) {
        return e.kind();
    }
    ADD_FAILURE() << "expected an elnet::Error";
    return ErrorKind::InvalidArgument;
}

TEST(BuildNetwork, SingleEdge) {
    const Network net = k2();
    EXPECT_EQ(net.vertex_count(), 2u);
    EXPECT_EQ(net.edge_count(), 1u);
    EXPECT_EQ(net.vertex_conductance("a"), 1.0);
    EXPECT_EQ(net.vertex_conductance("b"), 1.0);
    EXPECT_EQ(net.total_conductance(), 2.0);
}

TEST(BuildNetwork, UnitTriangle) {
    const Network net = triangle();
    EXPECT_EQ(net.vertex_count(), 3u);
    EXPECT_EQ(net.edge_count(), 3u);
    for (const auto& v : net.labels()) {
        EXPECT_EQ(net.vertex_conductance(v), 2.0);
    }
    EXPECT_EQ(net.total_conductance(), 6.0);
}

TEST(BuildNetwork, WeightedPath) {
    const Network net = weighted_path();
    EXPECT_EQ(net.vertex_conductance("1"), 1.0);
    EXPECT_EQ(net.vertex_conductance("2"), 3.0);
    EXPECT_EQ(net.vertex_conductance("3"), 2.0);
    EXPECT_EQ(net.total_conductance(), 6.0);
}

TEST(BuildNetwork, IndicesFollowFirstAppearance) {
    const std::vector<WeightedEdge> e{{"z", "y", 1.0}, {"x", "z", 1.0}};
    const Network net = build_network(e);
    EXPECT_EQ(net.labels(), (std::vector<VertexId>{"z", "y", "x"}));
}

TEST(BuildNetwork, ParallelEdgesAdd) {
    const std::vector<WeightedEdge> e{{"a", "b", 1.0}, {"b", "a", 2.5}, {"b", "c", 1.0}};
    const Network net = build_network(e);
    EXPECT_EQ(net.edge_count(), 2u);
    EXPECT_EQ(net.conductance(net.index_of("a"), net.index_of("b")), 3.5);
    EXPECT_EQ(net.vertex_conductance("b"), 4.5);
    EXPECT_FALSE(net.has_unit_conductances());
}

TEST(BuildNetwork, Errors) {
    EXPECT_EQ(kind_of([] { build_network(std::vector<WeightedEdge>{}); }), ErrorKind::EmptyNetwork);
    EXPECT_EQ(kind_of([] { build_network(std::vector<WeightedEdge>{{"a", "b", 1.0}, {"c", "d", 1.0}}); }),
              ErrorKind::Disconnected);
    EXPECT_EQ(kind_of([] { build_network(std::vector<WeightedEdge>{{"a", "a", 1.0}}); }), ErrorKind::SelfLoop);
    EXPECT_EQ(kind_of([] { build_network(std::vector<WeightedEdge>{{"a", "b", 0.0}}); }),
              ErrorKind::NonPositiveConductance);
    EXPECT_EQ(kind_of([] { build_network(std::vector<WeightedEdge>{{"a", "b", -1.0}}); }),
              ErrorKind::NonPositiveConductance);
    EXPECT_EQ(kind_of([] {
                  build_network(std::vector<WeightedEdge>{{"a", "b", std::numeric_limits<double>::infinity()}});
              }),
              ErrorKind::NonPositiveConductance);
    EXPECT_EQ(kind_of([] {
                  build_network(std::vector<WeightedEdge>{{"a", "b", std::numeric_limits<double>::quiet_NaN()}});
              }),
              ErrorKind::NonPositiveConductance);
    EXPECT_EQ(kind_of([] { k2().index_of("zz"); }), ErrorKind::UnknownVertex);
}

TEST(BuildNetwork, ConductanceSumsOnRandomNetworks) {
    for (bool unit : {false, true}) {
        testing::RandomNetworkSpec spec;
        spec.unit_conductances = unit;
        for (const Network& net : testing::random_suite(11, 100, spec)) {
            double edge_sum = 0.0;
            for (const auto& e : net.edges()) edge_sum += e.conductance;
            double vertex_sum = 0.0;
            for (VertexIndex z = 0; z < net.vertex_count(); ++z) {
                double incident = 0.0;
                for (const auto& nb : net.neighbors(z)) incident += nb.conductance;
                EXPECT_NEAR(net.vertex_conductance(z), incident, 1e-12 * incident);
                vertex_sum += net.vertex_conductance(z);
                if (unit) {
                    EXPECT_EQ(net.vertex_conductance(z), static_cast<double>(net.degree(z)));
                }
            }
            EXPECT_NEAR(net.total_conductance(), 2.0 * edge_sum, 1e-12 * net.total_conductance());
            EXPECT_NEAR(net.total_conductance(), vertex_sum, 1e-12 * net.total_conductance());
            if (unit) {
                EXPECT_EQ(net.total_conductance(), 2.0 * static_cast<double>(net.edge_count()));
            }
        }
    }
}

TEST(TransitionDistribution, Examples) {
    const auto forced = transition_distribution(k2(), "a");
    EXPECT_EQ(forced.weight("b"), 1.0);
    EXPECT_EQ(forced.weight("a"), 0.0);

    const auto path = transition_distribution(weighted_path(), "2");
    EXPECT_DOUBLE_EQ(path.weight("1"), 1.0 / 3.0);
    EXPECT_DOUBLE_EQ(path.weight("3"), 2.0 / 3.0);
    EXPECT_EQ(path.weight("2"), 0.0);

    const auto tri = transition_distribution(triangle(), "a");
    EXPECT_EQ(tri.weight("b"), 0.5);
    EXPECT_EQ(tri.weight("c"), 0.5);

    EXPECT_THROW(transition_distribution(k2(), "q"), Error);
}

TEST(TransitionDistribution, RowsSumToOneOnNeighbors) {
    for (const Network& net : testing::random_suite(12, 60)) {
        for (VertexIndex y = 0; y < net.vertex_count(); ++y) {
            const auto row = transition_distribution(net, y);
            EXPECT_NEAR(row.total(), 1.0, 1e-12);
            for (VertexIndex z = 0; z < net.vertex_count(); ++z) {
                EXPECT_EQ(row.weights[z] > 0.0, net.conductance(y, z) > 0.0);
            }
        }
    }
}

TEST(AttachPendant, Examples) {
    const auto tri = attach_pendant(triangle(), "a");
    EXPECT_EQ(tri.augmented.vertex_count(), 4u);
    EXPECT_EQ(tri.augmented.total_conductance(), 8.0);
    EXPECT_EQ(tri.augmented.degree(tri.pendant_index()), 1u);
    EXPECT_EQ(tri.augmented.neighbors(tri.pendant_index())[0].vertex, tri.anchor_index());

    const auto path = attach_pendant(k2(), "a");
    EXPECT_EQ(path.augmented.vertex_count(), 3u);
    EXPECT_EQ(path.augmented.total_conductance(), 4.0);

    // C + 2c with c = 2, recomputed from the augmented vertex sums
    const auto heavy = attach_pendant(triangle(), "a", 2.0);
    double sum = 0.0;
    for (VertexIndex v = 0; v < heavy.augmented.vertex_count(); ++v) sum += heavy.augmented.vertex_conductance(v);
    EXPECT_EQ(sum, 10.0);
    EXPECT_EQ(heavy.augmented.total_conductance(), 10.0);
}

TEST(AttachPendant, Errors) {
    EXPECT_THROW(attach_pendant(triangle(), "zz"), Error);
    EXPECT_THROW(attach_pendant(triangle(), "a", 0.0), Error);
    EXPECT_THROW(attach_pendant(triangle(), "a", -1.0), Error);
}

TEST(AttachPendant, FreshLabelAvoidsCollisions) {
    const std::vector<WeightedEdge> e{{"a", "a~", 1.0}, {"a~", "a~1", 1.0}};
    const auto aug = attach_pendant(build_network(e), "a");
    EXPECT_EQ(aug.pendant, "a~2");
    EXPECT_EQ(aug.augmented.vertex_count(), 4u);
}

TEST(AttachPendant, BaseUnchangedAndRecoverable) {
    Rng rng(13);
    for (int i = 0; i < 50; ++i) {
        const Network net = testing::random_network(rng);
        const VertexId z = net.label(rng.next() % net.vertex_count());
        const double c = 0.1 + 9.9 * rng.uniform();
        const auto aug = attach_pendant(net, z, c);
        EXPECT_NEAR(aug.augmented.total_conductance(), net.total_conductance() + 2.0 * c,
                    1e-12 * aug.augmented.total_conductance());

        // the base indices survive, and dropping the pendant edge gives back
        // the original edges bit for bit
        std::vector<WeightedEdge> without;
        for (const auto& edge : aug.augmented.edge_list()) {
            if (edge.u != aug.pendant && edge.v != aug.pendant) without.push_back(edge);
        }
        const auto original = net.edge_list();
        ASSERT_EQ(without.size(), original.size());
        for (std::size_t k = 0; k < original.size(); ++k) {
            EXPECT_EQ(without[k].u, original[k].u);
            EXPECT_EQ(without[k].v, original[k].v);
            EXPECT_EQ(without[k].conductance, original[k].conductance);
        }
        for (VertexIndex v = 0; v < net.vertex_count(); ++v) {
            EXPECT_EQ(aug.augmented.label(v), net.label(v));
        }
        EXPECT_EQ(aug.base.edge_count(), net.edge_count());
    }
}

TEST(ChainToNetwork, TwoStateFlip) {
    Eigen::MatrixXd p(2, 2);
    p << 0, 1, 1, 0;
    const Network net = chain_to_network(p);
    EXPECT_EQ(net.edge_count(), 1u);
    EXPECT_EQ(net.vertex_conductance("0"), net.vertex_conductance("1"));
    EXPECT_TRUE(transition_matrix(net).isApprox(p));
}

TEST(ChainToNetwork, TriangleWalk) {
    Eigen::MatrixXd p(3, 3);
    p << 0, 0.5, 0.5, 0.5, 0, 0.5, 0.5, 0.5, 0;
    const Network net = chain_to_network(p);
    ASSERT_EQ(net.edge_count(), 3u);
    // uniform pi: every conductance is (1/3)(1/2)
    for (const auto& e : net.edges()) EXPECT_NEAR(e.conductance, 1.0 / 6.0, 1e-15);
    EXPECT_LE((transition_matrix(net) - p).cwiseAbs().maxCoeff(), 1e-12);
}

TEST(ChainToNetwork, RejectsNonReversible) {
    Eigen::MatrixXd p(3, 3);
    p << 0, 0.9, 0.1, 0.5, 0, 0.5, 0.5, 0.5, 0;
    // Kolmogorov: a reversible chain has equal products around each cycle.
    const double clockwise = p(0, 1) * p(1, 2) * p(2, 0);
    const double counter = p(0, 2) * p(2, 1) * p(1, 0);
    ASSERT_GT(std::abs(clockwise - counter), 1e-9 * std::max(clockwise, counter));
    EXPECT_EQ(kind_of([&] { chain_to_network(p); }), ErrorKind::NotReversible);
}

TEST(ChainToNetwork, OtherErrors) {
    Eigen::MatrixXd lazy(2, 2);
    lazy << 0.5, 0.5, 1, 0;
    EXPECT_EQ(kind_of([&] { chain_to_network(lazy); }), ErrorKind::HasSelfLoopMass);

    Eigen::MatrixXd split(4, 4);
    split << 0, 1, 0, 0, 1, 0, 0, 0, 0, 0, 0, 1, 0, 0, 1, 0;
    EXPECT_EQ(kind_of([&] { chain_to_network(split); }), ErrorKind::NotIrreducible);

    Eigen::MatrixXd leaky(2, 2);
    leaky << 0, 0.9, 1, 0;
    EXPECT_EQ(kind_of([&] { chain_to_network(leaky); }), ErrorKind::InvalidKernel);

    Eigen::MatrixXd one_way(3, 3);
    one_way << 0, 1, 0, 0, 0, 1, 1, 0, 0;
    EXPECT_EQ(kind_of([&] { chain_to_network(one_way); }), ErrorKind::NotReversible);

    Eigen::MatrixXd flip(2, 2);
    flip << 0, 1, 1, 0;
    EXPECT_EQ(kind_of([&] { chain_to_network(flip, 0.0); }), ErrorKind::NonPositiveConductance);
    const std::vector<VertexId> dup{"x", "x"};
    EXPECT_EQ(kind_of([&] { chain_to_network(flip, 1.0, dup); }), ErrorKind::InvalidKernel);
}

TEST(ChainToNetwork, RoundTripsInducedKernels) {
    Rng rng(14);
    for (int i = 0; i < 50; ++i) {
        const Network net = testing::random_network(rng);
        const Eigen::MatrixXd p = transition_matrix(net);
        const Network realized = chain_to_network(p, 1.0, net.labels());
        EXPECT_EQ(realized.labels(), net.labels());
        EXPECT_LE((transition_matrix(realized) - p).cwiseAbs().maxCoeff(), 1e-9);
        // pi_y P(y,z) = C_yz / C, so the realization is the input scaled by 1/C
        for (const auto& e : net.edges()) {
            EXPECT_NEAR(realized.conductance(e.u, e.v) * net.total_conductance(), e.conductance,
                        1e-9 * e.conductance);
        }
    }
}

} // namespace
} // namespace elnet
