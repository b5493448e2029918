#include "elnet/exact_solver.hpp"

#include <cmath>
#include <limits>

#include "elnet/error.hpp"
#include "elnet/numeric.hpp"

namespace elnet {

Laplacian::Laplacian(const Network& net) {
    const auto n = static_cast<Eigen::Index>(net.vertex_count());
    matrix_ = Eigen::MatrixXd::Zero(n, n);
    for (const auto& e : net.edges()) {
        const auto u = static_cast<Eigen::Index>(e.u);
        const auto v = static_cast<Eigen::Index>(e.v);
        matrix_(u, v) -= e.conductance;
        matrix_(v, u) -= e.conductance;
    }
    for (Eigen::Index y = 0; y < n; ++y) {
        matrix_(y, y) = net.vertex_conductance(static_cast<VertexIndex>(y));
    }
}

Eigen::MatrixXd Laplacian::grounded(VertexIndex ground) const {
    const Eigen::Index n = size();
    const auto g = static_cast<Eigen::Index>(ground);
    if (g < 0 || g >= n) {
        throw Error(ErrorKind::UnknownVertex, "ground index out of range");
    }
    Eigen::MatrixXd out(n - 1, n - 1);
    for (Eigen::Index r = 0, rr = 0; r < n; ++r) {
        if (r == g) continue;
        for (Eigen::Index c = 0, cc = 0; c < n; ++c) {
            if (c == g) continue;
            out(rr, cc++) = matrix_(r, c);
        }
        ++rr;
    }
    return out;
}

GroundedSolver::GroundedSolver(const Laplacian& laplacian, VertexIndex ground)
    : ground_(ground), n_(laplacian.size()), condition_(1.0) {
    if (n_ < 2) {
        throw Error(ErrorKind::SingularSystem, "grounded system is empty");
    }
    reduced_ = laplacian.grounded(ground);
    lu_.compute(reduced_);

    const Eigen::VectorXd pivots = lu_.matrixLU().diagonal().cwiseAbs();
    if (!(pivots.minCoeff() > 0.0) || !pivots.allFinite()) {
        throw Error(ErrorKind::SingularSystem, "grounded Laplacian has a vanishing pivot");
    }
    const double rcond = lu_.rcond();
    condition_ = rcond > 0.0 ? 1.0 / rcond : std::numeric_limits<double>::infinity();
}

bool GroundedSolver::ill_conditioned() const noexcept {
    return condition_ > kConditionWarning;
}

Eigen::VectorXd GroundedSolver::expand(const Eigen::VectorXd& reduced) const {
    Eigen::VectorXd full = Eigen::VectorXd::Zero(n_);
    const auto g = static_cast<Eigen::Index>(ground_);
    for (Eigen::Index i = 0, r = 0; i < n_; ++i) {
        if (i != g) full(i) = reduced(r++);
    }
    if (!full.allFinite()) {
        throw Error(ErrorKind::SingularSystem, "grounded solve produced non-finite values");
    }
    return full;
}

Eigen::VectorXd GroundedSolver::solve(const Eigen::VectorXd& rhs) const {
    const auto g = static_cast<Eigen::Index>(ground_);
    Eigen::VectorXd reduced(n_ - 1);
    for (Eigen::Index i = 0, r = 0; i < n_; ++i) {
        if (i != g) reduced(r++) = rhs(i);
    }
    Eigen::VectorXd x = lu_.solve(reduced);
    // residual in extended precision so the correction is not lost to rounding
    Eigen::VectorXd residual(reduced.size());
    for (Eigen::Index i = 0; i < reduced.size(); ++i) {
        long double r = reduced(i);
        for (Eigen::Index j = 0; j < reduced.size(); ++j) {
            r -= static_cast<long double>(reduced_(i, j)) * x(j);
        }
        residual(i) = static_cast<double>(r);
    }
    x += lu_.solve(residual);
    return expand(x);
}

Eigen::MatrixXd GroundedSolver::inverse() const {
    const Eigen::MatrixXd reduced = lu_.inverse();
    const auto g = static_cast<Eigen::Index>(ground_);
    Eigen::MatrixXd full = Eigen::MatrixXd::Zero(n_, n_);
    for (Eigen::Index i = 0, ri = 0; i < n_; ++i) {
        if (i == g) continue;
        for (Eigen::Index j = 0, rj = 0; j < n_; ++j) {
            if (j == g) continue;
            full(i, j) = reduced(ri, rj++);
        }
        ++ri;
    }
    if (!full.allFinite()) {
        throw Error(ErrorKind::SingularSystem, "grounded inverse has non-finite entries");
    }
    return full;
}

double HittingProfile::at(std::string_view from) const {
    for (std::size_t i = 0; i < labels.size(); ++i) {
        if (labels[i] == from) {
            return values[i];
        }
    }
    throw Error(ErrorKind::UnknownVertex, "vertex '" + std::string(from) + "' is not in the profile");
}

double effective_resistance(const Network& net, std::string_view x, std::string_view y) {
    const VertexIndex xi = net.index_of(x);
    const VertexIndex yi = net.index_of(y);
    if (xi == yi) {
        return 0.0;
    }
    const GroundedSolver solver(Laplacian(net), yi);
    Eigen::VectorXd current = Eigen::VectorXd::Zero(static_cast<Eigen::Index>(net.vertex_count()));
    current(static_cast<Eigen::Index>(xi)) = 1.0;
    current(static_cast<Eigen::Index>(yi)) = -1.0;
    const Eigen::VectorXd potential = solver.solve(current);
    return potential(static_cast<Eigen::Index>(xi)) - potential(static_cast<Eigen::Index>(yi));
}

Eigen::MatrixXd resistance_matrix(const Network& net) {
    const GroundedSolver solver(Laplacian(net), 0);
    const Eigen::MatrixXd g = solver.inverse();
    const Eigen::Index n = g.rows();
    Eigen::MatrixXd r(n, n);
    for (Eigen::Index i = 0; i < n; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            r(i, j) = i == j ? 0.0 : g(i, i) + g(j, j) - 2.0 * g(i, j);
        }
    }
    return r;
}

HittingProfile hitting_time(const Network& net, std::string_view target) {
    return hitting_time(net, net.index_of(target));
}

HittingProfile hitting_time(const Network& net, VertexIndex target) {
    if (target >= net.vertex_count()) {
        throw Error(ErrorKind::UnknownVertex, "target index out of range");
    }
    const GroundedSolver solver(Laplacian(net), target);
    const auto n = static_cast<Eigen::Index>(net.vertex_count());
    Eigen::VectorXd rhs(n);
    for (Eigen::Index x = 0; x < n; ++x) {
        rhs(x) = net.vertex_conductance(static_cast<VertexIndex>(x));
    }
    const Eigen::VectorXd h = solver.solve(rhs);

    HittingProfile profile;
    profile.target = net.label(target);
    profile.labels = net.labels();
    profile.values.assign(h.data(), h.data() + n);
    profile.ill_conditioned = solver.ill_conditioned();
    return profile;
}

double hitting_time(const Network& net, std::string_view from, std::string_view target) {
    const VertexIndex f = net.index_of(from);
    return hitting_time(net, net.index_of(target)).values[f];
}

double commute_time(const Network& net, std::string_view x, std::string_view y) {
    const VertexIndex xi = net.index_of(x);
    const VertexIndex yi = net.index_of(y);
    if (xi == yi) {
        throw Error(ErrorKind::SameVertex, "commute time needs two distinct vertices");
    }
    return hitting_time(net, yi).values[xi] + hitting_time(net, xi).values[yi];
}

double return_time(const Network& net, std::string_view z) {
    return return_time(net, net.index_of(z));
}

double return_time(const Network& net, VertexIndex z) {
    const HittingProfile profile = hitting_time(net, z);
    double weighted = 0.0;
    for (const auto& nb : net.neighbors(z)) {
        weighted += nb.conductance * profile.values[nb.vertex];
    }
    return 1.0 + weighted / net.vertex_conductance(z);
}

double return_time_formula(const Network& net, std::string_view z) {
    return return_time_formula(net, net.index_of(z));
}

double return_time_formula(const Network& net, VertexIndex z) {
    return net.total_conductance() / net.vertex_conductance(z);
}

Distribution stationary_distribution(const Network& net) {
    Distribution pi{net.labels(), std::vector<double>(net.vertex_count())};
    const double total = net.total_conductance();
    for (VertexIndex z = 0; z < net.vertex_count(); ++z) {
        pi.weights[z] = net.vertex_conductance(z) / total;
    }
    return pi;
}

} // namespace elnet
