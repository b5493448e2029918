#pragma once

#include <string_view>
#include <vector>

#include <Eigen/Core>
#include <Eigen/LU>

#include "elnet/network.hpp"

namespace elnet {

/// Weighted Laplacian: C_y on the diagonal, -C_yz off the diagonal.
class Laplacian {
public:
    explicit Laplacian(const Network& net);

    const Eigen::MatrixXd& matrix() const noexcept { return matrix_; }
    Eigen::Index size() const noexcept { return matrix_.rows(); }

    /// The matrix with row and column `ground` removed.
    Eigen::MatrixXd grounded(VertexIndex ground) const;

private:
    Eigen::MatrixXd matrix_;
};

/// Dense LU (partial pivoting) of a Laplacian grounded at one vertex. Solves
/// L v = b on the remaining vertices with v[ground] = 0.
class GroundedSolver {
public:
    /// Throws SingularSystem if the factorization has a vanishing pivot,
    /// which cannot happen for a connected network.
    GroundedSolver(const Laplacian& laplacian, VertexIndex ground);

    VertexIndex ground() const noexcept { return ground_; }

    /// `rhs` and the result are full length; rhs[ground] is ignored and the
    /// result has a zero there. One step of iterative refinement is applied.
    Eigen::VectorXd solve(const Eigen::VectorXd& rhs) const;

    /// Inverse of the grounded matrix, embedded with a zero row and column
    /// at the ground.
    Eigen::MatrixXd inverse() const;

    /// Reciprocal of the LU reciprocal-condition estimate.
    double condition_estimate() const noexcept { return condition_; }
    bool ill_conditioned() const noexcept;

private:
    Eigen::VectorXd expand(const Eigen::VectorXd& reduced) const;

    VertexIndex ground_;
    Eigen::Index n_;
    Eigen::MatrixXd reduced_;
    Eigen::PartialPivLU<Eigen::MatrixXd> lu_;
    double condition_;
};

/// Expected steps E_x[T_target] for every start x.
struct HittingProfile {
    VertexId target;
    std::vector<VertexId> labels;
    std::vector<double> values;
    bool ill_conditioned = false;

    double at(std::string_view from) const;
};

/// R_xy = v_x - v_y where L v = e_x - e_y with y grounded.
double effective_resistance(const Network& net, std::string_view x, std::string_view y);

/// All-pairs effective resistance from one grounded inverse, in index order.
Eigen::MatrixXd resistance_matrix(const Network& net);

/// First-step analysis: h(target) = 0, h(x) = 1 + sum_z P(x,z) h(z). Solved
/// as the grounded system L h = (C_x) with the target as ground.
HittingProfile hitting_time(const Network& net, std::string_view target);
HittingProfile hitting_time(const Network& net, VertexIndex target);

/// E_from[T_target].
double hitting_time(const Network& net, std::string_view from, std::string_view target);

/// E_x[T_y] + E_y[T_x]. Throws SameVertex when x == y.
double commute_time(const Network& net, std::string_view x, std::string_view y);

/// E_z[T_z^+] by first-step analysis: 1 + sum_y P(z,y) E_y[T_z]. Does not
/// use the closed form.
double return_time(const Network& net, std::string_view z);
double return_time(const Network& net, VertexIndex z);

/// C / C_z from the stored conductance sums.
double return_time_formula(const Network& net, std::string_view z);
double return_time_formula(const Network& net, VertexIndex z);

/// pi_z = C_z / C.
Distribution stationary_distribution(const Network& net);

} // namespace elnet
