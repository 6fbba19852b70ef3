#pragma once

#include <Eigen/Dense>

namespace lqnet::detail {

/// LU solve followed by one refinement step with the residual accumulated in
/// extended precision.
inline Eigen::VectorXd solve_refined(const Eigen::MatrixXd& m, const Eigen::VectorXd& rhs)
{
    const auto lu = m.partialPivLu();
    Eigen::VectorXd x = lu.solve(rhs);
    Eigen::VectorXd residual(rhs.size());
    for (Eigen::Index i = 0; i < m.rows(); ++i) {
        long double r = rhs(i);
        for (Eigen::Index j = 0; j < m.cols(); ++j)
            r -= static_cast<long double>(m(i, j)) * static_cast<long double>(x(j));
        residual(i) = static_cast<double>(r);
    }
    x += lu.solve(residual);
    return x;
}

}  // namespace lqnet::detail
