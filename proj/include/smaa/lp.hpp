#pragma once

#include <Eigen/Dense>

namespace smaa::lp {

enum class Status { optimal, infeasible, unbounded };

struct Result {
    Status status = Status::infeasible;
    Eigen::VectorXd x;
    double objective = 0.0;
};

/// maximize c'x subject to A x <= b, x free.
///
/// Dense two-phase tableau simplex with Bland's rule. Intended for the small
/// systems that describe capacity polytopes (tens of rows and columns).
Result maximize(const Eigen::VectorXd& c, const Eigen::MatrixXd& A, const Eigen::VectorXd& b);

}  // namespace smaa::lp
