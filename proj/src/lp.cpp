#include "smaa/lp.hpp"

#include <limits>
#include <stdexcept>
#include <vector>

namespace smaa::lp {

namespace {

constexpr double kTol = 1e-10;

struct Tableau {
    // Rows 0..m-1 are constraints; row m is the objective row (z - c'x = 0).
    Eigen::MatrixXd t;
    std::vector<Eigen::Index> basis;
    Eigen::Index n_cols = 0;  // excluding rhs

    Eigen::Index rhs() const { return n_cols; }
    Eigen::Index obj() const { return t.rows() - 1; }

    void pivot(Eigen::Index row, Eigen::Index col) {
        t.row(row) /= t(row, col);
        for (Eigen::Index i = 0; i < t.rows(); ++i) {
            if (i == row) continue;
            const double f = t(i, col);
            if (f != 0.0) t.row(i) -= f * t.row(row);
        }
        basis[static_cast<std::size_t>(row)] = col;
    }

    // Returns false if unbounded. Columns >= allowed_cols never enter.
    bool optimize(Eigen::Index allowed_cols) {
        for (;;) {
            Eigen::Index enter = -1;
            for (Eigen::Index j = 0; j < allowed_cols; ++j) {
                if (t(obj(), j) < -kTol) {
                    enter = j;
                    break;
                }
            }
            if (enter < 0) return true;

            Eigen::Index leave = -1;
            double best = std::numeric_limits<double>::infinity();
            for (Eigen::Index i = 0; i < obj(); ++i) {
                const double a = t(i, enter);
                if (a <= kTol) continue;
                const double ratio = t(i, rhs()) / a;
                if (ratio < best - kTol ||
                    (ratio <= best + kTol && leave >= 0 &&
                     basis[static_cast<std::size_t>(i)] < basis[static_cast<std::size_t>(leave)])) {
                    best = ratio;
                    leave = i;
                }
            }
            if (leave < 0) return false;
            pivot(leave, enter);
        }
    }
};

}  // namespace

Result maximize(const Eigen::VectorXd& c, const Eigen::MatrixXd& A, const Eigen::VectorXd& b) {
    const Eigen::Index m = A.rows();
    const Eigen::Index d = A.cols();
    if (c.size() != d || b.size() != m) throw std::invalid_argument("lp::maximize: dimension mismatch");

    // Columns: u (d), v (d), slack (m), artificial (one per row with b < 0).
    std::vector<Eigen::Index> artificial_row;
    for (Eigen::Index i = 0; i < m; ++i)
        if (b(i) < 0.0) artificial_row.push_back(i);
    const Eigen::Index n_art = static_cast<Eigen::Index>(artificial_row.size());
    const Eigen::Index art0 = 2 * d + m;

    Tableau tab;
    tab.n_cols = art0 + n_art;
    tab.t = Eigen::MatrixXd::Zero(m + 1, tab.n_cols + 1);
    tab.basis.assign(static_cast<std::size_t>(m), -1);
    for (Eigen::Index i = 0; i < m; ++i) {
        tab.t.block(i, 0, 1, d) = A.row(i);
        tab.t.block(i, d, 1, d) = -A.row(i);
        tab.t(i, 2 * d + i) = 1.0;
        tab.t(i, tab.rhs()) = b(i);
        tab.basis[static_cast<std::size_t>(i)] = 2 * d + i;
    }
    for (Eigen::Index a = 0; a < n_art; ++a) {
        const Eigen::Index i = artificial_row[static_cast<std::size_t>(a)];
        tab.t.row(i) *= -1.0;
        tab.t(i, art0 + a) = 1.0;
        tab.basis[static_cast<std::size_t>(i)] = art0 + a;
    }

    if (n_art > 0) {
        // Phase 1: maximize -sum(artificial).
        tab.t.row(tab.obj()).setZero();
        for (Eigen::Index a = 0; a < n_art; ++a) tab.t(tab.obj(), art0 + a) = 1.0;
        for (Eigen::Index i : artificial_row) tab.t.row(tab.obj()) -= tab.t.row(i);
        tab.optimize(tab.n_cols);
        if (tab.t(tab.obj(), tab.rhs()) < -1e-9) return {Status::infeasible, {}, 0.0};

        for (Eigen::Index i = 0; i < m; ++i) {
            if (tab.basis[static_cast<std::size_t>(i)] < art0) continue;
            for (Eigen::Index j = 0; j < art0; ++j) {
                if (std::abs(tab.t(i, j)) > kTol) {
                    tab.pivot(i, j);
                    break;
                }
            }
        }
    }

    // Phase 2.
    tab.t.row(tab.obj()).setZero();
    tab.t.block(tab.obj(), 0, 1, d) = -c.transpose();
    tab.t.block(tab.obj(), d, 1, d) = c.transpose();
    for (Eigen::Index i = 0; i < m; ++i) {
        const Eigen::Index bv = tab.basis[static_cast<std::size_t>(i)];
        const double f = tab.t(tab.obj(), bv);
        if (f != 0.0) tab.t.row(tab.obj()) -= f * tab.t.row(i);
    }
    if (!tab.optimize(art0)) return {Status::unbounded, {}, 0.0};

    Eigen::VectorXd z = Eigen::VectorXd::Zero(tab.n_cols);
    for (Eigen::Index i = 0; i < m; ++i) z(tab.basis[static_cast<std::size_t>(i)]) = tab.t(i, tab.rhs());
    Result res;
    res.status = Status::optimal;
    res.x = z.head(d) - z.segment(d, d);
    res.objective = c.dot(res.x);
    return res;
}

}  // namespace smaa::lp
