#include <doctest.h>

#include <algorithm>
#include <functional>
#include <random>
#include <vector>

#include <Eigen/Dense>

#include "smaa/lp.hpp"

using namespace smaa;

namespace {

// Best objective over all vertices: every d-subset of rows solved as equalities.
double brute_force(const Eigen::VectorXd& c, const Eigen::MatrixXd& A, const Eigen::VectorXd& b) {
    const int m = static_cast<int>(A.rows()), d = static_cast<int>(A.cols());
    double best = -1e300;
    std::vector<int> idx(static_cast<std::size_t>(d));
    std::function<void(int, int)> rec = [&](int start, int depth) {
        if (depth == d) {
            Eigen::MatrixXd M(d, d);
            Eigen::VectorXd r(d);
            for (int i = 0; i < d; ++i) {
                M.row(i) = A.row(idx[i]);
                r(i) = b(idx[i]);
            }
            Eigen::FullPivLU<Eigen::MatrixXd> lu(M);
            if (lu.rank() < d) return;
            const Eigen::VectorXd x = lu.solve(r);
            if (((A * x - b).array() > 1e-9).any()) return;
            best = std::max(best, c.dot(x));
            return;
        }
        for (int i = start; i < m; ++i) {
            idx[static_cast<std::size_t>(depth)] = i;
            rec(i + 1, depth + 1);
        }
    };
    rec(0, 0);
    return best;
}

}  // namespace

TEST_CASE("small textbook problem") {
    // max 3x + 2y  s.t. x + y <= 4, x + 3y <= 6, x <= 3, x, y >= 0
    Eigen::MatrixXd A(5, 2);
    A << 1, 1, 1, 3, 1, 0, -1, 0, 0, -1;
    Eigen::VectorXd b(5);
    b << 4, 6, 3, 0, 0;
    Eigen::VectorXd c(2);
    c << 3, 2;
    const auto r = lp::maximize(c, A, b);
    REQUIRE(r.status == lp::Status::optimal);
    CHECK(r.objective == doctest::Approx(11));
    CHECK(r.x(0) == doctest::Approx(3));
    CHECK(r.x(1) == doctest::Approx(1));
}

TEST_CASE("negative right-hand sides need phase one") {
    // x >= 2, y >= 1, x + y <= 5; max -x - y
    Eigen::MatrixXd A(3, 2);
    A << -1, 0, 0, -1, 1, 1;
    Eigen::VectorXd b(3);
    b << -2, -1, 5;
    Eigen::VectorXd c(2);
    c << -1, -1;
    const auto r = lp::maximize(c, A, b);
    REQUIRE(r.status == lp::Status::optimal);
    CHECK(r.objective == doctest::Approx(-3));
}

TEST_CASE("infeasible and unbounded") {
    Eigen::MatrixXd A(2, 1);
    A << 1, -1;
    Eigen::VectorXd b(2);
    b << 1, -2;
    Eigen::VectorXd c(1);
    c << 1;
    CHECK(lp::maximize(c, A, b).status == lp::Status::infeasible);

    Eigen::MatrixXd U(1, 2);
    U << 1, 0;
    Eigen::VectorXd ub(1);
    ub << 1;
    Eigen::VectorXd cu(2);
    cu << 0, 1;
    CHECK(lp::maximize(cu, U, ub).status == lp::Status::unbounded);
}

TEST_CASE("matches vertex enumeration on random bounded problems") {
    std::mt19937_64 gen(7);
    std::normal_distribution<double> z;
    std::uniform_real_distribution<double> u(-1.0, 2.0);
    for (int t = 0; t < 200; ++t) {
        const int d = 2 + t % 3;
        const int extra = 3 + t % 5;
        // Box [-5, 5]^d keeps the problem bounded; extra random cuts may make it empty.
        Eigen::MatrixXd A(2 * d + extra, d);
        Eigen::VectorXd b(2 * d + extra);
        A.setZero();
        for (int j = 0; j < d; ++j) {
            A(2 * j, j) = 1;
            A(2 * j + 1, j) = -1;
            b(2 * j) = 5;
            b(2 * j + 1) = 5;
        }
        for (int i = 2 * d; i < A.rows(); ++i) {
            for (int j = 0; j < d; ++j) A(i, j) = z(gen);
            b(i) = u(gen);
        }
        Eigen::VectorXd c(d);
        for (int j = 0; j < d; ++j) c(j) = z(gen);

        const double expected = brute_force(c, A, b);
        const auto r = lp::maximize(c, A, b);
        CAPTURE(t);
        if (expected < -1e299) {
            CHECK(r.status == lp::Status::infeasible);
        } else {
            REQUIRE(r.status == lp::Status::optimal);
            CHECK(r.objective == doctest::Approx(expected).epsilon(1e-7));
            CHECK((A * r.x - b).maxCoeff() <= 1e-8);
        }
    }
}
