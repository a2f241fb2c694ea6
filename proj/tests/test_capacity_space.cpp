#include <doctest.h>

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <vector>

#include "smaa/capacity_space.hpp"

using namespace smaa;

namespace {

PreferenceStatements example_prefs() {
    PreferenceStatements p;
    p.interactions.push_back({CriteriaPair{0, 1}, InteractionSign::redundancy});
    p.shapley.push_back({0, ShapleyRelation::equally, 1});
    return p;
}

PreferenceStatements experiment_prefs() {
    PreferenceStatements p;
    p.interactions.push_back({CriteriaPair{0, 1}, InteractionSign::redundancy});
    p.shapley.push_back({1, ShapleyRelation::strictly_more, 0});
    return p;
}

double ks_uniform(std::vector<double> xs, double lo, double hi) {
    std::sort(xs.begin(), xs.end());
    const double n = static_cast<double>(xs.size());
    double d = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double f = (xs[i] - lo) / (hi - lo);
        d = std::max({d, (static_cast<double>(i) + 1) / n - f, f - static_cast<double>(i) / n});
    }
    return d;
}

}  // namespace

TEST_CASE("example polytope structure") {
    const auto P = build_polytope(2, example_prefs());
    CHECK(P.ambient_dimension() == 3);
    CHECK(P.eq_matrix().rows() == 2);
    CHECK(P.reduced_dimension() == 1);
    CHECK(P.ineq_labels() == std::vector<std::string>{"redundancy(I_12)", "monotonicity(1)", "monotonicity(2)"});

    // I_12 <= -eps ; -I_1 - 1/2 I_12 <= 0 ; -I_2 - 1/2 I_12 <= 0
    Eigen::MatrixXd expected(3, 3);
    expected << 0, 0, 1, -1, 0, -0.5, 0, -1, -0.5;
    CHECK((P.ineq_matrix() - expected).cwiseAbs().maxCoeff() < 1e-15);
    CHECK(P.ineq_rhs()(0) == doctest::Approx(-1e-6));

    // Basis orthonormal and inside the equality null space.
    const auto& B = P.basis();
    CHECK((B.transpose() * B - Eigen::MatrixXd::Identity(1, 1)).norm() < 1e-12);
    CHECK((P.eq_matrix() * B).norm() < 1e-12);
    CHECK((P.eq_matrix() * P.origin() - P.eq_rhs()).norm() < 1e-12);
}

TEST_CASE("unconstrained three-criterion simplex") {
    const auto P = build_polytope(3, {});
    CHECK(P.ambient_dimension() == 3);
    CHECK(P.reduced_dimension() == 2);
    CHECK(P.ineq_matrix().rows() == 3);
    const auto ip = interior_point(P);
    for (int j = 0; j < 3; ++j) CHECK(ip.ambient(j) == doctest::Approx(1.0 / 3).epsilon(1e-9));
    CHECK((P.ineq_rhs() - P.ineq_matrix() * ip.ambient).minCoeff() >= 1e-6 / 2);
}

TEST_CASE("interior point of the example polytope") {
    const auto P = build_polytope(2, example_prefs());
    const auto ip = interior_point(P);
    CHECK(ip.ambient(0) == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(ip.ambient(1) == doctest::Approx(0.5).epsilon(1e-12));
    // Feasible I_12 range is [-1, -eps]; its midpoint.
    CHECK(ip.ambient(2) == doctest::Approx((-1 - 1e-6) / 2).epsilon(1e-9));
}

TEST_CASE("interior point of the experiment polytope") {
    const auto P = build_polytope(2, experiment_prefs());
    CHECK(P.reduced_dimension() == 2);
    const auto ip = interior_point(P);
    CHECK((P.ineq_rhs() - P.ineq_matrix() * ip.ambient).minCoeff() >= 1e-6 / 2);
    CHECK(P.max_violation(ip.ambient) < 1e-12);
    CHECK(ip.ambient(1) > ip.ambient(0));
    CHECK(ip.ambient(2) < 0);
}

TEST_CASE("contradictions are reported") {
    PreferenceStatements cycle;
    cycle.shapley.push_back({0, ShapleyRelation::strictly_more, 1});
    cycle.shapley.push_back({1, ShapleyRelation::strictly_more, 0});
    CHECK_THROWS_AS(build_polytope(2, cycle), std::invalid_argument);

    PreferenceStatements weak;
    weak.shapley.push_back({0, ShapleyRelation::strictly_more, 1});
    weak.shapley.push_back({1, ShapleyRelation::at_least, 0});
    CHECK_THROWS_AS(build_polytope(2, weak), std::invalid_argument);

    PreferenceStatements both;
    both.interactions.push_back({CriteriaPair{0, 1}, InteractionSign::redundancy});
    both.interactions.push_back({CriteriaPair{0, 1}, InteractionSign::synergy});
    CHECK_THROWS_AS(build_polytope(2, both), std::invalid_argument);
}

TEST_CASE("non-strict cycles become equalities") {
    PreferenceStatements p;
    p.shapley.push_back({0, ShapleyRelation::at_least, 1});
    p.shapley.push_back({1, ShapleyRelation::at_least, 2});
    p.shapley.push_back({2, ShapleyRelation::at_least, 0});
    const auto P = build_polytope(3, p);
    CHECK(P.reduced_dimension() == 0);
    const auto ip = interior_point(P);
    for (int j = 0; j < 3; ++j) CHECK(ip.ambient(j) == doctest::Approx(1.0 / 3));
}

TEST_CASE("empty polytope names binding constraints") {
    // With I_1 = I_2 = 1/2, monotonicity caps a synergy at I_12 <= 1; the
    // margin stands in for a lower bound on I_12.
    PreferenceStatements p;
    p.shapley.push_back({0, ShapleyRelation::equally, 1});
    p.interactions.push_back({CriteriaPair{0, 1}, InteractionSign::synergy});
    const auto P = build_polytope(2, p, 0.3);
    CHECK_NOTHROW(interior_point(P));

    const auto Q = build_polytope(2, p, 1.5);
    try {
        interior_point(Q);
        FAIL("expected NoCompatibleModel");
    } catch (const NoCompatibleModel& e) {
        CHECK_FALSE(e.binding_constraints().empty());
    }
}

TEST_CASE("pinned capacity that breaks an inequality") {
    PreferenceStatements p;
    p.shapley.push_back({0, ShapleyRelation::equally, 1});
    p.shapley.push_back({0, ShapleyRelation::strictly_more, 1});
    CHECK_THROWS(interior_point(build_polytope(2, p)));
}

TEST_CASE("default chain settings scale with dimension") {
    const auto P = build_polytope(3, {});
    const auto h = resolve_har_settings(P, SimulationSettings{});
    CHECK(h.burn_in == 8);
    CHECK(h.thinning == 8);
    SimulationSettings s;
    s.burn_in = 0;
    s.thinning = 3;
    s.chain = ChainMode::restart;
    const auto r = resolve_har_settings(P, s);
    CHECK(r.burn_in == 0);
    CHECK(r.thinning == 3);
    CHECK(r.chain == ChainMode::restart);
}

TEST_CASE("example polytope samples are feasible and uniform in I_12") {
    const auto P = build_polytope(2, example_prefs());
    const auto ip = interior_point(P);
    const auto hs = resolve_har_settings(P, SimulationSettings{});
    Rng rng(11);
    auto state = har_init(P, ip, hs, rng);
    std::vector<double> i12;
    double worst = -1.0, drift = 0.0;
    for (int t = 0; t < 100'000; ++t) {
        const Eigen::VectorXd x = har_sample(P, state, hs, rng);
        worst = std::max(worst, P.max_violation(x));
        drift = std::max({drift, std::abs(x(0) - 0.5), std::abs(x(1) - 0.5)});
        i12.push_back(x(2));
    }
    CHECK(worst <= 1e-9);
    CHECK(drift <= 1e-9);
    CHECK(ks_uniform(i12, -1.0, -1e-6) < 0.01);
}

TEST_CASE("simplex samples have the flat Dirichlet mean") {
    const auto P = build_polytope(3, {});
    const auto ip = interior_point(P);
    const auto hs = resolve_har_settings(P, SimulationSettings{});
    Rng rng(5);
    auto state = har_init(P, ip, hs, rng);
    Eigen::Vector3d sum = Eigen::Vector3d::Zero();
    double worst = -1.0;
    const int N = 100'000;
    for (int t = 0; t < N; ++t) {
        const Eigen::VectorXd x = har_sample(P, state, hs, rng);
        worst = std::max(worst, P.max_violation(x));
        sum += x;
    }
    CHECK(worst <= 1e-9);
    for (int j = 0; j < 3; ++j) CHECK(std::abs(sum(j) / N - 1.0 / 3) < 0.01);
}

TEST_CASE("restart chain stays feasible and is seed-deterministic") {
    const auto P = build_polytope(2, experiment_prefs());
    const auto ip = interior_point(P);
    HarSettings hs{0, 3, ChainMode::restart};
    Rng a(3), b(3);
    auto sa = har_init(P, ip, hs, a);
    auto sb = har_init(P, ip, hs, b);
    for (int t = 0; t < 10'000; ++t) {
        const Eigen::VectorXd xa = har_sample(P, sa, hs, a);
        const Eigen::VectorXd xb = har_sample(P, sb, hs, b);
        REQUIRE(xa == xb);
        REQUIRE(P.max_violation(xa) <= 1e-9);
    }
}
