#include "smaa/choquet.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <string>

namespace smaa {

namespace {

// Floating-point slack when a realized value sits on a profile boundary.
constexpr double kBoundaryTolerance = 1e-9;

}  // namespace

double choquet_value(std::span<const double> g, const InteractionVector& capacity) {
    const std::size_t n = capacity.shapley.size();
    if (g.size() != n)
        throw std::invalid_argument("evaluation vector has " + std::to_string(g.size()) +
                                    " entries, capacity has " + std::to_string(n) + " criteria");
    double value = 0.0;
    for (std::size_t j = 0; j < n; ++j) value += g[j] * capacity.shapley[j];
    for (const auto& e : capacity.interactions) {
        const double gj = g[static_cast<std::size_t>(e.pair.first)];
        const double gs = g[static_cast<std::size_t>(e.pair.second)];
        const double magnitude = std::abs(e.value);
        // Moving 1/2 |I_js| away from each linear term onto the min or max.
        const double extreme = e.value > 0.0 ? std::min(gj, gs) : std::max(gj, gs);
        value += magnitude * (extreme - 0.5 * (gj + gs));
    }
    return value;
}

std::vector<double> capacity_from_interactions(const InteractionVector& capacity) {
    const int n = capacity.n_criteria();
    if (n > 24) throw std::invalid_argument("capacity enumeration limited to 24 criteria");
    const std::size_t size = std::size_t{1} << n;
    std::vector<double> mobius(size, 0.0);
    for (int j = 0; j < n; ++j) mobius[std::size_t{1} << j] = capacity.shapley[static_cast<std::size_t>(j)];
    for (const auto& e : capacity.interactions) {
        mobius[std::size_t{1} << e.pair.first] -= 0.5 * e.value;
        mobius[std::size_t{1} << e.pair.second] -= 0.5 * e.value;
        mobius[(std::size_t{1} << e.pair.first) | (std::size_t{1} << e.pair.second)] += e.value;
    }
    // Zeta transform: mu(A) = sum_{B subset of A} m(B).
    std::vector<double> mu = mobius;
    for (int j = 0; j < n; ++j)
        for (std::size_t a = 0; a < size; ++a)
            if (a & (std::size_t{1} << j)) mu[a] += mu[a ^ (std::size_t{1} << j)];
    return mu;
}

double choquet_value_oracle(std::span<const double> g, const InteractionVector& capacity) {
    const int n = capacity.n_criteria();
    if (g.size() != static_cast<std::size_t>(n)) throw std::invalid_argument("dimension mismatch");
    const auto mu = capacity_from_interactions(capacity);
    for (std::size_t a = 0; a < mu.size(); ++a)
        for (int j = 0; j < n; ++j)
            if (!(a & (std::size_t{1} << j)) && mu[a | (std::size_t{1} << j)] < mu[a] - 1e-9)
                throw std::domain_error("derived capacity is not monotone");

    std::vector<int> order(static_cast<std::size_t>(n));
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int a, int b) { return g[a] < g[b]; });

    // C(g) = sum_i (g_(i) - g_(i-1)) mu({criteria ranked i..n}).
    std::size_t upper = mu.size() - 1;
    double previous = 0.0, value = 0.0;
    for (int idx : order) {
        value += (g[idx] - previous) * mu[upper];
        previous = g[idx];
        upper &= ~(std::size_t{1} << idx);
    }
    return value;
}

int sort_alternative(double ci, std::span<const double> profile_cis) {
    if (profile_cis.size() < 2) throw std::invalid_argument("need at least two profile values");
    const double best = profile_cis.front(), worst = profile_cis.back();
    if (ci > best + kBoundaryTolerance * std::max(1.0, std::abs(best)) ||
        ci < worst - kBoundaryTolerance * std::max(1.0, std::abs(worst)))
        throw std::domain_error("aggregated value " + std::to_string(ci) + " outside profile range [" +
                                std::to_string(worst) + ", " + std::to_string(best) + "]");
    const std::size_t k = profile_cis.size() - 1;
    for (std::size_t h = 1; h < k; ++h)
        if (ci >= profile_cis[h]) return static_cast<int>(h);
    return static_cast<int>(k);
}

Scenario classify_all(const RowMatrix& evaluations, const RowMatrix& profiles,
                      const InteractionVector& capacity) {
    std::vector<double> profile_cis(static_cast<std::size_t>(profiles.rows()));
    for (Eigen::Index h = 0; h < profiles.rows(); ++h)
        profile_cis[static_cast<std::size_t>(h)] = choquet_value(row_span(profiles, h), capacity);

    Scenario out;
    out.assignment.resize(static_cast<std::size_t>(evaluations.rows()));
    for (Eigen::Index i = 0; i < evaluations.rows(); ++i)
        out.assignment[static_cast<std::size_t>(i)] =
            sort_alternative(choquet_value(row_span(evaluations, i), capacity), profile_cis);
    return out;
}

}  // namespace smaa
