#pragma once

#include <cmath>
#include <random>
#include <string>
#include <vector>

#include "smaa/model.hpp"

namespace test {

inline std::string data_path(const std::string& name) { return std::string(SMAA_DATA_DIR) + "/" + name; }

inline std::vector<smaa::StochasticValue> points(std::initializer_list<double> xs) {
    std::vector<smaa::StochasticValue> out;
    for (double x : xs) out.push_back(smaa::StochasticValue::point(x));
    return out;
}

/// Point-valued problem; each profile takes the same level on every criterion.
inline smaa::SortingProblem point_problem(int n, std::vector<double> profile_levels,
                                          std::vector<std::vector<double>> evals) {
    smaa::SortingProblem p;
    for (int j = 0; j < n; ++j) p.criteria.push_back("g" + std::to_string(j + 1));
    for (std::size_t h = 0; h + 1 < profile_levels.size(); ++h) p.categories.push_back("K" + std::to_string(h + 1));
    for (double level : profile_levels)
        p.profiles.emplace_back(static_cast<std::size_t>(n), smaa::StochasticValue::point(level));
    for (std::size_t i = 0; i < evals.size(); ++i) {
        p.alternatives.push_back("a" + std::to_string(i + 1));
        auto& row = p.evaluations.emplace_back();
        for (double x : evals[i]) row.push_back(smaa::StochasticValue::point(x));
    }
    return p;
}

/// Random capacity satisfying boundary and monotonicity. Each pair is present
/// with probability 1/2; Shapley values get a random surplus over the
/// monotonicity floor and the whole vector is scaled to sum to one.
inline smaa::InteractionVector random_feasible(int n, std::mt19937_64& gen) {
    std::uniform_real_distribution<double> u(-1.0, 1.0), w(0.0, 1.0);
    smaa::InteractionVector iv;
    iv.shapley.assign(static_cast<std::size_t>(n), 0.0);
    for (int j = 0; j < n; ++j)
        for (int s = j + 1; s < n; ++s)
            if (w(gen) < 0.5) {
                const double v = u(gen);
                iv.interactions.push_back({smaa::CriteriaPair{j, s}, v});
                iv.shapley[j] += 0.5 * std::abs(v);
                iv.shapley[s] += 0.5 * std::abs(v);
            }
    double total = 0.0;
    for (auto& x : iv.shapley) {
        x += w(gen) * (w(gen) < 0.2 ? 0.0 : 1.0);
        total += x;
    }
    if (total == 0.0) {
        iv.shapley.assign(static_cast<std::size_t>(n), 1.0 / n);
        return iv;
    }
    for (auto& x : iv.shapley) x /= total;
    for (auto& e : iv.interactions) e.value /= total;
    return iv;
}

}  // namespace test
