#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "smaa/engine.hpp"

namespace smaa {

struct ScenarioAcceptability {
    Scenario scenario;
    std::uint64_t count = 0;
    std::uint64_t iterations = 0;
    /// count / iterations
    double sai = 0.0;
};

/// SAI_t = B_t / N for every observed scenario, descending by count with ties
/// broken by lexicographic scenario order.
std::vector<ScenarioAcceptability> scenario_acceptability(const SimulationResult& result);

struct CentralCapacity {
    std::vector<double> mean;              // ambient coordinates
    std::optional<std::vector<double>> sd; // present when B_t >= 2
    InteractionVector capacity;            // mean packaged per layout
};

/// Mean (and sd) of the capacity vectors that produced a scenario.
CentralCapacity scenario_central_capacity(const ScenarioStats& stats, const CoordinateLayout& layout);

/// C[i][h] = category_counts[i][h] / N.
std::vector<std::vector<double>> category_acceptability(const SimulationResult& result);

struct Histogram {
    double low = 0.0;
    double high = 0.0;
    std::vector<std::uint64_t> counts;

    double bin_width() const { return (high - low) / static_cast<double>(counts.size()); }
};

/// Equal-width bins over [low, high]; values equal to `high` go into the last bin.
/// Missing bounds are taken from the data; values outside [low, high] are dropped.
Histogram make_histogram(std::span<const double> values, std::size_t bins,
                         std::optional<double> low = std::nullopt, std::optional<double> high = std::nullopt);

/// Sample skewness (biased moment estimator); 0 for fewer than 3 values.
double skewness(std::span<const double> values);

}  // namespace smaa
