#include "smaa/measures.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace smaa {

std::vector<ScenarioAcceptability> scenario_acceptability(const SimulationResult& result) {
    std::vector<ScenarioAcceptability> out;
    out.reserve(result.scenarios.size());
    for (const auto& [scenario, stats] : result.scenarios)
        out.push_back({scenario, stats.count, result.iterations,
                       static_cast<double>(stats.count) / static_cast<double>(result.iterations)});
    // The map is already in scenario order, so a stable sort on counts keeps ties lexicographic.
    std::stable_sort(out.begin(), out.end(),
                     [](const ScenarioAcceptability& a, const ScenarioAcceptability& b) { return a.count > b.count; });
    return out;
}

CentralCapacity scenario_central_capacity(const ScenarioStats& stats, const CoordinateLayout& layout) {
    if (stats.count == 0) throw std::invalid_argument("central capacity of an empty scenario");
    CentralCapacity c;
    c.mean = stats.mean();
    c.sd = stats.sd();
    c.capacity = InteractionVector::from_ambient(layout, c.mean);
    return c;
}

std::vector<std::vector<double>> category_acceptability(const SimulationResult& result) {
    std::vector<std::vector<double>> out;
    out.reserve(result.category_counts.size());
    for (const auto& row : result.category_counts) {
        auto& dst = out.emplace_back();
        for (auto c : row) dst.push_back(static_cast<double>(c) / static_cast<double>(result.iterations));
    }
    return out;
}

Histogram make_histogram(std::span<const double> values, std::size_t bins, std::optional<double> low,
                         std::optional<double> high) {
    if (bins == 0) throw std::invalid_argument("histogram needs at least one bin");
    Histogram h;
    h.counts.assign(bins, 0);
    if (values.empty()) {
        h.low = low.value_or(0.0);
        h.high = high.value_or(h.low);
        return h;
    }
    const auto [mn, mx] = std::minmax_element(values.begin(), values.end());
    h.low = low.value_or(*mn);
    h.high = high.value_or(*mx);
    if (h.high <= h.low) h.high = h.low + 1.0;
    const double width = h.bin_width();
    for (double v : values) {
        if (v < h.low || v > h.high) continue;
        auto b = static_cast<std::size_t>((v - h.low) / width);
        h.counts[std::min(b, bins - 1)]++;
    }
    return h;
}

double skewness(std::span<const double> values) {
    if (values.size() < 3) return 0.0;
    const double n = static_cast<double>(values.size());
    double mean = 0.0;
    for (double v : values) mean += v;
    mean /= n;
    double m2 = 0.0, m3 = 0.0;
    for (double v : values) {
        const double d = v - mean;
        m2 += d * d;
        m3 += d * d * d;
    }
    m2 /= n;
    m3 /= n;
    return m2 > 0.0 ? m3 / std::pow(m2, 1.5) : 0.0;
}

}  // namespace smaa
