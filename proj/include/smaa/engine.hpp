#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <span>
#include <vector>

#include "smaa/capacity_space.hpp"
#include "smaa/model.hpp"
#include "smaa/rng.hpp"

namespace smaa {

/// Per-scenario accumulator: occurrence count plus compensated (Neumaier)
/// sums and sums of squares of the ambient capacity vectors.
struct ScenarioStats {
    std::uint64_t count = 0;
    std::vector<double> sum, sum_comp;
    std::vector<double> sum_sq, sum_sq_comp;

    explicit ScenarioStats(std::size_t dim = 0);
    void add(std::span<const double> x);
    void merge(const ScenarioStats& other);

    double total(std::size_t c) const { return sum[c] + sum_comp[c]; }
    double total_sq(std::size_t c) const { return sum_sq[c] + sum_sq_comp[c]; }
    std::vector<double> mean() const;
    /// Sample (n-1) standard deviation; empty when count < 2.
    std::optional<std::vector<double>> sd() const;
};

using ScenarioMap = std::map<Scenario, ScenarioStats>;
using RetainedSamples = std::map<Scenario, std::vector<std::vector<double>>>;

class ScenarioAccumulator {
public:
    ScenarioAccumulator(std::size_t alternatives, std::size_t categories, std::size_t dim,
                        bool retain = false, std::size_t retention_cap = 0);

    void add(const Scenario& scenario, std::span<const double> capacity);
    /// Appends `other` after this accumulator's stream.
    void merge(const ScenarioAccumulator& other);

    std::uint64_t iterations() const { return iterations_; }
    const ScenarioMap& scenarios() const { return scenarios_; }
    /// m x k, row-major.
    const std::vector<std::uint64_t>& category_counts() const { return category_counts_; }
    const RetainedSamples& retained() const { return retained_; }
    bool retention_enabled() const { return retain_; }
    bool retention_truncated() const { return truncated_; }

private:
    std::size_t m_, k_, dim_;
    bool retain_;
    std::size_t cap_;
    std::size_t retained_total_ = 0;
    bool truncated_ = false;
    std::uint64_t iterations_ = 0;
    ScenarioMap scenarios_;
    std::vector<std::uint64_t> category_counts_;
    RetainedSamples retained_;
};

struct SimulationResult {
    std::uint64_t iterations = 0;
    int alternatives = 0;
    int categories = 0;
    CoordinateLayout layout;
    ScenarioMap scenarios;
    /// [alternative][category], category 0 = best.
    std::vector<std::vector<std::uint64_t>> category_counts;
    SimulationSettings settings;
    HarSettings har;
    double elapsed_seconds = 0.0;
    bool retention_enabled = false;
    bool retention_truncated = false;
    RetainedSamples retained;
};

/// Prepared simulation: validated problem, capacity polytope, seed point and
/// chain settings. Immutable and shareable across workers.
class Simulator {
public:
    explicit Simulator(const SortingProblem& problem);

    const SortingProblem& problem() const { return problem_; }
    const CapacityPolytope& polytope() const { return polytope_; }
    const InteriorPoint& seed_point() const { return seed_; }
    const HarSettings& har_settings() const { return har_; }

    ScenarioAccumulator make_accumulator() const;
    HarState start_chain(Rng& rng) const;
    /// profiles -> evaluations -> capacity -> classify, `iterations` times.
    void run(std::size_t iterations, Rng& rng, HarState& chain, ScenarioAccumulator& acc) const;
    SimulationResult finish(const ScenarioAccumulator& acc, double elapsed_seconds) const;

private:
    SortingProblem problem_;
    CapacityPolytope polytope_;
    InteriorPoint seed_;
    HarSettings har_;
};

/// Single random stream seeded with settings.seed. Reference implementation.
SimulationResult run_simulation_serial(const SortingProblem& problem);

/// Iterations split into `workers` contiguous chunks, each with its own chain
/// seeded by derive_seed(seed, chunk) and its own burn-in, run under OpenMP and
/// merged in chunk order. Deterministic for a fixed worker count.
SimulationResult run_simulation_parallel(const SortingProblem& problem, std::size_t workers);

/// Dispatches on settings.workers (0 = serial).
SimulationResult run_simulation(const SortingProblem& problem);

struct ReplicatedScenario {
    Scenario scenario;
    std::uint64_t total_count = 0;
    std::size_t present_in = 0;
    double sai_mean = 0.0;
    double sai_sd = 0.0;
    double sai_ci_low = 0.0;
    double sai_ci_high = 0.0;
    /// Central capacity statistics across the replications where the scenario occurs.
    std::vector<double> capacity_mean;
    std::vector<double> capacity_sd;
    std::vector<double> capacity_ci_low;
    std::vector<double> capacity_ci_high;
};

struct ReplicationResult {
    std::size_t replications = 0;
    std::uint64_t iterations = 0;
    int alternatives = 0;
    int categories = 0;
    CoordinateLayout layout;
    /// Descending mean SAI, ties broken by scenario order.
    std::vector<ReplicatedScenario> scenarios;
    std::vector<std::vector<double>> category_mean;
    std::vector<std::vector<double>> category_sd;
    SimulationSettings settings;
    HarSettings har;
    double elapsed_seconds = 0.0;
};

struct ReplicationOptions {
    /// Reuse settings.seed for every replication (degenerate, sd = 0).
    bool identical_seeds = false;
};

/// R independent runs; replication r is seeded with derive_seed(seed, r).
/// Standard deviations use the (R-1) denominator and are NaN when R < 2.
ReplicationResult run_replications(const SortingProblem& problem, std::size_t replications,
                                   const ReplicationOptions& options = {});

/// Every retained ambient capacity vector for `scenario`, in draw order.
/// Throws std::logic_error when retention was off or truncated for this
/// scenario, std::out_of_range when the scenario never occurred.
std::vector<InteractionVector> export_capacity_samples(const SimulationResult& result,
                                                       const Scenario& scenario);

}  // namespace smaa
