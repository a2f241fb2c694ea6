#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include <Eigen/Core>

namespace smaa {

/// Dense row-major matrix; rows are alternatives or profiles, columns criteria.
using RowMatrix = Eigen::Matrix<double, Eigen::Dynamic, Eigen::Dynamic, Eigen::RowMajor>;

inline std::span<const double> row_span(const RowMatrix& m, Eigen::Index row) {
    return {m.data() + row * m.cols(), static_cast<std::size_t>(m.cols())};
}

/// A scalar random variable on the criterion scale: a fixed value, a uniform
/// interval or a normal distribution.
class StochasticValue {
public:
    enum class Kind { point, uniform, normal };

    StochasticValue() = default;

    static StochasticValue point(double v);
    static StochasticValue uniform(double lo, double hi);
    /// sd == 0 degenerates to point(mean).
    static StochasticValue normal(double mean, double sd);
    /// Normal with mean and unbiased (n-1) standard deviation of `samples`.
    static StochasticValue from_sample(std::span<const double> samples);

    Kind kind() const { return kind_; }
    double first() const { return a_; }
    double second() const { return b_; }

    double mean() const;
    /// Support bounds; +-infinity for normals.
    double support_low() const;
    double support_high() const;

    bool operator==(const StochasticValue&) const = default;

private:
    StochasticValue(Kind k, double a, double b) : kind_(k), a_(a), b_(b) {}

    Kind kind_ = Kind::point;
    double a_ = 0.0;
    double b_ = 0.0;
};

/// Unordered pair of 0-based criterion indices, stored with first < second.
struct CriteriaPair {
    int first = 0;
    int second = 0;

    static CriteriaPair make(int j, int s);
    auto operator<=>(const CriteriaPair&) const = default;
};

enum class InteractionSign { synergy, redundancy };

enum class ShapleyRelation {
    strictly_more,  // j > s
    at_least,       // j >= s
    equally         // j ~ s
};

struct InteractionStatement {
    CriteriaPair pair;
    InteractionSign sign = InteractionSign::redundancy;
};

struct ShapleyStatement {
    int left = 0;
    ShapleyRelation relation = ShapleyRelation::at_least;
    int right = 0;
};

struct PreferenceStatements {
    std::vector<InteractionStatement> interactions;
    std::vector<ShapleyStatement> shapley;
};

/// Ambient coordinate layout of a capacity: the n Shapley indices followed by
/// the declared interaction pairs in lexicographic order.
class CoordinateLayout {
public:
    CoordinateLayout() = default;
    CoordinateLayout(int n_criteria, std::vector<CriteriaPair> pairs);

    int n_criteria() const { return n_; }
    const std::vector<CriteriaPair>& pairs() const { return pairs_; }
    std::size_t dimension() const { return static_cast<std::size_t>(n_) + pairs_.size(); }

    /// "I_1", ..., "I_n", then "I_js" with 1-based indices.
    std::vector<std::string> labels() const;
    std::optional<std::size_t> index_of(std::string_view label) const;

    bool operator==(const CoordinateLayout&) const = default;

private:
    int n_ = 0;
    std::vector<CriteriaPair> pairs_;
};

/// Capacity in the Shapley/interaction representation. Pairs not listed have
/// zero interaction.
struct InteractionVector {
    struct Entry {
        CriteriaPair pair;
        double value = 0.0;
    };

    std::vector<double> shapley;
    std::vector<Entry> interactions;

    int n_criteria() const { return static_cast<int>(shapley.size()); }
    double interaction(int j, int s) const;

    static InteractionVector from_ambient(const CoordinateLayout& layout, std::span<const double> x);
    std::vector<double> to_ambient(const CoordinateLayout& layout) const;

    /// Boundary (sum = 1) and monotonicity (I_j - 1/2 sum |I_js| >= 0) within tol.
    bool is_feasible(double tol = 1e-9) const;
};

enum class ChainMode {
    /// One persistent Hit-And-Run chain; emitted draws are asymptotically uniform.
    continuous,
    /// Every draw restarts from the seed point and takes `thinning` steps.
    restart
};

struct SimulationSettings {
    std::size_t iterations = 10'000;
    std::uint64_t seed = 42;
    /// Defaults to d^3 with d the reduced polytope dimension.
    std::optional<std::size_t> burn_in;
    std::optional<std::size_t> thinning;
    std::size_t replications = 1;
    std::size_t truncation_max_attempts = 1000;
    ChainMode chain = ChainMode::continuous;
    double strict_margin = 1e-6;
    /// 0 selects the single-stream serial engine.
    std::size_t workers = 0;
    bool retain_samples = false;
    std::size_t retention_cap = 1'000'000;
};

/// Joint assignment of every alternative; entries are 1-based categories, 1 = best.
struct Scenario {
    std::vector<int> assignment;

    std::size_t size() const { return assignment.size(); }
    auto operator<=>(const Scenario&) const = default;
    bool operator==(const Scenario&) const = default;
};

std::string to_string(const Scenario& s);

struct SortingProblem {
    std::vector<std::string> criteria;
    std::vector<std::string> categories;
    std::vector<std::string> alternatives;
    /// m x n, indexed [alternative][criterion].
    std::vector<std::vector<StochasticValue>> evaluations;
    /// (k+1) x n, best profile first.
    std::vector<std::vector<StochasticValue>> profiles;
    /// profile_shared[h]: row h is drawn once and the value used on every
    /// criterion (the row's cells must then be identical). Empty = none shared.
    std::vector<bool> profile_shared;
    PreferenceStatements preferences;
    SimulationSettings settings;

    int n_criteria() const { return static_cast<int>(criteria.size()); }
    int m_alternatives() const { return static_cast<int>(alternatives.size()); }
    int k_categories() const { return static_cast<int>(categories.size()); }
};

struct Violation {
    std::string field;
    std::string rule;
    std::string message;
};

/// Empty iff every structural and ordering invariant of the problem holds.
std::vector<Violation> validate_problem(const SortingProblem& p);

}  // namespace smaa
