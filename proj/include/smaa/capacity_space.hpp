#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

#include <Eigen/Dense>

#include "smaa/model.hpp"
#include "smaa/rng.hpp"

namespace smaa {

/// Raised when the preference statements admit no compatible capacity.
class NoCompatibleModel : public std::runtime_error {
public:
    NoCompatibleModel(const std::string& what, std::vector<std::string> binding)
        : std::runtime_error(what), binding_(std::move(binding)) {}
    const std::vector<std::string>& binding_constraints() const { return binding_; }

private:
    std::vector<std::string> binding_;
};

/// Convex set of compatible 2-additive capacities in ambient coordinates
/// x = (I_1..I_n, declared I_js...), with equalities eliminated by an affine
/// parametrization x = origin + basis * y over an orthonormal null-space basis.
class CapacityPolytope {
public:
    const CoordinateLayout& layout() const { return layout_; }
    std::size_t ambient_dimension() const { return layout_.dimension(); }
    /// Dimension of the free parameter y; 0 when equalities pin a single point.
    Eigen::Index reduced_dimension() const { return basis_.cols(); }
    double strict_margin() const { return margin_; }

    const Eigen::MatrixXd& eq_matrix() const { return a_eq_; }
    const Eigen::VectorXd& eq_rhs() const { return b_eq_; }
    const Eigen::MatrixXd& ineq_matrix() const { return a_; }
    const Eigen::VectorXd& ineq_rhs() const { return b_; }
    const std::vector<std::string>& ineq_labels() const { return labels_; }

    const Eigen::MatrixXd& basis() const { return basis_; }
    const Eigen::VectorXd& origin() const { return origin_; }
    /// Inequalities restricted to y: reduced_matrix() * y <= reduced_rhs().
    const Eigen::MatrixXd& reduced_matrix() const { return a_red_; }
    const Eigen::VectorXd& reduced_rhs() const { return b_red_; }

    Eigen::VectorXd to_ambient(const Eigen::VectorXd& y) const { return origin_ + basis_ * y; }

    /// Largest violation of any equality or inequality at x (<= 0 when feasible).
    double max_violation(const Eigen::VectorXd& x) const;

private:
    friend CapacityPolytope build_polytope(int, const PreferenceStatements&, double);

    CoordinateLayout layout_;
    double margin_ = 1e-6;
    Eigen::MatrixXd a_eq_;
    Eigen::VectorXd b_eq_;
    Eigen::MatrixXd a_;
    Eigen::VectorXd b_;
    std::vector<std::string> labels_;
    Eigen::MatrixXd basis_;
    Eigen::VectorXd origin_;
    Eigen::MatrixXd a_red_;
    Eigen::VectorXd b_red_;
};

/// Encodes boundary, monotonicity, interaction-sign and Shapley-relation
/// constraints. Undeclared pairs are fixed at zero and get no coordinate.
/// Throws std::invalid_argument on contradictory Shapley relations.
CapacityPolytope build_polytope(int n_criteria, const PreferenceStatements& prefs,
                                double strict_margin = 1e-6);

struct InteriorPoint {
    Eigen::VectorXd y;        // reduced coordinates
    Eigen::VectorXd ambient;  // x = origin + basis * y
    double radius = 0.0;      // Chebyshev radius in reduced coordinates
};

/// Chebyshev center of the reduced polytope. Throws NoCompatibleModel if the
/// polytope is empty or too thin to hold a ball of radius strict_margin / 2.
InteriorPoint interior_point(const CapacityPolytope& polytope);

struct HarSettings {
    std::size_t burn_in = 0;
    std::size_t thinning = 1;
    ChainMode chain = ChainMode::continuous;
};

/// d^3 defaults for burn-in and thinning unless overridden in `settings`.
HarSettings resolve_har_settings(const CapacityPolytope& polytope, const SimulationSettings& settings);

struct HarState {
    Eigen::VectorXd seed;     // interior point, reduced coordinates
    Eigen::VectorXd current;  // chain position, reduced coordinates
};

/// One Hit-And-Run move: uniform direction on the unit sphere of the reduced
/// space, chord from the per-constraint ratios, uniform point on the chord.
/// Resamples degenerate directions up to 100 times before throwing.
void har_step(const CapacityPolytope& polytope, Eigen::VectorXd& y, Rng& rng);

/// Seeds the chain at `seed` and applies burn-in (continuous mode only).
HarState har_init(const CapacityPolytope& polytope, const InteriorPoint& seed,
                  const HarSettings& settings, Rng& rng);

/// Advances the chain by `thinning` steps and returns the ambient point.
Eigen::VectorXd har_sample(const CapacityPolytope& polytope, HarState& state,
                           const HarSettings& settings, Rng& rng);

}  // namespace smaa
