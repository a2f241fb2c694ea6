#include "smaa/capacity_space.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>

#include "smaa/lp.hpp"

namespace smaa {

namespace {

std::string criterion_label(int j) { return std::to_string(j + 1); }

// reach[a][b]: I_a >= I_b is implied by the stated relations.
std::vector<std::vector<bool>> implied_order(int n, const std::vector<ShapleyStatement>& stmts) {
    std::vector<std::vector<bool>> reach(static_cast<std::size_t>(n), std::vector<bool>(static_cast<std::size_t>(n), false));
    for (int j = 0; j < n; ++j) reach[j][j] = true;
    for (const auto& st : stmts) {
        reach[st.left][st.right] = true;
        if (st.relation == ShapleyRelation::equally) reach[st.right][st.left] = true;
    }
    for (int via = 0; via < n; ++via)
        for (int a = 0; a < n; ++a)
            if (reach[a][via])
                for (int b = 0; b < n; ++b)
                    if (reach[via][b]) reach[a][b] = true;
    return reach;
}

}  // namespace

double CapacityPolytope::max_violation(const Eigen::VectorXd& x) const {
    double worst = -std::numeric_limits<double>::infinity();
    if (a_eq_.rows() > 0) worst = std::max(worst, (a_eq_ * x - b_eq_).cwiseAbs().maxCoeff());
    if (a_.rows() > 0) worst = std::max(worst, (a_ * x - b_).maxCoeff());
    return worst;
}

CapacityPolytope build_polytope(int n, const PreferenceStatements& prefs, double strict_margin) {
    if (n < 1) throw std::invalid_argument("at least one criterion is required");
    for (const auto& st : prefs.shapley)
        if (st.left < 0 || st.right < 0 || st.left >= n || st.right >= n || st.left == st.right)
            throw std::invalid_argument("Shapley relation names an invalid criterion");

    std::map<CriteriaPair, InteractionSign> signs;
    for (const auto& st : prefs.interactions) {
        if (st.pair.first < 0 || st.pair.second >= n || st.pair.first >= st.pair.second)
            throw std::invalid_argument("interaction pair names an invalid criterion");
        auto [it, inserted] = signs.emplace(st.pair, st.sign);
        if (!inserted && it->second != st.sign)
            throw std::invalid_argument("pair (" + criterion_label(st.pair.first) + "," +
                                        criterion_label(st.pair.second) +
                                        ") declared both synergy and redundancy");
    }

    const auto reach = implied_order(n, prefs.shapley);
    for (const auto& st : prefs.shapley) {
        if (st.relation == ShapleyRelation::strictly_more && reach[st.right][st.left])
            throw std::invalid_argument("contradictory Shapley relations: " + criterion_label(st.left) +
                                        " > " + criterion_label(st.right) + " but also " +
                                        criterion_label(st.right) + " >= " + criterion_label(st.left));
    }

    std::vector<CriteriaPair> pairs;
    for (const auto& [pair, sign] : signs) pairs.push_back(pair);

    CapacityPolytope P;
    P.layout_ = CoordinateLayout(n, pairs);
    P.margin_ = strict_margin;
    const auto dim = static_cast<Eigen::Index>(P.layout_.dimension());

    // Equalities: boundary plus one row per member of each equal-importance class.
    std::vector<Eigen::VectorXd> eq_rows;
    std::vector<double> eq_rhs;
    eq_rows.push_back(Eigen::VectorXd::Zero(dim));
    eq_rows.back().head(n).setOnes();
    eq_rhs.push_back(1.0);
    for (int j = 0; j < n; ++j) {
        for (int s = j + 1; s < n; ++s) {
            const bool equal = reach[j][s] && reach[s][j];
            bool first_of_class = true;
            for (int r = 0; r < j; ++r)
                if (reach[r][j] && reach[j][r]) first_of_class = false;
            if (equal && first_of_class) {
                Eigen::VectorXd row = Eigen::VectorXd::Zero(dim);
                row(j) = 1.0;
                row(s) = -1.0;
                eq_rows.push_back(row);
                eq_rhs.push_back(0.0);
            }
        }
    }

    std::vector<Eigen::VectorXd> rows;
    std::vector<double> rhs;
    auto add = [&](Eigen::VectorXd row, double b, std::string label) {
        rows.push_back(std::move(row));
        rhs.push_back(b);
        P.labels_.push_back(std::move(label));
    };

    const auto coord_labels = P.layout_.labels();
    for (std::size_t p = 0; p < pairs.size(); ++p) {
        const auto col = static_cast<Eigen::Index>(n) + static_cast<Eigen::Index>(p);
        Eigen::VectorXd row = Eigen::VectorXd::Zero(dim);
        if (signs.at(pairs[p]) == InteractionSign::redundancy) {
            row(col) = 1.0;
            add(row, -strict_margin, "redundancy(" + coord_labels[static_cast<std::size_t>(col)] + ")");
        } else {
            row(col) = -1.0;
            add(row, -strict_margin, "synergy(" + coord_labels[static_cast<std::size_t>(col)] + ")");
        }
    }

    // Monotonicity: -I_j + 1/2 sum_s sigma_js I_js <= 0.
    for (int j = 0; j < n; ++j) {
        Eigen::VectorXd row = Eigen::VectorXd::Zero(dim);
        row(j) = -1.0;
        for (std::size_t p = 0; p < pairs.size(); ++p) {
            if (pairs[p].first != j && pairs[p].second != j) continue;
            const double sigma = signs.at(pairs[p]) == InteractionSign::synergy ? 1.0 : -1.0;
            row(static_cast<Eigen::Index>(n) + static_cast<Eigen::Index>(p)) = 0.5 * sigma;
        }
        add(row, 0.0, "monotonicity(" + criterion_label(j) + ")");
    }

    for (const auto& st : prefs.shapley) {
        if (st.relation == ShapleyRelation::equally) continue;
        const bool strict = st.relation == ShapleyRelation::strictly_more;
        if (!strict && reach[st.right][st.left]) continue;  // folded into an equality
        Eigen::VectorXd row = Eigen::VectorXd::Zero(dim);
        row(st.right) = 1.0;
        row(st.left) = -1.0;
        add(row, strict ? -strict_margin : 0.0,
            "shapley(" + criterion_label(st.left) + (strict ? ">" : ">=") + criterion_label(st.right) + ")");
    }

    P.a_eq_.resize(static_cast<Eigen::Index>(eq_rows.size()), dim);
    P.b_eq_.resize(static_cast<Eigen::Index>(eq_rows.size()));
    for (std::size_t i = 0; i < eq_rows.size(); ++i) {
        P.a_eq_.row(static_cast<Eigen::Index>(i)) = eq_rows[i].transpose();
        P.b_eq_(static_cast<Eigen::Index>(i)) = eq_rhs[i];
    }
    P.a_.resize(static_cast<Eigen::Index>(rows.size()), dim);
    P.b_.resize(static_cast<Eigen::Index>(rows.size()));
    for (std::size_t i = 0; i < rows.size(); ++i) {
        P.a_.row(static_cast<Eigen::Index>(i)) = rows[i].transpose();
        P.b_(static_cast<Eigen::Index>(i)) = rhs[i];
    }

    Eigen::JacobiSVD<Eigen::MatrixXd> svd(P.a_eq_, Eigen::ComputeFullU | Eigen::ComputeFullV);
    svd.setThreshold(1e-12);
    const Eigen::Index rank = svd.rank();
    P.origin_ = svd.solve(P.b_eq_);
    P.basis_ = svd.matrixV().rightCols(dim - rank);
    P.a_red_ = P.a_ * P.basis_;
    P.b_red_ = P.b_ - P.a_ * P.origin_;
    return P;
}

InteriorPoint interior_point(const CapacityPolytope& P) {
    const Eigen::Index d = P.reduced_dimension();
    const auto& A = P.reduced_matrix();
    const auto& b = P.reduced_rhs();

    if (d == 0) {
        InteriorPoint ip{Eigen::VectorXd::Zero(0), P.origin(), 0.0};
        std::vector<std::string> violated;
        const Eigen::VectorXd slack = P.ineq_rhs() - P.ineq_matrix() * ip.ambient;
        for (Eigen::Index i = 0; i < slack.size(); ++i)
            if (slack(i) < -1e-12) violated.push_back(P.ineq_labels()[static_cast<std::size_t>(i)]);
        if (!violated.empty())
            throw NoCompatibleModel("no compatible model: equalities pin a capacity that violates the inequalities",
                                    violated);
        return ip;
    }

    // max r  s.t.  a_i y + ||a_i|| r <= b_i
    Eigen::MatrixXd lp_a(A.rows() + 1, d + 1);
    Eigen::VectorXd lp_b(A.rows() + 1);
    lp_a.topLeftCorner(A.rows(), d) = A;
    lp_a.col(d).head(A.rows()) = A.rowwise().norm();
    lp_b.head(A.rows()) = b;
    lp_a.row(A.rows()).setZero();
    lp_a(A.rows(), d) = 1.0;  // r <= 1 keeps the LP bounded even for degenerate rows
    lp_b(A.rows()) = 1.0;
    Eigen::VectorXd c = Eigen::VectorXd::Zero(d + 1);
    c(d) = 1.0;
    const auto res = lp::maximize(c, lp_a, lp_b);

    std::vector<std::string> binding;
    if (res.status != lp::Status::optimal) {
        for (Eigen::Index i = 0; i < A.rows(); ++i)
            if (A.row(i).norm() < 1e-14 && b(i) < 0.0) binding.push_back(P.ineq_labels()[static_cast<std::size_t>(i)]);
        throw NoCompatibleModel("no compatible model: constraint system is infeasible", binding);
    }

    InteriorPoint ip;
    ip.y = res.x.head(d);
    ip.radius = res.x(d);
    ip.ambient = P.to_ambient(ip.y);
    if (ip.radius < P.strict_margin() / 2) {
        const Eigen::VectorXd gap = b - A * ip.y - lp_a.col(d).head(A.rows()) * ip.radius;
        for (Eigen::Index i = 0; i < gap.size(); ++i)
            if (gap(i) < 1e-9) binding.push_back(P.ineq_labels()[static_cast<std::size_t>(i)]);
        throw NoCompatibleModel("no compatible model: the constrained capacity space is empty", binding);
    }
    return ip;
}

HarSettings resolve_har_settings(const CapacityPolytope& P, const SimulationSettings& s) {
    const auto d = static_cast<std::size_t>(P.reduced_dimension());
    const std::size_t cube = std::max<std::size_t>(1, d * d * d);
    HarSettings h;
    h.burn_in = s.burn_in.value_or(cube);
    h.thinning = std::max<std::size_t>(1, s.thinning.value_or(cube));
    h.chain = s.chain;
    return h;
}

void har_step(const CapacityPolytope& P, Eigen::VectorXd& y, Rng& rng) {
    const Eigen::Index d = y.size();
    if (d == 0) return;
    const auto& A = P.reduced_matrix();
    const Eigen::VectorXd slack = (P.reduced_rhs() - A * y).cwiseMax(0.0);
    Eigen::VectorXd dir(d);
    for (int attempt = 0; attempt < 100; ++attempt) {
        for (Eigen::Index i = 0; i < d; ++i) dir(i) = rng.standard_normal();
        const double norm = dir.norm();
        if (norm == 0.0) continue;
        dir /= norm;

        const Eigen::VectorXd ad = A * dir;
        double lo = -std::numeric_limits<double>::infinity();
        double hi = std::numeric_limits<double>::infinity();
        for (Eigen::Index i = 0; i < ad.size(); ++i) {
            if (ad(i) > 1e-14)
                hi = std::min(hi, slack(i) / ad(i));
            else if (ad(i) < -1e-14)
                lo = std::max(lo, slack(i) / ad(i));
        }
        if (!std::isfinite(lo) || !std::isfinite(hi) || hi - lo < 1e-12) continue;
        y += rng.uniform(lo, hi) * dir;
        return;
    }
    throw std::runtime_error("hit-and-run: no usable chord after 100 directions");
}

HarState har_init(const CapacityPolytope& P, const InteriorPoint& seed, const HarSettings& settings, Rng& rng) {
    HarState state{seed.y, seed.y};
    if (settings.chain == ChainMode::continuous)
        for (std::size_t i = 0; i < settings.burn_in; ++i) har_step(P, state.current, rng);
    return state;
}

Eigen::VectorXd har_sample(const CapacityPolytope& P, HarState& state, const HarSettings& settings, Rng& rng) {
    if (settings.chain == ChainMode::restart) state.current = state.seed;
    for (std::size_t i = 0; i < settings.thinning; ++i) har_step(P, state.current, rng);
    return P.to_ambient(state.current);
}

}  // namespace smaa
