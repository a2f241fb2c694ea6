#include "smaa/model.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <limits>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace smaa {

StochasticValue StochasticValue::point(double v) { return {Kind::point, v, v}; }

StochasticValue StochasticValue::uniform(double lo, double hi) {
    if (lo == hi) return point(lo);
    return {Kind::uniform, lo, hi};
}

StochasticValue StochasticValue::normal(double mean, double sd) {
    if (sd == 0.0) return point(mean);
    return {Kind::normal, mean, sd};
}

StochasticValue StochasticValue::from_sample(std::span<const double> samples) {
    if (samples.empty()) throw std::invalid_argument("sample list is empty");
    const double n = static_cast<double>(samples.size());
    const double mean = std::accumulate(samples.begin(), samples.end(), 0.0) / n;
    if (samples.size() == 1) return point(mean);
    double ss = 0.0;
    for (double x : samples) ss += (x - mean) * (x - mean);
    return normal(mean, std::sqrt(ss / (n - 1.0)));
}

double StochasticValue::mean() const {
    switch (kind_) {
        case Kind::uniform: return 0.5 * (a_ + b_);
        case Kind::point:
        case Kind::normal: return a_;
    }
    return a_;
}

double StochasticValue::support_low() const {
    return kind_ == Kind::normal ? -std::numeric_limits<double>::infinity() : a_;
}

double StochasticValue::support_high() const {
    return kind_ == Kind::normal ? std::numeric_limits<double>::infinity() : b_;
}

CriteriaPair CriteriaPair::make(int j, int s) {
    return j < s ? CriteriaPair{j, s} : CriteriaPair{s, j};
}

CoordinateLayout::CoordinateLayout(int n_criteria, std::vector<CriteriaPair> pairs)
    : n_(n_criteria), pairs_(std::move(pairs)) {
    std::sort(pairs_.begin(), pairs_.end());
}

std::vector<std::string> CoordinateLayout::labels() const {
    std::vector<std::string> out;
    out.reserve(dimension());
    for (int j = 0; j < n_; ++j) out.push_back("I_" + std::to_string(j + 1));
    for (const auto& p : pairs_) {
        // I_12 style when both indices are single digits, I_1_12 otherwise.
        if (n_ < 10)
            out.push_back("I_" + std::to_string(p.first + 1) + std::to_string(p.second + 1));
        else
            out.push_back("I_" + std::to_string(p.first + 1) + "_" + std::to_string(p.second + 1));
    }
    return out;
}

std::optional<std::size_t> CoordinateLayout::index_of(std::string_view label) const {
    const auto all = labels();
    for (std::size_t i = 0; i < all.size(); ++i)
        if (all[i] == label) return i;
    return std::nullopt;
}

double InteractionVector::interaction(int j, int s) const {
    const auto key = CriteriaPair::make(j, s);
    for (const auto& e : interactions)
        if (e.pair == key) return e.value;
    return 0.0;
}

InteractionVector InteractionVector::from_ambient(const CoordinateLayout& layout,
                                                  std::span<const double> x) {
    if (x.size() != layout.dimension())
        throw std::invalid_argument("ambient vector has wrong dimension");
    InteractionVector iv;
    const auto n = static_cast<std::size_t>(layout.n_criteria());
    iv.shapley.assign(x.begin(), x.begin() + static_cast<std::ptrdiff_t>(n));
    iv.interactions.reserve(layout.pairs().size());
    for (std::size_t p = 0; p < layout.pairs().size(); ++p)
        iv.interactions.push_back({layout.pairs()[p], x[n + p]});
    return iv;
}

std::vector<double> InteractionVector::to_ambient(const CoordinateLayout& layout) const {
    std::vector<double> x(shapley);
    x.resize(layout.dimension(), 0.0);
    const auto n = static_cast<std::size_t>(layout.n_criteria());
    for (std::size_t p = 0; p < layout.pairs().size(); ++p)
        x[n + p] = interaction(layout.pairs()[p].first, layout.pairs()[p].second);
    return x;
}

bool InteractionVector::is_feasible(double tol) const {
    const double total = std::accumulate(shapley.begin(), shapley.end(), 0.0);
    if (std::abs(total - 1.0) > tol) return false;
    std::vector<double> half_abs(shapley.size(), 0.0);
    for (const auto& e : interactions) {
        if (e.pair.first < 0 || e.pair.second >= n_criteria()) return false;
        half_abs[e.pair.first] += 0.5 * std::abs(e.value);
        half_abs[e.pair.second] += 0.5 * std::abs(e.value);
    }
    for (std::size_t j = 0; j < shapley.size(); ++j)
        if (shapley[j] - half_abs[j] < -tol) return false;
    return true;
}

std::string to_string(const Scenario& s) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < s.assignment.size(); ++i) {
        if (i) os << ',';
        os << s.assignment[i];
    }
    os << ')';
    return os.str();
}

namespace {

std::string cell_name(const char* table, std::size_t row, std::size_t col) {
    return std::string(table) + "[" + std::to_string(row + 1) + "][" + std::to_string(col + 1) + "]";
}

void check_value(const StochasticValue& v, const std::string& field, std::vector<Violation>& out) {
    if (!std::isfinite(v.first()) || !std::isfinite(v.second())) {
        out.push_back({field, "finite", "distribution parameters must be finite"});
        return;
    }
    if (v.kind() == StochasticValue::Kind::uniform && v.first() > v.second())
        out.push_back({field, "uniform-order", "uniform interval has lo > hi"});
    if (v.kind() == StochasticValue::Kind::normal && v.second() < 0.0)
        out.push_back({field, "normal-sd", "normal standard deviation is negative"});
}

}  // namespace

std::vector<Violation> validate_problem(const SortingProblem& p) {
    std::vector<Violation> out;
    const std::size_t n = p.criteria.size();
    const std::size_t m = p.alternatives.size();
    const std::size_t k = p.categories.size();

    if (n == 0) out.push_back({"criteria", "non-empty", "at least one criterion is required"});
    if (m == 0) out.push_back({"alternatives", "non-empty", "at least one alternative is required"});
    if (k == 0) out.push_back({"categories", "non-empty", "at least one category is required"});
    if (p.profiles.size() != k + 1)
        out.push_back({"profiles", "profile-count",
                       "expected " + std::to_string(k + 1) + " limiting profiles for " +
                           std::to_string(k) + " categories, got " + std::to_string(p.profiles.size())});
    if (p.evaluations.size() != m)
        out.push_back({"evaluations", "row-count", "one evaluation row per alternative is required"});

    if (!p.profile_shared.empty() && p.profile_shared.size() != p.profiles.size())
        out.push_back({"profiles", "shared-flags", "one shared flag per profile row is required"});

    bool shapes_ok = out.empty();
    for (std::size_t h = 0; h < p.profiles.size(); ++h) {
        if (p.profiles[h].size() != n) {
            out.push_back({"profiles[" + std::to_string(h + 1) + "]", "row-length",
                           "profile row must have one value per criterion"});
            shapes_ok = false;
        }
    }
    for (std::size_t i = 0; i < p.evaluations.size(); ++i) {
        if (p.evaluations[i].size() != n) {
            out.push_back({"alternatives[" + std::to_string(i + 1) + "]", "row-length",
                           "evaluation row must have one value per criterion"});
            shapes_ok = false;
        }
    }

    if (shapes_ok) {
        for (std::size_t h = 0; h < p.profile_shared.size(); ++h)
            if (p.profile_shared[h] && std::adjacent_find(p.profiles[h].begin(), p.profiles[h].end(),
                                                          std::not_equal_to<>()) != p.profiles[h].end())
                out.push_back({"profiles[" + std::to_string(h + 1) + "]", "shared-row",
                               "a shared profile row must use the same distribution on every criterion"});
    }

    const std::size_t before_values = out.size();
    if (shapes_ok) {
        for (std::size_t h = 0; h < p.profiles.size(); ++h)
            for (std::size_t j = 0; j < n; ++j) check_value(p.profiles[h][j], cell_name("profiles", h, j), out);
        for (std::size_t i = 0; i < m; ++i)
            for (std::size_t j = 0; j < n; ++j)
                check_value(p.evaluations[i][j], cell_name("alternatives", i, j), out);
    }

    if (shapes_ok && out.size() == before_values) {
        for (std::size_t j = 0; j < n; ++j) {
            for (std::size_t h = 0; h + 1 < p.profiles.size(); ++h) {
                const auto& better = p.profiles[h][j];
                const auto& worse = p.profiles[h + 1][j];
                if (better.support_low() < worse.support_high()) {
                    out.push_back({cell_name("profiles", h + 1, j), "profile-ordering",
                                   "profile " + std::to_string(h + 2) + " on criterion " +
                                       std::to_string(j + 1) + " is not at or below profile " +
                                       std::to_string(h + 1)});
                }
            }
        }
        const bool ordering_ok = std::none_of(out.begin() + static_cast<std::ptrdiff_t>(before_values),
                                              out.end(), [](const Violation& v) { return v.rule == "profile-ordering"; });
        if (ordering_ok) {
            for (std::size_t j = 0; j < n; ++j) {
                const auto& best = p.profiles.front()[j];
                const auto& worst = p.profiles.back()[j];
                const double outer_lo = worst.support_low(), outer_hi = best.support_high();
                const double inner_lo = worst.support_high(), inner_hi = best.support_low();
                for (std::size_t i = 0; i < m; ++i) {
                    const auto& v = p.evaluations[i][j];
                    bool ok = true;
                    switch (v.kind()) {
                        case StochasticValue::Kind::point:
                        case StochasticValue::Kind::normal:
                            ok = v.mean() >= inner_lo && v.mean() <= inner_hi;
                            break;
                        case StochasticValue::Kind::uniform:
                            ok = v.first() >= outer_lo && v.second() <= outer_hi &&
                                 std::min(v.second(), inner_hi) > std::max(v.first(), inner_lo);
                            break;
                    }
                    if (!ok)
                        out.push_back({cell_name("alternatives", i, j), "evaluation-bounds",
                                       "evaluation of alternative " + std::to_string(i + 1) +
                                           " on criterion " + std::to_string(j + 1) +
                                           " lies outside the best/worst profile bounds"});
                }
            }
        }
    }

    std::set<CriteriaPair> seen;
    for (std::size_t q = 0; q < p.preferences.interactions.size(); ++q) {
        const auto& st = p.preferences.interactions[q];
        const std::string field = "preferences.interactions[" + std::to_string(q + 1) + "]";
        if (st.pair.first < 0 || st.pair.second >= static_cast<int>(n) || st.pair.first >= st.pair.second) {
            out.push_back({field, "pair-index", "interaction pair must name two distinct criteria"});
            continue;
        }
        if (!seen.insert(st.pair).second)
            out.push_back({field, "pair-unique", "interaction pair declared more than once"});
    }
    for (std::size_t q = 0; q < p.preferences.shapley.size(); ++q) {
        const auto& st = p.preferences.shapley[q];
        const std::string field = "preferences.shapley[" + std::to_string(q + 1) + "]";
        if (st.left < 0 || st.right < 0 || st.left >= static_cast<int>(n) || st.right >= static_cast<int>(n) ||
            st.left == st.right)
            out.push_back({field, "criterion-index", "Shapley relation must name two distinct criteria"});
    }

    const auto& s = p.settings;
    if (s.iterations < 1) out.push_back({"settings.iterations", "positive", "iterations must be >= 1"});
    if (s.replications < 1) out.push_back({"settings.replications", "positive", "replications must be >= 1"});
    if (s.thinning && *s.thinning < 1) out.push_back({"settings.thinning", "positive", "thinning must be >= 1"});
    if (s.truncation_max_attempts < 1)
        out.push_back({"settings.truncation_max_attempts", "positive", "truncation attempts must be >= 1"});
    if (!(s.strict_margin > 0.0))
        out.push_back({"settings.strict_margin", "positive", "strict margin must be > 0"});
    return out;
}

}  // namespace smaa
