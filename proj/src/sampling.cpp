#include "smaa/sampling.hpp"

namespace smaa {

TruncationError::TruncationError(int alternative, int criterion, std::size_t attempts)
    : std::runtime_error("alternative " + std::to_string(alternative + 1) + ", criterion " +
                         std::to_string(criterion + 1) + ": no draw within the profile bounds after " +
                         std::to_string(attempts) + " attempts"),
      alternative_(alternative),
      criterion_(criterion) {}

double draw(const StochasticValue& value, Rng& rng) {
    switch (value.kind()) {
        case StochasticValue::Kind::point: return value.first();
        case StochasticValue::Kind::uniform: return rng.uniform(value.first(), value.second());
        case StochasticValue::Kind::normal: return rng.normal(value.first(), value.second());
    }
    return value.first();
}

RowMatrix sample_profiles(const SortingProblem& p, Rng& rng) {
    RowMatrix out(static_cast<Eigen::Index>(p.profiles.size()), p.n_criteria());
    for (std::size_t h = 0; h < p.profiles.size(); ++h) {
        const auto row = static_cast<Eigen::Index>(h);
        if (h < p.profile_shared.size() && p.profile_shared[h]) {
            out.row(row).setConstant(draw(p.profiles[h].front(), rng));
            continue;
        }
        for (std::size_t j = 0; j < p.profiles[h].size(); ++j)
            out(row, static_cast<Eigen::Index>(j)) = draw(p.profiles[h][j], rng);
    }
    return out;
}

RowMatrix sample_evaluations(const SortingProblem& p, const RowMatrix& profiles, Rng& rng) {
    const auto m = static_cast<Eigen::Index>(p.evaluations.size());
    const auto n = static_cast<Eigen::Index>(p.n_criteria());
    const Eigen::Index worst = profiles.rows() - 1;
    RowMatrix out(m, n);
    for (Eigen::Index i = 0; i < m; ++i) {
        for (Eigen::Index j = 0; j < n; ++j) {
            const auto& spec = p.evaluations[static_cast<std::size_t>(i)][static_cast<std::size_t>(j)];
            const double lo = profiles(worst, j), hi = profiles(0, j);
            std::size_t attempts = 0;
            double x;
            do {
                if (attempts++ == p.settings.truncation_max_attempts)
                    throw TruncationError(static_cast<int>(i), static_cast<int>(j), attempts - 1);
                x = draw(spec, rng);
            } while (x < lo || x > hi);
            out(i, j) = x;
        }
    }
    return out;
}

}  // namespace smaa
