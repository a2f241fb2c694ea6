#pragma once

#include <cstddef>
#include <stdexcept>
#include <string>

#include "smaa/model.hpp"
#include "smaa/rng.hpp"

namespace smaa {

class TruncationError : public std::runtime_error {
public:
    TruncationError(int alternative, int criterion, std::size_t attempts);
    int alternative() const { return alternative_; }
    int criterion() const { return criterion_; }

private:
    int alternative_;
    int criterion_;
};

/// One unconstrained draw.
double draw(const StochasticValue& value, Rng& rng);

/// Draws every cell of the (k+1) x n profile table, row-major, best profile first.
/// Shared rows take a single draw.
RowMatrix sample_profiles(const SortingProblem& p, Rng& rng);

/// Draws the m x n decision matrix row-major. Each cell is redrawn until it lies
/// within [worst, best] realized profile on its criterion; a cell that needs more
/// than settings.truncation_max_attempts draws raises TruncationError.
RowMatrix sample_evaluations(const SortingProblem& p, const RowMatrix& realized_profiles, Rng& rng);

}  // namespace smaa
