#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "smaa/engine.hpp"
#include "smaa/measures.hpp"
#include "smaa/model.hpp"

namespace smaa {

/// Problem file could not be read: syntax error, schema error or invariant
/// violations. `violations()` carries one entry per diagnostic.
class ProblemError : public std::runtime_error {
public:
    explicit ProblemError(std::vector<Violation> violations);
    const std::vector<Violation>& violations() const { return violations_; }

private:
    std::vector<Violation> violations_;
};

/// Reads the JSON problem format without checking problem invariants.
/// Throws ProblemError on syntax or schema errors.
SortingProblem parse_problem_unchecked(std::string_view text);

/// parse_problem_unchecked followed by validate_problem; throws ProblemError
/// listing every violation.
SortingProblem parse_problem(std::string_view text);

SortingProblem load_problem_file(const std::string& path, bool validate = true);

/// Parses a single distribution spec: number, {"uniform":[lo,hi]},
/// {"normal":{"mean":m,"sd":s}}, {"sample":[...]}.
StochasticValue parse_distribution(const std::string& json_text);

enum class ReportFormat { json, csv, text };

std::optional<ReportFormat> parse_report_format(std::string_view name);

/// Canonical JSON (sorted keys, 6 significant digits, no timing) or CSV/text.
std::string write_report(const SortingProblem& problem, const SimulationResult& result, ReportFormat format);
std::string write_replication_report(const SortingProblem& problem, const ReplicationResult& result,
                                     ReportFormat format);
std::string write_histogram(const Histogram& histogram, const Scenario& scenario, const std::string& coordinate,
                            std::span<const double> values, ReportFormat format);

/// Counts recovered from a canonical JSON report.
struct ParsedReport {
    std::string type;
    std::uint64_t iterations = 0;
    std::vector<std::pair<Scenario, std::uint64_t>> scenario_counts;
    std::vector<std::vector<std::uint64_t>> category_counts;
};

ParsedReport parse_report(std::string_view json_text);

/// Command-line settings; anything set here wins over the problem file.
struct SettingsOverrides {
    std::optional<std::size_t> iterations;
    std::optional<std::uint64_t> seed;
    std::optional<std::size_t> burn_in;
    std::optional<std::size_t> thinning;
    std::optional<std::size_t> replications;
    std::optional<ChainMode> chain;
    std::optional<std::size_t> workers;
    std::optional<bool> retain_samples;
};

void apply_overrides(SimulationSettings& settings, const SettingsOverrides& overrides);

/// Formats with %.6g and reads back, so equal inputs print identically.
double round_significant(double value);

}  // namespace smaa
