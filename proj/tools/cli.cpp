#include "cli.hpp"

#include <algorithm>
#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include <CLI11.hpp>

#include "smaa/capacity_space.hpp"
#include "smaa/engine.hpp"
#include "smaa/io.hpp"
#include "smaa/measures.hpp"

namespace smaa::cli {

namespace {

struct CommonFlags {
    std::string file;
    std::optional<std::size_t> iterations, burn_in, thinning, workers;
    std::optional<std::uint64_t> seed;
    std::string chain;
    std::string format = "text";
    std::string out_path;
    bool retain = false;
    bool serial = false;
};

void add_common(CLI::App* cmd, CommonFlags& f) {
    cmd->add_option("file", f.file, "Problem file (JSON)")->required();
    cmd->add_option("--iterations,-n", f.iterations, "Monte Carlo iterations");
    cmd->add_option("--seed,-s", f.seed, "Master RNG seed");
    cmd->add_option("--burn-in", f.burn_in, "Hit-And-Run burn-in steps");
    cmd->add_option("--thinning", f.thinning, "Hit-And-Run steps per capacity draw");
    cmd->add_option("--chain", f.chain, "continuous | restart")->check(CLI::IsMember({"continuous", "restart"}));
    cmd->add_option("--format", f.format, "json | csv | text")->check(CLI::IsMember({"json", "csv", "text"}));
    cmd->add_option("--out", f.out_path, "Also write the canonical JSON report to this path");
    cmd->add_flag("--retain-samples", f.retain, "Keep every sampled capacity (histogram data)");
    cmd->add_flag("--serial", f.serial, "Single-stream seeding (bit-stable reference run)");
    cmd->add_option("--workers", f.workers, "Parallel workers (default: hardware threads)");
}

SortingProblem load_with_overrides(const CommonFlags& f, std::optional<std::size_t> replications) {
    auto problem = load_problem_file(f.file);
    SettingsOverrides o;
    o.iterations = f.iterations;
    o.seed = f.seed;
    o.burn_in = f.burn_in;
    o.thinning = f.thinning;
    o.replications = replications;
    if (!f.chain.empty()) o.chain = f.chain == "restart" ? ChainMode::restart : ChainMode::continuous;
    if (f.retain) o.retain_samples = true;
    if (f.serial)
        o.workers = 0;
    else
        o.workers = f.workers.value_or(std::max(1u, std::thread::hardware_concurrency()));
    apply_overrides(problem.settings, o);
    auto violations = validate_problem(problem);
    if (!violations.empty()) throw ProblemError(std::move(violations));
    return problem;
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write '" + path + "'");
    out << content;
}

Scenario parse_scenario(std::string text) {
    std::replace(text.begin(), text.end(), ',', ' ');
    std::replace(text.begin(), text.end(), ';', ' ');
    std::erase(text, '(');
    std::erase(text, ')');
    std::istringstream in(text);
    Scenario s;
    int v;
    while (in >> v) s.assignment.push_back(v);
    if (!in.eof() || s.assignment.empty()) throw CLI::ValidationError("--scenario", "expected e.g. \"2,1,2,1,2\"");
    return s;
}

int cmd_validate(const std::string& file, std::ostream& out) {
    auto problem = load_problem_file(file, false);
    auto violations = validate_problem(problem);
    if (violations.empty()) {
        try {
            const auto polytope = build_polytope(problem.n_criteria(), problem.preferences,
                                                 problem.settings.strict_margin);
            (void)interior_point(polytope);
        } catch (const NoCompatibleModel& e) {
            std::string binding;
            for (const auto& b : e.binding_constraints()) binding += (binding.empty() ? "" : ", ") + b;
            violations.push_back({"preferences", "compatible-model",
                                  std::string(e.what()) + (binding.empty() ? "" : " (binding: " + binding + ")")});
        } catch (const std::invalid_argument& e) {
            violations.push_back({"preferences", "contradiction", e.what()});
        }
    }
    if (violations.empty()) {
        out << file << ": OK (" << problem.m_alternatives() << " alternatives, " << problem.n_criteria()
            << " criteria, " << problem.k_categories() << " categories)\n";
        return 0;
    }
    for (const auto& v : violations) out << file << ": " << v.field << ": " << v.message << " [" << v.rule << "]\n";
    return 1;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
    CLI::App app{"Stochastic identification of 2-additive Choquet capacities for threshold sorting"};
    app.require_subcommand(1);

    std::string validate_file;
    auto* validate = app.add_subcommand("validate", "Check a problem file and report violations");
    validate->add_option("file", validate_file, "Problem file (JSON)")->required();

    CommonFlags run_flags;
    auto* run_cmd = app.add_subcommand("run", "Run one simulation and report scenario statistics");
    add_common(run_cmd, run_flags);

    CommonFlags rep_flags;
    std::size_t replications = 0;
    auto* rep_cmd = app.add_subcommand("replicate", "Repeat the simulation and report mean +- sd across runs");
    add_common(rep_cmd, rep_flags);
    rep_cmd->add_option("--replications,-r", replications, "Number of independent replications")
        ->required()
        ->check(CLI::PositiveNumber);

    CommonFlags hist_flags;
    std::string scenario_text, coordinate;
    std::size_t bins = 20;
    auto* hist_cmd = app.add_subcommand("histogram", "Binned capacity samples for one scenario");
    add_common(hist_cmd, hist_flags);
    hist_cmd->add_option("--scenario", scenario_text, "Scenario, e.g. \"2,1,2,1,2\"")->required();
    hist_cmd->add_option("--coordinate", coordinate, "Coordinate label, e.g. I_12")->required();
    hist_cmd->add_option("--bins", bins, "Number of bins")->check(CLI::PositiveNumber);

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp&) {
        out << app.help();
        return 0;
    } catch (const CLI::CallForAllHelp&) {
        out << app.help("", CLI::AppFormatMode::All);
        return 0;
    } catch (const CLI::ParseError& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    }

    try {
        if (validate->parsed()) return cmd_validate(validate_file, out);

        if (run_cmd->parsed()) {
            const auto problem = load_with_overrides(run_flags, std::nullopt);
            const auto result = run_simulation(problem);
            out << write_report(problem, result, *parse_report_format(run_flags.format));
            if (!run_flags.out_path.empty())
                write_file(run_flags.out_path, write_report(problem, result, ReportFormat::json));
            return 0;
        }

        if (rep_cmd->parsed()) {
            const auto problem = load_with_overrides(rep_flags, replications);
            const auto result = run_replications(problem, replications);
            out << write_replication_report(problem, result, *parse_report_format(rep_flags.format));
            if (!rep_flags.out_path.empty())
                write_file(rep_flags.out_path, write_replication_report(problem, result, ReportFormat::json));
            return 0;
        }

        if (hist_cmd->parsed()) {
            hist_flags.retain = true;
            const auto problem = load_with_overrides(hist_flags, std::nullopt);
            const Scenario scenario = parse_scenario(scenario_text);
            if (scenario.size() != static_cast<std::size_t>(problem.m_alternatives()))
                throw ProblemError({{"--scenario", "length", "scenario must list one category per alternative"}});
            const auto result = run_simulation(problem);
            const auto index = result.layout.index_of(coordinate);
            if (!index) throw ProblemError({{"--coordinate", "unknown", "no coordinate named " + coordinate}});
            std::vector<double> values;
            for (const auto& iv : export_capacity_samples(result, scenario))
                values.push_back(iv.to_ambient(result.layout)[*index]);
            const auto h = make_histogram(values, bins);
            out << write_histogram(h, scenario, coordinate, values, *parse_report_format(hist_flags.format));
            if (!hist_flags.out_path.empty())
                write_file(hist_flags.out_path, write_histogram(h, scenario, coordinate, values, ReportFormat::json));
            return 0;
        }
    } catch (const ProblemError& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const CLI::ValidationError& e) {
        err << "error: " << e.what() << '\n';
        return 1;
    } catch (const NoCompatibleModel& e) {
        err << "error: " << e.what();
        for (const auto& b : e.binding_constraints()) err << "\n  binding: " << b;
        err << '\n';
        return 2;
    } catch (const std::exception& e) {
        err << "error: " << e.what() << '\n';
        return 2;
    }
    return 1;
}

}  // namespace smaa::cli
