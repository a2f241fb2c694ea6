#include "smaa/engine.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <exception>
#include <limits>
#include <stdexcept>

#include "smaa/choquet.hpp"
#include "smaa/sampling.hpp"

namespace smaa {

namespace {

inline void neumaier_add(double& sum, double& comp, double x) {
    const double t = sum + x;
    if (std::abs(sum) >= std::abs(x))
        comp += (sum - t) + x;
    else
        comp += (x - t) + sum;
    sum = t;
}

double elapsed_since(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// Deviations are taken from the first value so identical inputs give exactly 0.
double sample_sd(const std::vector<double>& xs) {
    if (xs.size() < 2) return std::numeric_limits<double>::quiet_NaN();
    double mean = 0.0;
    for (double x : xs) mean += x - xs.front();
    mean /= static_cast<double>(xs.size());
    double ss = 0.0;
    for (double x : xs) ss += (x - xs.front() - mean) * (x - xs.front() - mean);
    return std::sqrt(ss / static_cast<double>(xs.size() - 1));
}

}  // namespace

ScenarioStats::ScenarioStats(std::size_t dim) : sum(dim, 0.0), sum_comp(dim, 0.0), sum_sq(dim, 0.0), sum_sq_comp(dim, 0.0) {}

void ScenarioStats::add(std::span<const double> x) {
    ++count;
    for (std::size_t c = 0; c < x.size(); ++c) {
        neumaier_add(sum[c], sum_comp[c], x[c]);
        neumaier_add(sum_sq[c], sum_sq_comp[c], x[c] * x[c]);
    }
}

void ScenarioStats::merge(const ScenarioStats& other) {
    if (sum.empty()) *this = ScenarioStats(other.sum.size());
    if (other.sum.size() != sum.size()) throw std::invalid_argument("ScenarioStats dimension mismatch");
    count += other.count;
    for (std::size_t c = 0; c < sum.size(); ++c) {
        neumaier_add(sum[c], sum_comp[c], other.sum[c]);
        sum_comp[c] += other.sum_comp[c];
        neumaier_add(sum_sq[c], sum_sq_comp[c], other.sum_sq[c]);
        sum_sq_comp[c] += other.sum_sq_comp[c];
    }
}

std::vector<double> ScenarioStats::mean() const {
    std::vector<double> out(sum.size());
    for (std::size_t c = 0; c < sum.size(); ++c) out[c] = total(c) / static_cast<double>(count);
    return out;
}

std::optional<std::vector<double>> ScenarioStats::sd() const {
    if (count < 2) return std::nullopt;
    const double n = static_cast<double>(count);
    std::vector<double> out(sum.size());
    for (std::size_t c = 0; c < sum.size(); ++c) {
        const double s = total(c);
        const double var = (total_sq(c) - s * s / n) / (n - 1.0);
        out[c] = std::sqrt(std::max(0.0, var));
    }
    return out;
}

ScenarioAccumulator::ScenarioAccumulator(std::size_t alternatives, std::size_t categories, std::size_t dim,
                                         bool retain, std::size_t retention_cap)
    : m_(alternatives), k_(categories), dim_(dim), retain_(retain), cap_(retention_cap),
      category_counts_(alternatives * categories, 0) {}

void ScenarioAccumulator::add(const Scenario& scenario, std::span<const double> capacity) {
    ++iterations_;
    auto it = scenarios_.find(scenario);
    if (it == scenarios_.end()) it = scenarios_.emplace(scenario, ScenarioStats(dim_)).first;
    it->second.add(capacity);
    for (std::size_t i = 0; i < m_; ++i)
        ++category_counts_[i * k_ + static_cast<std::size_t>(scenario.assignment[i] - 1)];
    if (retain_) {
        if (retained_total_ < cap_) {
            retained_[scenario].emplace_back(capacity.begin(), capacity.end());
            ++retained_total_;
        } else {
            truncated_ = true;
        }
    }
}

void ScenarioAccumulator::merge(const ScenarioAccumulator& other) {
    if (other.m_ != m_ || other.k_ != k_ || other.dim_ != dim_)
        throw std::invalid_argument("cannot merge accumulators of different shapes");
    iterations_ += other.iterations_;
    for (const auto& [scenario, stats] : other.scenarios_) {
        auto it = scenarios_.find(scenario);
        if (it == scenarios_.end())
            scenarios_.emplace(scenario, stats);
        else
            it->second.merge(stats);
    }
    for (std::size_t i = 0; i < category_counts_.size(); ++i) category_counts_[i] += other.category_counts_[i];
    if (retain_) {
        truncated_ = truncated_ || other.truncated_;
        for (const auto& [scenario, samples] : other.retained_) {
            auto& dst = retained_[scenario];
            for (const auto& s : samples) {
                if (retained_total_ >= cap_) {
                    truncated_ = true;
                    break;
                }
                dst.push_back(s);
                ++retained_total_;
            }
        }
    }
}

Simulator::Simulator(const SortingProblem& problem) : problem_(problem) {
    const auto violations = validate_problem(problem_);
    if (!violations.empty())
        throw std::invalid_argument("invalid problem: " + violations.front().field + ": " + violations.front().message);
    polytope_ = build_polytope(problem_.n_criteria(), problem_.preferences, problem_.settings.strict_margin);
    seed_ = interior_point(polytope_);
    har_ = resolve_har_settings(polytope_, problem_.settings);
}

ScenarioAccumulator Simulator::make_accumulator() const {
    return ScenarioAccumulator(static_cast<std::size_t>(problem_.m_alternatives()),
                               static_cast<std::size_t>(problem_.k_categories()), polytope_.ambient_dimension(),
                               problem_.settings.retain_samples, problem_.settings.retention_cap);
}

HarState Simulator::start_chain(Rng& rng) const { return har_init(polytope_, seed_, har_, rng); }

void Simulator::run(std::size_t iterations, Rng& rng, HarState& chain, ScenarioAccumulator& acc) const {
    const auto& layout = polytope_.layout();
    for (std::size_t it = 0; it < iterations; ++it) {
        const RowMatrix profiles = sample_profiles(problem_, rng);
        const RowMatrix evaluations = sample_evaluations(problem_, profiles, rng);
        const Eigen::VectorXd x = har_sample(polytope_, chain, har_, rng);
        const std::span<const double> xs(x.data(), static_cast<std::size_t>(x.size()));
        const auto capacity = InteractionVector::from_ambient(layout, xs);
        acc.add(classify_all(evaluations, profiles, capacity), xs);
    }
}

SimulationResult Simulator::finish(const ScenarioAccumulator& acc, double elapsed_seconds) const {
    SimulationResult r;
    r.iterations = acc.iterations();
    r.alternatives = problem_.m_alternatives();
    r.categories = problem_.k_categories();
    r.layout = polytope_.layout();
    r.scenarios = acc.scenarios();
    const auto m = static_cast<std::size_t>(r.alternatives), k = static_cast<std::size_t>(r.categories);
    r.category_counts.assign(m, std::vector<std::uint64_t>(k, 0));
    for (std::size_t i = 0; i < m; ++i)
        for (std::size_t h = 0; h < k; ++h) r.category_counts[i][h] = acc.category_counts()[i * k + h];
    r.settings = problem_.settings;
    r.har = har_;
    r.elapsed_seconds = elapsed_seconds;
    r.retention_enabled = acc.retention_enabled();
    r.retention_truncated = acc.retention_truncated();
    r.retained = acc.retained();
    return r;
}

SimulationResult run_simulation_serial(const SortingProblem& problem) {
    const auto start = std::chrono::steady_clock::now();
    const Simulator sim(problem);
    Rng rng(problem.settings.seed);
    auto chain = sim.start_chain(rng);
    auto acc = sim.make_accumulator();
    sim.run(problem.settings.iterations, rng, chain, acc);
    return sim.finish(acc, elapsed_since(start));
}

SimulationResult run_simulation_parallel(const SortingProblem& problem, std::size_t workers) {
    if (workers == 0) throw std::invalid_argument("worker count must be positive");
    const auto start = std::chrono::steady_clock::now();
    const Simulator sim(problem);
    const std::size_t n = problem.settings.iterations;
    workers = std::min(workers, n);

    std::vector<ScenarioAccumulator> partial(workers, sim.make_accumulator());
    std::vector<std::exception_ptr> errors(workers);
    const auto chunks = static_cast<long>(workers);

#pragma omp parallel for schedule(static, 1) num_threads(static_cast<int>(workers))
    for (long c = 0; c < chunks; ++c) {
        const auto w = static_cast<std::size_t>(c);
        try {
            const std::size_t count = n / workers + (w < n % workers ? 1 : 0);
            Rng rng(derive_seed(problem.settings.seed, w));
            auto chain = sim.start_chain(rng);
            sim.run(count, rng, chain, partial[w]);
        } catch (...) {
            errors[w] = std::current_exception();
        }
    }
    for (const auto& e : errors)
        if (e) std::rethrow_exception(e);

    auto acc = sim.make_accumulator();
    for (const auto& p : partial) acc.merge(p);
    return sim.finish(acc, elapsed_since(start));
}

SimulationResult run_simulation(const SortingProblem& problem) {
    if (problem.settings.workers == 0) return run_simulation_serial(problem);
    return run_simulation_parallel(problem, problem.settings.workers);
}

ReplicationResult run_replications(const SortingProblem& problem, std::size_t replications,
                                   const ReplicationOptions& options) {
    if (replications < 1) throw std::invalid_argument("replications must be >= 1");
    const auto start = std::chrono::steady_clock::now();

    std::vector<SimulationResult> runs;
    runs.reserve(replications);
    for (std::size_t r = 0; r < replications; ++r) {
        SortingProblem rep = problem;
        rep.settings.retain_samples = false;
        if (!options.identical_seeds) rep.settings.seed = derive_seed(problem.settings.seed, r);
        runs.push_back(run_simulation(rep));
    }

    ReplicationResult out;
    out.replications = replications;
    out.iterations = runs.front().iterations;
    out.alternatives = runs.front().alternatives;
    out.categories = runs.front().categories;
    out.layout = runs.front().layout;
    out.settings = problem.settings;
    out.har = runs.front().har;

    std::map<Scenario, bool> all;
    for (const auto& run : runs)
        for (const auto& [s, stats] : run.scenarios) all[s] = true;

    const double R = static_cast<double>(replications);
    const std::size_t dim = out.layout.dimension();
    for (const auto& [scenario, unused] : all) {
        ReplicatedScenario rs;
        rs.scenario = scenario;
        std::vector<double> sai;
        std::vector<std::vector<double>> caps(dim);
        for (const auto& run : runs) {
            auto it = run.scenarios.find(scenario);
            if (it == run.scenarios.end()) {
                sai.push_back(0.0);
                continue;
            }
            rs.total_count += it->second.count;
            ++rs.present_in;
            sai.push_back(static_cast<double>(it->second.count) / static_cast<double>(run.iterations));
            const auto mean = it->second.mean();
            for (std::size_t c = 0; c < dim; ++c) caps[c].push_back(mean[c]);
        }
        for (double v : sai) rs.sai_mean += v;
        rs.sai_mean /= R;
        rs.sai_sd = sample_sd(sai);
        const double sai_half = std::isnan(rs.sai_sd) ? 0.0 : 1.96 * rs.sai_sd / std::sqrt(R);
        rs.sai_ci_low = rs.sai_mean - sai_half;
        rs.sai_ci_high = rs.sai_mean + sai_half;
        for (std::size_t c = 0; c < dim; ++c) {
            double mean = 0.0;
            for (double v : caps[c]) mean += v;
            mean /= static_cast<double>(caps[c].size());
            const double sd = sample_sd(caps[c]);
            const double half = std::isnan(sd) ? 0.0 : 1.96 * sd / std::sqrt(static_cast<double>(caps[c].size()));
            rs.capacity_mean.push_back(mean);
            rs.capacity_sd.push_back(sd);
            rs.capacity_ci_low.push_back(mean - half);
            rs.capacity_ci_high.push_back(mean + half);
        }
        out.scenarios.push_back(std::move(rs));
    }
    std::stable_sort(out.scenarios.begin(), out.scenarios.end(),
                     [](const ReplicatedScenario& a, const ReplicatedScenario& b) {
                         if (a.total_count != b.total_count) return a.total_count > b.total_count;
                         return a.scenario < b.scenario;
                     });

    const auto m = static_cast<std::size_t>(out.alternatives), k = static_cast<std::size_t>(out.categories);
    out.category_mean.assign(m, std::vector<double>(k, 0.0));
    out.category_sd.assign(m, std::vector<double>(k, 0.0));
    for (std::size_t i = 0; i < m; ++i) {
        for (std::size_t h = 0; h < k; ++h) {
            std::vector<double> v;
            for (const auto& run : runs)
                v.push_back(static_cast<double>(run.category_counts[i][h]) / static_cast<double>(run.iterations));
            double mean = 0.0;
            for (double x : v) mean += x;
            out.category_mean[i][h] = mean / R;
            out.category_sd[i][h] = sample_sd(v);
        }
    }
    out.elapsed_seconds = elapsed_since(start);
    return out;
}

std::vector<InteractionVector> export_capacity_samples(const SimulationResult& result, const Scenario& scenario) {
    if (!result.retention_enabled) throw std::logic_error("sample retention was not enabled for this run");
    const auto stats = result.scenarios.find(scenario);
    if (stats == result.scenarios.end())
        throw std::out_of_range("scenario " + to_string(scenario) + " did not occur");
    const auto kept = result.retained.find(scenario);
    const std::size_t have = kept == result.retained.end() ? 0 : kept->second.size();
    if (have != stats->second.count)
        throw std::logic_error("retention cap reached: only " + std::to_string(have) + " of " +
                               std::to_string(stats->second.count) + " samples kept for " + to_string(scenario));
    std::vector<InteractionVector> out;
    out.reserve(have);
    for (const auto& x : kept->second) out.push_back(InteractionVector::from_ambient(result.layout, x));
    return out;
}

}  // namespace smaa
