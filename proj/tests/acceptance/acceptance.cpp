// Acceptance suite: one PASS/FAIL line per criterion, detail lines indented below.
// Exit status is non-zero if any criterion fails.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "../../tools/cli.hpp"
#include "../helpers.hpp"
#include "smaa/capacity_space.hpp"
#include "smaa/choquet.hpp"
#include "smaa/engine.hpp"
#include "smaa/io.hpp"
#include "smaa/measures.hpp"

using namespace smaa;
namespace fs = std::filesystem;

namespace {

using Clock = std::chrono::steady_clock;

double seconds_since(Clock::time_point t0) { return std::chrono::duration<double>(Clock::now() - t0).count(); }

struct Report {
    std::vector<std::string> details;
    bool ok = true;

    void check(bool cond, const std::string& what) {
        ok = ok && cond;
        details.push_back(std::string(cond ? "ok   " : "FAIL ") + what);
    }
    void info(const std::string& what) { details.push_back("info " + what); }
};

std::string fmt(const char* f, double a) {
    char buf[128];
    std::snprintf(buf, sizeof buf, f, a);
    return buf;
}

std::string fmt(const char* f, double a, double b) {
    char buf[160];
    std::snprintf(buf, sizeof buf, f, a, b);
    return buf;
}

bool within(double x, double target, double tol) { return std::abs(x - target) <= tol; }

const ScenarioStats* find(const SimulationResult& r, std::vector<int> a) {
    auto it = r.scenarios.find(Scenario{std::move(a)});
    return it == r.scenarios.end() ? nullptr : &it->second;
}

const ReplicatedScenario* find(const ReplicationResult& r, const std::vector<int>& a) {
    for (const auto& s : r.scenarios)
        if (s.scenario.assignment == a) return &s;
    return nullptr;
}

// Example reproduction.
Report criterion_example() {
    Report rep;
    auto p = load_problem_file(test::data_path("school.json"));
    p.settings.iterations = 10'000;
    p.settings.seed = 42;
    const auto t0 = Clock::now();
    const auto r = run_simulation_serial(p);
    const double elapsed = seconds_since(t0);

    const auto sai = scenario_acceptability(r);
    const Scenario v1{{2, 1, 2, 1, 2}}, v2{{2, 1, 2, 2, 2}};
    const bool top_two = sai.size() >= 2 && ((sai[0].scenario == v1 && sai[1].scenario == v2) ||
                                             (sai[0].scenario == v2 && sai[1].scenario == v1));
    rep.check(top_two, "two highest-SAI scenarios are (2,1,2,1,2) and (2,1,2,2,2); observed " +
                           to_string(sai.at(0).scenario) + ", " + to_string(sai.at(1).scenario));

    const auto* s1 = find(r, v1.assignment);
    const auto* s2 = find(r, v2.assignment);
    const double n = static_cast<double>(r.iterations);
    const double sai1 = s1 ? static_cast<double>(s1->count) / n : 0.0;
    const double sai2 = s2 ? static_cast<double>(s2->count) / n : 0.0;
    rep.check(within(sai1, 0.18, 0.04), fmt("SAI(2,1,2,1,2) = %.4f, target 0.18 +- 0.04", sai1));
    rep.check(within(sai2, 0.16, 0.04), fmt("SAI(2,1,2,2,2) = %.4f, target 0.16 +- 0.04", sai2));
    const double c1 = s1 ? s1->mean()[2] : NAN;
    const double c2 = s2 ? s2->mean()[2] : NAN;
    rep.check(within(c1, -0.46, 0.08), fmt("central I_12 of (2,1,2,1,2) = %.4f, target -0.46 +- 0.08", c1));
    rep.check(within(c2, -0.39, 0.08), fmt("central I_12 of (2,1,2,2,2) = %.4f, target -0.39 +- 0.08", c2));

    double drift = 0.0;
    for (const auto& [s, st] : r.scenarios) {
        const auto m = st.mean();
        drift = std::max({drift, std::abs(m[0] - 0.5), std::abs(m[1] - 0.5)});
    }
    rep.check(drift <= 1e-9, fmt("max |I_j - 0.5| over all central capacities = %.3g (<= 1e-9)", drift));

    const auto cat = category_acceptability(r);
    rep.check(within(cat[1][0], 1, 0.01) && within(cat[1][1], 0, 0.01) && within(cat[1][2], 0, 0.01),
              fmt("a_2 = (%.4f, ...), target (1, 0, 0) within 0.01", cat[1][0]));
    rep.check(within(cat[2][1], 0.94, 0.04), fmt("a_3 C_2 = %.4f, target 0.94 +- 0.04", cat[2][1]));
    rep.check(within(cat[3][0], 0.54, 0.05), fmt("a_4 C_1 = %.4f, target 0.54 +- 0.05", cat[3][0]));
    rep.info(fmt("a_1 = (%.4f, %.4f, ...), reference (0.03, 0.55, 0.42)", cat[0][0], cat[0][1]));
    rep.info(fmt("a_5 C_1 = %.4f, reference 0.34", cat[4][0]));

    const auto distinct = static_cast<double>(r.scenarios.size());
    rep.check(distinct >= 20 && distinct <= 60, fmt("distinct scenarios = %.0f, target 20..60", distinct));
    rep.check(elapsed < 60, fmt("runtime %.3f s single-threaded (< 60 s)", elapsed));
    return rep;
}

// Experiment reproduction.
Report criterion_experiment() {
    Report rep;
    auto p = load_problem_file(test::data_path("experiment.json"));
    p.settings.iterations = 10'000;
    const auto t0 = Clock::now();
    const auto r = run_replications(p, 20);
    const double elapsed = seconds_since(t0);
    rep.info(std::string("chain ") + (r.har.chain == ChainMode::restart ? "restart" : "continuous") +
             ", thinning " + std::to_string(r.har.thinning) + ", burn-in " + std::to_string(r.har.burn_in));

    const std::vector<int> v5{1, 4, 1, 3, 2, 3, 1, 4, 1, 1};
    const std::vector<int> v10{1, 4, 1, 3, 2, 3, 1, 4, 2, 1};
    const std::vector<int> v2{1, 4, 1, 2, 2, 3, 1, 4, 1, 1};
    const auto* a = find(r, v5);
    const auto* b = find(r, v10);
    const auto* c = find(r, v2);
    const double ma = a ? a->sai_mean : 0, mb = b ? b->sai_mean : 0, mc = c ? c->sai_mean : 0;
    rep.check(within(ma, 0.2250, 0.03), fmt("mean SAI (1,4,1,3,2,3,1,4,1,1) = %.4f, target 0.2250 +- 0.03", ma));
    rep.check(within(mb, 0.1893, 0.03), fmt("mean SAI (1,4,1,3,2,3,1,4,2,1) = %.4f, target 0.1893 +- 0.03", mb));
    rep.check(within(mc, 0.1169, 0.03), fmt("mean SAI (1,4,1,2,2,3,1,4,1,1) = %.4f, target 0.1169 +- 0.03", mc));

    const std::vector<double> target{0.31, 0.68, -0.39};
    bool cap_ok = a != nullptr;
    std::string got;
    for (std::size_t k = 0; a && k < 3; ++k) {
        cap_ok = cap_ok && within(a->capacity_mean[k], target[k], 0.06);
        got += fmt(k ? ", %.4f" : "%.4f", a->capacity_mean[k]);
    }
    rep.check(cap_ok, "central capacity of (1,4,1,3,2,3,1,4,1,1) = (" + got + "), target (0.31, 0.68, -0.39) +- 0.06");

    bool top3 = r.scenarios.size() >= 3;
    for (std::size_t t = 0; top3 && t < 3; ++t) {
        const auto& s = r.scenarios[t].scenario.assignment;
        top3 = s == v5 || s == v10 || s == v2;
    }
    rep.check(top3, "top-3 scenarios by mean SAI match the reference top-3 as a set");
    rep.check(elapsed < 600, fmt("runtime %.2f s (< 600 s)", elapsed));

    // The same setup on a persistent chain (uniform capacity sampling).
    auto u = p;
    u.settings.chain = ChainMode::continuous;
    u.settings.burn_in.reset();
    u.settings.thinning.reset();
    const auto ru = run_replications(u, 20);
    const auto* ua = find(ru, v5);
    const auto* ub = find(ru, v10);
    const auto* uc = find(ru, v2);
    char line[200];
    std::snprintf(line, sizeof line, "continuous chain, same polytope: %.4f / %.4f / %.4f for the three scenarios above",
                  ua ? ua->sai_mean : 0.0, ub ? ub->sai_mean : 0.0, uc ? uc->sai_mean : 0.0);
    rep.info(line);
    return rep;
}

// Oracle equivalence.
Report criterion_oracle() {
    Report rep;
    std::mt19937_64 gen(20240601);
    std::uniform_real_distribution<double> u(0.0, 10.0);
    for (int n = 2; n <= 5; ++n) {
        double worst = 0.0;
        for (int t = 0; t < 1000; ++t) {
            const auto iv = test::random_feasible(n, gen);
            std::vector<double> g(static_cast<std::size_t>(n));
            for (auto& x : g) x = u(gen);
            worst = std::max(worst, std::abs(choquet_value(g, iv) - choquet_value_oracle(g, iv)));
        }
        rep.check(worst <= 1e-9, "n = " + std::to_string(n) + ": max |difference| over 1000 instances = " +
                                     fmt("%.3g (<= 1e-9)", worst));
    }
    return rep;
}

// Polytope properties.
Report criterion_polytope() {
    Report rep;
    PreferenceStatements prefs;
    prefs.interactions.push_back({CriteriaPair{0, 1}, InteractionSign::redundancy});
    prefs.shapley.push_back({0, ShapleyRelation::equally, 1});
    const auto P = build_polytope(2, prefs);
    const auto ip = interior_point(P);
    const auto hs = resolve_har_settings(P, SimulationSettings{});
    Rng rng(1);
    auto state = har_init(P, ip, hs, rng);
    std::vector<double> i12;
    double worst = -1.0;
    for (int t = 0; t < 100'000; ++t) {
        const Eigen::VectorXd x = har_sample(P, state, hs, rng);
        worst = std::max(worst, P.max_violation(x));
        i12.push_back(x(2));
    }
    rep.check(worst <= 1e-9, fmt("100000 example-polytope samples, max constraint violation %.3g (<= 1e-9)", worst));

    std::sort(i12.begin(), i12.end());
    const double lo = -1.0, hi = -P.strict_margin();
    const double n = static_cast<double>(i12.size());
    double ks = 0.0;
    for (std::size_t i = 0; i < i12.size(); ++i) {
        const double f = (i12[i] - lo) / (hi - lo);
        ks = std::max({ks, (static_cast<double>(i) + 1) / n - f, f - static_cast<double>(i) / n});
    }
    rep.check(ks < 0.01, fmt("KS statistic of I_12 against U[-1, -eps] = %.5f (< 0.01)", ks));

    const auto S = build_polytope(3, {});
    const auto sp = interior_point(S);
    const auto shs = resolve_har_settings(S, SimulationSettings{});
    auto sstate = har_init(S, sp, shs, rng);
    Eigen::Vector3d sum = Eigen::Vector3d::Zero();
    for (int t = 0; t < 100'000; ++t) sum += har_sample(S, sstate, shs, rng);
    sum /= 100'000.0;
    const double dev = (sum.array() - 1.0 / 3).abs().maxCoeff();
    rep.check(dev <= 0.01, fmt("simplex marginal means (%.4f, ...), max |mean - 1/3| = %.4f (<= 0.01)", sum(0), dev));
    return rep;
}

void check_identities(Report& rep, const std::string& label, const SimulationResult& r) {
    std::uint64_t total = 0;
    for (const auto& [s, st] : r.scenarios) total += st.count;
    bool rows = true, link = true;
    for (std::size_t i = 0; i < r.category_counts.size(); ++i) {
        std::uint64_t row = 0;
        for (std::size_t h = 0; h < r.category_counts[i].size(); ++h) {
            row += r.category_counts[i][h];
            std::uint64_t via = 0;
            for (const auto& [s, st] : r.scenarios)
                if (s.assignment[i] == static_cast<int>(h) + 1) via += st.count;
            link = link && via == r.category_counts[i][h];
        }
        rows = rows && row == r.iterations;
    }
    rep.check(total == r.iterations && rows && link,
              label + ": sum of scenario counts = N, category rows sum to N, C[i][h] = scenario SAI sums");
}

// Exact identities.
Report criterion_identities() {
    Report rep;
    for (std::uint64_t seed : {1u, 42u, 977u}) {
        auto p = load_problem_file(test::data_path("school.json"));
        p.settings.seed = seed;
        check_identities(rep, "example, seed " + std::to_string(seed), run_simulation_serial(p));
        p.settings.workers = 4;
        check_identities(rep, "example, seed " + std::to_string(seed) + ", 4 workers", run_simulation(p));
    }
    auto q = load_problem_file(test::data_path("experiment.json"));
    check_identities(rep, "experiment, seed 7", run_simulation_serial(q));
    return rep;
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

// Determinism.
Report criterion_determinism() {
    Report rep;
    const auto dir = fs::temp_directory_path() / "smaa_acceptance";
    fs::create_directories(dir);
    std::string first, second;
    for (const auto* name : {"first.json", "second.json"}) {
        const auto path = (dir / name).string();
        const std::string school = test::data_path("school.json");
        const char* argv[] = {"smaa-choquet", "run", school.c_str(), "--seed", "42", "--serial", "--out", path.c_str()};
        std::ostringstream out, err;
        const int code = cli::run(8, argv, out, err);
        rep.check(code == 0, std::string("run --seed 42 --serial --out ") + name + " exits 0");
        (first.empty() ? first : second) = slurp(path);
    }
    rep.check(!first.empty() && first == second,
              "canonical JSON reports are byte-identical (" + std::to_string(first.size()) + " bytes)");
    return rep;
}

// Degenerate correctness.
Report criterion_degenerate() {
    Report rep;
    // Three equally important criteria without interactions pin I = (1/3, 1/3, 1/3);
    // CI is then the plain average: (9+6+3)/3 = 6 -> K_2, 9 -> K_1, 2 -> K_3, 5 -> K_2
    // against profile values 10 / 7.75 / 4.75 / 0.
    auto p = test::point_problem(3, {10, 7.75, 4.75, 0}, {{9, 6, 3}, {10, 9, 8}, {1, 2, 3}, {5, 5, 5}});
    p.preferences.shapley = {{0, ShapleyRelation::equally, 1}, {1, ShapleyRelation::equally, 2}};
    p.settings.iterations = 1000;
    const auto r = run_simulation_serial(p);
    const auto sai = scenario_acceptability(r);
    rep.check(sai.size() == 1, "exactly one scenario (" + std::to_string(sai.size()) + ")");
    rep.check(!sai.empty() && sai[0].sai == 1.0, "its SAI is 1");
    rep.check(!sai.empty() && sai[0].scenario == Scenario{{2, 1, 3, 2}},
              "classification " + (sai.empty() ? std::string("-") : to_string(sai[0].scenario)) +
                  " equals the hand-computed (2,1,3,2)");
    return rep;
}

}  // namespace

int main() {
    struct Criterion {
        const char* name;
        std::function<Report()> run;
    };
    const std::vector<Criterion> criteria = {
        {"1 example reproduction", criterion_example},
        {"2 experiment reproduction", criterion_experiment},
        {"3 oracle equivalence", criterion_oracle},
        {"4 polytope properties", criterion_polytope},
        {"5 exact identities", criterion_identities},
        {"6 determinism", criterion_determinism},
        {"7 degenerate correctness", criterion_degenerate},
    };
    int failed = 0;
    for (const auto& c : criteria) {
        Report rep;
        try {
            rep = c.run();
        } catch (const std::exception& e) {
            rep.check(false, std::string("exception: ") + e.what());
        }
        std::cout << (rep.ok ? "PASS " : "FAIL ") << "criterion " << c.name << '\n';
        for (const auto& d : rep.details) std::cout << "       " << d << '\n';
        failed += rep.ok ? 0 : 1;
    }
    std::cout << (failed ? "FAILED: " : "all criteria passed: ") << criteria.size() - static_cast<std::size_t>(failed)
              << "/" << criteria.size() << '\n';
    return failed ? 1 : 0;
}
