#include "smaa/io.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iomanip>
#include <sstream>

#include <json.hpp>

namespace smaa {

using nlohmann::json;

namespace {

struct SchemaError {
    std::string field;
    std::string message;
};

[[noreturn]] void fail(const std::string& field, const std::string& message) { throw SchemaError{field, message}; }

std::pair<std::size_t, std::size_t> line_and_column(std::string_view text, std::size_t byte) {
    std::size_t line = 1, col = 1;
    for (std::size_t i = 0; i < byte && i < text.size(); ++i) {
        if (text[i] == '\n') {
            ++line;
            col = 1;
        } else {
            ++col;
        }
    }
    return {line, col};
}

double number_at(const json& j, const std::string& field) {
    if (!j.is_number()) fail(field, "expected a number");
    return j.get<double>();
}

std::size_t count_at(const json& j, const std::string& field) {
    if (!j.is_number_integer() && !j.is_number_unsigned()) fail(field, "expected a non-negative integer");
    if (j.is_number_integer() && j.get<long long>() < 0) fail(field, "expected a non-negative integer");
    return j.get<std::size_t>();
}

StochasticValue distribution_at(const json& j, const std::string& field) {
    if (j.is_number()) return StochasticValue::point(j.get<double>());
    if (!j.is_object() || j.size() != 1)
        fail(field, "distribution must be a number or an object with one of point/uniform/normal/sample");
    const auto& [kind, body] = *j.items().begin();
    if (kind == "point") return StochasticValue::point(number_at(body, field + ".point"));
    if (kind == "uniform") {
        if (!body.is_array() || body.size() != 2) fail(field + ".uniform", "expected [lo, hi]");
        const double lo = number_at(body[0], field + ".uniform[0]");
        const double hi = number_at(body[1], field + ".uniform[1]");
        if (lo > hi) fail(field + ".uniform", "lo > hi (" + std::to_string(lo) + " > " + std::to_string(hi) + ")");
        return StochasticValue::uniform(lo, hi);
    }
    if (kind == "normal") {
        if (!body.is_object() || !body.contains("mean") || !body.contains("sd"))
            fail(field + ".normal", "expected {\"mean\": m, \"sd\": s}");
        const double sd = number_at(body["sd"], field + ".normal.sd");
        if (sd < 0.0) fail(field + ".normal.sd", "standard deviation must be >= 0");
        return StochasticValue::normal(number_at(body["mean"], field + ".normal.mean"), sd);
    }
    if (kind == "sample") {
        if (!body.is_array() || body.empty()) fail(field + ".sample", "expected a non-empty list of numbers");
        std::vector<double> xs;
        for (std::size_t i = 0; i < body.size(); ++i)
            xs.push_back(number_at(body[i], field + ".sample[" + std::to_string(i + 1) + "]"));
        return StochasticValue::from_sample(xs);
    }
    fail(field, "unknown distribution kind '" + kind + "'");
}

std::vector<std::string> names_at(const json& root, const char* key) {
    if (!root.contains(key)) fail(key, "missing");
    const auto& arr = root[key];
    if (!arr.is_array()) fail(key, "expected a list of names");
    std::vector<std::string> out;
    for (std::size_t i = 0; i < arr.size(); ++i) {
        if (!arr[i].is_string()) fail(std::string(key) + "[" + std::to_string(i + 1) + "]", "expected a string");
        out.push_back(arr[i].get<std::string>());
    }
    return out;
}

int criterion_at(const json& j, const std::string& field, int n) {
    if (!j.is_number_integer()) fail(field, "expected a 1-based criterion index");
    const int v = j.get<int>();
    if (v < 1 || v > n) fail(field, "criterion index " + std::to_string(v) + " out of range 1.." + std::to_string(n));
    return v - 1;
}

ChainMode chain_from(const std::string& s, const std::string& field) {
    if (s == "continuous") return ChainMode::continuous;
    if (s == "restart") return ChainMode::restart;
    fail(field, "expected \"continuous\" or \"restart\"");
}

const char* chain_name(ChainMode c) { return c == ChainMode::restart ? "restart" : "continuous"; }

SortingProblem problem_from_json(const json& root) {
    if (!root.is_object()) fail("$", "problem file must be a JSON object");
    SortingProblem p;
    p.criteria = names_at(root, "criteria");
    p.categories = names_at(root, "categories");
    const int n = p.n_criteria();

    if (!root.contains("profiles") || !root["profiles"].is_array()) fail("profiles", "expected a list of rows");
    const auto& profiles = root["profiles"];
    for (std::size_t h = 0; h < profiles.size(); ++h) {
        const std::string field = "profiles[" + std::to_string(h + 1) + "]";
        auto& row = p.profiles.emplace_back();
        p.profile_shared.push_back(!profiles[h].is_array());
        if (profiles[h].is_array()) {
            for (std::size_t j = 0; j < profiles[h].size(); ++j)
                row.push_back(distribution_at(profiles[h][j], field + "[" + std::to_string(j + 1) + "]"));
        } else {
            // One draw per iteration, shared by every criterion.
            row.assign(static_cast<std::size_t>(n), distribution_at(profiles[h], field));
        }
    }

    if (!root.contains("alternatives") || !root["alternatives"].is_array())
        fail("alternatives", "expected a list of {name, values}");
    const auto& alts = root["alternatives"];
    for (std::size_t i = 0; i < alts.size(); ++i) {
        const std::string field = "alternatives[" + std::to_string(i + 1) + "]";
        const auto& a = alts[i];
        if (!a.is_object() || !a.contains("values") || !a["values"].is_array())
            fail(field, "expected {\"name\": ..., \"values\": [...]}");
        p.alternatives.push_back(a.contains("name") && a["name"].is_string() ? a["name"].get<std::string>()
                                                                            : "a" + std::to_string(i + 1));
        auto& row = p.evaluations.emplace_back();
        for (std::size_t j = 0; j < a["values"].size(); ++j)
            row.push_back(distribution_at(a["values"][j], field + "[" + std::to_string(j + 1) + "]"));
    }

    if (root.contains("preferences")) {
        const auto& prefs = root["preferences"];
        if (!prefs.is_object()) fail("preferences", "expected an object");
        if (prefs.contains("interactions")) {
            const auto& list = prefs["interactions"];
            if (!list.is_array()) fail("preferences.interactions", "expected a list");
            for (std::size_t q = 0; q < list.size(); ++q) {
                const std::string field = "preferences.interactions[" + std::to_string(q + 1) + "]";
                const auto& it = list[q];
                if (!it.is_object() || !it.contains("pair") || !it["pair"].is_array() || it["pair"].size() != 2)
                    fail(field, "expected {\"pair\": [j, s], \"sign\": ...}");
                const int j = criterion_at(it["pair"][0], field + ".pair[0]", n);
                const int s = criterion_at(it["pair"][1], field + ".pair[1]", n);
                if (j == s) fail(field + ".pair", "pair must name two distinct criteria");
                const std::string sign = it.value("sign", "");
                InteractionSign sg;
                if (sign == "synergy")
                    sg = InteractionSign::synergy;
                else if (sign == "redundancy")
                    sg = InteractionSign::redundancy;
                else
                    fail(field + ".sign", "expected \"synergy\" or \"redundancy\"");
                p.preferences.interactions.push_back({CriteriaPair::make(j, s), sg});
            }
        }
        if (prefs.contains("shapley")) {
            const auto& list = prefs["shapley"];
            if (!list.is_array()) fail("preferences.shapley", "expected a list");
            for (std::size_t q = 0; q < list.size(); ++q) {
                const std::string field = "preferences.shapley[" + std::to_string(q + 1) + "]";
                const auto& it = list[q];
                if (!it.is_object() || !it.contains("left") || !it.contains("right") || !it.contains("rel"))
                    fail(field, "expected {\"left\": j, \"rel\": \">\"|\">=\"|\"=\", \"right\": s}");
                ShapleyStatement st;
                st.left = criterion_at(it["left"], field + ".left", n);
                st.right = criterion_at(it["right"], field + ".right", n);
                const std::string rel = it["rel"].is_string() ? it["rel"].get<std::string>() : "";
                if (rel == ">")
                    st.relation = ShapleyRelation::strictly_more;
                else if (rel == ">=")
                    st.relation = ShapleyRelation::at_least;
                else if (rel == "=")
                    st.relation = ShapleyRelation::equally;
                else if (rel == "<" || rel == "<=") {
                    std::swap(st.left, st.right);
                    st.relation = rel == "<" ? ShapleyRelation::strictly_more : ShapleyRelation::at_least;
                } else
                    fail(field + ".rel", "expected one of >, >=, =, <, <=");
                p.preferences.shapley.push_back(st);
            }
        }
    }

    if (root.contains("settings")) {
        const auto& s = root["settings"];
        if (!s.is_object()) fail("settings", "expected an object");
        auto& out = p.settings;
        if (s.contains("iterations")) out.iterations = count_at(s["iterations"], "settings.iterations");
        if (s.contains("seed")) {
            if (!s["seed"].is_number_integer() && !s["seed"].is_number_unsigned())
                fail("settings.seed", "expected an integer");
            out.seed = s["seed"].get<std::uint64_t>();
        }
        if (s.contains("burn_in")) out.burn_in = count_at(s["burn_in"], "settings.burn_in");
        if (s.contains("thinning")) out.thinning = count_at(s["thinning"], "settings.thinning");
        if (s.contains("replications")) out.replications = count_at(s["replications"], "settings.replications");
        if (s.contains("truncation_max_attempts"))
            out.truncation_max_attempts = count_at(s["truncation_max_attempts"], "settings.truncation_max_attempts");
        if (s.contains("strict_margin")) out.strict_margin = number_at(s["strict_margin"], "settings.strict_margin");
        if (s.contains("chain")) {
            if (!s["chain"].is_string()) fail("settings.chain", "expected a string");
            out.chain = chain_from(s["chain"].get<std::string>(), "settings.chain");
        }
    }
    return p;
}

json rounded(double v) {
    if (!std::isfinite(v)) return nullptr;
    return round_significant(v);
}

json rounded(const std::vector<double>& xs) {
    json arr = json::array();
    for (double x : xs) arr.push_back(rounded(x));
    return arr;
}

json settings_json(const SimulationSettings& s, const HarSettings& har) {
    return json{{"seed", s.seed},
                {"iterations", s.iterations},
                {"burn_in", har.burn_in},
                {"thinning", har.thinning},
                {"chain", chain_name(har.chain)},
                {"workers", s.workers},
                {"strict_margin", rounded(s.strict_margin)},
                {"truncation_max_attempts", s.truncation_max_attempts}};
}

std::string fmt6(double v) {
    if (!std::isfinite(v)) return "";
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", v);
    return buf;
}

std::string fixed(double v, int digits) {
    if (!std::isfinite(v)) return "-";
    std::ostringstream os;
    os << std::fixed << std::setprecision(digits) << v;
    return os.str();
}

std::string joined_assignment(const Scenario& s, char sep) {
    std::string out;
    for (std::size_t i = 0; i < s.assignment.size(); ++i) {
        if (i) out += sep;
        out += std::to_string(s.assignment[i]);
    }
    return out;
}

}  // namespace

ProblemError::ProblemError(std::vector<Violation> violations)
    : std::runtime_error([&] {
          std::string msg = "invalid problem";
          for (const auto& v : violations) msg += "\n  " + v.field + ": " + v.message + " [" + v.rule + "]";
          return msg;
      }()),
      violations_(std::move(violations)) {}

SortingProblem parse_problem_unchecked(std::string_view text) {
    json root;
    try {
        root = json::parse(text.begin(), text.end());
    } catch (const json::parse_error& e) {
        const auto [line, col] = line_and_column(text, e.byte == 0 ? 0 : e.byte - 1);
        throw ProblemError({{"line " + std::to_string(line) + ", column " + std::to_string(col), "syntax", e.what()}});
    }
    try {
        return problem_from_json(root);
    } catch (const SchemaError& e) {
        throw ProblemError({{e.field, "schema", e.message}});
    } catch (const json::exception& e) {
        throw ProblemError({{"$", "schema", e.what()}});
    }
}

SortingProblem parse_problem(std::string_view text) {
    auto p = parse_problem_unchecked(text);
    auto violations = validate_problem(p);
    if (!violations.empty()) throw ProblemError(std::move(violations));
    return p;
}

SortingProblem load_problem_file(const std::string& path, bool validate) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open problem file '" + path + "'");
    std::ostringstream ss;
    ss << in.rdbuf();
    return validate ? parse_problem(ss.str()) : parse_problem_unchecked(ss.str());
}

StochasticValue parse_distribution(const std::string& json_text) {
    try {
        return distribution_at(json::parse(json_text), "value");
    } catch (const SchemaError& e) {
        throw ProblemError({{e.field, "schema", e.message}});
    } catch (const json::parse_error& e) {
        throw ProblemError({{"value", "syntax", e.what()}});
    }
}

std::optional<ReportFormat> parse_report_format(std::string_view name) {
    if (name == "json") return ReportFormat::json;
    if (name == "csv") return ReportFormat::csv;
    if (name == "text") return ReportFormat::text;
    return std::nullopt;
}

double round_significant(double value) {
    if (!std::isfinite(value) || value == 0.0) return value == 0.0 ? 0.0 : value;
    char buf[32];
    std::snprintf(buf, sizeof buf, "%.6g", value);
    const double out = std::strtod(buf, nullptr);
    return out == 0.0 ? 0.0 : out;  // drop negative zero
}

std::string write_report(const SortingProblem& problem, const SimulationResult& result, ReportFormat format) {
    const auto sai = scenario_acceptability(result);
    const auto cat = category_acceptability(result);
    const auto labels = result.layout.labels();

    if (format == ReportFormat::json) {
        json scenarios = json::array();
        for (std::size_t r = 0; r < sai.size(); ++r) {
            const auto cc = scenario_central_capacity(result.scenarios.at(sai[r].scenario), result.layout);
            scenarios.push_back({{"id", r + 1},
                                 {"assignment", sai[r].scenario.assignment},
                                 {"count", sai[r].count},
                                 {"sai", rounded(sai[r].sai)},
                                 {"central_capacity", rounded(cc.mean)},
                                 {"central_capacity_sd", cc.sd ? rounded(*cc.sd) : json(nullptr)}});
        }
        json cat_values = json::array();
        for (const auto& row : cat) cat_values.push_back(rounded(row));
        json doc = {{"type", "simulation"},
                    {"iterations", result.iterations},
                    {"criteria", problem.criteria},
                    {"categories", problem.categories},
                    {"alternatives", problem.alternatives},
                    {"coordinates", labels},
                    {"distinct_scenarios", result.scenarios.size()},
                    {"scenarios", scenarios},
                    {"category_counts", result.category_counts},
                    {"category_acceptability", cat_values},
                    {"settings", settings_json(result.settings, result.har)}};
        return doc.dump(2) + "\n";
    }

    std::ostringstream os;
    if (format == ReportFormat::csv) {
        os << "scenario_id,assignment,count,sai";
        for (const auto& l : labels) os << ',' << l;
        for (const auto& l : labels) os << ",sd_" << l;
        os << '\n';
        for (std::size_t r = 0; r < sai.size(); ++r) {
            const auto cc = scenario_central_capacity(result.scenarios.at(sai[r].scenario), result.layout);
            os << r + 1 << ',' << joined_assignment(sai[r].scenario, ';') << ',' << sai[r].count << ','
               << fmt6(sai[r].sai);
            for (double v : cc.mean) os << ',' << fmt6(v);
            for (std::size_t c = 0; c < labels.size(); ++c) os << ',' << (cc.sd ? fmt6((*cc.sd)[c]) : "");
            os << '\n';
        }
        return os.str();
    }

    os << "Scenario acceptability (" << result.iterations << " iterations, " << result.scenarios.size()
       << " distinct scenarios, seed " << result.settings.seed << ", chain " << chain_name(result.har.chain)
       << ", burn-in " << result.har.burn_in << ", thinning " << result.har.thinning << ")\n\n";
    os << std::left << std::setw(6) << "rank" << std::setw(4 + 2 * static_cast<int>(problem.alternatives.size()))
       << "scenario" << std::setw(9) << "SAI(%)" << "central capacity (";
    for (std::size_t c = 0; c < labels.size(); ++c) os << (c ? ", " : "") << labels[c];
    os << ")\n";
    for (std::size_t r = 0; r < sai.size(); ++r) {
        const auto cc = scenario_central_capacity(result.scenarios.at(sai[r].scenario), result.layout);
        os << std::left << std::setw(6) << ("v" + std::to_string(r + 1))
           << std::setw(4 + 2 * static_cast<int>(problem.alternatives.size())) << to_string(sai[r].scenario)
           << std::setw(9) << fixed(100.0 * sai[r].sai, 2) << '(';
        for (std::size_t c = 0; c < cc.mean.size(); ++c) {
            os << (c ? ", " : "") << fixed(cc.mean[c], 3);
            if (cc.sd) os << " +- " << fixed((*cc.sd)[c], 3);
        }
        os << ")\n";
    }
    os << "\nCategory acceptability (%)\n" << std::left << std::setw(14) << "alternative";
    for (const auto& c : problem.categories) os << std::setw(12) << c.substr(0, 11);
    os << '\n';
    for (std::size_t i = 0; i < cat.size(); ++i) {
        os << std::setw(14) << problem.alternatives[i].substr(0, 13);
        for (double v : cat[i]) os << std::setw(12) << fixed(100.0 * v, 2);
        os << '\n';
    }
    os << "\nelapsed " << fixed(result.elapsed_seconds, 3) << " s\n";
    return os.str();
}

std::string write_replication_report(const SortingProblem& problem, const ReplicationResult& result,
                                     ReportFormat format) {
    const auto labels = result.layout.labels();
    if (format == ReportFormat::json) {
        json scenarios = json::array();
        for (std::size_t r = 0; r < result.scenarios.size(); ++r) {
            const auto& s = result.scenarios[r];
            scenarios.push_back({{"id", r + 1},
                                 {"assignment", s.scenario.assignment},
                                 {"count", s.total_count},
                                 {"present_in", s.present_in},
                                 {"sai_mean", rounded(s.sai_mean)},
                                 {"sai_sd", rounded(s.sai_sd)},
                                 {"sai_ci", json::array({rounded(s.sai_ci_low), rounded(s.sai_ci_high)})},
                                 {"capacity_mean", rounded(s.capacity_mean)},
                                 {"capacity_sd", rounded(s.capacity_sd)},
                                 {"capacity_ci_low", rounded(s.capacity_ci_low)},
                                 {"capacity_ci_high", rounded(s.capacity_ci_high)}});
        }
        json cat_mean = json::array(), cat_sd = json::array();
        for (const auto& row : result.category_mean) cat_mean.push_back(rounded(row));
        for (const auto& row : result.category_sd) cat_sd.push_back(rounded(row));
        json doc = {{"type", "replication"},
                    {"replications", result.replications},
                    {"iterations", result.iterations},
                    {"criteria", problem.criteria},
                    {"categories", problem.categories},
                    {"alternatives", problem.alternatives},
                    {"coordinates", labels},
                    {"scenarios", scenarios},
                    {"category_acceptability_mean", cat_mean},
                    {"category_acceptability_sd", cat_sd},
                    {"settings", settings_json(result.settings, result.har)}};
        return doc.dump(2) + "\n";
    }

    std::ostringstream os;
    if (format == ReportFormat::csv) {
        os << "scenario_id,assignment,count,sai";
        for (const auto& l : labels) os << ',' << l;
        for (const auto& l : labels) os << ",sd_" << l;
        os << ",sai_sd,sai_ci_low,sai_ci_high,present_in";
        for (const auto& l : labels) os << ",ci_low_" << l;
        for (const auto& l : labels) os << ",ci_high_" << l;
        os << '\n';
        for (std::size_t r = 0; r < result.scenarios.size(); ++r) {
            const auto& s = result.scenarios[r];
            os << r + 1 << ',' << joined_assignment(s.scenario, ';') << ',' << s.total_count << ','
               << fmt6(s.sai_mean);
            for (double v : s.capacity_mean) os << ',' << fmt6(v);
            for (double v : s.capacity_sd) os << ',' << fmt6(v);
            os << ',' << fmt6(s.sai_sd) << ',' << fmt6(s.sai_ci_low) << ',' << fmt6(s.sai_ci_high) << ','
               << s.present_in;
            for (double v : s.capacity_ci_low) os << ',' << fmt6(v);
            for (double v : s.capacity_ci_high) os << ',' << fmt6(v);
            os << '\n';
        }
        return os.str();
    }

    os << "Replicated scenario acceptability (" << result.replications << " replications x " << result.iterations
       << " iterations, chain " << chain_name(result.har.chain) << ", burn-in " << result.har.burn_in
       << ", thinning " << result.har.thinning << ")\n\n";
    os << std::left << std::setw(6) << "rank" << std::setw(4 + 2 * static_cast<int>(problem.alternatives.size()))
       << "scenario" << std::setw(18) << "SAI(%) mean+-sd";
    for (const auto& l : labels) os << std::setw(18) << l;
    os << '\n';
    for (std::size_t r = 0; r < result.scenarios.size(); ++r) {
        const auto& s = result.scenarios[r];
        os << std::setw(6) << ("v" + std::to_string(r + 1))
           << std::setw(4 + 2 * static_cast<int>(problem.alternatives.size())) << to_string(s.scenario)
           << std::setw(18) << (fixed(100.0 * s.sai_mean, 2) + " +- " + fixed(100.0 * s.sai_sd, 2));
        for (std::size_t c = 0; c < labels.size(); ++c)
            os << std::setw(18) << (fixed(s.capacity_mean[c], 2) + " +- " + fixed(s.capacity_sd[c], 2));
        os << '\n';
    }
    os << "\nCategory acceptability (%) mean +- sd\n" << std::setw(14) << "alternative";
    for (const auto& c : problem.categories) os << std::setw(18) << c.substr(0, 17);
    os << '\n';
    for (std::size_t i = 0; i < result.category_mean.size(); ++i) {
        os << std::setw(14) << problem.alternatives[i].substr(0, 13);
        for (std::size_t h = 0; h < result.category_mean[i].size(); ++h)
            os << std::setw(18)
               << (fixed(100.0 * result.category_mean[i][h], 2) + " +- " + fixed(100.0 * result.category_sd[i][h], 2));
        os << '\n';
    }
    os << "\nelapsed " << fixed(result.elapsed_seconds, 3) << " s\n";
    return os.str();
}

std::string write_histogram(const Histogram& h, const Scenario& scenario, const std::string& coordinate,
                            std::span<const double> values, ReportFormat format) {
    double mean = 0.0;
    for (double v : values) mean += v;
    if (!values.empty()) mean /= static_cast<double>(values.size());
    if (format == ReportFormat::json) {
        json bins = json::array();
        for (std::size_t b = 0; b < h.counts.size(); ++b)
            bins.push_back({{"low", rounded(h.low + static_cast<double>(b) * h.bin_width())},
                            {"high", rounded(h.low + static_cast<double>(b + 1) * h.bin_width())},
                            {"count", h.counts[b]}});
        json doc = {{"type", "histogram"},
                    {"scenario", scenario.assignment},
                    {"coordinate", coordinate},
                    {"samples", values.size()},
                    {"mean", rounded(mean)},
                    {"skewness", rounded(skewness(values))},
                    {"bins", bins}};
        return doc.dump(2) + "\n";
    }
    std::ostringstream os;
    if (format == ReportFormat::text)
        os << "# " << coordinate << " for scenario " << to_string(scenario) << ": " << values.size()
           << " samples, mean " << fmt6(mean) << ", skewness " << fmt6(skewness(values)) << '\n';
    os << "bin_low,bin_high,count\n";
    for (std::size_t b = 0; b < h.counts.size(); ++b)
        os << fmt6(h.low + static_cast<double>(b) * h.bin_width()) << ','
           << fmt6(h.low + static_cast<double>(b + 1) * h.bin_width()) << ',' << h.counts[b] << '\n';
    return os.str();
}

ParsedReport parse_report(std::string_view json_text) {
    const json doc = json::parse(json_text.begin(), json_text.end());
    ParsedReport out;
    out.type = doc.at("type").get<std::string>();
    out.iterations = doc.at("iterations").get<std::uint64_t>();
    for (const auto& s : doc.at("scenarios"))
        out.scenario_counts.emplace_back(Scenario{s.at("assignment").get<std::vector<int>>()},
                                         s.at("count").get<std::uint64_t>());
    if (doc.contains("category_counts"))
        out.category_counts = doc["category_counts"].get<std::vector<std::vector<std::uint64_t>>>();
    return out;
}

void apply_overrides(SimulationSettings& s, const SettingsOverrides& o) {
    if (o.iterations) s.iterations = *o.iterations;
    if (o.seed) s.seed = *o.seed;
    if (o.burn_in) s.burn_in = *o.burn_in;
    if (o.thinning) s.thinning = *o.thinning;
    if (o.replications) s.replications = *o.replications;
    if (o.chain) s.chain = *o.chain;
    if (o.workers) s.workers = *o.workers;
    if (o.retain_samples) s.retain_samples = *o.retain_samples;
}

}  // namespace smaa
