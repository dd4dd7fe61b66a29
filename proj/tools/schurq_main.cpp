// Command-line front end: exact computation and identity verification for
// multiparameter Schur P/Q polynomials. Every invocation emits one JSON
// document {inputs, result, checks, timing} with all numbers as exact "p/q"
// strings. Exit codes: 0 success, 1 verification failure, 2 usage error.

#include <atomic>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <optional>
#include <random>
#include <string>
#include <thread>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "schurq/dimensions.hpp"
#include "schurq/identities.hpp"
#include "schurq/linalg.hpp"
#include "schurq/pfaffian.hpp"
#include "schurq/series.hpp"
#include "schurq/tableaux.hpp"

using json = nlohmann::ordered_json;
using namespace schurq;

namespace {

constexpr int kDefaultMaxCells = 12;
constexpr int kMaxVariables = 6;

int max_cells_guard() {
    if (const char* env = std::getenv("SCHURQ_MAX_CELLS")) {
        try {
            return std::stoi(env);
        } catch (const std::exception&) {
            throw CLI::ValidationError("SCHURQ_MAX_CELLS", "not an integer");
        }
    }
    return kDefaultMaxCells;
}

void check_enumeration_guard(const StrictPartition& lambda, int n, bool force) {
    if (force) return;
    const int cells = max_cells_guard();
    if (lambda.weight() > cells)
        throw CLI::ValidationError(
            "shape", "enumeration guard: |lambda| > " + std::to_string(cells) +
                         " (override with --force or SCHURQ_MAX_CELLS)");
    if (n > kMaxVariables)
        throw CLI::ValidationError("n", "enumeration guard: n > " +
                                            std::to_string(kMaxVariables) +
                                            " (override with --force)");
}

std::vector<int> parse_parts(const std::string& text) {
    if (text.empty() || text == "-") return {};
    std::vector<int> parts;
    std::size_t pos = 0;
    while (pos < text.size()) {
        std::size_t comma = text.find(',', pos);
        if (comma == std::string::npos) comma = text.size();
        try {
            parts.push_back(std::stoi(text.substr(pos, comma - pos)));
        } catch (const std::exception&) {
            throw CLI::ValidationError("partition", "bad part in '" + text + "'");
        }
        pos = comma + 1;
    }
    return parts;
}

StrictPartition parse_strict(const std::string& text, const char* option) {
    auto parts = parse_parts(text);
    if (!StrictPartition::is_strict(parts))
        throw CLI::ValidationError(option, "'" + text + "' is not a strict partition");
    return StrictPartition(std::move(parts));
}

ParameterSequence make_params(const std::string& spec, int count, std::uint64_t seed) {
    if (spec == "random") {
        // Seeded small rationals, a_1 = 0, pairwise distinct with no two summing
        // to zero (keeps every interpolation weight H_a nonzero).
        std::mt19937_64 rng(seed);
        std::uniform_int_distribution<int> num(-9, 9), den(1, 4);
        std::vector<Rational> values{Rational(0)};
        while (static_cast<int>(values.size()) < count) {
            Rational r = make_rational(num(rng), den(rng));
            bool clash = false;
            for (const Rational& v : values)
                if (v == r || v == -r) clash = true;
            if (!clash) values.push_back(r);
        }
        return ParameterSequence::custom(std::move(values));
    }
    return ParameterSequence::parse(spec, count);
}

json poly_to_json(const MultiPoly& p) {
    json terms = json::array();
    for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
        json term;
        term["coeff"] = to_string(it->second);
        term["exponents"] = it->first.exponents;
        terms.push_back(std::move(term));
    }
    json out;
    out["text"] = p.to_string();
    out["n_vars"] = p.n_vars();
    out["terms"] = std::move(terms);
    return out;
}

struct Report {
    json inputs;
    json result;
    json checks = json::array();
    std::optional<long> timing_ms;
    bool pass = true;

    int emit() const {
        json doc;
        doc["inputs"] = inputs;
        doc["result"] = result;
        doc["checks"] = checks;
        doc["timing"] = timing_ms ? json(*timing_ms) : json(nullptr);
        std::cout << doc.dump(2) << "\n";
        return pass ? 0 : 1;
    }
};

// ---------------------------------------------------------------------------
// verify: named instance batteries with a bounded worker pool
// ---------------------------------------------------------------------------

struct Instance {
    std::string name;
    std::function<bool()> run;
};

struct SuiteContext {
    int max_weight;
    std::uint64_t seed;

    std::vector<ParameterSequence> battery(int count) const {
        return {ParameterSequence::classical(count), ParameterSequence::factorial(count),
                make_params("random", count, seed)};
    }
};

std::vector<Rational> admissible_point(std::mt19937_64& rng, int n) {
    std::uniform_int_distribution<int> num(-12, 12), den(1, 4);
    std::vector<Rational> point;
    while (static_cast<int>(point.size()) < n) {
        Rational r = make_rational(num(rng), den(rng));
        if (r == 0) continue;
        bool clash = false;
        for (const Rational& x : point)
            if (x == r || x == -r) clash = true;
        if (!clash) point.push_back(r);
    }
    return point;
}

std::string param_tag(const ParameterSequence& a) {
    switch (a.kind()) {
        case ParameterSequence::Kind::classical: return "classical";
        case ParameterSequence::Kind::factorial: return "factorial";
        case ParameterSequence::Kind::custom: return "custom";
    }
    return "custom";
}

std::vector<Instance> build_suite(const std::string& suite, const SuiteContext& ctx) {
    std::vector<Instance> instances;
    auto add = [&](std::string name, std::function<bool()> run) {
        instances.push_back({std::move(name), std::move(run)});
    };

    if (suite == "supersymmetry" || suite == "stability") {
        const bool stability = suite == "stability";
        for (int w = 0; w <= std::min(ctx.max_weight, 6); ++w)
            for (const auto& lam : strict_partitions_of(w))
                for (const auto& a : ctx.battery(std::max(2, w + 1)))
                    for (int n = lam.length(); n <= 4; ++n)
                        add(suite + " lambda=" + lam.to_string() + " " + param_tag(a) +
                                " n=" + std::to_string(n),
                            [=] {
                                auto q = q_multiparam(lam, a, n);
                                if (stability)
                                    return q_multiparam(lam, a, n + 1).restrict_last_var() == q;
                                return q.is_supersymmetric() &&
                                       q.top_homogeneous() == q_classical(lam, n);
                            });
    } else if (suite == "nimmo") {
        for (int w = 0; w <= std::min(ctx.max_weight, 5); ++w)
            for (const auto& lam : strict_partitions_of(w))
                for (const auto& a : ctx.battery(std::max(2, w + 1)))
                    for (int n = lam.length(); n <= 4; ++n)
                        add("nimmo lambda=" + lam.to_string() + " " + param_tag(a) +
                                " n=" + std::to_string(n),
                            [=] {
                                std::mt19937_64 rng(ctx.seed ^
                                                    static_cast<std::uint64_t>(
                                                        lam.weight() * 131 + n));
                                auto poly = p_multiparam(lam, a, n);
                                for (int t = 0; t < 5; ++t) {
                                    auto pt = admissible_point(rng, n);
                                    if (nimmo_eval(lam, a, pt) != poly.evaluate(pt)) return false;
                                }
                                return true;
                            });
    } else if (suite == "giambelli") {
        for (int w = 0; w <= std::min(ctx.max_weight, 8); ++w)
            for (const auto& lam : strict_partitions_of(w)) {
                if (lam.length() > 4) continue;
                for (const auto& a : ctx.battery(std::max(2, w + 1)))
                    for (int n = 0; n <= 3; ++n)
                        add("giambelli lambda=" + lam.to_string() + " " + param_tag(a) +
                                " n=" + std::to_string(n),
                            [=] { return giambelli_q(lam, a, n) == q_multiparam(lam, a, n); });
            }
    } else if (suite == "pieri") {
        for (int w = 0; w <= std::min(ctx.max_weight, 5); ++w)
            for (const auto& mu : strict_partitions_of(w))
                for (const auto& a : ctx.battery(w + 2))
                    add("pieri mu=" + mu.to_string() + " " + param_tag(a),
                        [=] { return pieri_check(mu, a, mu.length() + 2); });
    } else if (suite == "vanishing") {
        std::vector<ParameterSequence> distinct = {
            ParameterSequence::factorial(std::min(ctx.max_weight, 6) + 2),
            make_params("random", std::min(ctx.max_weight, 6) + 2, ctx.seed)};
        for (const auto& a : distinct)
            for (int wm = 0; wm <= std::min(ctx.max_weight, 6); ++wm)
                for (const auto& mu : strict_partitions_of(wm))
                    for (int wl = 0; wl <= std::min(ctx.max_weight, 6); ++wl)
                        for (const auto& lam : strict_partitions_of(wl))
                            add("vanishing mu=" + mu.to_string() + " lambda=" +
                                    lam.to_string() + " " + param_tag(a),
                                [=] { return vanishing_check(mu, lam, a); });
    } else if (suite == "characterization") {
        std::vector<ParameterSequence> distinct = {
            ParameterSequence::factorial(6), make_params("random", 6, ctx.seed)};
        for (const auto& a : distinct)
            for (int w = 0; w <= std::min(ctx.max_weight, 4); ++w)
                for (const auto& mu : strict_partitions_of(w))
                    add("characterization mu=" + mu.to_string() + " " + param_tag(a), [=] {
                        auto coeffs = interpolate(mu, a, 3);
                        auto shapes = strict_partitions_upto(mu.weight());
                        for (std::size_t i = 0; i < shapes.size(); ++i)
                            if (coeffs[i] != (shapes[i] == mu ? 1 : 0)) return false;
                        return true;
                    });
    } else if (suite == "dimensions") {
        for (int w = 0; w <= std::min(ctx.max_weight, 9); ++w)
            for (const auto& lam : strict_partitions_of(w))
                add("dimensions lambda=" + lam.to_string(), [=] {
                    for (const auto& mu : strict_subpartitions(lam)) {
                        Integer paths = g_paths(mu, lam);
                        if (g_formula(mu, lam) != paths) return false;
                        if (g_pfaffian(mu, lam) != paths) return false;
                    }
                    return true;
                });
    } else if (suite == "genfun-one-row") {
        for (const auto& a : ctx.battery(10))
            for (int n = 0; n <= 3; ++n)
                add("one-row " + param_tag(a) + " n=" + std::to_string(n),
                    [=] { return one_row_genfun_check(a, n, 8); });
    } else if (suite == "genfun-two-row") {
        for (const auto& a : ctx.battery(8))
            for (int k = 1; k <= 5; ++k)
                for (int l = 0; l < k; ++l)
                    add("two-row relations k=" + std::to_string(k) + " l=" + std::to_string(l) +
                            " " + param_tag(a),
                        [=] { return two_row_relations_check(k, l, a, 2); });
        add("two-row double series factorial biorder=6",
            [=] { return two_row_genfun_direct_check(ParameterSequence::factorial(10), 2, 6); });
    } else if (suite == "transition") {
        const int w = std::min(ctx.max_weight, 5);
        auto ra = make_params("random", w + 2, ctx.seed);
        auto rb = make_params("random", w + 2, ctx.seed + 1);
        std::vector<std::pair<ParameterSequence, ParameterSequence>> pairs = {
            {ParameterSequence::factorial(w + 2), ParameterSequence::classical(w + 2)},
            {ra, rb}};
        add("transition identity at a=b", [=] {
            auto t = transition_matrix(ra, ra, w);
            return t.entries == identity_matrix(t.shapes.size());
        });
        for (std::size_t pi = 0; pi < pairs.size(); ++pi) {
            const auto& [a, b] = pairs[pi];
            add("transition roundtrip pair=" + std::to_string(pi), [=, a = a, b = b] {
                auto t_ab = transition_matrix(a, b, w);
                auto t_ba = transition_matrix(b, a, w);
                return matmul(t_ab.entries, t_ba.entries) ==
                       identity_matrix(t_ab.shapes.size());
            });
            add("transition expansion pair=" + std::to_string(pi), [=, a = a, b = b] {
                auto t = transition_matrix(a, b, w);
                for (std::size_t mi = 0; mi < t.shapes.size(); ++mi) {
                    MultiPoly residual = q_multiparam(t.shapes[mi], a, 3);
                    for (std::size_t ni = 0; ni < t.shapes.size(); ++ni) {
                        if (t.entries[mi][ni] == 0) continue;
                        residual -= q_multiparam(t.shapes[ni], b, 3) * t.entries[mi][ni];
                    }
                    if (!residual.is_zero()) return false;
                }
                return true;
            });
        }
    } else {
        throw CLI::ValidationError("suite", "unknown suite '" + suite + "'");
    }
    return instances;
}

std::vector<char> run_instances(const std::vector<Instance>& instances, int jobs) {
    std::vector<char> results(instances.size(), 0);
    if (jobs <= 1) {
        for (std::size_t i = 0; i < instances.size(); ++i) results[i] = instances[i].run() ? 1 : 0;
        return results;
    }
    std::atomic<std::size_t> next{0};
    auto worker = [&] {
        for (;;) {
            std::size_t i = next.fetch_add(1);
            if (i >= instances.size()) return;
            results[i] = instances[i].run() ? 1 : 0;
        }
    };
    std::vector<std::thread> workers;
    const int count = std::min<int>(jobs, static_cast<int>(instances.size()));
    workers.reserve(static_cast<std::size_t>(count));
    for (int t = 0; t < count; ++t) workers.emplace_back(worker);
    for (auto& w : workers) w.join();
    return results;
}

// ---------------------------------------------------------------------------

long elapsed_ms(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start)
        .count();
}

int cmd_compute(const std::string& shape_text, const std::string& params_spec,
                std::uint64_t seed, int n, bool want_p, const std::string& method,
                bool force, bool timing) {
    auto start = std::chrono::steady_clock::now();
    Report report;
    report.inputs = {{"command", "compute"}, {"shape", shape_text},
                     {"params", params_spec}, {"n", n},
                     {"function", want_p ? "p" : "q"}, {"method", method},
                     {"seed", seed}};

    auto parts = parse_parts(shape_text);
    if (!StrictPartition::is_strict(parts)) {
        // Non-strict index: the function is identically zero.
        report.result = {{"identically_zero", true},
                         {"note", "shape is not a strict partition"},
                         {"polynomial",
                          poly_to_json(MultiPoly::zero(static_cast<std::size_t>(n)))}};
        if (timing) report.timing_ms = elapsed_ms(start);
        return report.emit();
    }
    StrictPartition lambda(std::move(parts));
    check_enumeration_guard(lambda, n, force);
    auto params = make_params(params_spec, std::max(2, lambda.max_part() + 1), seed);

    MultiPoly q = method == "giambelli" ? giambelli_q(lambda, params, n)
                                        : q_multiparam(lambda, params, n);
    MultiPoly value = q;
    if (want_p) {
        Rational scale(1);
        for (int i = 0; i < lambda.length(); ++i) scale *= 2;
        value = q / scale;
    }
    report.result = {{"identically_zero", lambda.length() > n},
                     {"polynomial", poly_to_json(value)}};
    report.checks.push_back({{"name", "supersymmetric"}, {"pass", value.is_supersymmetric()}});
    if (timing) report.timing_ms = elapsed_ms(start);
    return report.emit();
}

int cmd_dim(const std::string& outer_text, const std::string& inner_text,
            const std::string& method, bool timing) {
    auto start = std::chrono::steady_clock::now();
    Report report;
    report.inputs = {{"command", "dim"}, {"outer", outer_text},
                     {"inner", inner_text}, {"method", method}};
    auto outer = parse_strict(outer_text, "--outer");
    auto inner = parse_strict(inner_text, "--inner");

    json values;
    if (method == "paths" || method == "all") values["paths"] = g_paths(inner, outer).get_str();
    if (method == "formula" || method == "all")
        values["formula"] = g_formula(inner, outer).get_str();
    if (method == "pfaffian" || method == "all")
        values["pfaffian"] = g_pfaffian(inner, outer).get_str();
    if (method == "all") {
        bool agree =
            values["paths"] == values["formula"] && values["formula"] == values["pfaffian"];
        report.checks.push_back({{"name", "methods agree"}, {"pass", agree}});
        report.pass = agree;
    }
    report.result = {{"dimension", values}};
    if (timing) report.timing_ms = elapsed_ms(start);
    return report.emit();
}

int cmd_verify(const std::string& suite, int max_weight, std::uint64_t seed, int jobs,
               bool timing) {
    auto start = std::chrono::steady_clock::now();
    Report report;
    report.inputs = {{"command", "verify"}, {"suite", suite}, {"max_weight", max_weight},
                     {"seed", seed}, {"jobs", jobs}};
    SuiteContext ctx{max_weight, seed};
    auto instances = build_suite(suite, ctx);
    auto results = run_instances(instances, jobs);

    long failures = 0;
    std::string first_counterexample;
    for (std::size_t i = 0; i < instances.size(); ++i) {
        report.checks.push_back({{"instance", instances[i].name}, {"pass", bool(results[i])}});
        if (!results[i]) {
            if (failures == 0) first_counterexample = instances[i].name;
            ++failures;
        }
    }
    report.pass = failures == 0;
    report.result = {{"suite", suite},
                     {"instances", instances.size()},
                     {"failures", failures},
                     {"pass", report.pass},
                     {"first_counterexample",
                      failures == 0 ? json(nullptr) : json(first_counterexample)}};
    if (timing) report.timing_ms = elapsed_ms(start);
    return report.emit();
}

int cmd_transition(const std::string& a_spec, const std::string& b_spec, int max_weight,
                   std::uint64_t seed, bool roundtrip, bool timing) {
    auto start = std::chrono::steady_clock::now();
    Report report;
    report.inputs = {{"command", "transition"}, {"a_params", a_spec}, {"b_params", b_spec},
                     {"max_weight", max_weight}, {"seed", seed}, {"roundtrip", roundtrip}};
    auto a = make_params(a_spec, max_weight + 2, seed);
    auto b = make_params(b_spec, max_weight + 2, seed + 1);
    auto t = transition_matrix(a, b, max_weight);

    json shapes = json::array();
    for (const auto& s : t.shapes) shapes.push_back(s.to_string());
    json matrix = json::array();
    for (const auto& row : t.entries) {
        json r = json::array();
        for (const auto& entry : row) r.push_back(to_string(entry));
        matrix.push_back(std::move(r));
    }
    report.result = {{"shapes", shapes}, {"matrix", matrix}};
    if (roundtrip) {
        auto t_ba = transition_matrix(b, a, max_weight);
        bool ok = matmul(t.entries, t_ba.entries) == identity_matrix(t.shapes.size());
        report.checks.push_back({{"name", "roundtrip identity"}, {"pass", ok}});
        report.pass = ok;
    }
    if (timing) report.timing_ms = elapsed_ms(start);
    return report.emit();
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"exact multiparameter Schur P/Q polynomials and identity checks"};
    app.require_subcommand(1);

    auto* compute = app.add_subcommand("compute", "compute one P or Q polynomial");
    std::string shape, params = "classical", method = "tableau";
    int n = 2;
    std::uint64_t seed = 1;
    bool want_p = false, want_q = false, force = false, timing = false;
    compute->add_option("--shape", shape, "partition, e.g. 3,2,1 or - for empty")->required();
    compute->add_option("--params", params, "classical | factorial | custom:0,... | random");
    compute->add_option("--n", n, "number of variables")->check(CLI::NonNegativeNumber);
    compute->add_option("--seed", seed, "seed for random parameters");
    compute->add_flag("--p", want_p, "emit the P-function");
    compute->add_flag("--q", want_q, "emit the Q-function (default)");
    compute->add_option("--method", method, "tableau | giambelli")
        ->check(CLI::IsMember({"tableau", "giambelli"}));
    compute->add_flag("--force", force, "bypass the enumeration size guard");
    compute->add_flag("--timing", timing, "include wall-clock timing in the report");

    auto* dim = app.add_subcommand("dim", "dimension of a skew shifted diagram");
    std::string outer, inner = "-", dim_method = "all";
    dim->add_option("--outer", outer, "outer strict partition")->required();
    dim->add_option("--inner", inner, "inner strict partition (default empty)");
    dim->add_option("--method", dim_method, "paths | formula | pfaffian | all")
        ->check(CLI::IsMember({"paths", "formula", "pfaffian", "all"}));
    dim->add_flag("--timing", timing, "include wall-clock timing in the report");

    auto* verify = app.add_subcommand("verify", "run an identity battery");
    std::string suite;
    int max_weight = 5, jobs = 1;
    verify->add_option("--suite", suite,
                       "supersymmetry stability nimmo giambelli pieri vanishing "
                       "characterization dimensions genfun-one-row genfun-two-row transition")
        ->required();
    verify->add_option("--max-weight", max_weight, "largest partition weight in the battery")
        ->check(CLI::NonNegativeNumber);
    verify->add_option("--seed", seed, "seed for random parameters and points");
    verify->add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
    verify->add_flag("--timing", timing, "include wall-clock timing in the report");

    auto* transition = app.add_subcommand("transition", "dump a basis-transition matrix");
    std::string a_spec = "factorial", b_spec = "classical";
    bool roundtrip = false;
    transition->add_option("--a-params", a_spec, "source parameter spec");
    transition->add_option("--b-params", b_spec, "target parameter spec");
    transition->add_option("--max-weight", max_weight, "largest shape weight")
        ->check(CLI::NonNegativeNumber);
    transition->add_option("--seed", seed, "seed for random parameter specs");
    transition->add_flag("--roundtrip", roundtrip, "check both directions multiply to identity");
    transition->add_flag("--timing", timing, "include wall-clock timing in the report");

    try {
        app.parse(argc, argv);
        if (compute->parsed()) {
            if (want_p && want_q) throw CLI::ValidationError("--p/--q", "choose one");
            return cmd_compute(shape, params, seed, n, want_p, method, force, timing);
        }
        if (dim->parsed()) return cmd_dim(outer, inner, dim_method, timing);
        if (verify->parsed()) return cmd_verify(suite, max_weight, seed, jobs, timing);
        if (transition->parsed())
            return cmd_transition(a_spec, b_spec, max_weight, seed, roundtrip, timing);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    }
    return 2;
}
