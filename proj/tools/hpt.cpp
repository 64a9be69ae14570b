// Command-line surface: generation, reduction, solving, testing, and the
// verification suites, wired for shell pipelines (exit codes 0/1/2/3).

#include <iostream>
#include <map>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "hpt/errors.hpp"
#include "hpt/generators.hpp"
#include "hpt/io.hpp"
#include "hpt/oracle.hpp"
#include "hpt/reductions.hpp"
#include "hpt/rho3col.hpp"
#include "hpt/rng.hpp"
#include "hpt/solvers.hpp"
#include "hpt/testers.hpp"
#include "hpt/verify.hpp"

namespace {

using namespace hpt;

Rational parse_rational(const std::string& text) {
    auto slash = text.find('/');
    if (slash != std::string::npos) {
        return Rational(std::stoll(text.substr(0, slash)), std::stoll(text.substr(slash + 1)));
    }
    auto dot = text.find('.');
    if (dot != std::string::npos) {
        std::string frac = text.substr(dot + 1);
        std::int64_t den = 1;
        for (std::size_t i = 0; i < frac.size(); ++i) den *= 10;
        std::int64_t whole = dot == 0 ? 0 : std::stoll(text.substr(0, dot));
        return Rational(whole * den + (frac.empty() ? 0 : std::stoll(frac)), den);
    }
    return Rational(std::stoll(text));
}

struct GenRequest {
    std::string kind;
    int n = 0;
    int d = 3;
    int delta = 3;
    std::string target = "3col-hypergraph";
    std::uint64_t seed = 0;
};

struct GenOutput {
    std::string payload;
    std::string witness;  // yes-tw only
    generators::Manifest manifest;
};

GenOutput run_gen(const GenRequest& req) {
    GenOutput out;
    out.manifest.add("kind", req.kind);
    std::ostringstream payload;
    if (req.kind == "appendix-b") {
        Hypergraph h = generators::sample_appendix_b(req.n, req.d, req.seed);
        write_hypergraph(payload, h);
        out.manifest.add("n", req.n);
        out.manifest.add("d", req.d);
        out.manifest.add("seed", std::to_string(req.seed));
    } else if (req.kind == "expander") {
        auto e = generators::random_regular_expander(req.n, req.d, req.seed);
        write_graph(payload, e.graph);
        out.manifest.add("n", req.n);
        out.manifest.add("d", req.d);
        out.manifest.add("seed", std::to_string(req.seed));
        out.manifest.add("certificate", generators::certificate_name(e.certificate));
    } else if (req.kind == "fn-csp") {
        auto e = generators::random_regular_expander(req.n, req.d, req.seed);
        auto cnf = generators::csp_to_3cnf(generators::build_fn(e));
        auto reg = regularize(cnf);
        write_dimacs(payload, reg.formula);
        out.manifest.add("n", req.n);
        out.manifest.add("d", req.d);
        out.manifest.add("seed", std::to_string(req.seed));
        out.manifest.add("certificate", generators::certificate_name(e.certificate));
        out.manifest.add("d-sat", reg.d);
    } else if (req.kind == "hard-pipeline") {
        auto target = generators::parse_target(req.target);
        if (!target) throw DomainError("gen: unknown pipeline target " + req.target);
        auto result = generators::hard_instance_pipeline(req.n, *target, req.seed);
        write_hypergraph(payload, result.instance);
        for (const auto& [k, v] : result.manifest.entries) out.manifest.entries.emplace_back(k, v);
    } else if (req.kind == "yes-tw") {
        auto yes = generators::yes_bounded_tw_family(req.n, req.seed, req.delta);
        write_hypergraph(payload, yes.h);
        std::ostringstream wit;
        write_coloring(wit, yes.witness);
        out.witness = wit.str();
        out.manifest.add("n", req.n);
        out.manifest.add("delta", req.delta);
        out.manifest.add("seed", std::to_string(req.seed));
    } else if (req.kind == "far-tw") {
        Hypergraph h = generators::far_bounded_tw_family(req.n);
        write_hypergraph(payload, h);
        out.manifest.add("n", req.n);
    } else {
        throw DomainError("gen: unknown kind " + req.kind);
    }
    out.payload = payload.str();
    out.manifest.add("digest", std::to_string(generators::payload_digest(out.payload)));
    return out;
}

int cmd_gen(const GenRequest& req, const std::string& out_path, std::string manifest_path) {
    GenOutput out = run_gen(req);
    spit_file(out_path, out.payload);
    if (manifest_path.empty()) manifest_path = out_path + ".manifest";
    spit_file(manifest_path, out.manifest.str());
    if (!out.witness.empty()) spit_file(out_path + ".witness", out.witness);
    std::cout << "wrote " << out_path << " (" << out.payload.size() << " bytes)\n";
    return 0;
}

int cmd_replay(const std::string& manifest_path, const std::string& out_path) {
    generators::Manifest m = generators::Manifest::parse(slurp_file(manifest_path));
    std::string payload;
    std::string kind;
    // Pipeline manifests carry "pipeline", gen manifests carry "kind".
    bool is_pipeline = false;
    for (const auto& [k, v] : m.entries) {
        if (k == "pipeline") is_pipeline = true;
        if (k == "kind") kind = v;
    }
    if (is_pipeline && kind.empty()) {
        payload = verify::replay_pipeline(m);
    } else {
        GenRequest req;
        req.kind = kind;
        for (const auto& [k, v] : m.entries) {
            if (k == "n") req.n = std::stoi(v);
            if (k == "d") req.d = std::stoi(v);
            if (k == "delta") req.delta = std::stoi(v);
            if (k == "seed") req.seed = std::stoull(v);
            if (k == "pipeline") req.target = v;
        }
        if (req.kind == "hard-pipeline" || is_pipeline) {
            // gen-style pipeline manifest: re-run through run_gen
            req.kind = "hard-pipeline";
            for (const auto& [k, v] : m.entries)
                if (k == "pipeline") req.target = v;
        }
        payload = run_gen(req).payload;
    }
    std::uint64_t digest = generators::payload_digest(payload);
    std::uint64_t recorded = std::stoull(m.get("digest"));
    if (digest != recorded) {
        std::cerr << "replay: digest mismatch\n";
        return 1;
    }
    spit_file(out_path, payload);
    std::cout << "replayed " << out_path << " digest=" << digest << '\n';
    return 0;
}

int serve_adapter(IncidenceOracle& adapter, std::ostream& trace_stream, bool trace) {
    if (trace) adapter.set_trace(&trace_stream);
    std::string line;
    while (std::getline(std::cin, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        int v, j;
        if (!(ls >> v >> j)) {
            std::cout << "error bad query\n";
            continue;
        }
        try {
            QueryAnswer a = adapter.query(v, j);
            if (is_dummy(a)) {
                std::cout << "bot\n";
            } else {
                for (std::size_t i = 0; i < a.size(); ++i)
                    std::cout << (i ? " " : "") << a[i];
                std::cout << '\n';
            }
        } catch (const DomainError& e) {
            std::cout << "error " << e.what() << '\n';
        }
    }
    return 0;
}

int cmd_reduce(const std::string& kind, const std::string& in_path, const std::string& out_path,
               bool adapter_mode, const std::string& trace_path, int k, std::uint64_t seed) {
    std::ofstream trace_file;
    bool trace = !trace_path.empty();
    if (trace) {
        trace_file.open(trace_path);
        if (!trace_file) throw ParseError("cannot write " + trace_path);
    }
    if (kind == "three-par" || kind == "k-par") {
        Graph g = read_graph_file(in_path);
        if (adapter_mode) {
            if (kind == "k-par") throw DomainError("reduce: no lazy form for k-par");
            GraphOracle base(g);
            if (trace) base.set_trace(&trace_file);
            reductions::Rho3ParAdapter adapter(base);
            return serve_adapter(adapter, trace_file, trace);
        }
        Hypergraph h = kind == "three-par" ? reductions::rho_3par(g) : reductions::rho_kpar(g, k);
        std::ostringstream payload;
        write_hypergraph(payload, h);
        spit_file(out_path, payload.str());
        return 0;
    }
    if (kind == "gaifman" || kind == "ind") {
        Hypergraph h = read_hypergraph_file(in_path);
        if (adapter_mode) {
            HypergraphOracle base(h);
            if (trace) base.set_trace(&trace_file);
            if (kind == "gaifman") {
                reductions::GaifmanAdapter adapter(base);
                return serve_adapter(adapter, trace_file, trace);
            }
            reductions::RhoIndAdapter adapter(base);
            return serve_adapter(adapter, trace_file, trace);
        }
        std::ostringstream payload;
        if (kind == "gaifman") {
            write_graph(payload, reductions::rho_par_tw(h));
        } else {
            write_hypergraph(payload, reductions::rho_ind(h));
        }
        spit_file(out_path, payload.str());
        return 0;
    }
    if (kind == "three-col" || kind == "k-col") {
        CnfFormula f = read_dimacs_file(in_path);
        int kk = kind == "three-col" ? 3 : k;
        int d = literal_occurrences(f, 1);
        auto pool = generators::random_regular_expander(8 * d * f.var_count(), 4, seed);
        if (adapter_mode) {
            CnfIncidenceOracle base(f);
            reductions::Rho3ColAdapter adapter(base, kk, pool.graph);
            return serve_adapter(adapter, trace_file, trace);
        }
        auto result = reductions::rho_kcol(f, kk, pool.graph);
        std::ostringstream payload;
        write_hypergraph(payload, result.h);
        spit_file(out_path, payload.str());
        return 0;
    }
    throw DomainError("reduce: unknown kind " + kind);
}

int cmd_solve(const std::string& spec, const std::string& in_path, int lambda,
              const std::string& threshold, bool distance, const std::string& mode_name,
              std::uint64_t budget) {
    solvers::SearchLimits limits;
    if (budget > 0) {
        limits.node_budget = budget;
        limits.max_states = budget;
    }
    solvers::SearchMode mode = mode_name == "backtracking" ? solvers::SearchMode::Backtracking
                                                           : solvers::SearchMode::Exhaustive;
    if (spec == "graph-color") {
        Graph g = read_graph_file(in_path);
        if (distance) {
            std::cout << "distance "
                      << solvers::distance_to_property(
                             g, solvers::PropertySpec::graph_colorable(lambda), limits)
                      << '\n';
            return 0;
        }
        auto witness = solvers::graph_coloring(g, lambda, mode, limits);
        if (witness) {
            write_coloring(std::cout, *witness);
            return 0;
        }
        std::cout << "none\n";
        return 1;
    }
    Hypergraph h = read_hypergraph_file(in_path);
    if (spec == "weak-color") {
        if (distance) {
            std::cout << "distance "
                      << solvers::distance_to_property(
                             h, solvers::PropertySpec::weak_colorable(lambda), limits)
                      << '\n';
            return 0;
        }
        auto witness = solvers::weak_coloring(h, lambda, mode, limits);
        if (witness) {
            write_coloring(std::cout, *witness);
            return 0;
        }
        std::cout << "none\n";
        return 1;
    }
    if (spec == "k-partite") {
        if (distance) {
            std::cout << "distance "
                      << solvers::distance_to_property(h, solvers::PropertySpec::k_partite(),
                                                       limits)
                      << '\n';
            return 0;
        }
        auto witness = solvers::rainbow_partition(h, mode, limits);
        if (witness) {
            write_coloring(std::cout, *witness);
            return 0;
        }
        std::cout << "none\n";
        return 1;
    }
    if (spec == "independence") {
        int t = threshold == "n" ? h.n() : std::stoi(threshold);
        if (distance) {
            std::cout << "distance "
                      << solvers::distance_to_property(
                             h, solvers::PropertySpec::independence_at_least(t), limits)
                      << '\n';
            return 0;
        }
        auto result = solvers::independence_number(h, limits);
        std::cout << "independence " << result.size << '\n';
        for (std::size_t i = 0; i < result.witness.size(); ++i)
            std::cout << (i ? " " : "s set ") << result.witness[i];
        if (!result.witness.empty()) std::cout << '\n';
        return result.size >= t ? 0 : 1;
    }
    throw DomainError("solve: unknown spec " + spec);
}

int cmd_test(const std::string& in_path, const std::string& adapter_kind,
             const std::string& epsilon, std::uint64_t seed, int trials, int radius, int samples,
             int ball_budget) {
    testers::TesterConfig cfg;
    cfg.epsilon = parse_rational(epsilon);
    cfg.radius = radius;
    cfg.sample_count = samples;
    cfg.ball_budget = ball_budget;

    // Materialized base instance; optionally tested through a lazy adapter.
    std::optional<Graph> base_graph;
    std::optional<Hypergraph> base_hyper;
    std::unique_ptr<IncidenceOracle> base;
    std::unique_ptr<IncidenceOracle> layered;
    if (adapter_kind == "three-par") {
        base_graph = read_graph_file(in_path);
        base = std::make_unique<GraphOracle>(*base_graph);
        layered = std::make_unique<reductions::Rho3ParAdapter>(*base);
    } else if (adapter_kind == "ind") {
        base_hyper = read_hypergraph_file(in_path);
        base = std::make_unique<HypergraphOracle>(*base_hyper);
        layered = std::make_unique<reductions::RhoIndAdapter>(*base);
    } else if (adapter_kind.empty()) {
        base_hyper = read_hypergraph_file(in_path);
        layered = std::make_unique<HypergraphOracle>(*base_hyper);
    } else {
        throw DomainError("test: unsupported adapter kind " + adapter_kind);
    }

    if (trials <= 1) {
        auto report = testers::ball_tester_kpartite(*layered, cfg, seed);
        std::cout << report.str();
        return report.accept ? 0 : 1;
    }
    int accepted = 0;
    std::uint64_t total_queries = 0;
    for (int t = 0; t < trials; ++t) {
        layered->reset_count();
        if (base) base->reset_count();
        auto report = testers::ball_tester_kpartite(
            *layered, cfg, sub_seed(seed, "trial", static_cast<std::uint64_t>(t)));
        if (report.accept) ++accepted;
        total_queries += report.queries_used;
    }
    std::cout << "trials=" << trials << '\n'
              << "accepted=" << accepted << '\n'
              << "rejected=" << trials - accepted << '\n'
              << "acceptance=" << Rational(accepted, trials) << '\n'
              << "mean-queries=" << total_queries / static_cast<std::uint64_t>(trials) << '\n';
    return 0;
}

int cmd_verify(const std::string& suite) {
    std::vector<verify::CheckResult> results;
    if (suite == "gadgets") {
        results = verify::criterion_gadget_forcing();
    } else if (suite == "reductions") {
        results = verify::criterion_reduction_equivalences();
    } else if (suite == "gaps") {
        results = verify::criterion_gap_inequalities();
    } else if (suite == "locality") {
        results = verify::criterion_locality();
    } else if (suite == "appendix-b-stats") {
        results = verify::criterion_appendix_b();
    } else {
        throw DomainError("verify: unknown suite " + suite);
    }
    for (const auto& r : results) {
        std::cout << (r.pass ? "[PASS] " : "[FAIL] ") << r.name;
        if (!r.detail.empty()) std::cout << " (" << r.detail << ")";
        std::cout << '\n';
    }
    return verify::all_pass(results) ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"bounded-degree hypergraph property testing toolkit"};
    app.set_version_flag("--version", "hpt 1.0.0");
    app.require_subcommand(1);
    int exit_code = 0;

    // gen
    auto* gen = app.add_subcommand("gen", "generate instances");
    GenRequest gen_req;
    std::string gen_out, gen_manifest;
    gen->add_option("kind", gen_req.kind,
                    "appendix-b | expander | fn-csp | hard-pipeline | yes-tw | far-tw")
        ->required();
    gen->add_option("--n", gen_req.n, "vertex/variable count")->required();
    gen->add_option("--d", gen_req.d, "degree parameter");
    gen->add_option("--delta", gen_req.delta, "degree bound (yes-tw)");
    gen->add_option("--target", gen_req.target, "pipeline target");
    gen->add_option("--seed", gen_req.seed, "random seed");
    gen->add_option("--out", gen_out, "output path")->required();
    gen->add_option("--manifest", gen_manifest, "manifest path (default: <out>.manifest)");
    gen->callback([&]() { exit_code = cmd_gen(gen_req, gen_out, gen_manifest); });

    // replay
    auto* replay = app.add_subcommand("replay", "re-run a manifest and verify its digest");
    std::string replay_manifest, replay_out;
    replay->add_option("manifest", replay_manifest, "manifest path")->required();
    replay->add_option("--out", replay_out, "output path")->required();
    replay->callback([&]() { exit_code = cmd_replay(replay_manifest, replay_out); });

    // reduce
    auto* reduce = app.add_subcommand("reduce", "apply a reduction");
    std::string red_kind, red_in, red_out, red_trace;
    bool red_adapter = false;
    int red_k = 4;
    std::uint64_t red_seed = 0;
    reduce->add_option("kind", red_kind, "three-par | k-par | gaifman | ind | three-col | k-col")
        ->required();
    reduce->add_option("input", red_in, "input instance")->required();
    reduce->add_option("output", red_out, "output path (omit with --adapter)");
    reduce->add_flag("--adapter", red_adapter, "serve incidence queries from stdin");
    reduce->add_option("--trace", red_trace, "query trace log path");
    reduce->add_option("--k", red_k, "uniformity for k-par / k-col");
    reduce->add_option("--seed", red_seed, "pool expander seed (three-col / k-col)");
    reduce->callback([&]() {
        if (!red_adapter && red_out.empty())
            throw CLI::ValidationError("reduce", "output path required");
        exit_code = cmd_reduce(red_kind, red_in, red_out, red_adapter, red_trace, red_k, red_seed);
    });

    // solve
    auto* solve = app.add_subcommand("solve", "exact certification oracles");
    std::string solve_spec, solve_in, solve_threshold = "n", solve_mode = "exhaustive";
    int solve_lambda = 3;
    bool solve_distance = false;
    std::uint64_t solve_budget = 0;
    solve->add_option("spec", solve_spec, "weak-color | k-partite | graph-color | independence")
        ->required();
    solve->add_option("input", solve_in, "instance path")->required();
    solve->add_option("--lambda", solve_lambda, "palette size");
    solve->add_option("--threshold", solve_threshold, "independence threshold (number or 'n')");
    solve->add_flag("--distance", solve_distance, "print exact distance instead of a verdict");
    solve->add_option("--mode", solve_mode, "exhaustive | backtracking");
    solve->add_option("--budget", solve_budget, "search budget override");
    solve->callback([&]() {
        exit_code = cmd_solve(solve_spec, solve_in, solve_lambda, solve_threshold, solve_distance,
                              solve_mode, solve_budget);
    });

    // test
    auto* test = app.add_subcommand("test", "one-sided k-partiteness tester");
    std::string test_in, test_adapter, test_epsilon = "1/20";
    std::uint64_t test_seed = 0;
    int test_trials = 1, test_radius = 2, test_samples = 0, test_budget = 64;
    test->add_option("input", test_in, "instance path")->required();
    test->add_option("--adapter", test_adapter, "test through a lazy adapter: three-par | ind");
    test->add_option("--epsilon", test_epsilon, "proximity parameter (rational or decimal)");
    test->add_option("--seed", test_seed, "tester seed");
    test->add_option("--trials", test_trials, "number of independent runs");
    test->add_option("--radius", test_radius, "exploration radius");
    test->add_option("--samples", test_samples, "start vertices (0 = ceil(8/epsilon))");
    test->add_option("--ball-budget", test_budget, "max vertices per ball");
    test->callback([&]() {
        exit_code = cmd_test(test_in, test_adapter, test_epsilon, test_seed, test_trials,
                             test_radius, test_samples, test_budget);
    });

    // verify
    auto* ver = app.add_subcommand("verify", "run a verification suite");
    std::string suite;
    ver->add_option("suite", suite, "gadgets | reductions | gaps | locality | appendix-b-stats")
        ->required();
    ver->callback([&]() { exit_code = cmd_verify(suite); });

    try {
        app.parse(argc, argv);
    } catch (const CLI::CallForHelp& e) {
        return app.exit(e);
    } catch (const CLI::CallForVersion& e) {
        return app.exit(e);
    } catch (const CLI::ParseError& e) {
        app.exit(e);
        return 2;
    } catch (const CapacityError& e) {
        std::cerr << "capacity: " << e.what() << '\n';
        return 3;
    } catch (const ParseError& e) {
        std::cerr << "parse: " << e.what() << '\n';
        return 2;
    } catch (const DomainError& e) {
        std::cerr << "error: " << e.what() << '\n';
        return 2;
    } catch (const GenerationError& e) {
        std::cerr << "generation: " << e.what() << '\n';
        return 2;
    }
    return exit_code;
}
