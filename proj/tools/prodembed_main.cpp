// prodembed: minimal embedding dimensions of graph products, plus the
// exact-arithmetic linking verifier (obstruction reports and Monte Carlo
// campaigns). Exit codes: 0 success, 2 parse error, 3 hypothesis violation,
// 4 property violation, 5 geometric degeneracy exhaustion.

#include "prodembed/almost_embedding.hpp"
#include "prodembed/campaign.hpp"
#include "prodembed/dimension.hpp"
#include "prodembed/errors.hpp"
#include "prodembed/product_link.hpp"
#include "prodembed/report.hpp"
#include "prodembed/standard_embedding.hpp"

#include "CLI11.hpp"

#include <chrono>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace prodembed;

// A factor argument is either a path to an edge-list file or inline graph
// text (usually a builtin name like "k5").
Graph load_graph(const std::string& source) {
    std::ifstream in(source);
    if (in) {
        std::ostringstream buf;
        buf << in.rdbuf();
        return parse_graph(buf.str());
    }
    try {
        return parse_graph(source);
    } catch (const ParseError&) {
        // a lone unreadable token is almost certainly a misspelled builtin
        // or a missing file, not inline edge-list text
        if (source.find_first_of(" \t\n") == std::string::npos)
            throw ParseError("'" + source +
                             "' is not a builtin graph name or a readable edge-list file");
        throw;
    }
}

int resolve_max_n(const std::optional<int>& flag) {
    if (flag) return *flag;
    if (const char* env = std::getenv("PRODEMBED_MAX_N")) {
        std::string s(env);
        try {
            std::size_t used = 0;
            int v = std::stoi(s, &used);
            if (used != s.size() || v < 1)
                throw std::invalid_argument(s);
            return v;
        } catch (const std::exception&) {
            throw ParseError("PRODEMBED_MAX_N must be a positive integer, got '" + s + "'");
        }
    }
    return 4;
}

void check_n_cap(int n, const std::optional<int>& max_n_flag) {
    if (n < 1)
        throw HypothesisError("n must be >= 1");
    int cap = resolve_max_n(max_n_flag);
    if (n > cap)
        throw HypothesisError("n = " + std::to_string(n) + " exceeds the cap " +
                              std::to_string(cap) +
                              " (raise with --max-n or PRODEMBED_MAX_N)");
}

long elapsed_ms(std::chrono::steady_clock::time_point start) {
    return std::chrono::duration_cast<std::chrono::milliseconds>(
               std::chrono::steady_clock::now() - start)
        .count();
}

void emit(Json& doc, std::chrono::steady_clock::time_point start) {
    doc["elapsed_ms"] = elapsed_ms(start);
    std::cout << doc.dump(2) << "\n";
}

struct DimArgs {
    std::vector<std::string> factors;
    int circles = 0;
    int intervals = 0;
    bool json = false;
};

int run_dim(const DimArgs& args, std::chrono::steady_clock::time_point start) {
    std::vector<Graph> graphs;
    for (const auto& f : args.factors)
        graphs.push_back(load_graph(f));
    DimensionResult r = min_embedding_dim(graphs, args.circles, args.intervals);
    if (args.json) {
        Json doc = report_shell("dim");
        Json inputs;
        inputs["factors"] = args.factors;
        inputs["circles"] = args.circles;
        inputs["intervals"] = args.intervals;
        doc["inputs"] = std::move(inputs);
        doc["result"] = dimension_json(r);
        emit(doc, start);
    } else {
        std::cout << "d = " << r.dim << " (case " << r.formula_case << ": d = 2n+s+"
                  << (r.formula_case == 1 ? "i" : "1") << ")\n"
                  << "n = " << r.n << ", s = " << r.s << ", i = " << r.i << "\n";
    }
    return 0;
}

struct VerifyArgs {
    std::string kind = "sacks";
    int n = 2;
    int trials = 100;
    std::uint64_t seed = 1;
    bool json = false;
    std::optional<int> max_n;
};

int run_verify(const VerifyArgs& args, std::chrono::steady_clock::time_point start) {
    CampaignKind kind;
    if (args.kind == "sacks")
        kind = CampaignKind::SacksN;
    else if (args.kind == "k6")
        kind = CampaignKind::ConwayGordonK6;
    else if (args.kind == "invariance")
        kind = CampaignKind::ObstructionInvariance;
    else
        throw ParseError("unknown verify kind '" + args.kind + "'");
    if (kind != CampaignKind::ConwayGordonK6)
        check_n_cap(args.n, args.max_n);
    if (args.trials < 1)
        throw HypothesisError("--trials must be >= 1");

    CampaignResult r = run_campaign(kind, args.n, args.trials, args.seed);
    if (args.json) {
        Json doc = report_shell("verify");
        Json inputs;
        inputs["kind"] = args.kind;
        if (kind != CampaignKind::ConwayGordonK6)
            inputs["n"] = args.n;
        inputs["trials"] = args.trials;
        inputs["seed"] = args.seed;
        doc["inputs"] = std::move(inputs);
        doc["result"] = campaign_json(r);
        emit(doc, start);
    } else {
        std::cout << "kind = " << campaign_kind_name(r.kind);
        if (kind != CampaignKind::ConwayGordonK6)
            std::cout << ", n = " << r.n;
        std::cout << ", trials = " << r.trials << ", seed = " << r.seed << "\n"
                  << "linked trials = " << r.linked_trials << "/" << r.trials << "\n";
        std::cout << "parity histogram:";
        for (const auto& [v, c] : r.v_histogram)
            std::cout << " " << v << "->" << c;
        std::cout << "\n";
        auto list = [](const char* name, const std::vector<std::uint64_t>& seeds) {
            if (seeds.empty()) return;
            std::cout << name << ":";
            for (auto s : seeds)
                std::cout << " " << s;
            std::cout << "\n";
        };
        list("failing seeds", r.failing_seeds);
        list("degenerate seeds", r.degenerate_seeds);
        std::cout << (r.success ? "success" : "FAILURE") << "\n";
    }
    return r.success ? 0 : 4;
}

struct ObstructionArgs {
    int n = 2;
    std::string embedding = "standard";
    std::uint64_t seed = 1;
    bool json = false;
    std::optional<int> max_n;
};

int run_obstruction(const ObstructionArgs& args, std::chrono::steady_clock::time_point start) {
    check_n_cap(args.n, args.max_n);
    GeometricComplex g;
    if (args.embedding == "standard") {
        g = standard_join_embedding(args.n, args.seed).realization;
    } else if (args.embedding == "random") {
        SimplicialComplex four = SimplicialComplex::from_facets({"v0", "v1", "v2", "v3"}, {});
        g = random_embedding(join_power(four, args.n), 2 * args.n - 1, args.seed);
    } else {
        throw ParseError("unknown embedding kind '" + args.embedding + "'");
    }
    ObstructionReport r = compute_obstruction(g);
    if (args.json) {
        Json doc = report_shell("obstruction");
        Json inputs;
        inputs["n"] = args.n;
        inputs["embedding"] = args.embedding;
        inputs["seed"] = args.seed;
        doc["inputs"] = std::move(inputs);
        doc["result"] = obstruction_json(r);
        emit(doc, start);
    } else {
        std::cout << "v = " << r.v.value() << "\n"
                  << "n = " << r.n << ", pairs examined = " << r.pairs_examined
                  << ", base =";
        for (const auto& l : r.base_labels)
            std::cout << " " << l;
        std::cout << "\n";
        for (const auto& p : r.linked)
            std::cout << "linked: alpha " << sphere_text(p.alpha) << " beta "
                      << sphere_text(p.beta) << "\n";
    }
    return 0;
}

struct DumpArgs {
    std::string what;
    std::vector<std::string> args;
    int n = 2;
    int m = 1;
    int p = 3;
    int q = 3;
    std::uint64_t seed = 1;
    std::optional<int> max_n;
};

int run_dump(const DumpArgs& a) {
    if (a.what == "joinpower") {
        check_n_cap(a.n, a.max_n);
        SimplicialComplex four = SimplicialComplex::from_facets({"v0", "v1", "v2", "v3"}, {});
        std::cout << complex_to_text(join_power(four, a.n));
    } else if (a.what == "skeleton") {
        std::cout << complex_to_text(skeleton_complex(a.m, a.n));
    } else if (a.what == "torus") {
        std::cout << complex_to_text(triangulated_torus(a.p, a.q));
    } else if (a.what == "graph") {
        if (a.args.size() != 1)
            throw ParseError("dump-complex graph needs one source argument");
        std::cout << complex_to_text(complex_from_graph(load_graph(a.args[0])));
    } else if (a.what == "productlink") {
        if (a.args.size() != 4)
            throw ParseError("dump-complex productlink needs: source1 source2 vertex1 vertex2");
        std::cout << complex_to_text(direct_product_link_2(
            load_graph(a.args[0]), load_graph(a.args[1]), a.args[2], a.args[3]));
    } else if (a.what == "standard") {
        check_n_cap(a.n, a.max_n);
        std::cout << geometric_to_text(standard_join_embedding(a.n, a.seed).realization);
    } else {
        throw ParseError("unknown construction '" + a.what +
                         "' (joinpower, skeleton, torus, graph, productlink, standard)");
    }
    return 0;
}

} // namespace

int main(int argc, char** argv) {
    auto start = std::chrono::steady_clock::now();
    CLI::App app{"Embedding dimensions of graph products and the linking verifier"};
    app.require_subcommand(1);

    DimArgs dim_args;
    auto* dim = app.add_subcommand("dim", "Minimal embedding dimension of a product");
    dim->add_option("factors", dim_args.factors, "builtin names or edge-list files");
    dim->add_option("--circles", dim_args.circles, "extra circle factors")
        ->check(CLI::NonNegativeNumber);
    dim->add_option("--intervals", dim_args.intervals, "extra interval factors")
        ->check(CLI::NonNegativeNumber);
    dim->add_flag("--json", dim_args.json, "JSON report");

    VerifyArgs verify_args;
    auto* verify = app.add_subcommand("verify", "Monte Carlo linking campaigns");
    verify->add_option("--kind", verify_args.kind, "sacks | k6 | invariance");
    verify->add_option("--n", verify_args.n, "number of join factors");
    verify->add_option("--trials", verify_args.trials, "trial count");
    verify->add_option("--seed", verify_args.seed, "base seed (per-trial seed + index)");
    verify->add_flag("--json", verify_args.json, "JSON report");
    verify->add_option("--max-n", verify_args.max_n, "override the n cap");

    ObstructionArgs obstruction_args;
    auto* obstruction = app.add_subcommand("obstruction", "Obstruction parity report");
    obstruction->add_option("--n", obstruction_args.n, "number of join factors");
    obstruction->add_option("--embedding", obstruction_args.embedding, "standard | random");
    obstruction->add_option("--seed", obstruction_args.seed, "embedding seed");
    obstruction->add_flag("--json", obstruction_args.json, "JSON report");
    obstruction->add_option("--max-n", obstruction_args.max_n, "override the n cap");

    DumpArgs dump_args;
    auto* dump = app.add_subcommand("dump-complex", "Serialize a construction");
    dump->add_option("what", dump_args.what,
                     "joinpower | skeleton | torus | graph | productlink | standard")
        ->required();
    dump->add_option("args", dump_args.args, "construction arguments");
    dump->add_option("--n", dump_args.n, "join factors / simplex dimension");
    dump->add_option("--m", dump_args.m, "skeleton dimension");
    dump->add_option("--p", dump_args.p, "torus rows");
    dump->add_option("--q", dump_args.q, "torus columns");
    dump->add_option("--seed", dump_args.seed, "embedding seed");
    dump->add_option("--max-n", dump_args.max_n, "override the n cap");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        if (dim->parsed()) return run_dim(dim_args, start);
        if (verify->parsed()) return run_verify(verify_args, start);
        if (obstruction->parsed()) return run_obstruction(obstruction_args, start);
        if (dump->parsed()) return run_dump(dump_args);
    } catch (const ParseError& e) {
        std::cerr << "parse error: " << e.what() << "\n";
        return 2;
    } catch (const MapDefinitionError& e) {
        std::cerr << "map definition error: " << e.what() << "\n";
        return 2;
    } catch (const HypothesisError& e) {
        std::cerr << "hypothesis violation: " << e.what() << "\n";
        return 3;
    } catch (const ResampleBudgetError& e) {
        std::cerr << "geometric failure: " << e.what() << "\n";
        return 5;
    } catch (const DegeneracyError& e) {
        std::cerr << "geometric failure: " << e.what() << "\n";
        return 5;
    } catch (const AffineDependenceError& e) {
        std::cerr << "geometric failure: " << e.what() << "\n";
        return 5;
    } catch (const BoundaryCollisionError& e) {
        std::cerr << "geometric failure: " << e.what() << "\n";
        return 5;
    }
    return 0;
}
